#include "hsl/json_io.hpp"

namespace hsl {

std::string var_name(const VarRef& v) {
    if (v.block == 0) return "x" + std::to_string(v.component);
    return "u" + std::to_string(v.block) + "_" + std::to_string(v.component);
}

VarRef var_from_name(const std::string& name, const Context& ctx) {
    if (name.empty()) throw ParseError("empty variable name", 0);
    size_t pos = 1;
    auto read_int = [&]() {
        size_t start = pos;
        while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
        if (start == pos) throw ParseError("bad variable name '" + name + "'", pos);
        return std::stoi(name.substr(start, pos - start));
    };
    if (name[0] == 'x') {
        int comp = read_int();
        if (pos != name.size() || comp < 1 || comp > ctx.m)
            throw ParseError("bad variable name '" + name + "'", pos);
        return var_x(comp);
    }
    if (name[0] == 'u') {
        int block = read_int();
        if (pos >= name.size() || name[pos] != '_')
            throw ParseError("bad variable name '" + name + "'", pos);
        ++pos;
        int comp = read_int();
        if (pos != name.size() || block < 1 || block > ctx.k || comp < 1 || comp > ctx.m)
            throw ParseError("bad variable name '" + name + "'", pos);
        return var_u(block, comp);
    }
    throw ParseError("bad variable name '" + name + "'", 0);
}

Json poly_to_json(const Poly& p) {
    Json j;
    j["k"] = p.context().k;
    j["m"] = p.context().m;
    Json terms = Json::array();
    for (const auto& [mo, c] : p.terms()) {
        Json t;
        t["c"] = rat_to_string(c);
        Json exp = Json::array();
        for (const auto& [v, e] : mo.entries()) exp.push_back(Json::array({var_name(v), e}));
        t["exp"] = std::move(exp);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const Json& j) {
    Context ctx{j.at("k").get<int>(), j.at("m").get<int>()};
    Poly p(ctx);
    for (const auto& t : j.at("terms")) {
        Rat c = rat_from_string(t.at("c").get<std::string>());
        std::vector<Monomial::Entry> entries;
        for (const auto& pair : t.at("exp"))
            entries.push_back({var_from_name(pair.at(0).get<std::string>(), ctx),
                               pair.at(1).get<int>()});
        p.add_term(Monomial(std::move(entries)), c);
    }
    return p;
}

namespace {

Json generator_to_json(const Generator& g) {
    Json j;
    switch (g.kind) {
        case Generator::Kind::InnerUU: j["gen"] = "InnerUU"; break;
        case Generator::Kind::InnerDD: j["gen"] = "InnerDD"; break;
        case Generator::Kind::InnerUD: j["gen"] = "InnerUD"; break;
        case Generator::Kind::Euler: j["gen"] = "Euler"; break;
        case Generator::Kind::CoordMul: j["gen"] = "CoordMul"; break;
        case Generator::Kind::CoordDiff: j["gen"] = "CoordDiff"; break;
    }
    if (g.kind == Generator::Kind::CoordMul || g.kind == Generator::Kind::CoordDiff) {
        j["var"] = var_name(g.v);
    } else if (g.kind == Generator::Kind::Euler) {
        j["i"] = g.i;
    } else {
        j["i"] = g.i;
        j["j"] = g.j;
    }
    return j;
}

Generator generator_from_json(const Json& j, const Context& ctx) {
    const std::string kind = j.at("gen").get<std::string>();
    if (kind == "InnerUU") return Generator::inner_uu(j.at("i").get<int>(), j.at("j").get<int>());
    if (kind == "InnerDD") return Generator::inner_dd(j.at("i").get<int>(), j.at("j").get<int>());
    if (kind == "InnerUD") return Generator::inner_ud(j.at("i").get<int>(), j.at("j").get<int>());
    if (kind == "Euler") return Generator::euler(j.at("i").get<int>());
    if (kind == "CoordMul")
        return Generator::coord_mul(var_from_name(j.at("var").get<std::string>(), ctx));
    if (kind == "CoordDiff")
        return Generator::coord_diff(var_from_name(j.at("var").get<std::string>(), ctx));
    throw ParseError("unknown generator kind '" + kind + "'", 0);
}

}  // namespace

Json word_to_json(const OperatorWord& w) {
    Json j = Json::array();
    if (w.is_identity()) {
        Json seq;
        seq["coef"] = "1";
        seq["items"] = Json::array();
        j.push_back(std::move(seq));
        return j;
    }
    for (const auto& s : w.sequences()) {
        Json seq;
        seq["coef"] = rat_to_string(s.coef);
        Json items = Json::array();
        for (const auto& item : s.items) {
            if (std::holds_alternative<Generator>(item)) {
                items.push_back(generator_to_json(std::get<Generator>(item)));
            } else {
                Json it;
                it["scalar"] = std::get<ScalarExpr>(item).to_string();
                items.push_back(std::move(it));
            }
        }
        seq["items"] = std::move(items);
        j.push_back(std::move(seq));
    }
    return j;
}

OperatorWord word_from_json(const Json& j) {
    // Generators carry no context; a permissive one is used for variable names.
    Context ctx{255, 255};
    OperatorWord w = OperatorWord::zero();
    for (const auto& seq : j) {
        Rat coef = rat_from_string(seq.at("coef").get<std::string>());
        std::vector<OperatorWord::Item> items;
        for (const auto& item : seq.at("items")) {
            if (item.contains("scalar"))
                items.push_back(ScalarExpr::parse(item.at("scalar").get<std::string>()));
            else
                items.push_back(generator_from_json(item, ctx));
        }
        w = w + OperatorWord::sequence(std::move(items), coef);
    }
    return w;
}

Json verify_report_to_json(const VerifyReport& r) {
    Json j;
    Json spec;
    spec["m"] = r.spec.m;
    spec["k"] = r.spec.k;
    spec["lambda"] = r.spec.lambda;
    spec["x_degree"] = r.x_degree;
    j["spec"] = std::move(spec);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["trials"] = c.trials;
        cj["pass"] = c.pass;
        cj["counterexample"] = c.counterexample ? poly_to_json(*c.counterexample) : Json(nullptr);
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["seed"] = r.seed;
    return j;
}

Json decomposition_to_json(const DecompositionReport& r) {
    Json j;
    j["lambda0"] = r.lambda0;
    j["lambda"] = r.lambda;
    j["m"] = r.m;
    Json summands = Json::array();
    for (const auto& s : r.summands) {
        Json sj;
        sj["d"] = s.d.d;
        sj["mu"] = s.mu;
        sj["dim"] = s.dim;
        summands.push_back(std::move(sj));
    }
    j["summands"] = std::move(summands);
    j["total_dim"] = r.total_dim;
    j["kernel_dim"] = r.kernel_dim;
    j["consistent"] = r.consistent;
    j["certified"] = r.certified;
    if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
    return j;
}

Json basis_to_json(const SubspaceBasis& b) {
    Json j;
    j["dim"] = b.dim();
    j["constraints"] = b.constraints;
    Json basis = Json::array();
    for (const auto& p : b.basis) basis.push_back(poly_to_json(p));
    j["basis"] = std::move(basis);
    return j;
}

}  // namespace hsl
