// Command-line frontend: exact construction, verification, kernel and
// decomposition runs with JSON output. See README for examples.

#include "hsl/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace hsl;

struct CommonArgs {
    int m = 0;
    std::vector<int> lambda;
    int lambda0 = 0;
    int x_degree = 2;
    std::string checks = "all";
    int trials = 3;
    std::uint64_t seed = 0;
    std::string out;
    bool pretty = false;
    bool no_value_check = false;
    std::string mutate = "none";
};

void emit(const Json& j, const CommonArgs& args) {
    std::string text = args.pretty ? j.dump(2) : j.dump();
    text += "\n";
    if (args.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(args.out, std::ios::binary);
        if (!os) throw InvalidInput("cannot open output file " + args.out);
        os << text;
    }
}

Mutation parse_mutation(const std::string& s) {
    if (s == "none") return Mutation::None;
    if (s == "c1+1") return Mutation::C1PlusOne;
    if (s == "drop-factor") return Mutation::DropProjectorFactor;
    throw InvalidInput("unknown mutation '" + s + "'");
}

HSLaplaceSpec make_spec(const CommonArgs& a) {
    HSLaplaceSpec spec;
    spec.m = a.m;
    spec.k = int(a.lambda.size());
    spec.lambda = a.lambda;
    spec.validate();
    return spec;
}

int cmd_construct(const CommonArgs& a) {
    HSLaplaceSpec spec = make_spec(a);
    Context ctx = spec.context();
    MultiDegree d;
    d.degrees.assign(ctx.blocks(), 0);
    for (int i = 1; i <= ctx.k; ++i) d.degrees[i] = spec.lambda[i - 1];

    OperatorWord inner = OperatorWord::gen(Generator::inner_dd(0, 0));
    Json cvals = Json::array();
    for (int p = 1; p <= ctx.k; ++p) {
        Rat cp = c_coeff_value(p, spec);
        cvals.push_back(
            Json{{"p", p}, {"expr", c_coeff_expr(p).to_string()}, {"value", rat_to_string(cp)}});
        if (spec.lambda[p - 1] == 0) continue;
        inner = inner + OperatorWord::sequence(
                            {Generator::inner_ud(p, 0), Generator::inner_dd(p, 0)}, cp);
    }
    std::vector<int> blocks;
    for (int b = 1; b <= ctx.k; ++b) blocks.push_back(b);
    OperatorWord full = pi_word_at(blocks, d, ctx.m) * inner;

    Json j;
    j["spec"] = Json{{"m", spec.m}, {"k", spec.k}, {"lambda", spec.lambda}};
    j["c"] = std::move(cvals);
    j["word"] = word_to_json(full);
    if (spec.k == 1 && spec.lambda == Weight{2}) {
        // Reference form of the introduction for comparison.
        OperatorWord ref = OperatorWord::gen(Generator::inner_dd(0, 0));
        ref = ref - OperatorWord::sequence({Generator::inner_ud(1, 0), Generator::inner_dd(1, 0)},
                                           Rat(4) / (spec.m + 2));
        ref = ref +
              OperatorWord::sequence({Generator::inner_uu(1, 1), Generator::inner_dd(1, 0),
                                      Generator::inner_dd(1, 0)},
                                     Rat(4) / (Rat(spec.m) * (spec.m + 2)));
        j["reference"] = word_to_json(ref);
    }
    emit(j, a);
    return 0;
}

int cmd_verify(const CommonArgs& a) {
    HSLaplaceSpec spec = make_spec(a);
    std::vector<CheckKind> checks;
    auto add = [&](const std::string& name) {
        if (name == "rotation") checks.push_back(CheckKind::Rotation);
        else if (name == "translation") checks.push_back(CheckKind::Translation);
        else if (name == "dilation") checks.push_back(CheckKind::Dilation);
        else if (name == "sct") checks.push_back(CheckKind::Sct);
        else throw InvalidInput("unknown check '" + name + "'");
    };
    if (a.checks == "all") {
        add("translation");
        add("rotation");
        add("dilation");
        add("sct");
    } else {
        std::stringstream ss(a.checks);
        std::string tok;
        while (std::getline(ss, tok, ',')) add(tok);
    }
    VerifyReport rep = verify_invariance(spec, checks, a.trials, a.x_degree, a.seed,
                                         parse_mutation(a.mutate), !a.no_value_check);
    emit(verify_report_to_json(rep), a);
    return rep.all_pass() ? 0 : 1;
}

int cmd_kernel(const CommonArgs& a) {
    HSLaplaceSpec spec = make_spec(a);
    SubspaceBasis b = basis_typeA(a.lambda0, spec.lambda, spec.context());
    if (!b.certified) canonicalize_basis(b);
    Json j;
    j["lambda0"] = a.lambda0;
    j["lambda"] = spec.lambda;
    j["m"] = spec.m;
    Json bj = basis_to_json(b);
    for (auto& [key, value] : bj.items()) j[key] = std::move(value);
    emit(j, a);
    return 0;
}

int cmd_decompose(const CommonArgs& a) {
    HSLaplaceSpec spec = make_spec(a);
    DecompositionReport rep = decompose_typeA(a.lambda0, spec.lambda, spec.context());
    emit(decomposition_to_json(rep), a);
    return rep.consistent ? 0 : 1;
}

int cmd_dim(const CommonArgs& a, const std::vector<int>& mu) {
    if (mu.empty()) throw InvalidInput("dim: --mu required");
    Context ctx{int(mu.size()) - 1, a.m};
    SubspaceBasis b = basis_simplicial(mu, ctx, 0);
    Json j;
    j["mu"] = mu;
    j["m"] = a.m;
    j["dim"] = b.dim();
    emit(j, a);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hsl: exact higher spin Laplace operator toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    std::vector<int> mu;

    auto add_common = [&](CLI::App* cmd, bool needs_lambda, bool needs_seed) {
        cmd->add_option("--m", args.m, "ambient dimension")->required();
        if (needs_lambda)
            cmd->add_option("--lambda", args.lambda,
                            "highest weight entries lambda_1,...,lambda_k")
                ->required()
                ->delimiter(',');
        cmd->add_option("--out", args.out, "write JSON to this file instead of stdout");
        cmd->add_flag("--pretty", args.pretty, "indent the JSON output");
        if (needs_seed)
            cmd->add_option("--seed", args.seed, "PRNG seed (mandatory, no wall-clock default)")
                ->required();
    };

    CLI::App* construct = app.add_subcommand("construct", "emit the expanded operator word");
    add_common(construct, true, false);

    CLI::App* verify = app.add_subcommand("verify", "exact conformal invariance checks");
    add_common(verify, true, true);
    verify->add_option("--x-degree", args.x_degree, "x-degree of the random fields");
    verify->add_option("--checks", args.checks, "all or csv of rotation,translation,dilation,sct");
    verify->add_option("--trials", args.trials, "random trials per check");
    verify->add_flag("--no-value-check", args.no_value_check, "skip value-space validation");
    verify->add_option("--mutate", args.mutate, "")->group("");  // test hook, hidden

    CLI::App* kernel = app.add_subcommand("kernel", "exact basis of the type A kernel");
    add_common(kernel, true, false);
    kernel->add_option("--lambda0", args.lambda0, "x-homogeneity degree")->required();

    CLI::App* decompose = app.add_subcommand("decompose", "decompose the type A kernel");
    add_common(decompose, true, false);
    decompose->add_option("--lambda0", args.lambda0, "x-homogeneity degree")->required();

    CLI::App* dim = app.add_subcommand("dim", "dimension of a simplicial harmonic space");
    add_common(dim, false, false);
    dim->add_option("--mu", mu, "weight entries mu_0,...,mu_k")->required()->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(args);
        if (verify->parsed()) return cmd_verify(args);
        if (kernel->parsed()) return cmd_kernel(args);
        if (decompose->parsed()) return cmd_decompose(args);
        if (dim->parsed()) return cmd_dim(args, mu);
    } catch (const hsl::PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 3;
    } catch (const hsl::SizeRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
