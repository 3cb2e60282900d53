#include "hsl/extremal.hpp"

#include <sstream>

namespace hsl {

namespace {

// Per-block degree of a polynomial that must be homogeneous in that block.
int block_degree_checked(const Poly& p, int block, const char* who) {
    int deg = -1;
    for (const auto& [mo, c] : p.terms()) {
        int d = mo.block_degree(block);
        if (deg < 0)
            deg = d;
        else if (d != deg)
            throw HomogeneityError(std::string(who) + ": input not homogeneous in block " +
                                   std::to_string(block));
    }
    return deg;
}

[[noreturn]] void pole(const ProjectorFactor& f, int s, const Poly& p) {
    std::ostringstream os;
    os << "pole in projector factor " << f.name() << " at series index s=" << s << ", degree (";
    DegreeReport rep = multidegree(p);
    for (size_t i = 0; i < rep.degree.degrees.size(); ++i)
        os << (i ? "," : "") << rep.degree.degrees[i];
    os << "), m=" << p.context().m;
    throw PoleError(os.str());
}

}  // namespace

std::string ProjectorFactor::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Minus2Eps: os << "pi(-2e" << a << ")"; break;
        case Kind::MinusEpsEps: os << "pi(-e" << a << "-e" << b << ")"; break;
        case Kind::EpsMinusEps: os << "pi(e" << a << "-e" << b << ")"; break;
    }
    return os.str();
}

Poly pi_factor(const ProjectorFactor& f, const Poly& p) {
    if (p.is_zero()) return p;
    const Context& ctx = p.context();
    const Rat half_m = Rat(ctx.m) / 2;

    int da = block_degree_checked(p, f.block_a, "pi_factor");
    int db = (f.kind == ProjectorFactor::Kind::Minus2Eps)
                 ? da
                 : block_degree_checked(p, f.block_b, "pi_factor");

    // Gamma(z+1)/Gamma(z+1+s) = prod_{t=1..s} 1/(z+t); every series term
    // preserves the multidegree, so z is evaluated once on the input.
    Rat z;
    Generator down{}, up{};
    int bound = 0;
    switch (f.kind) {
        case ProjectorFactor::Kind::Minus2Eps:
            z = -Rat(da) - half_m + f.a;
            down = Generator::inner_dd(f.block_a, f.block_a);
            up = Generator::inner_uu(f.block_a, f.block_a);
            bound = da / 2;
            break;
        case ProjectorFactor::Kind::MinusEpsEps:
            z = -Rat(da) - Rat(db) - ctx.m + f.a + f.b;
            down = Generator::inner_dd(f.block_a, f.block_b);
            up = Generator::inner_uu(f.block_a, f.block_b);
            bound = std::min(da, db);
            break;
        case ProjectorFactor::Kind::EpsMinusEps:
            z = Rat(da) - Rat(db) + f.b - f.a;
            down = Generator::inner_ud(f.block_a, f.block_b);  // <u_i,d_j>
            up = Generator::inner_ud(f.block_b, f.block_a);    // <u_j,d_i>
            bound = db;
            break;
    }

    Poly acc = p;
    Poly w = p;
    Rat coef = 1;
    int s = 0;
    while (true) {
        w = apply_generator(down, w);
        if (w.is_zero()) break;
        ++s;
        if (s > bound)
            throw std::logic_error("projector series exceeded its degree bound");
        Rat den = z + s;
        if (den == 0) pole(f, s, p);
        switch (f.kind) {
            case ProjectorFactor::Kind::Minus2Eps: coef /= Rat(4) * s * den; break;
            case ProjectorFactor::Kind::MinusEpsEps: coef /= Rat(s) * den; break;
            case ProjectorFactor::Kind::EpsMinusEps: coef /= Rat(-s) * den; break;
        }
        Poly term = w;
        for (int t = 0; t < s; ++t) term = apply_generator(up, term);
        acc += term.scaled(coef);
    }
    return acc;
}

std::vector<ProjectorFactor> simplicial_factors(const std::vector<int>& blocks) {
    const int n = int(blocks.size());
    std::vector<ProjectorFactor> fs;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n; ++j)
            fs.push_back(ProjectorFactor::eps_minus_eps(i, j, blocks[i - 1], blocks[j - 1]));
    for (int b = n; b >= 1; --b) {
        fs.push_back(ProjectorFactor::minus2eps(b, blocks[b - 1]));
        for (int a = b - 1; a >= 1; --a)
            fs.push_back(ProjectorFactor::minus_eps_eps(a, b, blocks[a - 1], blocks[b - 1]));
    }
    // Left-to-right this reproduces the displayed normal ordering
    // (for k=3: e1-e2, e1-e3, e2-e3, -2e3, -e2-e3, -e1-e3, -2e2, -e1-e2, -2e1).
    return fs;
}

Poly pi_product(const Poly& p, const std::vector<ProjectorFactor>& factors) {
    Poly w = p;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (w.is_zero()) break;
        w = pi_factor(*it, w);
    }
    return w;
}

Poly pi_blocks(const Poly& p, const std::vector<int>& blocks) {
    return pi_product(p, simplicial_factors(blocks));
}

Poly pi_sp2k(const Poly& p) {
    std::vector<int> blocks;
    for (int b = 1; b <= p.context().k; ++b) blocks.push_back(b);
    return pi_product(p, simplicial_factors(blocks));
}

OperatorWord pi_word_at(const std::vector<int>& blocks, const MultiDegree& d, int m) {
    OperatorWord word = OperatorWord::identity();
    auto factors = simplicial_factors(blocks);
    const Rat half_m = Rat(m) / 2;
    for (const auto& f : factors) {
        int da = d.degrees[f.block_a];
        int db = d.degrees[f.block_b];
        Rat z;
        Generator down{}, up{};
        int bound = 0;
        switch (f.kind) {
            case ProjectorFactor::Kind::Minus2Eps:
                z = -Rat(da) - half_m + f.a;
                down = Generator::inner_dd(f.block_a, f.block_a);
                up = Generator::inner_uu(f.block_a, f.block_a);
                bound = da / 2;
                break;
            case ProjectorFactor::Kind::MinusEpsEps:
                z = -Rat(da) - Rat(db) - m + f.a + f.b;
                down = Generator::inner_dd(f.block_a, f.block_b);
                up = Generator::inner_uu(f.block_a, f.block_b);
                bound = std::min(da, db);
                break;
            case ProjectorFactor::Kind::EpsMinusEps:
                z = Rat(da) - Rat(db) + f.b - f.a;
                down = Generator::inner_ud(f.block_a, f.block_b);
                up = Generator::inner_ud(f.block_b, f.block_a);
                bound = db;
                break;
        }
        OperatorWord factor_word = OperatorWord::identity();
        Rat coef = 1;
        for (int s = 1; s <= bound; ++s) {
            Rat den = z + s;
            if (den == 0)
                throw PoleError("pole while expanding projector word in factor " + f.name());
            switch (f.kind) {
                case ProjectorFactor::Kind::Minus2Eps: coef /= Rat(4) * s * den; break;
                case ProjectorFactor::Kind::MinusEpsEps: coef /= Rat(s) * den; break;
                case ProjectorFactor::Kind::EpsMinusEps: coef /= Rat(-s) * den; break;
            }
            std::vector<OperatorWord::Item> items;
            for (int t = 0; t < s; ++t) items.push_back(up);
            for (int t = 0; t < s; ++t) items.push_back(down);
            factor_word = factor_word + OperatorWord::sequence(std::move(items), coef);
        }
        word = word * factor_word;
    }
    return word;
}

Poly project_harmonic(const Poly& p, int block) {
    return pi_factor(ProjectorFactor::minus2eps(1, block), p);
}

Poly pi_harmonic_u(const OperatorWord& w, const Poly& p, int block) {
    return project_harmonic(w.apply(p), block);
}

Poly pi_u_raising_two_term(const Poly& p, int block) {
    const Context& ctx = p.context();
    Poly raised = apply_generator(Generator::inner_ud(block, 0), p);
    Poly corr = apply_generator(Generator::inner_dd(block, 0), p);
    if (corr.is_zero()) return raised;
    corr = apply_generator(Generator::inner_uu(block, block), corr);
    int du = block_degree_checked(corr, block, "pi_u_raising_two_term");
    Rat den = Rat(2 * du) + ctx.m - 4;
    if (den == 0) throw PoleError("pi_u[<u,d_x>]: 2E_u+m-4 vanishes");
    return raised - corr.scaled(1 / den);
}

Poly sp4_generator(Sp4Gen g, const Poly& p, int bu, int bv) {
    Generator raw{};
    switch (g) {
        case Sp4Gen::C: raw = Generator::inner_uu(bu, bv); break;
        case Sp4Gen::A: raw = Generator::inner_dd(bu, bv); break;
        case Sp4Gen::S_u: raw = Generator::inner_ud(bu, bv); break;
        case Sp4Gen::S_v: raw = Generator::inner_ud(bv, bu); break;
    }
    Poly w = apply_generator(raw, p);
    w = project_harmonic(w, bu);
    w = project_harmonic(w, bv);
    return w;
}

}  // namespace hsl
