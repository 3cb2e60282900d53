#include "hsl/spaces.hpp"

#include "hsl/extremal.hpp"
#include "hsl/operator_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hsl {

std::size_t exact_column_limit() {
    static std::size_t lim = [] {
        if (const char* env = std::getenv("HSL_EXACT_COLS")) {
            long v = std::atol(env);
            if (v >= 0) return std::size_t(v);
        }
        return std::size_t(30000);
    }();
    return lim;
}

namespace {

void enumerate_block(std::vector<Monomial>& acc, const Monomial& prefix, int block, int comp,
                     int remaining, int m) {
    if (comp == m) {
        acc.push_back(remaining ? prefix.mul(Monomial::var(var_u(block, comp), remaining))
                                : prefix);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        Monomial next = e ? prefix.mul(Monomial::var(var_u(block, comp), e)) : prefix;
        enumerate_block(acc, next, block, comp + 1, remaining - e, m);
    }
}

Int lcm_of_denominators(const Poly& p) {
    Int l = 1;
    for (const auto& [mo, c] : p.terms()) l = lcm(l, Int(denominator(c)));
    return l;
}

// Scale to integer coefficients and divide out the content.
Poly normalize_integer(const Poly& p) {
    if (p.is_zero()) return p;
    Int l = lcm_of_denominators(p);
    Int g = 0;
    for (const auto& [mo, c] : p.terms()) {
        g = gcd(g, Int(numerator(c)) * (l / Int(denominator(c))));
        if (g == 1) break;
    }
    Rat f = Rat(l) / Rat(g);
    return f == 1 ? p : p.scaled(f);
}

}  // namespace

std::vector<Monomial> basis_monomials(const MultiDegree& d, const Context& ctx) {
    if (int(d.degrees.size()) != ctx.blocks())
        throw ContextError("basis_monomials: degree tuple does not match context");
    // Count first so oversized instances are refused before any allocation.
    double count = 1;
    for (int b = 0; b < ctx.blocks(); ++b) {
        double c = 1;
        for (int t = 1; t <= d.degrees[b]; ++t)
            c = c * (d.degrees[b] + ctx.m - t) / t;  // C(d+m-1, m-1) built gradually
        count *= c;
        if (count > double(max_monomials()) * 1.0001)
            throw SizeRefusal("monomial basis exceeds HSL_MAX_MONOMIALS cap");
    }
    std::vector<Monomial> acc{Monomial::one()};
    for (int b = 0; b < ctx.blocks(); ++b) {
        if (d.degrees[b] == 0) continue;
        std::vector<Monomial> next;
        next.reserve(acc.size() * 4);
        for (const auto& prefix : acc) enumerate_block(next, prefix, b, 1, d.degrees[b], ctx.m);
        acc = std::move(next);
        if (acc.size() > max_monomials())
            throw SizeRefusal("monomial basis exceeds HSL_MAX_MONOMIALS cap");
    }
    std::sort(acc.begin(), acc.end(), MonomialOrder{ctx.blocks()});
    return acc;
}

MonomialIndex monomial_index(const MultiDegree& d, const Context& ctx) {
    MonomialIndex idx;
    idx.list = basis_monomials(d, ctx);
    idx.pos.reserve(idx.list.size() * 2);
    for (std::uint32_t i = 0; i < idx.list.size(); ++i) idx.pos.emplace(idx.list[i], i);
    return idx;
}

IVec poly_to_ivec(const Poly& p, const MonomialIndex& idx) {
    Int l = lcm_of_denominators(p);
    std::vector<std::pair<std::uint32_t, Int>> entries;
    entries.reserve(p.term_count());
    for (const auto& [mo, c] : p.terms()) {
        auto it = idx.pos.find(mo);
        if (it == idx.pos.end()) throw ContextError("poly_to_ivec: monomial outside the index");
        entries.emplace_back(it->second, Int(numerator(c)) * (l / Int(denominator(c))));
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    IVec v;
    v.e = std::move(entries);
    v.normalize_content();
    return v;
}

Poly ivec_to_poly(const IVec& v, const MonomialIndex& idx, const Context& ctx) {
    Poly p(ctx);
    for (const auto& [i, c] : v.e) p.add_term(idx.list[i], Rat(c));
    return p;
}

IVec PolyEchelon::to_vec(const Poly& p, bool grow) const {
    Int l = lcm_of_denominators(p);
    std::vector<std::pair<std::uint32_t, Int>> entries;
    for (const auto& [mo, c] : p.terms()) {
        auto it = coord_.find(mo);
        std::uint32_t id;
        if (it != coord_.end()) {
            id = it->second;
        } else if (grow) {
            id = std::uint32_t(coord_list_.size());
            coord_.emplace(mo, id);
            coord_list_.push_back(mo);
        } else {
            // contains() pre-checks every monomial, so this branch is dead.
            throw ContextError("PolyEchelon: monomial outside the coordinate map");
        }
        entries.emplace_back(id, Int(numerator(c)) * (l / Int(denominator(c))));
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    IVec v;
    v.e = std::move(entries);
    return v;
}

bool PolyEchelon::insert(const Poly& p) {
    if (p.is_zero()) return false;
    return ech_.insert(to_vec(p, true));
}

bool PolyEchelon::contains(const Poly& p) const {
    if (p.is_zero()) return true;
    for (const auto& [mo, c] : p.terms())
        if (coord_.find(mo) == coord_.end()) return false;
    return ech_.reduce(to_vec(p, false)).empty();
}

bool membership(const SubspaceBasis& b, const Poly& p) {
    PolyEchelon ech(b.ctx);
    for (const auto& q : b.basis) ech.insert(q);
    return ech.contains(p);
}

bool span_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.dim() != b.dim()) return false;
    PolyEchelon ea(a.ctx);
    for (const auto& q : a.basis) ea.insert(q);
    if (ea.rank() != a.dim()) return false;
    for (const auto& q : b.basis)
        if (!ea.contains(q)) return false;
    return true;
}

size_t span_rank(const Context& ctx, const std::vector<Poly>& polys) {
    PolyEchelon ech(ctx);
    for (const auto& p : polys) ech.insert(p);
    return ech.rank();
}

std::vector<IVec> nullspace(const ExactMatrix& a) { return nullspace(a.row_data, a.cols); }

std::vector<Poly> restrict_to_kernel(const Context& ctx, std::vector<Poly> start,
                                     const std::vector<NamedOp>& ops) {
    if (start.empty()) return start;
    // Transposed assembly: one matrix row per (operator, target monomial).
    struct RowKey {
        size_t op;
        Monomial mono;
        bool operator==(const RowKey&) const = default;
    };
    struct RowKeyHash {
        size_t operator()(const RowKey& k) const { return k.mono.hash() * 1315423911u + k.op; }
    };
    std::unordered_map<RowKey, std::uint32_t, RowKeyHash> row_ids;
    std::vector<std::vector<std::pair<std::uint32_t, Rat>>> rows;
    for (std::uint32_t c = 0; c < start.size(); ++c) {
        for (size_t o = 0; o < ops.size(); ++o) {
            Poly img = ops[o].op(start[c]);
            for (const auto& [mo, coef] : img.terms()) {
                auto [it, fresh] = row_ids.try_emplace(RowKey{o, mo}, std::uint32_t(rows.size()));
                if (fresh) rows.emplace_back();
                rows[it->second].emplace_back(c, coef);
            }
        }
    }
    std::vector<IVec> irows;
    irows.reserve(rows.size());
    for (auto& r : rows) {
        Int l = 1;
        for (const auto& [c, q] : r) l = lcm(l, Int(denominator(q)));
        IVec v;
        v.e.reserve(r.size());
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [c, q] : r) v.e.emplace_back(c, Int(numerator(q)) * (l / Int(denominator(q))));
        v.normalize_content();
        irows.push_back(std::move(v));
    }
    std::vector<IVec> kernel = nullspace(irows, std::uint32_t(start.size()));
    std::vector<Poly> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        Poly p(ctx);
        for (const auto& [c, coef] : v.e) p += start[c].scaled(Rat(coef));
        out.push_back(normalize_integer(p));
    }
    return out;
}

const std::vector<Poly>& harmonic_basis(const Context& ctx, int block, int degree) {
    struct Key {
        int k, m, block, degree;
        auto operator<=>(const Key&) const = default;
    };
    static std::mutex mutex;
    static std::map<Key, std::vector<Poly>> cache;
    Key key{ctx.k, ctx.m, block, degree};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    MultiDegree d;
    d.degrees.assign(ctx.blocks(), 0);
    d.degrees[block] = degree;
    std::vector<Poly> monos;
    for (const auto& mo : basis_monomials(d, ctx)) monos.push_back(Poly::monomial(ctx, mo, 1));
    std::vector<NamedOp> ops{{"Delta_" + std::to_string(block), [block](const Poly& p) {
                                  return apply_generator(Generator::inner_dd(block, block), p);
                              }}};
    auto basis = restrict_to_kernel(ctx, std::move(monos), ops);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.try_emplace(key, std::move(basis)).first->second;
}

namespace {

std::vector<Poly> tensor(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> out;
    out.reserve(a.size() * b.size());
    for (const auto& p : a)
        for (const auto& q : b) out.push_back(p * q);
    return out;
}

std::vector<NamedOp> stage_ops(const std::vector<int>& prev_blocks, int new_block,
                               bool with_skew) {
    std::vector<NamedOp> ops;
    for (int a : prev_blocks) {
        ops.push_back({"<d_" + std::to_string(a) + ",d_" + std::to_string(new_block) + ">",
                       [a, new_block](const Poly& p) {
                           return apply_generator(Generator::inner_dd(a, new_block), p);
                       }});
        if (with_skew)
            ops.push_back({"<u_" + std::to_string(a) + ",d_" + std::to_string(new_block) + ">",
                           [a, new_block](const Poly& p) {
                               return apply_generator(Generator::inner_ud(a, new_block), p);
                           }});
    }
    return ops;
}

std::uint64_t mono_key(const Monomial& mo, std::uint64_t op_salt) {
    return mo.hash() ^ (op_salt * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
}

struct PoleInPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void sketch_poly_into(const Poly& img, size_t op_id, const SketchSpec& spec, std::uint32_t p,
                      std::vector<std::uint64_t>& acc) {
    for (const auto& [mo, c] : img.terms()) {
        Int num = Int(numerator(c));
        std::uint64_t nm = std::uint64_t(mpz_fdiv_ui(num.backend().data(), p));
        Int den = Int(denominator(c));
        std::uint64_t dm = std::uint64_t(mpz_fdiv_ui(den.backend().data(), p));
        if (dm == 0) throw PoleInPrime("denominator divisible by certificate prime");
        std::uint64_t inv = 1, b = dm % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        std::uint64_t cm = nm % p * inv % p;
        if (cm == 0) continue;
        std::uint64_t h = mono_key(mo, op_id) ^ spec.salt;
        for (int s = 0; s < spec.slots; ++s) {
            h = (h ^ (h >> 27)) * 0x81c2f96a6e9cd905ull + 0x9e3779b97f4a7c15ull;
            std::uint32_t pos = std::uint32_t((h >> 8) % spec.dim);
            std::uint64_t val = (h & 1) ? cm : p - cm;
            acc[pos] = (acc[pos] + val) % p;
        }
    }
}

// Modular lower bound for the rank of the stacked operator matrix on the
// lazily-enumerated tensor columns. The sketch width grows until the rank
// stops saturating it, so the bound is tight in practice while memory stays
// proportional to the true rank.
template <typename ColumnFn>
size_t modp_stack_rank(size_t ncols, ColumnFn&& column, const std::vector<NamedOp>& ops,
                       std::uint32_t prime, std::uint64_t salt) {
    std::uint32_t sdim = 2048;
    for (;;) {
        if (sdim > ncols + 64) sdim = std::uint32_t(ncols) + 64;
        DenseModpEchelon ech(prime, sdim);
        SketchSpec spec{sdim, salt + sdim, 8};
        for (size_t c = 0; c < ncols; ++c) {
            Poly col = column(c);
            std::vector<std::uint64_t> row(sdim, 0);
            bool any = false;
            for (size_t o = 0; o < ops.size(); ++o) {
                Poly img = ops[o].op(col);
                if (!img.is_zero()) any = true;
                sketch_poly_into(img, o, spec, prime, row);
            }
            if (any) ech.insert(std::move(row));
        }
        if (ech.rank() + 64 <= sdim || sdim >= ncols + 64) return ech.rank();
        sdim *= 2;
    }
}

struct SeedEnumerator {
    // Deterministic stride walk over index tuples of the factor bases.
    std::vector<size_t> sizes;
    size_t total = 1, pos = 0, step = 1, count = 0;

    explicit SeedEnumerator(std::vector<size_t> sz) : sizes(std::move(sz)) {
        for (size_t s : sizes) total *= s;
        step = total > 3 ? (total / 2 + 31) | 1 : 1;
        while (std::gcd(step, total) != 1) step += 2;
    }
    bool done() const { return count >= total; }
    std::vector<size_t> next() {
        size_t v = pos;
        pos = (pos + step) % total;
        ++count;
        std::vector<size_t> idx(sizes.size());
        for (size_t i = 0; i < sizes.size(); ++i) {
            idx[i] = v % sizes[i];
            v /= sizes[i];
        }
        return idx;
    }
};

}  // namespace

size_t modp_operator_rank(size_t ncols, const std::function<Poly(size_t)>& column,
                          const std::vector<NamedOp>& ops, std::uint32_t prime,
                          std::uint64_t salt) {
    try {
        return modp_stack_rank(ncols, column, ops, prime, salt);
    } catch (const PoleInPrime& e) {
        throw PoleError(e.what());
    }
}

std::vector<NamedOp> simplicial_constraints(const Context&, int first_block, int count) {
    std::vector<NamedOp> ops;
    for (int i = 0; i < count; ++i) {
        for (int j = i; j < count; ++j) {
            int bi = first_block + i, bj = first_block + j;
            ops.push_back({"<d_" + std::to_string(bi) + ",d_" + std::to_string(bj) + ">",
                           [bi, bj](const Poly& p) {
                               return apply_generator(Generator::inner_dd(bi, bj), p);
                           }});
            if (i < j)
                ops.push_back({"<u_" + std::to_string(bi) + ",d_" + std::to_string(bj) + ">",
                               [bi, bj](const Poly& p) {
                                   return apply_generator(Generator::inner_ud(bi, bj), p);
                               }});
        }
    }
    return ops;
}

std::vector<NamedOp> typeA_constraints(const Context& ctx) {
    std::vector<NamedOp> ops;
    ops.push_back({"Delta_x", [](const Poly& p) {
                       return apply_generator(Generator::inner_dd(0, 0), p);
                   }});
    for (int i = 1; i <= ctx.k; ++i)
        ops.push_back({"<d_" + std::to_string(i) + ",d_x>", [i](const Poly& p) {
                           return apply_generator(Generator::inner_dd(i, 0), p);
                       }});
    auto value_ops = simplicial_constraints(ctx, 1, ctx.k);
    ops.insert(ops.end(), value_ops.begin(), value_ops.end());
    return ops;
}

namespace {

// One staged construction step shared by the exact and certified engines.
// `mu_prefix` covers blocks[0..j]; prev is the basis for blocks[0..j-1].
std::vector<Poly> certified_stage(const Context& ctx, const std::vector<int>& blocks, int j,
                                  const Weight& mu_prefix, const std::vector<Poly>& prev,
                                  const std::vector<Poly>& hb, bool& certified_flag) {
    std::vector<int> prev_blocks(blocks.begin(), blocks.begin() + j);
    std::vector<NamedOp> ops = stage_ops(prev_blocks, blocks[j], true);
    const size_t ncols = prev.size() * hb.size();

    std::vector<int> all_blocks(blocks.begin(), blocks.begin() + j + 1);
    auto all_factors = simplicial_factors(all_blocks);
    std::vector<NamedOp> all_ops;
    for (size_t a = 0; a < all_blocks.size(); ++a)
        for (size_t b = a; b < all_blocks.size(); ++b) {
            int ba = all_blocks[a], bb = all_blocks[b];
            all_ops.push_back({"<d,d>", [ba, bb](const Poly& p) {
                                   return apply_generator(Generator::inner_dd(ba, bb), p);
                               }});
            if (a < b)
                all_ops.push_back({"<u,d>", [ba, bb](const Poly& p) {
                                       return apply_generator(Generator::inner_ud(ba, bb), p);
                                   }});
        }

    for (int prime_idx = 0; prime_idx < 3; ++prime_idx) {
        std::uint32_t p = modular_prime(prime_idx);
        std::uint64_t salt = 0x5851f42d4c957f2dull * (prime_idx + 1);

        // Upper bound: modular rank of the stage constraints on the tensor.
        size_t upper;
        try {
            size_t rank_p = modp_stack_rank(
                ncols, [&](size_t c) { return prev[c / hb.size()] * hb[c % hb.size()]; }, ops, p,
                salt);
            upper = ncols - rank_p;
        } catch (const PoleInPrime&) {
            continue;  // prime divided a denominator; try the next one
        }

        // Lower bound: projector images of tensor seeds, modular independence,
        // each element verified exactly against every defining operator.
        std::vector<size_t> sizes;
        for (int t = 0; t <= j; ++t)
            sizes.push_back(harmonic_basis(ctx, blocks[t], mu_prefix[t]).size());
        SeedEnumerator seeds(sizes);
        std::uint32_t sdim = std::uint32_t(upper) + 257;
        DenseModpEchelon fam_ech(p, sdim);
        SketchSpec spec{sdim, salt ^ 0xabcdef1234567ull, 8};
        std::vector<Poly> family;
        try {
            while (family.size() < upper && !seeds.done()) {
                auto idx = seeds.next();
                Poly seed(ctx);
                bool first = true;
                for (int t = 0; t <= j; ++t) {
                    const Poly& h = harmonic_basis(ctx, blocks[t], mu_prefix[t])[idx[t]];
                    seed = first ? h : seed * h;
                    first = false;
                }
                Poly img = pi_product(seed, all_factors);
                if (img.is_zero()) continue;
                img = normalize_integer(img);
                std::vector<std::uint64_t> row(sdim, 0);
                sketch_poly_into(img, 0, spec, p, row);
                if (!fam_ech.insert(std::move(row))) continue;
                family.push_back(std::move(img));
            }
        } catch (const PoleInPrime&) {
            continue;
        }
        if (family.size() != upper) continue;

        // Exact verification: every family member satisfies every constraint.
        bool ok = true;
        for (const auto& f : family) {
            for (const auto& op : all_ops) {
                if (!op.op(f).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok)
            throw std::logic_error("projector image violates simplicial constraints");
        certified_flag = true;
        return family;
    }

    // Certification failed with every prime; fall back to the exact engine.
    return restrict_to_kernel(ctx, tensor(prev, hb), ops);
}

std::vector<Poly> simplicial_staged(const Weight& mu, const Context& ctx, int first_block,
                                    std::size_t column_limit, bool& certified_flag) {
    int len = int(mu.size());
    while (len > 0 && mu[len - 1] == 0) --len;
    std::vector<int> blocks;
    for (int t = 0; t < len; ++t) blocks.push_back(first_block + t);

    std::vector<Poly> cur{Poly::constant(ctx, 1)};
    for (int j = 0; j < len; ++j) {
        const std::vector<Poly>& hb = harmonic_basis(ctx, blocks[j], mu[j]);
        if (j == 0) {
            cur = hb;
            continue;
        }
        size_t ncols = cur.size() * hb.size();
        if (ncols <= column_limit) {
            std::vector<int> prev_blocks(blocks.begin(), blocks.begin() + j);
            cur = restrict_to_kernel(ctx, tensor(cur, hb), stage_ops(prev_blocks, blocks[j], true));
        } else {
            Weight prefix(mu.begin(), mu.begin() + j + 1);
            cur = certified_stage(ctx, blocks, j, prefix, cur, hb, certified_flag);
        }
    }
    return cur;
}

}  // namespace

SubspaceBasis basis_simplicial(const Weight& mu, const Context& ctx, int first_block) {
    if (!is_dominant(mu)) throw InvalidInput("basis_simplicial: weight must be dominant");
    int nonzero = 0;
    for (int v : mu)
        if (v > 0) ++nonzero;
    if (nonzero > ctx.m / 2)
        throw InvalidInput("basis_simplicial: more than floor(m/2) nonzero weight entries");
    if (first_block + int(mu.size()) > ctx.blocks())
        throw ContextError("basis_simplicial: weight does not fit the context");

    SubspaceBasis out;
    out.ctx = ctx;
    int len = int(mu.size());
    while (len > 0 && mu[len - 1] == 0) --len;
    for (const auto& op : simplicial_constraints(ctx, first_block, len))
        out.constraints.push_back(op.name);
    out.basis = simplicial_staged(mu, ctx, first_block, exact_column_limit(), out.certified);
    return out;
}

SubspaceBasis certified_simplicial(const Weight& mu, const Context& ctx, int first_block) {
    if (!is_dominant(mu)) throw InvalidInput("certified_simplicial: weight must be dominant");
    SubspaceBasis out;
    out.ctx = ctx;
    out.basis = simplicial_staged(mu, ctx, first_block, 0, out.certified);
    return out;
}

SubspaceBasis basis_howe(const MultiDegree& d, const Context& ctx) {
    if (int(d.degrees.size()) != ctx.blocks())
        throw ContextError("basis_howe: degree tuple does not match context");
    SubspaceBasis out;
    out.ctx = ctx;
    std::vector<Poly> cur{Poly::constant(ctx, 1)};
    std::vector<int> prev_blocks;
    for (int b = 0; b < ctx.blocks(); ++b) {
        const std::vector<Poly>& hb = harmonic_basis(ctx, b, d.degrees[b]);
        if (cur.size() == 1 && cur[0].term_count() == 1 && cur[0].terms().begin()->first.is_one()) {
            cur = hb;
        } else {
            cur = restrict_to_kernel(ctx, tensor(cur, hb), stage_ops(prev_blocks, b, false));
        }
        prev_blocks.push_back(b);
    }
    out.basis = std::move(cur);
    for (int i = 0; i <= ctx.k; ++i)
        for (int j = i; j <= ctx.k; ++j)
            out.constraints.push_back("<d_" + std::to_string(i) + ",d_" + std::to_string(j) + ">");
    return out;
}

void canonicalize_basis(SubspaceBasis& b) {
    if (b.basis.empty()) return;
    MultiDegree d = require_multidegree(b.basis.front(), "canonicalize_basis");
    MonomialIndex idx = monomial_index(d, b.ctx);
    std::vector<IVec> vecs;
    vecs.reserve(b.basis.size());
    for (const auto& p : b.basis) {
        if (!(require_multidegree(p, "canonicalize_basis") == d))
            throw HomogeneityError("canonicalize_basis: mixed multidegrees");
        vecs.push_back(poly_to_ivec(p, idx));
    }
    std::vector<IVec> rref = rref_span(vecs);
    b.basis.clear();
    for (const auto& v : rref) b.basis.push_back(ivec_to_poly(v, idx, b.ctx));
}

namespace {

void validate_typeA_args(int lambda0, const Weight& lambda, const Context& ctx) {
    if (int(lambda.size()) != ctx.k)
        throw ContextError("basis_typeA: lambda length must equal k");
    if (!is_dominant(lambda)) throw InvalidInput("basis_typeA: lambda must be dominant");
    if (!lambda.empty() && lambda0 < lambda[0])
        throw InvalidInput("basis_typeA: lambda0 >= lambda1 required");
    if (ctx.k >= ctx.m / 2) throw InvalidInput("basis_typeA: k < floor(m/2) required");
}

std::vector<NamedOp> typeA_trace_ops(const Context& ctx) {
    std::vector<NamedOp> ops;
    for (int i = 1; i <= ctx.k; ++i)
        ops.push_back({"<d_" + std::to_string(i) + ",d_x>", [i](const Poly& p) {
                           return apply_generator(Generator::inner_dd(i, 0), p);
                       }});
    return ops;
}

// Constraint rows of the trace operators over the harmonic tensor basis.
std::vector<IVec> typeA_rows(const std::vector<Poly>& hx, const std::vector<Poly>& value,
                             const std::vector<NamedOp>& ops) {
    struct RowKey {
        size_t op;
        Monomial mono;
        bool operator==(const RowKey&) const = default;
    };
    struct RowKeyHash {
        size_t operator()(const RowKey& k) const { return k.mono.hash() * 1315423911u + k.op; }
    };
    std::unordered_map<RowKey, std::uint32_t, RowKeyHash> row_ids;
    std::vector<IVec> rows;
    std::uint32_t c = 0;
    for (const auto& xe : hx) {
        for (const auto& ve : value) {
            Poly col = xe * ve;
            for (size_t o = 0; o < ops.size(); ++o) {
                Poly img = ops[o].op(col);
                for (const auto& [mo, coef] : img.terms()) {
                    auto [it, fresh] =
                        row_ids.try_emplace(RowKey{o, mo}, std::uint32_t(rows.size()));
                    if (fresh) rows.emplace_back();
                    if (Int(denominator(coef)) != 1)
                        throw std::logic_error("typeA_rows: non-integral tensor column");
                    rows[it->second].e.emplace_back(c, Int(numerator(coef)));
                }
            }
            ++c;
        }
    }
    for (auto& r : rows) r.normalize_content();
    return rows;
}

}  // namespace

SubspaceBasis basis_typeA(int lambda0, const Weight& lambda, const Context& ctx) {
    validate_typeA_args(lambda0, lambda, ctx);
    SubspaceBasis value = basis_simplicial(lambda, ctx, 1);
    const std::vector<Poly>& hx = harmonic_basis(ctx, 0, lambda0);
    std::vector<NamedOp> ops = typeA_trace_ops(ctx);
    SubspaceBasis out;
    out.ctx = ctx;
    out.certified = value.certified;
    out.basis = restrict_to_kernel(ctx, tensor(hx, value.basis), ops);
    out.constraints.push_back("Delta_x");
    for (const auto& op : ops) out.constraints.push_back(op.name);
    for (const auto& c : value.constraints) out.constraints.push_back(c);
    return out;
}

size_t typeA_kernel_dim(int lambda0, const Weight& lambda, const Context& ctx) {
    validate_typeA_args(lambda0, lambda, ctx);
    SubspaceBasis value = basis_simplicial(lambda, ctx, 1);
    const std::vector<Poly>& hx = harmonic_basis(ctx, 0, lambda0);
    std::vector<IVec> rows = typeA_rows(hx, value.basis, typeA_trace_ops(ctx));
    size_t cols = hx.size() * value.dim();
    return cols - rank_of(rows);
}

}  // namespace hsl
