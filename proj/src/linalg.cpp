#include "hsl/linalg.hpp"

#include <algorithm>

namespace hsl {

void IVec::normalize_content() {
    if (e.empty()) return;
    Int g = 0;
    for (const auto& [i, c] : e) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    if (e.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& [i, c] : e) c /= g;
    }
}

IVec axpy(const Int& a, const IVec& r, const Int& b, const IVec& piv) {
    IVec out;
    out.e.reserve(r.e.size() + piv.e.size());
    size_t i = 0, j = 0;
    while (i < r.e.size() && j < piv.e.size()) {
        if (r.e[i].first == piv.e[j].first) {
            Int c = a * r.e[i].second + b * piv.e[j].second;
            if (c != 0) out.e.emplace_back(r.e[i].first, std::move(c));
            ++i, ++j;
        } else if (r.e[i].first < piv.e[j].first) {
            out.e.emplace_back(r.e[i].first, a * r.e[i].second);
            ++i;
        } else {
            out.e.emplace_back(piv.e[j].first, b * piv.e[j].second);
            ++j;
        }
    }
    for (; i < r.e.size(); ++i) out.e.emplace_back(r.e[i].first, a * r.e[i].second);
    for (; j < piv.e.size(); ++j) out.e.emplace_back(piv.e[j].first, b * piv.e[j].second);
    return out;
}

IVec eliminate_lead(const IVec& r, const IVec& piv) {
    const Int& rl = r.lead_coef();
    const Int& pl = piv.lead_coef();
    Int g = gcd(rl, pl);
    IVec out = axpy(pl / g, r, -(rl / g), piv);
    out.normalize_content();
    return out;
}

bool ExactEchelon::insert(IVec row) {
    row.normalize_content();
    while (!row.empty()) {
        auto it = rows_.find(row.lead());
        if (it == rows_.end()) {
            rows_.emplace(row.lead(), std::move(row));
            return true;
        }
        row = eliminate_lead(row, it->second);
    }
    return false;
}

IVec ExactEchelon::reduce(IVec row) const {
    row.normalize_content();
    while (!row.empty()) {
        auto it = rows_.find(row.lead());
        if (it == rows_.end()) return row;
        row = eliminate_lead(row, it->second);
    }
    return row;
}

void ExactEchelon::back_substitute() {
    // Pivots descending: each row's tail entries at pivot columns are cleared
    // against rows already in reduced form.
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        IVec& row = it->second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t t = 1; t < row.e.size(); ++t) {
                auto jt = rows_.find(row.e[t].first);
                if (jt == rows_.end()) continue;
                const IVec& piv = jt->second;
                const Int& c = row.e[t].second;
                Int g = gcd(c, piv.lead_coef());
                row = axpy(piv.lead_coef() / g, row, -(c / g), piv);
                row.normalize_content();
                changed = true;
                break;
            }
        }
    }
}

std::vector<IVec> nullspace(const std::vector<IVec>& rows, std::uint32_t ncols) {
    ExactEchelon ech;
    for (const auto& r : rows) ech.insert(r);
    ech.back_substitute();

    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [lead, row] : ech.rows()) is_pivot[lead] = true;

    std::vector<IVec> kernel;
    for (std::uint32_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        // v_f = 1, v_p = -row_p[f] / row_p[p]; scale to integers.
        std::vector<std::pair<std::uint32_t, Rat>> entries;
        entries.emplace_back(f, Rat(1));
        for (const auto& [p, row] : ech.rows()) {
            for (const auto& [idx, c] : row.e) {
                if (idx == f) {
                    entries.emplace_back(p, -Rat(c) / Rat(row.lead_coef()));
                    break;
                }
                if (idx > f) break;
            }
        }
        Int lcm_den = 1;
        for (const auto& [idx, q] : entries) lcm_den = lcm(lcm_den, Int(denominator(q)));
        IVec v;
        v.e.reserve(entries.size());
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [idx, q] : entries)
            v.e.emplace_back(idx, Int(numerator(q)) * (lcm_den / Int(denominator(q))));
        v.normalize_content();
        // Sign convention: positive entry at the free column.
        bool neg = false;
        for (const auto& [idx, c] : v.e)
            if (idx == f) neg = (c < 0);
        if (neg)
            for (auto& [idx, c] : v.e) c = -c;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

size_t rank_of(const std::vector<IVec>& rows) {
    ExactEchelon ech;
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

std::vector<IVec> rref_span(const std::vector<IVec>& vecs) {
    ExactEchelon ech;
    for (const auto& v : vecs) ech.insert(v);
    ech.back_substitute();
    std::vector<IVec> out;
    out.reserve(ech.rank());
    for (const auto& [lead, row] : ech.rows()) out.push_back(row);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool small_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::uint32_t modular_prime(int index) {
    // Descend from 2^20; primes this size allow lazy uint64 accumulation.
    std::uint32_t n = (1u << 20) - 1;
    int found = 0;
    for (;; --n) {
        if (small_prime(n)) {
            if (found == index) return n;
            ++found;
        }
    }
}

DenseModpEchelon::DenseModpEchelon(std::uint32_t p, std::uint32_t ncols)
    : p_(p), ncols_(ncols), row_of_lead_(ncols, -1) {}

bool DenseModpEchelon::insert(std::vector<std::uint64_t>&& row) {
    // Entries accumulate lazily: values stay below 2^40 * rank < 2^63 because
    // stored pivot rows are reduced and p ~ 2^20.
    for (std::uint32_t c = 0; c < ncols_; ++c) {
        std::uint64_t v = row[c] % p_;
        if (v == 0) {
            row[c] = 0;
            continue;
        }
        std::int32_t ri = row_of_lead_[c];
        if (ri < 0) {
            // New pivot: reduce the whole row and scale the lead to 1.
            std::uint64_t inv = modpow(v, p_ - 2, p_);
            for (std::uint32_t j = c; j < ncols_; ++j) row[j] = (row[j] % p_) * inv % p_;
            for (std::uint32_t j = 0; j < c; ++j) row[j] = 0;
            row_of_lead_[c] = std::int32_t(rows_.size());
            rows_.push_back(std::move(row));
            return true;
        }
        const std::vector<std::uint64_t>& piv = rows_[size_t(ri)];
        std::uint64_t mult = p_ - v;  // piv lead is 1
        const std::uint64_t* pv = piv.data();
        std::uint64_t* rv = row.data();
        for (std::uint32_t j = c; j < ncols_; ++j) rv[j] += mult * pv[j];
        row[c] = 0;
    }
    return false;
}

std::vector<std::uint64_t> sketch_row(const IVec& v, const SketchSpec& spec, std::uint32_t p) {
    std::vector<std::uint64_t> out(spec.dim, 0);
    for (const auto& [idx, c] : v.e) {
        std::uint64_t cm = std::uint64_t(mpz_fdiv_ui(c.backend().data(), p));
        if (cm == 0) continue;
        std::uint64_t h = splitmix64(spec.salt ^ (std::uint64_t(idx) * 0x9e3779b97f4a7c15ull));
        for (int s = 0; s < spec.slots; ++s) {
            h = splitmix64(h);
            std::uint32_t pos = std::uint32_t(h % spec.dim);
            std::uint64_t val = (h >> 32) & 1 ? cm : p - cm;
            out[pos] = (out[pos] + val) % p;
        }
    }
    return out;
}

}  // namespace hsl
