#ifndef HSL_BASICS_HPP
#define HSL_BASICS_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsl {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// A context fixes the number of dummy blocks k (blocks are 0..k, block 0 is
// the actual variable x = u_0) and the ambient dimension m shared by all blocks.
struct Context {
    int k = 0;
    int m = 0;

    int blocks() const { return k + 1; }
    bool operator==(const Context&) const = default;
};

// One coordinate u_{block,component}; block 0 is x, components are 1-based.
struct VarRef {
    std::uint16_t block = 0;
    std::uint16_t component = 1;

    std::uint32_t id() const { return (std::uint32_t(block) << 16) | component; }
    auto operator<=>(const VarRef&) const = default;
};

inline VarRef var_x(int component) { return VarRef{0, std::uint16_t(component)}; }
inline VarRef var_u(int block, int component) {
    return VarRef{std::uint16_t(block), std::uint16_t(component)};
}

// Integer weight / multidegree tuple (lambda_0; lambda_1, ..., lambda_k).
using Weight = std::vector<int>;

struct MultiDegree {
    std::vector<int> degrees;   // one entry per block, 0..k

    bool operator==(const MultiDegree&) const = default;
    int total() const {
        int t = 0;
        for (int d : degrees) t += d;
        return t;
    }
};

inline bool is_dominant(const Weight& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return w.empty() || w.back() >= 0;
}

// Error taxonomy. The CLI maps these onto exit codes.
struct ContextError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HomogeneityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValueSpaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Desk-scale guard: basis enumerations above this many monomials are refused.
std::size_t max_monomials();

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace hsl

#endif
