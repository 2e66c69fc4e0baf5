#ifndef SUBRAO_PREDICT_HPP
#define SUBRAO_PREDICT_HPP

// Closed-form predictions. Integer arithmetic only: nothing here may depend on
// the linear algebra modules, so these values act as an independent oracle.
// Throughout 2n - 1 = q p + r with 0 <= r < p, and g = (p-1)^2.

#include <subrao/errors.hpp>
#include <subrao/scalar.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace subrao::predict {

/// Jordan block size -> multiplicity.
using Blocks = std::map<std::size_t, std::size_t>;

enum class SummandKind { GroupAlgebra, QuotientByA, QuotientByB };

struct Summand {
    SummandKind kind;
    std::size_t param;  // quotient exponent; 0 for K[G]
    std::size_t count;
    friend bool operator==(const Summand&, const Summand&) = default;
};

struct Prediction {
    std::string target;
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::string tag;
    bool r0_convention = false;  // true when p | 2n-1 and the correction summands were dropped
};

struct BlocksPrediction : Prediction {
    Blocks blocks;
};

struct DecompositionPrediction : Prediction {
    std::vector<Summand> summands;
};

namespace detail {

inline void require_prime(std::uint32_t p) {
    if (p == 2) throw EvenPrime();
    require_odd_prime(p);
}

inline void require_n(std::size_t n, std::size_t least) {
    if (n < least) throw std::invalid_argument("n must be at least " + std::to_string(least));
}

inline long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
inline long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

inline std::size_t blocks_dimension(const Blocks& b) {
    std::size_t d = 0;
    for (auto [l, c] : b) d += l * c;
    return d;
}

inline void add(Blocks& b, std::size_t l, long c) {
    if (c < 0) throw std::logic_error("negative predicted multiplicity");
    if (c > 0) b[l] += static_cast<std::size_t>(c);
}

inline void assert_dimension(std::size_t got, std::size_t want, const char* what) {
    if (got != want) throw std::logic_error(std::string("dimension identity fails for ") + what);
}

}  // namespace detail

inline std::size_t genus(std::uint32_t p) { return std::size_t{p - 1} * (p - 1); }

/// dim H^1(Gamma, P_{2n-2}): (2n-1)(g-1) for n >= 2 and g for n = 1.
inline std::size_t h1_dimension(std::uint32_t p, std::size_t n) {
    return n == 1 ? genus(p) : (2 * n - 1) * (genus(p) - 1);
}

inline std::size_t der_dimension(std::uint32_t p, std::size_t n) { return (2 * n - 1) * genus(p); }

/// K[A]-structure of H^1.
inline BlocksPrediction predict_KA(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    detail::require_n(n, 2);
    const long m = static_cast<long>(2 * n - 1), P = p, r = m % P;
    BlocksPrediction out{{"KA", p, n, "ka-decomposition", r == 0}, {}};
    if (r > 0) {
        detail::add(out.blocks, p, (P - 1) * m - P * detail::ceil_div(m, P));
        detail::add(out.blocks, static_cast<std::size_t>(P - r), P);
    } else {
        detail::add(out.blocks, p, (P - 2) * m);
    }
    detail::assert_dimension(detail::blocks_dimension(out.blocks), h1_dimension(p, n), "predict_KA");
    return out;
}

/// K[G]-structure of H^1 as a list of reference summands.
inline DecompositionPrediction predict_KG(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    detail::require_n(n, 2);
    const long m = static_cast<long>(2 * n - 1), P = p, r = m % P;
    DecompositionPrediction out{{"KG", p, n, "kg-decomposition", r == 0}, {}};
    const long free = m - 2 * detail::ceil_div(m, P);
    if (free < 0) throw std::logic_error("negative free rank");
    if (free > 0) out.summands.push_back({SummandKind::GroupAlgebra, 0, static_cast<std::size_t>(free)});
    if (r > 0) {
        out.summands.push_back({SummandKind::QuotientByA, static_cast<std::size_t>(P - r), 1});
        out.summands.push_back({SummandKind::QuotientByB, static_cast<std::size_t>(P - r), 1});
    }
    std::size_t dim = 0;
    for (const auto& s : out.summands) dim += s.count * (s.kind == SummandKind::GroupAlgebra ? std::size_t{p} * p : s.param * p);
    detail::assert_dimension(dim, h1_dimension(p, n), "predict_KG");
    return out;
}

/// Multiplicity of K[G] in predict_KG.
inline std::size_t predicted_free_rank(std::uint32_t p, std::size_t n) {
    for (const auto& s : predict_KG(p, n).summands)
        if (s.kind == SummandKind::GroupAlgebra) return s.count;
    return 0;
}

/// K[A]-structure of Der(Gamma, P_{2n-2}).
inline BlocksPrediction predict_der(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    detail::require_n(n, 1);
    const long m = static_cast<long>(2 * n - 1), P = p, q = m / P, r = m % P;
    BlocksPrediction out{{"DER", p, n, "der-decomposition", false}, {}};
    if (r > 0) {
        detail::add(out.blocks, p, (P - 1) * ((P - 1) * q + r - 1));
        detail::add(out.blocks, static_cast<std::size_t>(P - r), P - 1);
    } else {
        detail::add(out.blocks, p, (P - 1) * (P - 1) * m / P);
    }
    detail::assert_dimension(detail::blocks_dimension(out.blocks), der_dimension(p, n), "predict_der");
    return out;
}

/// Second derivation of the K[A]-structure, from the ramification data of the
/// cover X -> X/A: g_Y = 0, N_i = 1, n_i = 2n(p-1), ceiling-difference form.
inline BlocksPrediction nakajima_multiplicities(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    detail::require_n(n, 2);
    const long m = static_cast<long>(2 * n - 1), P = p, twon = static_cast<long>(2 * n);
    BlocksPrediction out{{"NAKAJIMA", p, n, "nakajima", m % P == 0}, {}};
    detail::add(out.blocks, p, (P - 1) * m - P * detail::ceil_div(m, P));
    for (long j = 1; j < P; ++j)
        detail::add(out.blocks, static_cast<std::size_t>(j),
                    P * (detail::ceil_div(twon + j, P) - detail::ceil_div(twon + j - 1, P)));
    detail::assert_dimension(detail::blocks_dimension(out.blocks), h1_dimension(p, n), "nakajima_multiplicities");
    return out;
}

/// The same multiplicities from the floor expressions before simplification.
inline Blocks nakajima_floor_form(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    detail::require_n(n, 2);
    const long P = p, ni = static_cast<long>(2 * n) * (P - 1), m = static_cast<long>(2 * n - 1);
    Blocks b;
    detail::add(b, p, -m + P * detail::floor_div(ni - (P - 1), P));
    for (long j = 1; j < P; ++j)
        detail::add(b, static_cast<std::size_t>(j), P * (-detail::floor_div(ni - j, P) + detail::floor_div(ni - (j - 1), P)));
    return b;
}

/// Rank of the free K[G]-module in the divisor-twist sequence: (2n-1)(g_Y - 1 + r_0)
/// with g_Y = 0 and two ramified orbits.
inline std::size_t koeck_free_rank(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    detail::require_n(n, 2);
    return 2 * n - 1;
}

/// dim H^1 + two induced stalks of dimension p(2n-1) each = p^2 times the free rank.
inline bool koeck_dimension_identity(std::uint32_t p, std::size_t n) {
    const std::size_t pp = std::size_t{p} * p;
    return h1_dimension(p, n) + 2 * p * (2 * n - 1) == pp * koeck_free_rank(p, n);
}

/// Structure of the stalk: J_p^q + J_r.
inline BlocksPrediction predict_stalk(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    detail::require_n(n, 1);
    const std::size_t m = 2 * n - 1, q = m / p, r = m % p;
    BlocksPrediction out{{"STALK", p, n, "stalk", false}, {}};
    detail::add(out.blocks, p, static_cast<long>(q));
    if (r > 0) detail::add(out.blocks, r, 1);
    detail::assert_dimension(detail::blocks_dimension(out.blocks), m, "predict_stalk");
    return out;
}

/// dim H^1(Gamma, P)^G = dim H^1(N, P) as stated: 2n - 1 (and 1 for n = 1).
inline std::size_t predicted_G_invariants(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    return n == 1 ? 1 : 2 * n - 1;
}

/// dim H^1(A*B, P) from Der(A*B, P) = Der(A, P) x Der(B, P), where a derivation
/// of the cyclic group A is a vector killed by the norm element: on
/// P = J_p^q + J_r the norm kernel has dimension 2n - 1 - q. Subtracting the
/// principal derivations (P^{A*B} = 0) leaves 2n - 1 - 2q. Agrees with
/// predicted_G_invariants exactly when p > 2n - 1.
inline std::size_t norm_corrected_G_invariants(std::uint32_t p, std::size_t n) {
    detail::require_prime(p);
    detail::require_n(n, 1);
    if (n == 1) return 1;
    const std::size_t m = 2 * n - 1;
    return m - 2 * (m / p);
}

}  // namespace subrao::predict

#endif  // SUBRAO_PREDICT_HPP
