#ifndef SUBRAO_SKYSCRAPER_HPP
#define SUBRAO_SKYSCRAPER_HPP

// The stalk t k[[t]] / t^{2n} k[[t]] with sigma(t) = t / (1 + t).
// Basis t, t^2, ..., t^{2n-1}; row k-1 of the matrix is sigma(t^k).

#include <subrao/linalg.hpp>
#include <subrao/modrep.hpp>
#include <subrao/scalar.hpp>

#include <cstdint>
#include <vector>

namespace subrao {

namespace detail {

// Product of series truncated above degree `top`.
inline std::vector<Fp> series_mul(const std::vector<Fp>& x, const std::vector<Fp>& y, std::size_t top) {
    std::vector<Fp> r(top + 1, x[0].constant(0));
    for (std::size_t i = 0; i <= top; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= top; ++j) r[i + j] += x[i] * y[j];
    }
    return r;
}

}  // namespace detail

inline Matrix<Fp> sigma_matrix(std::uint32_t p, std::size_t n) {
    require_odd_prime(p);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const std::size_t top = 2 * n - 1;
    const Fp zero(0, p);
    // (1 + t)^-1 = 1 - t + t^2 - ...
    std::vector<Fp> inv(top + 1, zero);
    for (std::size_t k = 0; k <= top; ++k) inv[k] = Fp(k % 2 ? -1 : 1, p);
    Matrix<Fp> m(top, top, zero);
    std::vector<Fp> f(top + 1, zero);  // t^k (1 + t)^-k
    f[0] = Fp(1, p);
    for (std::size_t k = 1; k <= top; ++k) {
        std::vector<Fp> shifted(top + 1, zero);
        for (std::size_t d = 0; d < top; ++d) shifted[d + 1] = f[d];
        f = detail::series_mul(shifted, inv, top);
        for (std::size_t d = 1; d <= top; ++d) m(k - 1, d - 1) = f[d];
    }
    return m;
}

/// Coordinates of t^p (1 - t^{p-1})^-1 = t^p + t^{2p-1} + ... truncated at t^{2n-1}.
inline Vector<Fp> stalk_invariant(std::uint32_t p, std::size_t n) {
    const std::size_t top = 2 * n - 1;
    Vector<Fp> v(top, Fp(0, p));
    for (std::size_t d = p; d <= top; d += p - 1) v[d - 1] = Fp(1, p);
    return v;
}

inline JordanProfile stalk_profile(std::uint32_t p, std::size_t n) {
    return jordan_profile(sigma_matrix(p, n), p);
}

}  // namespace subrao

#endif  // SUBRAO_SKYSCRAPER_HPP
