#ifndef SUBRAO_POLYMOD_HPP
#define SUBRAO_POLYMOD_HPP

// P_{2n-2}: polynomials of degree <= 2n-2 in T, basis 1, T, ..., T^{2n-2},
// with the right action
//   F^phi(T) = (cT + d)^{2n-2} / (ad - bc)^{n-1} * F((aT + b)/(cT + d)).
// eA = [[1,1],[0,1]] (T -> T + 1) and eB = [[1,0],[s,1]].

#include <subrao/errors.hpp>
#include <subrao/freegroup.hpp>
#include <subrao/linalg.hpp>
#include <subrao/scalar.hpp>

#include <cstdint>
#include <vector>

namespace subrao {

namespace detail {

template <class K>
std::vector<K> poly_mul(const std::vector<K>& x, const std::vector<K>& y) {
    std::vector<K> r(x.size() + y.size() - 1, x[0].constant(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

}  // namespace detail

/// Matrix of the action of [[a,b],[c,d]] on P_{2n-2}; row l holds (T^l)^phi.
template <class K>
Matrix<K> action_matrix(std::size_t n, const K& a, const K& b, const K& c, const K& d) {
    const K det = a * d - b * c;
    if (det.is_zero()) throw SingularMoebius();
    const std::size_t deg = 2 * n - 2;
    const K scale = det.pow(-static_cast<long long>(n - 1));
    Matrix<K> m(deg + 1, deg + 1, a.constant(0));
    const std::vector<K> num{b, a}, den{d, c};
    for (std::size_t l = 0; l <= deg; ++l) {
        std::vector<K> f{a.constant(1)};
        for (std::size_t k = 0; k < l; ++k) f = detail::poly_mul(f, num);
        for (std::size_t k = l; k < deg; ++k) f = detail::poly_mul(f, den);
        for (std::size_t k = 0; k < f.size() && k <= deg; ++k) m(l, k) = scale * f[k];
    }
    return m;
}

/// P_{2n-2} for a fixed value of s, with the letter matrices of Gamma cached
/// at construction.
template <class K>
class PolyModule {
public:
    PolyModule(std::uint32_t p, std::size_t n, const K& s) : p_(p), n_(n), s_(s) {
        require_odd_prime(p);
        if (n < 1) throw std::invalid_argument("n must be at least 1");
        const K one = s.constant(1), zero = s.constant(0);
        pow_a_.push_back(Matrix<K>::identity(dim(), s));
        pow_b_.push_back(Matrix<K>::identity(dim(), s));
        const Matrix<K> ea = action_matrix(n, one, one, zero, one);
        const Matrix<K> eb = action_matrix(n, one, zero, s, one);
        for (std::uint32_t k = 1; k < p; ++k) {
            pow_a_.push_back(pow_a_.back() * ea);
            pow_b_.push_back(pow_b_.back() * eb);
        }
        const std::size_t g = static_cast<std::size_t>(p - 1) * (p - 1);
        fwd_.resize(g);
        bwd_.resize(g);
        for (int j = 1; j < static_cast<int>(p); ++j)
            for (int i = 1; i < static_cast<int>(p); ++i) {
                const std::size_t t = letter_index(p, i, j);
                fwd_[t] = power_A(i) * power_B(j) * power_A(-i) * power_B(-j);
                bwd_[t] = power_B(j) * power_A(i) * power_B(-j) * power_A(-i);
            }
    }

    std::uint32_t p() const { return p_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return 2 * n_ - 1; }
    const K& s() const { return s_; }

    const Matrix<K>& power_A(long k) const { return pow_a_[mod(k)]; }
    const Matrix<K>& power_B(long k) const { return pow_b_[mod(k)]; }
    const Matrix<K>& eA() const { return pow_a_[1]; }
    const Matrix<K>& eB() const { return pow_b_[1]; }

    const Matrix<K>& forward(int i, int j) const { return fwd_[letter_index(p_, i, j)]; }
    const Matrix<K>& backward(int i, int j) const { return bwd_[letter_index(p_, i, j)]; }

    Matrix<K> word_action(const Word& w) const {
        Matrix<K> m = Matrix<K>::identity(dim(), s_);
        for (const auto& r : w.letters()) {
            const Matrix<K>& x = r.exp > 0 ? forward(r.i, r.j) : backward(r.i, r.j);
            for (long t = 0; t < std::labs(r.exp); ++t) m = m * x;
        }
        return m;
    }
    Matrix<K> coset_action(const CosetRep& c) const { return power_A(c.a) * power_B(c.b); }
    Matrix<K> nword_action(const NWord& w) const {
        Matrix<K> m = Matrix<K>::identity(dim(), s_);
        for (const auto& x : w.syllables()) m = m * (x.gen == 'A' ? power_A(x.exp) : power_B(x.exp));
        return m;
    }

private:
    std::size_t mod(long k) const {
        const long p = static_cast<long>(p_);
        return static_cast<std::size_t>(((k % p) + p) % p);
    }

    std::uint32_t p_;
    std::size_t n_;
    K s_;
    std::vector<Matrix<K>> pow_a_, pow_b_, fwd_, bwd_;
};

inline PolyModule<RationalFunction> exact_poly_module(std::uint32_t p, std::size_t n) {
    return PolyModule<RationalFunction>(p, n, RationalFunction::indeterminate(p));
}

}  // namespace subrao

#endif  // SUBRAO_POLYMOD_HPP
