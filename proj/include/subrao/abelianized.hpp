#ifndef SUBRAO_ABELIANIZED_HPP
#define SUBRAO_ABELIANIZED_HPP

// The conjugation representation of G = A x B on Gamma^ab = Z^{(p-1)^2}.
// Matrices here use the column convention: column t holds the image of e_t,
// so rho(xy) = rho(x) rho(y).

#include <subrao/errors.hpp>
#include <subrao/freegroup.hpp>
#include <subrao/linalg.hpp>
#include <subrao/modrep.hpp>
#include <subrao/scalar.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace subrao {

/// Exact rational number with the scalar interface used by Matrix.
class Rational {
public:
    using value_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long v) : v_(v) {}  // NOLINT: integers convert implicitly
    explicit Rational(value_type v) : v_(std::move(v)) {}

    const value_type& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }
    Rational constant(long long v) const { return Rational(v); }
    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(value_type(1) / v_);
    }
    Rational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b = *this;
        for (; e; e >>= 1, b = b * b)
            if (e & 1) r = r * b;
        return r;
    }
    /// Residue mod p of an integer value.
    Fp mod(std::uint32_t p) const {
        if (!is_integer()) throw std::domain_error("reduction of a non-integer rational");
        boost::multiprecision::cpp_int n = boost::multiprecision::numerator(v_) % p;
        return Fp(n.convert_to<long long>(), p);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(value_type(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(value_type(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(value_type(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
    Rational operator-() const { return Rational(value_type(-v_)); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    std::string to_string() const { return v_.str(); }

private:
    value_type v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

struct IntegerRepresentation {
    std::uint32_t p = 0;
    Matrix<Rational> rho_A, rho_B;

    std::size_t rank() const { return rho_A.rows(); }
};

/// Abelianized conjugation: column t of rho(rep) is the exponent-sum vector
/// of rep e_t rep^-1.
inline Matrix<Rational> abelianized_conjugation(std::uint32_t p, const CosetRep& rep) {
    const std::size_t g = static_cast<std::size_t>(p - 1) * (p - 1);
    Matrix<Rational> m(g, g, Rational(0));
    for (int j = 1; j < static_cast<int>(p); ++j)
        for (int i = 1; i < static_cast<int>(p); ++i) {
            const std::size_t t = letter_index(p, i, j);
            const Word w = conjugate_basis(p, rep, i, j);
            for (const auto& l : w.letters())
                m(letter_index(p, l.i, l.j), t) += Rational(l.exp);
        }
    return m;
}

inline IntegerRepresentation build_integer_rep(std::uint32_t p) {
    require_odd_prime(p);
    return {p, abelianized_conjugation(p, {1, 0}), abelianized_conjugation(p, {0, 1})};
}

inline Matrix<Fp> reduce_mod(const Matrix<Rational>& m, std::uint32_t p) {
    return m.map([p](const Rational& x) { return x.mod(p); });
}

/// Rank over Q of the joint kernel of rho(gen) - 1. Zero for every subgroup:
/// (x^p - 1)/(x - 1) has no root 1 in characteristic 0.
inline std::size_t rational_invariants(const IntegerRepresentation& rep, Subgroup s) {
    const Matrix<Rational> xa = minus_identity(rep.rho_A), xb = minus_identity(rep.rho_B);
    Matrix<Rational> stacked = s == Subgroup::A ? xa : s == Subgroup::B ? xb : xa.stacked(xb);
    return kernel(stacked).dim();
}

/// Rank of the invariants of the lattice reduced mod p: dimension over F_p of
/// the joint kernel of rho(gen) - 1 on Gamma^ab / p.
inline std::size_t integer_invariants(const IntegerRepresentation& rep, Subgroup s) {
    const std::uint32_t p = rep.p;
    const Matrix<Fp> xa = minus_identity(reduce_mod(rep.rho_A, p)), xb = minus_identity(reduce_mod(rep.rho_B, p));
    Matrix<Fp> stacked = s == Subgroup::A ? xa : s == Subgroup::B ? xb : xa.stacked(xb);
    return kernel(stacked).dim();
}

inline bool check_faithful(const IntegerRepresentation& rep) {
    Matrix<Rational> pa = Matrix<Rational>::identity(rep.rank(), Rational(0));
    for (std::uint32_t a = 0; a < rep.p; ++a) {
        Matrix<Rational> m = pa;
        for (std::uint32_t b = 0; b < rep.p; ++b) {
            if ((a || b) && m.is_identity()) return false;
            m = m * rep.rho_B;
        }
        pa = pa * rep.rho_A;
    }
    return true;
}

struct ModPStructure {
    JordanProfile profile_A;
    std::size_t invariants_G = 0;
    bool indecomposable = false;  // only asserted through one-dimensional G-invariants
};

inline ModPStructure mod_p_structure(const IntegerRepresentation& rep) {
    const std::uint32_t p = rep.p;
    const Matrix<Fp> a = reduce_mod(rep.rho_A, p), b = reduce_mod(rep.rho_B, p);
    ModPStructure s;
    s.profile_A = jordan_profile(a.transpose(), p);
    s.invariants_G = kernel(minus_identity(a).stacked(minus_identity(b))).dim();
    s.indecomposable = s.invariants_G == 1;
    return s;
}

}  // namespace subrao

#endif  // SUBRAO_ABELIANIZED_HPP
