#ifndef SUBRAO_SCALAR_HPP
#define SUBRAO_SCALAR_HPP

// Exact scalar fields of odd characteristic p:
//
//   Fp                 residues modulo p
//   Poly               dense univariate polynomials over F_p (the ring F_p[s])
//   RationalFunction   F_p(s), kept in canonical form (coprime, monic denominator)
//   ExtElement         F_{p^m}, built over a primitive modulus with Zech-log tables
//
// Every element type exposes the same small interface used by the generic
// linear algebra: is_zero(), constant(v) (the integer v in the same field),
// inverse(), the four operators, unary minus, and equality.

#include <subrao/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace subrao {

namespace detail {

inline bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline std::uint32_t reduce(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw DivisionByZero();
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t, p);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

}  // namespace detail

inline void require_odd_prime(unsigned long p) {
    if (!detail::is_odd_prime(p) || p >= 65536) throw InvalidPrime(p);
}

// ---------------------------------------------------------------------------
// F_p

class Fp {
public:
    Fp() = default;
    /// Unchecked: p must already be validated with require_odd_prime.
    Fp(long long value, std::uint32_t p) : v_(detail::reduce(value, p)), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    Fp constant(long long v) const { return Fp(v, p_); }

    Fp inverse() const { return Fp(detail::inv_mod(v_, p_), p_); }
    Fp pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Fp r(1, p_), b = *this;
        for (; e; e >>= 1, b = b * b)
            if (e & 1) r = r * b;
        return r;
    }

    friend Fp operator+(Fp a, Fp b) { check(a, b); return Fp(a.v_ + b.v_, a.p_); }
    friend Fp operator-(Fp a, Fp b) { check(a, b); return Fp(static_cast<long long>(a.v_) - b.v_, a.p_); }
    friend Fp operator*(Fp a, Fp b) { check(a, b); return Fp(detail::mul_mod(a.v_, b.v_, a.p_), a.p_); }
    friend Fp operator/(Fp a, Fp b) { check(a, b); return a * b.inverse(); }
    Fp operator-() const { return Fp(-static_cast<long long>(v_), p_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    std::string to_string() const { return std::to_string(v_); }

private:
    static void check(Fp a, Fp b) {
        if (a.p_ != b.p_) throw MixedFieldOperands();
    }
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

/// Validated entry point for prime-field elements.
class PrimeField {
public:
    explicit PrimeField(unsigned long p) : p_(static_cast<std::uint32_t>(p)) { require_odd_prime(p); }
    std::uint32_t characteristic() const { return p_; }
    Fp operator()(long long v) const { return Fp(v, p_); }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

private:
    std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// F_p[s]

class Poly {
public:
    Poly() = default;
    explicit Poly(std::uint32_t p) : p_(p) {}
    Poly(std::uint32_t p, std::vector<long long> coeffs) : p_(p) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.push_back(detail::reduce(v, p));
        trim();
    }

    static Poly constant(std::uint32_t p, long long v) { return Poly(p, {v}); }
    static Poly monomial(std::uint32_t p, std::size_t degree, long long coeff = 1) {
        Poly r(p);
        r.c_.assign(degree + 1, 0);
        r.c_[degree] = detail::reduce(coeff, p);
        r.trim();
        return r;
    }

    std::uint32_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check(a, b);
        const Poly& lo = a.c_.size() < b.c_.size() ? a : b;
        Poly r = a.c_.size() < b.c_.size() ? b : a;
        for (std::size_t i = 0; i < lo.c_.size(); ++i) {
            std::uint32_t s = r.c_[i] + lo.c_[i];
            r.c_[i] = s >= r.p_ ? s - r.p_ : s;
        }
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = v ? p_ - v : 0;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check(a, b);
        Poly r(a.p_);
        if (a.is_zero() || b.is_zero()) return r;
        const std::size_t n = a.c_.size(), m = b.c_.size();
        std::vector<std::uint64_t> acc(n + m - 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!a.c_[i]) continue;
            const std::uint64_t ai = a.c_[i];
            for (std::size_t j = 0; j < m; ++j) acc[i + j] += ai * b.c_[j];
            // products are < 2^32, so flush before the accumulators can overflow
            if ((i & 0xFFFF) == 0xFFFF)
                for (auto& x : acc) x %= a.p_;
        }
        r.c_.resize(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<std::uint32_t>(acc[k] % a.p_);
        r.trim();
        return r;
    }
    Poly scaled(std::uint32_t k) const {
        Poly r = *this;
        for (auto& v : r.c_) v = detail::mul_mod(v, k % p_, p_);
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        check(a, b);
        if (b.is_zero()) throw DivisionByZero();
        const std::uint32_t p = a.p_;
        Poly q(p), r = a;
        if (a.degree() < b.degree()) return {q, r};
        const std::uint32_t inv_lead = detail::inv_mod(b.leading(), p);
        const std::size_t db = b.c_.size() - 1;
        q.c_.assign(a.c_.size() - db, 0);
        for (std::size_t k = r.c_.size(); k-- > db;) {
            const std::uint32_t coef = detail::mul_mod(r.c_[k], inv_lead, p);
            if (!coef) continue;
            q.c_[k - db] = coef;
            for (std::size_t j = 0; j <= db; ++j) {
                const std::uint32_t t = detail::mul_mod(coef, b.c_[j], p);
                std::uint32_t& x = r.c_[k - db + j];
                x = x >= t ? x - t : x + p - t;
            }
        }
        q.trim();
        r.trim();
        return {q, r};
    }
    /// Quotient of an exact division (remainder must vanish; not checked).
    static Poly exact_div(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(detail::inv_mod(leading(), p_));
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b) {
        check(a, b);
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Horner evaluation in any ring providing constant() and the ring operators.
    template <class K>
    K evaluate(const K& x) const {
        K acc = x.constant(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + x.constant(c_[k]);
        return acc;
    }

    std::string to_string(const std::string& var = "s") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (!c_[k]) continue;
            if (!out.empty()) out += " + ";
            if (k == 0 || c_[k] != 1) out += std::to_string(c_[k]);
            if (k > 0) out += (c_[k] != 1 ? "*" : "") + var + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return out;
    }

private:
    static void check(const Poly& a, const Poly& b) {
        if (a.p_ != b.p_) throw MixedFieldOperands();
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint32_t p_ = 0;
    std::vector<std::uint32_t> c_;
};

// ---------------------------------------------------------------------------
// F_p(s)

class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.modulus() != den_.modulus()) throw MixedFieldOperands();
        if (den_.is_zero()) throw DivisionByZero();
        canonicalize();
    }
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.modulus(), 1)) {}

    static RationalFunction constant(std::uint32_t p, long long v) { return RationalFunction(Poly::constant(p, v)); }
    static RationalFunction indeterminate(std::uint32_t p) { return RationalFunction(Poly::monomial(p, 1)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    std::uint32_t modulus() const { return num_.modulus(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    RationalFunction constant(long long v) const { return constant(modulus(), v); }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RationalFunction(den_, num_);
    }
    RationalFunction pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction r = constant(1), b = *this;
        for (; e; e >>= 1, b = b * b)
            if (e & 1) r = r * b;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.modulus() != b.modulus()) throw MixedFieldOperands();
        if (a.den_ == b.den_) {
            if (a.den_.is_one()) return RationalFunction(a.num_ + b.num_, a.den_, true);
            return RationalFunction(a.num_ + b.num_, a.den_);
        }
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_, true); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.modulus() != b.modulus()) throw MixedFieldOperands();
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_, a.den_, true);
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    // Trusted constructor: the caller guarantees canonical form already holds.
    RationalFunction(Poly num, Poly den, bool /*canonical*/) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero()) den_ = Poly::constant(num_.modulus(), 1);
    }

    void canonicalize() {
        const std::uint32_t p = num_.modulus();
        if (num_.is_zero()) {
            den_ = Poly::constant(p, 1);
            return;
        }
        if (den_.degree() > 0) {
            Poly g = Poly::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = Poly::exact_div(num_, g);
                den_ = Poly::exact_div(den_, g);
            }
        }
        const std::uint32_t lc = den_.leading();
        if (lc != 1) {
            const std::uint32_t inv = detail::inv_mod(lc, p);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_;
    Poly den_;
};

// ---------------------------------------------------------------------------
// F_{p^m}

class ExtensionField;

/// Element of F_{p^m}, stored as a discrete logarithm to a primitive element.
/// The owning ExtensionField must outlive its elements.
class ExtElement {
public:
    ExtElement() = default;

    bool is_zero() const;
    ExtElement constant(long long v) const;
    ExtElement inverse() const;
    ExtElement pow(long long e) const;
    const ExtensionField* field() const { return f_; }
    std::uint32_t log_code() const { return e_; }

    /// Coefficients (ascending) of the element as a polynomial in the field generator.
    std::vector<std::uint32_t> coefficients() const;

    friend ExtElement operator+(ExtElement a, ExtElement b);
    friend ExtElement operator-(ExtElement a, ExtElement b);
    friend ExtElement operator*(ExtElement a, ExtElement b);
    friend ExtElement operator/(ExtElement a, ExtElement b) { return a * b.inverse(); }
    ExtElement operator-() const;
    ExtElement& operator+=(ExtElement o) { return *this = *this + o; }
    ExtElement& operator-=(ExtElement o) { return *this = *this - o; }
    ExtElement& operator*=(ExtElement o) { return *this = *this * o; }
    friend bool operator==(ExtElement a, ExtElement b) { return a.e_ == b.e_ && a.f_ == b.f_; }

    std::string to_string() const;

private:
    friend class ExtensionField;
    ExtElement(std::uint32_t e, const ExtensionField* f) : e_(e), f_(f) {}

    std::uint32_t e_ = 0;
    const ExtensionField* f_ = nullptr;
};

class ExtensionField {
public:
    /// Builds F_{p^m} from the first primitive monic polynomial of degree m
    /// (coefficient vectors enumerated in increasing base-p order). The modulus
    /// is also checked for irreducibility by the Rabin gcd test.
    static std::shared_ptr<const ExtensionField> create(unsigned long p, unsigned m) {
        return std::shared_ptr<const ExtensionField>(new ExtensionField(p, m));
    }

    /// Least m such that p^m reaches min_size.
    static unsigned degree_for(unsigned long p, unsigned long long min_size) {
        unsigned m = 1;
        unsigned long long q = p;
        while (q < min_size) {
            q *= p;
            ++m;
        }
        return m;
    }

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    const Poly& modulus_polynomial() const { return modulus_; }

    ExtElement zero() const { return ExtElement(kZero(), this); }
    ExtElement one() const { return ExtElement(0, this); }
    ExtElement generator() const { return ExtElement(1 % (q_ - 1), this); }
    ExtElement constant(long long v) const { return from_code(detail::reduce(v, p_)); }
    ExtElement from_coefficients(const std::vector<long long>& coeffs) const {
        std::uint32_t code = 0, scale = 1;
        for (std::size_t i = 0; i < coeffs.size() && i < m_; ++i, scale *= p_)
            code += detail::reduce(coeffs[i], p_) * scale;
        if (coeffs.size() > m_) {
            // reduce modulo the defining polynomial
            Poly r = Poly::divmod(Poly(p_, coeffs), modulus_).second;
            std::vector<long long> c(r.coeffs().begin(), r.coeffs().end());
            return from_coefficients(c);
        }
        return from_code(code);
    }
    /// Element with base-p digit code in [0, q).
    ExtElement from_code(std::uint32_t code) const { return ExtElement(log_[code], this); }
    std::uint32_t code_of(ExtElement x) const { return x.e_ == kZero() ? 0 : exp_[x.e_]; }

    // arithmetic on log codes
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        const std::uint32_t z = kZero();
        if (a == z) return b;
        if (b == z) return a;
        std::uint32_t k = b >= a ? b - a : b + (q_ - 1) - a;
        std::uint32_t t = zech_[k];
        if (t == z) return z;
        t += a;
        return t >= q_ - 1 ? t - (q_ - 1) : t;
    }
    std::uint32_t neg(std::uint32_t a) const {
        if (a == kZero()) return a;
        std::uint32_t t = a + half_;
        return t >= q_ - 1 ? t - (q_ - 1) : t;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == kZero() || b == kZero()) return kZero();
        std::uint32_t t = a + b;
        return t >= q_ - 1 ? t - (q_ - 1) : t;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == kZero()) throw DivisionByZero();
        return a == 0 ? 0 : (q_ - 1) - a;
    }
    std::uint32_t kZero() const { return q_ - 1; }

private:
    ExtensionField(unsigned long p, unsigned m) : p_(static_cast<std::uint32_t>(p)), m_(m) {
        require_odd_prime(p);
        if (m == 0) throw std::invalid_argument("extension degree must be positive");
        unsigned long long q = 1;
        for (unsigned i = 0; i < m; ++i) q *= p;
        if (q > (1ull << 26)) throw std::invalid_argument("extension field too large for log tables");
        q_ = static_cast<std::uint32_t>(q);
        half_ = (q_ - 1) / 2;
        build();
    }

    void build() {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        if (m_ == 1) {
            // prime field: find a primitive root
            for (std::uint32_t g = 2; g < q_; ++g) {
                if (try_generator_prime(g)) {
                    modulus_ = Poly(p_, {-static_cast<long long>(g), 1});
                    break;
                }
            }
        } else {
            // enumerate monic f = x^m + c_{m-1} x^{m-1} + ... + c_0, c_0 != 0
            std::vector<std::uint32_t> low(m_, 0);
            for (std::uint32_t code = 1; code < q_; ++code) {
                std::uint32_t t = code;
                for (unsigned i = 0; i < m_; ++i, t /= p_) low[i] = t % p_;
                if (low[0] == 0) continue;
                if (try_modulus(low)) break;
            }
        }
        if (modulus_.is_zero()) throw std::logic_error("no primitive polynomial found");
        if (m_ > 1 && !rabin_irreducible(modulus_)) throw std::logic_error("modulus is not irreducible");
        log_[0] = kZero();
        for (std::uint32_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = k;
        zech_.assign(q_ - 1, 0);
        for (std::uint32_t k = 0; k + 1 < q_; ++k) {
            const std::uint32_t c = exp_[k];
            const std::uint32_t d0 = c % p_;
            const std::uint32_t c1 = c - d0 + (d0 + 1) % p_;
            zech_[k] = c1 == 0 ? kZero() : log_[c1];
        }
    }

    bool try_generator_prime(std::uint32_t g) {
        if (g == 0) return false;
        std::uint32_t x = 1;
        for (std::uint32_t k = 0; k + 1 < q_; ++k) {
            if (k > 0 && x == 1) return false;
            exp_[k] = x;
            x = detail::mul_mod(x, g, p_);
        }
        return x == 1;
    }

    // Multiplies the digit vector by x modulo f and checks that x has order q-1.
    bool try_modulus(const std::vector<std::uint32_t>& low) {
        std::vector<std::uint32_t> cur(m_, 0);
        cur[0] = 1;
        std::vector<std::uint32_t> pw(m_);
        for (unsigned i = 0; i < m_; ++i) pw[i] = i == 0 ? 1 : pw[i - 1] * p_;
        auto code = [&] {
            std::uint32_t c = 0;
            for (unsigned i = 0; i < m_; ++i) c += cur[i] * pw[i];
            return c;
        };
        for (std::uint32_t k = 0; k + 1 < q_; ++k) {
            std::uint32_t c = code();
            if (k > 0 && c == 1) return false;
            exp_[k] = c;
            const std::uint32_t top = cur[m_ - 1];
            for (unsigned i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top)
                for (unsigned i = 0; i < m_; ++i)
                    cur[i] = (cur[i] + (p_ - detail::mul_mod(top, low[i], p_))) % p_;
        }
        if (code() != 1) return false;
        std::vector<long long> f(low.begin(), low.end());
        f.push_back(1);
        modulus_ = Poly(p_, f);
        return true;
    }

    // f irreducible of degree m iff gcd(x^{p^i} - x, f) = 1 for i <= m/2 and f | x^{p^m} - x
    bool rabin_irreducible(const Poly& f) const {
        const Poly x = Poly::monomial(p_, 1);
        auto powmod = [&](Poly base, unsigned long long e) {
            Poly r = Poly::constant(p_, 1);
            base = Poly::divmod(base, f).second;
            for (; e; e >>= 1) {
                if (e & 1) r = Poly::divmod(r * base, f).second;
                base = Poly::divmod(base * base, f).second;
            }
            return r;
        };
        Poly xp = x;
        for (unsigned i = 1; i <= m_; ++i) {
            xp = powmod(xp, p_);
            if (i <= m_ / 2 && Poly::gcd(xp - x, f).degree() > 0) return false;
        }
        return Poly::divmod(xp - x, f).second.is_zero();
    }

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_ = 0;
    std::uint32_t half_ = 0;
    Poly modulus_;
    std::vector<std::uint32_t> exp_, log_, zech_;
};

inline bool ExtElement::is_zero() const { return e_ == f_->kZero(); }
inline ExtElement ExtElement::constant(long long v) const { return f_->constant(v); }
inline ExtElement ExtElement::inverse() const { return ExtElement(f_->inv(e_), f_); }
inline ExtElement ExtElement::pow(long long e) const {
    if (is_zero()) {
        if (e < 0) throw DivisionByZero();
        return e == 0 ? f_->one() : *this;
    }
    const long long ord = f_->order() - 1;
    long long k = (static_cast<long long>(e_) * (e % ord)) % ord;
    if (k < 0) k += ord;
    return ExtElement(static_cast<std::uint32_t>(k), f_);
}
inline std::vector<std::uint32_t> ExtElement::coefficients() const {
    std::uint32_t code = f_->code_of(*this);
    std::vector<std::uint32_t> out(f_->degree());
    for (auto& d : out) {
        d = code % f_->characteristic();
        code /= f_->characteristic();
    }
    return out;
}
inline ExtElement operator+(ExtElement a, ExtElement b) {
    if (a.f_ != b.f_) throw MixedFieldOperands();
    return ExtElement(a.f_->add(a.e_, b.e_), a.f_);
}
inline ExtElement operator-(ExtElement a, ExtElement b) {
    if (a.f_ != b.f_) throw MixedFieldOperands();
    return ExtElement(a.f_->add(a.e_, a.f_->neg(b.e_)), a.f_);
}
inline ExtElement operator*(ExtElement a, ExtElement b) {
    if (a.f_ != b.f_) throw MixedFieldOperands();
    return ExtElement(a.f_->mul(a.e_, b.e_), a.f_);
}
inline ExtElement ExtElement::operator-() const { return ExtElement(f_->neg(e_), f_); }
inline std::string ExtElement::to_string() const {
    auto c = coefficients();
    std::vector<long long> v(c.begin(), c.end());
    return Poly(f_->characteristic(), v).to_string("g");
}

// ---------------------------------------------------------------------------

/// Evaluation homomorphism F_p(s) -> F_{p^m}, s -> point.
inline ExtElement specialize(const RationalFunction& r, const ExtElement& point) {
    if (point.field()->characteristic() != r.modulus()) throw MixedFieldOperands();
    const ExtElement den = r.denominator().evaluate(point);
    if (den.is_zero()) throw PoleAtSpecializationPoint();
    return r.numerator().evaluate(point) / den;
}

inline std::string to_string(const Fp& x) { return x.to_string(); }
inline std::string to_string(const RationalFunction& x) { return x.to_string(); }
inline std::string to_string(const ExtElement& x) { return x.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Poly& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ExtElement& x) { return os << x.to_string(); }

}  // namespace subrao

#endif  // SUBRAO_SCALAR_HPP
