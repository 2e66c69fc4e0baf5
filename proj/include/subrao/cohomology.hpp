#ifndef SUBRAO_COHOMOLOGY_HPP
#define SUBRAO_COHOMOLOGY_HPP

// Der(Gamma, P_{2n-2}), its principal part, and H^1 = Der / PrinDer with the
// action d^phi(gamma) = d(phi gamma phi^-1)^phi of the coset representatives.
//
// A derivation is stored by its values on the basis letters: coordinate
// L * (2n-1) + l is the T^l coefficient of d(e_L), L = letter_index(i, j).

#include <subrao/errors.hpp>
#include <subrao/freegroup.hpp>
#include <subrao/linalg.hpp>
#include <subrao/modrep.hpp>
#include <subrao/polymod.hpp>
#include <subrao/scalar.hpp>

#include <cstdint>
#include <memory>
#include <vector>

namespace subrao {

template <class K>
class DerivationSpace {
public:
    explicit DerivationSpace(std::shared_ptr<const PolyModule<K>> P) : P_(std::move(P)) {}

    const PolyModule<K>& coefficients() const { return *P_; }
    std::uint32_t p() const { return P_->p(); }
    std::size_t n() const { return P_->n(); }
    std::size_t letters() const { return static_cast<std::size_t>(p() - 1) * (p() - 1); }
    std::size_t dim() const { return letters() * P_->dim(); }
    std::size_t index(int i, int j, std::size_t l) const { return letter_index(p(), i, j) * P_->dim() + l; }
    const K& like() const { return P_->s(); }

    /// Values of the derivation with coordinates v, one vector per letter.
    std::vector<Vector<K>> values(std::span<const K> v) const {
        const std::size_t m = P_->dim();
        std::vector<Vector<K>> out(letters());
        for (std::size_t L = 0; L < letters(); ++L) out[L].assign(v.begin() + L * m, v.begin() + (L + 1) * m);
        return out;
    }

    /// Matrix of d -> d^rep (row convention). Column block t is d^rep(e_t) =
    /// sum over the Fox expansion of rep e_t rep^-1, followed by act(rep).
    Matrix<K> action(const CosetRep& rep) const {
        const std::size_t m = P_->dim(), g = letters();
        const std::uint32_t p = this->p();
        const Matrix<K> act = P_->coset_action(rep);
        Matrix<K> out(dim(), dim(), like());
        const Matrix<K> id = Matrix<K>::identity(m, like());
        for (int j = 1; j < static_cast<int>(p); ++j)
            for (int i = 1; i < static_cast<int>(p); ++i) {
                const std::size_t t = letter_index(p, i, j);
                const Word w = conjugate_basis(p, rep, i, j);
                std::vector<Matrix<K>> fox(g);
                std::vector<bool> used(g, false);
                Matrix<K> suffix = id;
                const auto& runs = w.letters();
                for (auto r = runs.rbegin(); r != runs.rend(); ++r) {
                    const std::size_t L = letter_index(p, r->i, r->j);
                    if (!used[L]) fox[L] = Matrix<K>(m, m, like()), used[L] = true;
                    for (long u = 0; u < std::labs(r->exp); ++u) {
                        if (r->exp > 0) {
                            fox[L] = fox[L] + suffix;
                            suffix = P_->forward(r->i, r->j) * suffix;
                        } else {
                            suffix = P_->backward(r->i, r->j) * suffix;
                            fox[L] = fox[L] - suffix;
                        }
                    }
                }
                for (std::size_t L = 0; L < g; ++L) {
                    if (!used[L]) continue;
                    const Matrix<K> block = fox[L] * act;
                    for (std::size_t a = 0; a < m; ++a)
                        for (std::size_t b = 0; b < m; ++b) out(L * m + a, t * m + b) = block(a, b);
                }
            }
        return out;
    }

    /// Rows d_{T^l}: gamma -> T^l act(gamma) - T^l, l = 0..2n-2; independent for n >= 2.
    Matrix<K> principal_rows() const {
        const std::size_t m = P_->dim();
        Matrix<K> out(m, dim(), like());
        for (int j = 1; j < static_cast<int>(p()); ++j)
            for (int i = 1; i < static_cast<int>(p()); ++i) {
                const Matrix<K>& f = P_->forward(i, j);
                const std::size_t L = letter_index(p(), i, j);
                for (std::size_t l = 0; l < m; ++l)
                    for (std::size_t k = 0; k < m; ++k) out(l, L * m + k) = f(l, k) - like().constant(l == k ? 1 : 0);
            }
        return out;
    }

    Subspace<K> principal_subspace() const { return Subspace<K>::span(principal_rows()); }

    /// Rows are the special basis derivations d^k_{ab} in monomial coordinates:
    /// the value at [eA^a, eB^b] is [(T^p - T)^i binom(T, j)]^{eB^-b}, k = i p + j.
    Matrix<K> special_basis() const {
        const std::size_t m = P_->dim();
        const Matrix<K> f = special_polynomials();
        Matrix<K> out(dim(), dim(), like());
        for (int b = 1; b < static_cast<int>(p()); ++b) {
            const Matrix<K> block = f * P_->power_B(-b);
            for (int a = 1; a < static_cast<int>(p()); ++a) {
                const std::size_t L = letter_index(p(), a, b);
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t l = 0; l < m; ++l) out(L * m + k, L * m + l) = block(k, l);
            }
        }
        return out;
    }

    /// Inverse of special_basis(), built blockwise: eB^b C^-1 per letter.
    Matrix<K> special_basis_inverse() const {
        const std::size_t m = P_->dim();
        const Matrix<K> finv = inverse(special_polynomials());
        Matrix<K> out(dim(), dim(), like());
        for (int b = 1; b < static_cast<int>(p()); ++b) {
            const Matrix<K> block = P_->power_B(b) * finv;
            for (int a = 1; a < static_cast<int>(p()); ++a) {
                const std::size_t L = letter_index(p(), a, b);
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t l = 0; l < m; ++l) out(L * m + k, L * m + l) = block(k, l);
            }
        }
        return out;
    }

    /// Coefficients of (T^p - T)^i binom(T, j), k = i p + j, as rows k = 0..2n-2.
    Matrix<K> special_polynomials() const {
        const std::size_t m = P_->dim();
        const std::uint32_t p = this->p();
        const K zero = like().constant(0), one = like().constant(1);
        Matrix<K> out(m, m, like());
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t i = k / p, j = k % p;
            std::vector<K> f{one};
            std::vector<K> tp(p + 1, zero);
            tp[p] = one;
            tp[1] = -one;
            for (std::size_t t = 0; t < i; ++t) f = detail::poly_mul(f, tp);
            K fact = one;
            for (std::size_t t = 0; t < j; ++t) {
                f = detail::poly_mul(f, std::vector<K>{like().constant(-static_cast<long long>(t)), one});
                fact = fact * like().constant(static_cast<long long>(t + 1));
            }
            const K inv = fact.inverse();
            for (std::size_t l = 0; l < f.size(); ++l) out(k, l) = f[l] * inv;
        }
        return out;
    }

private:
    std::shared_ptr<const PolyModule<K>> P_;
};

/// Closed-form matrix of eA on Der in the special basis: p-1 diagonal copies
/// of M, where M has -N across its first block row and N on the block
/// subdiagonal, and N = diag(J_p, ..., J_p, J_r) with ones on and below the
/// diagonal inside each Jordan block.
inline Matrix<Fp> closed_form_Q(std::uint32_t p, std::size_t n) {
    require_odd_prime(p);
    const std::size_t m = 2 * n - 1, g = p - 1;
    const Fp zero(0, p);
    Matrix<Fp> N(m, m, zero);
    for (std::size_t k = 0; k < m; ++k) {
        N(k, k) = Fp(1, p);
        if (k % p != 0) N(k, k - 1) = Fp(1, p);
    }
    Matrix<Fp> M(m * g, m * g, zero);
    auto put = [&](std::size_t ra, std::size_t ca, long sign) {
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) M(ra * m + x, ca * m + y) = Fp(sign * N(x, y).value(), p);
    };
    for (std::size_t a = 0; a < g; ++a) put(0, a, -1);
    for (std::size_t a = 1; a < g; ++a) put(a, a - 1, 1);
    return block_diagonal(std::vector<Matrix<Fp>>(g, M), zero);
}

/// H^1(Gamma, P) with the induced actions of eA and eB.
template <class K>
struct CohomologyModule {
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::shared_ptr<const DerivationSpace<K>> der;
    Matrix<K> der_A, der_B;
    Matrix<K> principal;  // independent rows spanning PrinDer
    std::shared_ptr<const QuotientSpace<K>> quotient;
    Matrix<K> sigma_A, sigma_B;

    std::size_t dim() const { return sigma_A.rows(); }
};

template <class K>
CohomologyModule<K> build_h1(std::shared_ptr<const PolyModule<K>> P) {
    CohomologyModule<K> h;
    h.p = P->p();
    h.n = P->n();
    h.der = std::make_shared<const DerivationSpace<K>>(P);
    h.der_A = h.der->action({1, 0});
    h.der_B = h.der->action({0, 1});
    const Subspace<K> prin = h.der->principal_subspace();
    h.principal = prin.basis();
    h.quotient = std::make_shared<const QuotientSpace<K>>(prin);
    try {
        h.sigma_A = quotient_operator(h.der_A, *h.quotient);
        h.sigma_B = quotient_operator(h.der_B, *h.quotient);
    } catch (const SubspaceNotInvariant&) {
        throw PrincipalSubspaceNotPreserved();
    }
    return h;
}

/// Dimension of the invariants of A, B or G = A x B on H^1.
template <class K>
std::size_t invariants_dimension(const CohomologyModule<K>& h, Subgroup s) {
    const Matrix<K> xa = minus_identity(h.sigma_A), xb = minus_identity(h.sigma_B);
    if (s == Subgroup::A) return h.dim() - rank(xa);
    if (s == Subgroup::B) return h.dim() - rank(xb);
    return h.dim() - rank(xa.transpose().stacked(xb.transpose()));
}

/// dim H^1(A*B, P) computed directly on the amalgam: a derivation is fixed by
/// its values on eA and eB, subject only to v N_A = 0 and w N_B = 0 with N the
/// norm element; principal derivations form a copy of P / P^{A*B}.
template <class K>
std::size_t amalgam_h1_dimension(const PolyModule<K>& P) {
    const std::size_t m = P.dim();
    const K zero = P.s().constant(0);
    Matrix<K> norm_A(m, m, zero), norm_B(m, m, zero);
    for (long k = 0; k < static_cast<long>(P.p()); ++k) {
        norm_A = norm_A + P.power_A(k);
        norm_B = norm_B + P.power_B(k);
    }
    const std::size_t der = (m - rank(norm_A)) + (m - rank(norm_B));
    const Matrix<K> xa = P.eA() - Matrix<K>::identity(m, zero), xb = P.eB() - Matrix<K>::identity(m, zero);
    const std::size_t fixed = m - rank(xa.transpose().stacked(xb.transpose()));
    return der - (m - fixed);
}

}  // namespace subrao

#endif  // SUBRAO_COHOMOLOGY_HPP
