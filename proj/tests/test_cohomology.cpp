#include <subrao/cohomology.hpp>
#include <subrao/modrep.hpp>
#include <subrao/predict.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace subrao;

namespace {

std::shared_ptr<const PolyModule<RationalFunction>> exact(std::uint32_t p, std::size_t n) {
    return std::make_shared<const PolyModule<RationalFunction>>(exact_poly_module(p, n));
}

std::shared_ptr<const PolyModule<Fp>> over_fp(std::uint32_t p, std::size_t n, long long s) {
    return std::make_shared<const PolyModule<Fp>>(p, n, Fp(s, p));
}

Word random_word(std::mt19937_64& rng, std::uint32_t p, std::size_t max_len) {
    std::uniform_int_distribution<int> idx(1, static_cast<int>(p) - 1), sign(0, 1);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    Word w(p);
    for (std::size_t k = len(rng); k > 0; --k) w = w * Word::letter(p, idx(rng), idx(rng), sign(rng) ? 1 : -1);
    return w;
}

Vector<Fp> random_vector(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
    std::uniform_int_distribution<long long> d(0, p - 1);
    Vector<Fp> v(n, Fp(0, p));
    for (auto& x : v) x = Fp(d(rng), p);
    return v;
}

}  // namespace

TEST(PrincipalSubspace, Dimensions) {
    for (std::uint32_t p : {3u, 5u, 7u}) EXPECT_EQ(DerivationSpace<RationalFunction>(exact(p, 1)).principal_subspace().dim(), 0u);
    EXPECT_EQ(DerivationSpace<RationalFunction>(exact(3, 2)).principal_subspace().dim(), 3u);
    EXPECT_EQ(DerivationSpace<RationalFunction>(exact(5, 3)).principal_subspace().dim(), 5u);
}

TEST(PrincipalSubspace, RowsAreCocycles) {
    std::mt19937_64 rng(31);
    const auto P = over_fp(5, 2, 3);
    const DerivationSpace<Fp> D(P);
    const Matrix<Fp> rows = D.principal_rows();
    for (int t = 0; t < 50; ++t) {
        const Word w = random_word(rng, 5, 6);
        const Matrix<Fp> act = P->word_action(w);
        for (std::size_t l = 0; l < rows.rows(); ++l) {
            const auto vals = D.values(rows.row(l));
            const Vector<Fp> got = evaluate_derivation(std::span<const Vector<Fp>>(vals), w, *P, Fp(0, 5));
            for (std::size_t k = 0; k < P->dim(); ++k) EXPECT_EQ(got[k], act(l, k) - Fp(l == k ? 1 : 0, 5));
        }
    }
}

TEST(DerivationAction, IdentityCoset) {
    const DerivationSpace<RationalFunction> D(exact(3, 2));
    EXPECT_TRUE(D.action({0, 0}).is_identity());
}

// d^rep(e_t) = d(rep e_t rep^-1) act(rep), evaluated by the cocycle rule.
TEST(DerivationAction, MatchesDefinition) {
    std::mt19937_64 rng(32);
    const std::uint32_t p = 5;
    const auto P = over_fp(p, 2, 2);
    const DerivationSpace<Fp> D(P);
    for (CosetRep rep : {CosetRep{1, 0}, CosetRep{0, 1}, CosetRep{2, 3}}) {
        const Matrix<Fp> phi = D.action(rep), act = P->coset_action(rep);
        for (int t = 0; t < 5; ++t) {
            const Vector<Fp> v = random_vector(rng, p, D.dim());
            const Vector<Fp> image = row_times(std::span<const Fp>(v), phi);
            const auto vals = D.values(v);
            for (int j = 1; j < static_cast<int>(p); ++j)
                for (int i = 1; i < static_cast<int>(p); ++i) {
                    const Vector<Fp> d = evaluate_derivation(std::span<const Vector<Fp>>(vals), conjugate_basis(p, rep, i, j), *P, Fp(0, p));
                    const Vector<Fp> want = row_times(std::span<const Fp>(d), act);
                    for (std::size_t l = 0; l < P->dim(); ++l) EXPECT_EQ(image[D.index(i, j, l)], want[l]);
                }
        }
    }
}

TEST(DerivationAction, RightActionOfCosets) {
    const DerivationSpace<Fp> D(over_fp(5, 2, 4));
    EXPECT_EQ(D.action({1, 0}) * D.action({0, 1}), D.action({1, 1}));
    EXPECT_EQ(D.action({2, 0}), D.action({1, 0}) * D.action({1, 0}));
    EXPECT_EQ(D.action({0, 3}), D.action({0, 1}).pow(3));
}

TEST(DerivationAction, OrderOnQuotient) {
    for (auto [p, n] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 3u}}) {
        const auto h = build_h1(exact(p, n));
        EXPECT_TRUE(h.sigma_A.pow(p).is_identity());
        EXPECT_TRUE(h.sigma_B.pow(p).is_identity());
        EXPECT_EQ(h.sigma_A * h.sigma_B, h.sigma_B * h.sigma_A);
    }
}

TEST(BuildH1, Examples) {
    const auto h32 = build_h1(exact(3, 2));
    EXPECT_EQ(h32.dim(), 9u);
    EXPECT_EQ(jordan_profile(h32.sigma_A, 3).to_string(), "J_3^3");
    EXPECT_EQ(jordan_profile(h32.der_A, 3).to_string(), "J_3^4");

    const auto h52 = build_h1(exact(5, 2));
    EXPECT_EQ(h52.dim(), 45u);
    EXPECT_EQ(jordan_profile(h52.sigma_A, 5).to_string(), "J_5^7 + J_2^5");
    EXPECT_EQ(invariants_dimension(h52, Subgroup::A), 12u);

    const auto h31 = build_h1(exact(3, 1));
    EXPECT_EQ(h31.dim(), 4u);
    EXPECT_EQ(invariants_dimension(h31, Subgroup::G), 1u);
}

TEST(BuildH1, Dimensions) {
    for (std::uint32_t p : {3u, 5u})
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto h = build_h1(exact(p, n));
            EXPECT_EQ(h.dim(), predict::h1_dimension(p, n));
            EXPECT_EQ(h.der->dim(), predict::der_dimension(p, n));
        }
}

// Specialized modules at random points of F_{5^7} have the generic structure.
TEST(BuildH1, SpecializationConsistency) {
    const auto exact_h = build_h1(exact(5, 2));
    const auto want_A = jordan_profile(exact_h.sigma_A, 5);
    const auto want_rp = rank_profile(exact_h.sigma_A, exact_h.sigma_B, 5);
    const auto F = ExtensionField::create(5, 7);
    std::mt19937_64 rng(33);
    for (int t = 0; t < 3; ++t) {
        const ExtElement s = F->from_code(static_cast<std::uint32_t>(1 + rng() % (F->order() - 1)));
        const auto h = build_h1(std::make_shared<const PolyModule<ExtElement>>(5, 2, s));
        EXPECT_EQ(h.dim(), exact_h.dim());
        EXPECT_EQ(jordan_profile(h.sigma_A, 5), want_A);
        EXPECT_EQ(rank_profile(h.sigma_A, h.sigma_B, 5), want_rp);
    }
}

TEST(ClosedFormQ, Shapes) {
    const Matrix<Fp> q31 = closed_form_Q(3, 1);
    ASSERT_EQ(q31.rows(), 4u);
    // p-1 copies of M = [[-1, -1], [1, 0]] with N = [1]
    Matrix<Fp> want(4, 4, Fp(0, 3));
    for (std::size_t b : {0u, 2u}) {
        want(b, b) = Fp(-1, 3);
        want(b, b + 1) = Fp(-1, 3);
        want(b + 1, b) = Fp(1, 3);
    }
    EXPECT_EQ(q31, want);
    EXPECT_EQ(closed_form_Q(3, 2).rows(), 12u);
    EXPECT_EQ(closed_form_Q(5, 2).rows(), 48u);
    // N for (5,2) is a single Jordan block of size 3: lower bidiagonal.
    const Matrix<Fp> q52 = closed_form_Q(5, 2);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            EXPECT_EQ(q52(3 + x, y).value(), (x == y || x == y + 1) ? 1u : 0u);
}

TEST(ClosedFormQ, MatchesComputedAction) {
    for (std::uint32_t p : {3u, 5u})
        for (std::size_t n = 1; n <= 3; ++n) {
            const DerivationSpace<RationalFunction> D(exact(p, n));
            const Matrix<RationalFunction> q = D.special_basis() * D.action({1, 0}) * D.special_basis_inverse();
            const Matrix<RationalFunction> want = closed_form_Q(p, n).map([](const Fp& x) {
                return RationalFunction::constant(x.modulus(), x.value());
            });
            EXPECT_EQ(q, want) << "p=" << p << " n=" << n;
        }
}

TEST(ClosedFormQ, SpecialBasisInverse) {
    const DerivationSpace<RationalFunction> D(exact(5, 2));
    EXPECT_TRUE((D.special_basis() * D.special_basis_inverse()).is_identity());
}

// G-invariants of H^1 against H^1(A*B, P) computed on the amalgam and the
// norm-element count 2n-1-2*floor((2n-1)/p).
TEST(Invariants, GroupInvariantsMatchAmalgam) {
    for (auto [p, n] : {std::pair{3u, 2u}, {3u, 3u}, {3u, 4u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) {
        const auto h = build_h1(exact(p, n));
        const std::size_t inv = invariants_dimension(h, Subgroup::G);
        EXPECT_EQ(inv, amalgam_h1_dimension(exact_poly_module(p, n))) << p << "," << n;
        EXPECT_EQ(inv, predict::norm_corrected_G_invariants(p, n)) << p << "," << n;
        EXPECT_EQ(invariants_dimension(h, Subgroup::A), jordan_profile(h.sigma_A, p).block_count());
        EXPECT_EQ(invariants_dimension(h, Subgroup::B), jordan_profile(h.sigma_B, p).block_count());
    }
}
