#include <subrao/modrep.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace subrao;

namespace {

Matrix<Fp> fp_matrix(std::uint32_t p, std::vector<std::vector<long long>> rows) {
    Matrix<Fp> m(rows.size(), rows[0].size(), Fp(0, p));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Fp(rows[i][j], p);
    return m;
}

JordanProfile blocks(std::map<std::size_t, std::size_t> m) { return JordanProfile(std::move(m)); }

}  // namespace

TEST(JordanProfile, Examples) {
    for (std::size_t d : {1u, 4u, 7u})
        EXPECT_EQ(jordan_profile(Matrix<Fp>::identity(d, Fp(0, 5)), 5), blocks({{1, d}}));
    EXPECT_EQ(jordan_profile(fp_matrix(3, {{-1, -1}, {1, 0}}), 3), blocks({{2, 1}}));
    EXPECT_EQ(jordan_profile(jordan_block(4, 5), 5), blocks({{4, 1}}));
}

TEST(JordanProfile, Formatting) {
    EXPECT_EQ(blocks({{5, 7}, {2, 5}}).to_string(), "J_5^7 + J_2^5");
    EXPECT_EQ(blocks({{3, 1}}).to_string(), "J_3");
    EXPECT_EQ(JordanProfile().to_string(), "0");
    EXPECT_EQ(blocks({{5, 7}, {2, 5}}).dimension(), 45u);
    EXPECT_EQ(blocks({{5, 7}, {2, 5}}).block_count(), 12u);
}

// Conjugating a direct sum of blocks by a random invertible matrix keeps the profile.
TEST(JordanProfile, RandomConjugates) {
    std::mt19937_64 rng(41);
    const std::uint32_t p = 5;
    std::uniform_int_distribution<std::size_t> size(1, p);
    std::uniform_int_distribution<long long> d(0, p - 1);
    for (int t = 0; t < 30; ++t) {
        std::vector<Matrix<Fp>> parts;
        JordanProfile want;
        for (int k = 0; k < 4; ++k) {
            const std::size_t l = size(rng);
            parts.push_back(jordan_block(l, p));
            want.add(l, 1);
        }
        const Matrix<Fp> j = block_diagonal(parts, Fp(0, p));
        Matrix<Fp> g(j.rows(), j.rows(), Fp(0, p));
        do {
            for (std::size_t a = 0; a < g.rows(); ++a)
                for (std::size_t b = 0; b < g.cols(); ++b) g(a, b) = Fp(d(rng), p);
        } while (rank(g) != g.rows());
        EXPECT_EQ(jordan_profile(g * j * inverse(g), p), want);
    }
}

TEST(JordanProfile, NotOrderP) {
    Matrix<Fp> m = Matrix<Fp>::identity(2, Fp(0, 3));
    m(0, 0) = Fp(2, 3);
    EXPECT_THROW(jordan_profile(m, 3), NotOrderP);
}

TEST(TensorProfile, Examples) {
    EXPECT_EQ(tensor_profile(3, 2, 3), blocks({{3, 2}}));
    EXPECT_EQ(tensor_profile(2, 2, 3), blocks({{3, 1}, {1, 1}}));
    for (std::size_t b = 1; b <= 7; ++b) EXPECT_EQ(tensor_profile(1, b, 7), blocks({{b, 1}}));
    EXPECT_EQ(tensor_profile(3, 4, 5), blocks({{5, 2}, {2, 1}}));
    EXPECT_THROW(tensor_profile(0, 2, 5), std::out_of_range);
    EXPECT_THROW(tensor_profile(6, 2, 5), std::out_of_range);
}

// Clebsch-Gordan range a + b <= p: J_a (x) J_b = sum_{k=1}^{min(a,b)} J_{a+b+1-2k};
// J_p (x) J_b = J_p^b.
TEST(TensorProfile, ClosedForms) {
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::size_t a = 1; a <= p; ++a)
            for (std::size_t b = 1; b <= p; ++b) {
                const JordanProfile got = tensor_profile(a, b, p);
                EXPECT_EQ(got, tensor_profile(b, a, p));
                EXPECT_EQ(got.dimension(), a * b);
                if (a == p) EXPECT_EQ(got, blocks({{p, b}}));
                if (a + b <= p) {
                    JordanProfile want;
                    for (std::size_t k = 1; k <= std::min(a, b); ++k) want.add(a + b + 1 - 2 * k, 1);
                    EXPECT_EQ(got, want) << a << "x" << b << " p=" << p;
                }
            }
}

TEST(RankProfile, ReferenceExamples) {
    const RankProfile kg = reference_rank_profile(ReferenceModule::group_algebra(), 3);
    EXPECT_EQ(kg.at(0, 0), 9u);
    EXPECT_EQ(kg.at(2, 2), 1u);
    const RankProfile qa = reference_rank_profile(ReferenceModule::quotient_by_A(2), 3);
    EXPECT_EQ(qa.at(0, 0), 6u);
    EXPECT_EQ(qa.at(1, 1), 2u);
    EXPECT_EQ(qa.at(2, 0), 0u);
    const Matrix<Fp> empty(0, 0, Fp(0, 3));
    EXPECT_EQ(rank_profile(empty, empty, 3), RankProfile::zero(3));
}

// On K[G] = K[x, y]/(x^p, y^p) the rank of x^a y^b is (p-a)(p-b).
TEST(RankProfile, GroupAlgebraClosedForm) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const RankProfile kg = reference_rank_profile(ReferenceModule::group_algebra(), p);
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < p; ++b) EXPECT_EQ(kg.at(a, b), (p - a) * (p - b));
        // K[G]/(x^k): (k-a)^+ (p-b)
        for (std::size_t k = 1; k < p; ++k) {
            const RankProfile q = reference_rank_profile(ReferenceModule::quotient_by_A(k), p);
            const RankProfile ind = reference_rank_profile(ReferenceModule::induced_from_A(k), p);
            EXPECT_EQ(q, ind);
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < p; ++b) EXPECT_EQ(q.at(a, b), (a < k ? k - a : 0) * (p - b));
        }
    }
}

TEST(RankProfile, Errors) {
    const auto [a, b] = ReferenceModule::group_algebra().generators(3);
    Matrix<Fp> c = a;
    c(0, 3) = c(0, 3) + Fp(1, 3);
    EXPECT_THROW(rank_profile(a, c * b * inverse(c), 3), GeneratorsDoNotCommute);
    EXPECT_THROW(rank_profile(Matrix<Fp>::identity(2, Fp(0, 3)), Matrix<Fp>::identity(3, Fp(0, 3)), 3), DimensionMismatch);
}

TEST(FreeSummands, Examples) {
    {
        const auto [a, b] = ReferenceModule::group_algebra().generators(5);
        EXPECT_EQ(free_summand_count(a, b, 5), 1u);
    }
    {
        const auto [a, b] = ReferenceModule::quotient_by_A(2).generators(5);
        EXPECT_EQ(free_summand_count(a, b, 5), 0u);
    }
}

TEST(MatchDecomposition, Examples) {
    const std::uint32_t p = 5;
    const std::vector<ReferenceModule> claimed{ReferenceModule::group_algebra(), ReferenceModule::quotient_by_A(2),
                                               ReferenceModule::quotient_by_B(2)};
    const RankProfile rp = claimed_rank_profile(claimed, p);
    EXPECT_TRUE(match_decomposition(rp, 45, claimed, p));
    EXPECT_FALSE(match_decomposition(
        rp, 45, {ReferenceModule::group_algebra(), ReferenceModule::quotient_by_A(3), ReferenceModule::quotient_by_B(1)}, p));
    EXPECT_NE(rp.at(0, 2), claimed_rank_profile({ReferenceModule::group_algebra(), ReferenceModule::quotient_by_A(3),
                                                 ReferenceModule::quotient_by_B(1)}, p).at(0, 2));
    EXPECT_TRUE(match_decomposition(RankProfile::zero(p), 0, {}, p));
    EXPECT_FALSE(match_decomposition(rp, 44, claimed, p));
}

// A direct sum built by block_diagonal has the summed rank profile.
TEST(MatchDecomposition, DirectSums) {
    const std::uint32_t p = 3;
    const std::vector<ReferenceModule> parts{ReferenceModule::group_algebra(), ReferenceModule::quotient_by_B(1),
                                             ReferenceModule::quotient_by_A(2)};
    std::vector<Matrix<Fp>> as, bs;
    std::size_t dim = 0;
    for (const auto& m : parts) {
        auto [a, b] = m.generators(p);
        as.push_back(a);
        bs.push_back(b);
        dim += m.dimension(p);
    }
    const RankProfile rp = rank_profile(block_diagonal(as, Fp(0, p)), block_diagonal(bs, Fp(0, p)), p);
    EXPECT_TRUE(match_decomposition(rp, dim, parts, p));
}

TEST(Separation, Preflight) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        bool separated = false;
        const std::size_t count = rank_profile_separation(p, 3 * p * p, &separated);
        EXPECT_TRUE(separated) << "p=" << p;
        EXPECT_GT(count, 1u);
    }
}

TEST(ReferenceModule, Generators) {
    for (std::uint32_t p : {3u, 5u}) {
        for (const auto& m : {ReferenceModule::group_algebra(), ReferenceModule::quotient_by_A(2),
                              ReferenceModule::quotient_by_B(1), ReferenceModule::induced_from_B(p)}) {
            const auto [a, b] = m.generators(p);
            EXPECT_EQ(a.rows(), m.dimension(p));
            EXPECT_TRUE(a.pow(p).is_identity());
            EXPECT_TRUE(b.pow(p).is_identity());
            EXPECT_EQ(a * b, b * a);
        }
        EXPECT_THROW(ReferenceModule::quotient_by_A(p + 1).generators(p), std::out_of_range);
        EXPECT_THROW(ReferenceModule::jordan(2).generators(p), std::invalid_argument);
    }
}
