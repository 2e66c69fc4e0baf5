#include <subrao/predict.hpp>

#include <gtest/gtest.h>

using namespace subrao;
using namespace subrao::predict;

TEST(PredictKA, Examples) {
    EXPECT_EQ(predict_KA(5, 2).blocks, (Blocks{{5, 7}, {2, 5}}));
    EXPECT_EQ(predict_KA(3, 2).blocks, (Blocks{{3, 3}}));
    EXPECT_TRUE(predict_KA(3, 2).r0_convention);
    EXPECT_EQ(predict_KA(7, 4).blocks, (Blocks{{7, 35}}));
    EXPECT_FALSE(predict_KA(5, 2).r0_convention);
}

TEST(PredictKG, Examples) {
    using K = SummandKind;
    EXPECT_EQ(predict_KG(5, 2).summands,
              (std::vector<Summand>{{K::GroupAlgebra, 0, 1}, {K::QuotientByA, 2, 1}, {K::QuotientByB, 2, 1}}));
    EXPECT_EQ(predict_KG(3, 2).summands, (std::vector<Summand>{{K::GroupAlgebra, 0, 1}}));
    EXPECT_EQ(predict_KG(7, 2).summands,
              (std::vector<Summand>{{K::GroupAlgebra, 0, 1}, {K::QuotientByA, 4, 1}, {K::QuotientByB, 4, 1}}));
    EXPECT_EQ(predicted_free_rank(5, 2), 1u);
    EXPECT_EQ(predicted_free_rank(7, 4), 5u);
}

TEST(PredictDer, Examples) {
    EXPECT_EQ(predict_der(3, 2).blocks, (Blocks{{3, 4}}));
    EXPECT_EQ(predict_der(5, 2).blocks, (Blocks{{5, 8}, {2, 4}}));
    EXPECT_EQ(predict_der(3, 3).blocks, (Blocks{{3, 6}, {1, 2}}));
}

TEST(Nakajima, Examples) {
    EXPECT_EQ(nakajima_multiplicities(5, 2).blocks, (Blocks{{5, 7}, {2, 5}}));
    EXPECT_EQ(nakajima_multiplicities(3, 2).blocks, (Blocks{{3, 3}}));
    EXPECT_EQ(nakajima_multiplicities(7, 3).blocks, (Blocks{{7, 23}, {2, 7}}));
}

TEST(Nakajima, AgreesWithKA) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (std::size_t n = 2; n <= 12; ++n) {
            EXPECT_EQ(nakajima_multiplicities(p, n).blocks, predict_KA(p, n).blocks) << p << "," << n;
            EXPECT_EQ(nakajima_floor_form(p, n), predict_KA(p, n).blocks) << p << "," << n;
        }
}

TEST(Koeck, FreeRankAndDimension) {
    EXPECT_EQ(koeck_free_rank(5, 2), 3u);
    EXPECT_EQ(koeck_free_rank(3, 2), 3u);
    EXPECT_EQ(koeck_free_rank(7, 4), 7u);
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (std::size_t n = 2; n <= 12; ++n) EXPECT_TRUE(koeck_dimension_identity(p, n));
}

TEST(Dimensions, Identities) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
        for (std::size_t n = 2; n <= 15; ++n) {
            // the constructors assert their own dimension identities
            EXPECT_NO_THROW(predict_KA(p, n));
            EXPECT_NO_THROW(predict_KG(p, n));
            EXPECT_NO_THROW(predict_der(p, n));
            EXPECT_EQ(der_dimension(p, n) - h1_dimension(p, n), 2 * n - 1);
        }
    EXPECT_EQ(h1_dimension(5, 1), 16u);
}

TEST(Stalk, Prediction) {
    EXPECT_EQ(predict_stalk(3, 2).blocks, (Blocks{{3, 1}}));
    EXPECT_EQ(predict_stalk(5, 2).blocks, (Blocks{{3, 1}}));
    EXPECT_EQ(predict_stalk(3, 3).blocks, (Blocks{{3, 1}, {2, 1}}));
}

TEST(Invariants, StatedAndCorrected) {
    EXPECT_EQ(predicted_G_invariants(5, 3), 5u);
    EXPECT_EQ(predicted_G_invariants(3, 1), 1u);
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (std::size_t n = 2; n <= 12; ++n) {
            const bool agree = norm_corrected_G_invariants(p, n) == predicted_G_invariants(p, n);
            EXPECT_EQ(agree, p > 2 * n - 1) << p << "," << n;
            // free rank + one invariant line per quotient summand
            const std::size_t quotients = (2 * n - 1) % p ? 2 : 0;
            EXPECT_EQ(norm_corrected_G_invariants(p, n), predicted_free_rank(p, n) + quotients);
        }
}

TEST(Errors, Preconditions) {
    EXPECT_THROW(predict_KA(2, 3), EvenPrime);
    EXPECT_THROW(predict_KG(9, 3), InvalidPrime);
    EXPECT_THROW(predict_KA(5, 1), std::invalid_argument);
    EXPECT_THROW(nakajima_multiplicities(5, 1), std::invalid_argument);
}
