#include <subrao/skyscraper.hpp>

#include <gtest/gtest.h>

using namespace subrao;

TEST(Sigma, Examples) {
    const Matrix<Fp> s31 = sigma_matrix(3, 1);
    ASSERT_EQ(s31.rows(), 1u);
    EXPECT_EQ(s31(0, 0).value(), 1u);

    // t -> t - t^2 + t^3, t^2 -> t^2 - 2t^3, t^3 -> t^3
    const Matrix<Fp> s32 = sigma_matrix(3, 2);
    Matrix<Fp> want(3, 3, Fp(0, 3));
    want(0, 0) = Fp(1, 3);
    want(0, 1) = Fp(-1, 3);
    want(0, 2) = Fp(1, 3);
    want(1, 1) = Fp(1, 3);
    want(1, 2) = Fp(-2, 3);
    want(2, 2) = Fp(1, 3);
    EXPECT_EQ(s32, want);
}

TEST(Sigma, OrderP) {
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::size_t n = 1; n <= 8; ++n) {
            const Matrix<Fp> s = sigma_matrix(p, n);
            EXPECT_TRUE(s.pow(p).is_identity()) << p << "," << n;
        }
}

TEST(Stalk, Profiles) {
    EXPECT_EQ(stalk_profile(3, 2).to_string(), "J_3");
    EXPECT_EQ(stalk_profile(5, 2).to_string(), "J_3");
    EXPECT_EQ(stalk_profile(3, 3).to_string(), "J_3 + J_2");
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::size_t n = 1; n <= 10; ++n) {
            const std::size_t m = 2 * n - 1;
            JordanProfile want;
            if (m / p) want.add(p, m / p);
            if (m % p) want.add(m % p, 1);
            EXPECT_EQ(stalk_profile(p, n), want) << p << "," << n;
        }
}

TEST(Stalk, InvariantSeries) {
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::size_t n = 1; n <= 10; ++n) {
            const Vector<Fp> v = stalk_invariant(p, n);
            EXPECT_EQ(row_times(std::span<const Fp>(v), sigma_matrix(p, n)), v);
        }
}
