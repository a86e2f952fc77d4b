#include <gtest/gtest.h>

#include <random>

#include "spin4/lattice.hpp"
#include "test_support.hpp"

namespace spin4 {
namespace {

Lattice k3_lattice() { return k3(); }

TEST(MakeLattice, AcceptsSymmetric) {
    const Lattice h = make_lattice(IntMatrix{{0, 1}, {1, 0}});
    EXPECT_EQ(h.rank(), 2U);
    EXPECT_EQ(make_lattice(IntMatrix{{2}}).rank(), 1U);
    EXPECT_NO_THROW(make_lattice(IntMatrix{{0, 1}, {1, 1}}));
}

TEST(MakeLattice, RejectsNonSymmetric) {
    try {
        make_lattice(IntMatrix{{0, 1}, {2, 0}});
        FAIL() << "expected NonSymmetric";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonSymmetric);
    }
}

TEST(MakeLattice, RejectsNonSquare) {
    EXPECT_THROW(make_lattice(IntMatrix(2, 3)), Error);
}

TEST(DirectSum, RankAndSignature) {
    const Lattice hh = direct_sum(hyperbolic_plane(), hyperbolic_plane());
    EXPECT_EQ(hh.rank(), 4U);
    EXPECT_EQ(signature(hh).sigma, 0);

    const Lattice k = k3_lattice();
    EXPECT_EQ(k.rank(), 22U);
    EXPECT_EQ(signature(k).sigma, -16);

    const Lattice zero_sigma = direct_sum(e8(), minus_e8());
    EXPECT_EQ(zero_sigma.rank(), 16U);
    EXPECT_EQ(signature(zero_sigma).sigma, 0);
}

TEST(Signature, NamedLattices) {
    EXPECT_EQ(signature(hyperbolic_plane()), (SignatureData{1, 1, 0, 0}));
    EXPECT_EQ(signature(e8()), (SignatureData{8, 0, 0, 8}));
    EXPECT_EQ(signature(k3_lattice()), (SignatureData{3, 19, 0, -16}));
}

TEST(Signature, MinusE8MatchesDescartesOracle) {
    const oracle::OracleInertia o = oracle::descartes_inertia(testing::to_oracle(minus_e8().gram()));
    EXPECT_EQ(o.positive, 0U);
    EXPECT_EQ(o.negative, 8U);
    EXPECT_EQ(o.zero, 0U);
    EXPECT_EQ(signature(minus_e8()), (SignatureData{0, 8, 0, -8}));
}

TEST(Signature, DegenerateForms) {
    EXPECT_EQ(inertia(IntMatrix(3, 3)), (SignatureData{0, 0, 3, 0}));
    // zero diagonal with an off-diagonal entry: needs the e_i + e_j change of basis
    EXPECT_EQ(inertia(IntMatrix{{0, 3, 0}, {3, 0, 0}, {0, 0, 0}}), (SignatureData{1, 1, 1, 0}));
    EXPECT_EQ(inertia(IntMatrix{{1, 1}, {1, 1}}), (SignatureData{1, 0, 1, 1}));
}

TEST(Parity, EvenAndOdd) {
    EXPECT_TRUE(is_even(hyperbolic_plane()));
    EXPECT_FALSE(is_even(make_lattice(IntMatrix{{1}})));
    EXPECT_TRUE(is_even(k3_lattice()));
}

TEST(Unimodular, Determinants) {
    EXPECT_TRUE(is_unimodular(hyperbolic_plane()));
    EXPECT_FALSE(is_unimodular(make_lattice(IntMatrix{{2}})));
    EXPECT_EQ(determinant(e8()), 1);
    // (-1)^3 from the three H blocks, times det(-E8)^2 = 1
    EXPECT_EQ(determinant(k3_lattice()), -1);
    EXPECT_TRUE(is_unimodular(k3_lattice()));
}

TEST(InnerProduct, HyperbolicPlane) {
    const Lattice h = hyperbolic_plane();
    EXPECT_EQ(inner_product(h, {1, 0}, {0, 1}), 1);
    EXPECT_EQ(inner_product(h, {1, 1}, {1, 1}), 2);
    EXPECT_EQ(inner_product(h, {1, -1}, {1, -1}), -2);
}

TEST(InnerProduct, DimensionMismatch) {
    try {
        inner_product(hyperbolic_plane(), {1, 0, 0}, {1, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(SignatureProperties, AdditiveAndOrientationReversal) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t na = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::size_t nb = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const Lattice a(testing::random_symmetric(rng, na, trial % 3 == 0));
        const Lattice b(testing::random_symmetric(rng, nb, trial % 4 == 0));
        EXPECT_EQ(signature(direct_sum(a, b)), signature(a) + signature(b));
        const SignatureData s = signature(a);
        const SignatureData r = signature(negate(a));
        EXPECT_EQ(r.b_plus, s.b_minus);
        EXPECT_EQ(r.b_minus, s.b_plus);
        EXPECT_EQ(r.b_zero, s.b_zero);
        EXPECT_EQ(r.sigma, -s.sigma);
    }
}

TEST(SignatureProperties, EvenUnimodularSignatureIsMultipleOfEight) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const testing::BlockLattice bl = testing::random_block_lattice(rng, 40);
        ASSERT_TRUE(is_even(bl.lattice));
        ASSERT_TRUE(is_unimodular(bl.lattice));
        EXPECT_EQ(signature(bl.lattice).sigma % 8, 0);
    }
}

TEST(SignatureProperties, AgreesWithOracleUpToRank24) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        EXPECT_TRUE(testing::matches_oracle(testing::random_symmetric(rng, n, trial % 2 == 0)));
    }
    for (int trial = 0; trial < 8; ++trial) {
        const testing::BlockLattice bl = testing::random_block_lattice(rng, 24);
        EXPECT_TRUE(testing::matches_oracle(bl.lattice.gram()));
    }
    EXPECT_TRUE(testing::matches_oracle(k3_lattice().gram()));
}

} // namespace
} // namespace spin4
