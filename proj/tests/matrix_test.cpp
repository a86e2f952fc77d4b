#include <gtest/gtest.h>

#include <random>

#include "spin4/matrix.hpp"

namespace spin4 {
namespace {

TEST(Determinant, SmallCases) {
    EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(IntMatrix{{2}}), 2);
    EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
    EXPECT_EQ(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
    EXPECT_EQ(determinant(IntMatrix{}), 1);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
    // 3x3 cofactor expansion as an independent check.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = d(rng);
        const Integer expected = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                                 a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                                 a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        EXPECT_EQ(determinant(a), expected);
    }
}

TEST(Determinant, RejectsNonSquare) {
    EXPECT_THROW(determinant(IntMatrix(2, 3)), Error);
}

TEST(HermiteForm, TransformReproducesForm) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a(4, 5);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) a(i, j) = d(rng);
        const HermiteForm hf = hermite_form(a);
        EXPECT_EQ(hf.transform * a, hf.form);
        EXPECT_EQ(abs(determinant(hf.transform)), 1);
        for (std::size_t r = hf.rank; r < 4; ++r)
            for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(hf.form(r, j), 0);
    }
}

TEST(HermiteForm, CanonicalUnderRowOperations) {
    const IntMatrix a{{2, 4, 6}, {1, 1, 1}};
    const IntMatrix b{{3, 5, 7}, {1, 1, 1}}; // row0 + row1, same lattice
    EXPECT_EQ(hermite_basis(a), hermite_basis(b));
    EXPECT_EQ(hermite_basis(a), (IntMatrix{{1, 1, 1}, {0, 2, 4}}));
}

TEST(IntegerKernel, IsSaturated) {
    // Over Q the kernel of (2 4) is spanned by (2,-1); over Z too, and (4,-2) is not primitive.
    const IntMatrix k = integer_kernel(IntMatrix{{2, 4}});
    ASSERT_EQ(k.rows(), 1U);
    EXPECT_EQ(k, (IntMatrix{{2, -1}}));

    // (1 -1 0; 0 1 -1) has kernel Z(1,1,1).
    EXPECT_EQ(integer_kernel(IntMatrix{{1, -1, 0}, {0, 1, -1}}), (IntMatrix{{1, 1, 1}}));
}

TEST(IntegerKernel, RandomKernelsAnnihilateAndHaveRightRank) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a(2, 5);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 5; ++j) a(i, j) = d(rng);
        const IntMatrix k = integer_kernel(a);
        const std::size_t rank_a = hermite_form(a).rank;
        EXPECT_EQ(k.rows(), 5 - rank_a);
        const IntMatrix prod = a * k.transpose();
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod(i, j), 0);
    }
}

} // namespace
} // namespace spin4
