#include <gtest/gtest.h>

#include <random>

#include "spin4/rep_ring.hpp"

namespace spin4 {
namespace {

using G = GroupElement;

RGElement rg(long a0, long a1, long a2, long a3) { return RGElement(a0, a1, a2, a3); }

GaussianInteger gi(long re, long im) { return {re, im}; }

TEST(RGElement, Multiplication) {
    EXPECT_EQ(rg_mul(RGElement::monomial(1), RGElement::monomial(3)), RGElement::constant(1));
    const RGElement one_minus_t2 = rg(1, 0, -1, 0);
    EXPECT_EQ(rg_mul(one_minus_t2, one_minus_t2), rg(2, 0, -2, 0));
    EXPECT_EQ(rg_mul(rg(1, -1, 0, 0), rg(1, 0, 0, -1)), rg(2, -1, 0, -1));
    EXPECT_EQ(rg_add(rg(1, 2, 3, 4), rg(-1, -2, -3, -4)), RGElement());
    EXPECT_EQ(RGElement::monomial(-1), RGElement::monomial(3));
    EXPECT_EQ(RGElement::monomial(6), RGElement::monomial(2));
}

TEST(RGElement, ToString) {
    EXPECT_EQ(to_string(rg(2, -1, 0, -1)), "2 - t - t^3");
    EXPECT_EQ(to_string(RGElement()), "0");
    EXPECT_EQ(to_string(rg(0, -1, 0, 0)), "-t");
    EXPECT_EQ(to_string(rg(0, 0, 3, 1)), "3t^2 + t^3");
}

TEST(RGElement, Parse) {
    EXPECT_EQ(parse_rg_element("2 - t - t^3"), rg(2, -1, 0, -1));
    EXPECT_EQ(parse_rg_element("3"), RGElement::constant(3));
    EXPECT_EQ(parse_rg_element("-t"), rg(0, -1, 0, 0));
    EXPECT_EQ(parse_rg_element("2t^3"), rg(0, 0, 0, 2));
    EXPECT_EQ(parse_rg_element("5*t^6"), rg(0, 0, 5, 0));
    EXPECT_EQ(parse_rg_element("t + t"), rg(0, 2, 0, 0));
    EXPECT_EQ(parse_rg_element("1 - t^4"), RGElement());
    for (const char* bad : {"", "2 3", "t^", "*t", "x", "2*", "1 +"}) {
        try {
            parse_rg_element(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
}

TEST(RGElement, ParseRoundTrip) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const RGElement a = rg(d(rng), d(rng), d(rng), d(rng));
        EXPECT_EQ(parse_rg_element(to_string(a)), a);
    }
}

TEST(Trace, Examples) {
    EXPECT_EQ(trace(G::J, RGElement::monomial(1)), gi(0, 1));
    EXPECT_EQ(trace(G::MinusJ, RGElement::monomial(1)), gi(0, -1));
    const RGElement a = rg(5, 7, 11, 13);
    EXPECT_EQ(trace(G::MinusOne, a), gi(5 - 7 + 11 - 13, 0));
    EXPECT_EQ(trace(G::J, a), gi(5 - 11, 7 - 13));
    EXPECT_EQ(trace(G::One, a), gi(36, 0));
}

TEST(Trace, RingHomomorphism) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        const RGElement a = rg(d(rng), d(rng), d(rng), d(rng));
        const RGElement b = rg(d(rng), d(rng), d(rng), d(rng));
        for (G g : kGroupElements) {
            EXPECT_EQ(trace(g, a * b), trace(g, a) * trace(g, b));
            EXPECT_EQ(trace(g, a + b), trace(g, a) + trace(g, b));
        }
    }
}

TEST(Trace, CharacterIsInjective) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const RGElement a = rg(d(rng), d(rng), d(rng), d(rng));
        if (a.is_zero()) continue;
        bool all_zero = true;
        for (G g : kGroupElements) all_zero = all_zero && trace(g, a).is_zero();
        EXPECT_FALSE(all_zero) << to_string(a);
    }
}

TEST(GroupElement, ParseAndPrint) {
    for (G g : kGroupElements) EXPECT_EQ(parse_group_element(to_string(g)), g);
    EXPECT_THROW(parse_group_element("i"), Error);
}

TEST(LambdaMinusOne, Examples) {
    EXPECT_EQ(lambda_minus_one({{2, 1}}), rg(1, 0, -1, 0));
    EXPECT_EQ(lambda_minus_one({{1, 1}, {3, 1}}), rg(2, -1, 0, -1));
    EXPECT_EQ(lambda_minus_one({}), RGElement::constant(1));
    EXPECT_THROW(lambda_minus_one({{1, -1}}), Error);
}

TEST(LambdaMinusOne, Multiplicative) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<std::int64_t> e(0, 3), m(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RepTerm> a, b;
        for (int k = 0; k < 3; ++k) a.push_back({e(rng), m(rng)});
        for (int k = 0; k < 2; ++k) b.push_back({e(rng), m(rng)});
        std::vector<RepTerm> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        EXPECT_EQ(lambda_minus_one(ab), rg_mul(lambda_minus_one(a), lambda_minus_one(b)));
    }
}

TEST(LambdaMinusOne, TraceAtJIsPowerOfTwo) {
    for (std::int64_t m = 0; m <= 16; ++m) {
        for (std::int64_t n = 0; n <= 16; ++n) {
            const GaussianInteger t = trace(G::J, lambda_minus_one({{2, m}, {1, n}, {3, n}}));
            Integer expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(m + n));
            EXPECT_EQ(t, (GaussianInteger{expected, 0})) << m << "," << n;
        }
    }
}

TEST(TomDieck, Examples) {
    EXPECT_EQ(tom_dieck_trace(G::J, 1, {{2, 1}}), gi(2, 0));
    EXPECT_EQ(tom_dieck_trace(G::J, 1, {{2, 2}, {1, 3}, {3, 3}}), gi(32, 0));
    EXPECT_EQ(tom_dieck_trace(G::MinusOne, 0, {{1, 2}, {3, 2}}), gi(0, 0));
    EXPECT_EQ(tom_dieck_trace(G::MinusOne, 0, {{1, -2}, {3, 1}}), gi(0, 0));
}

TEST(TomDieck, Errors) {
    try {
        tom_dieck_trace(G::J, 1, {{1, 1}, {3, 1}, {2, -3}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonIntegralResult); // 2 / 8
    }
    try {
        tom_dieck_trace(G::J, 1, {{0, -1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularDenominator);
    }
    const GaussianRational q = tom_dieck_trace_exact(G::J, 1, {{1, -1}});
    EXPECT_EQ(to_string(q), "1/2+(1/2)i"); // 1 / (1 - i)
}

TEST(BorsukUlam, Examples) {
    const BUVerdict a = borsuk_ulam_feasible({0, 1, 0, 0});
    EXPECT_TRUE(a.feasible);
    EXPECT_EQ(a.exponent, 1);
    EXPECT_EQ(to_string(a.trace_j), "2");
    ASSERT_TRUE(a.solution.has_value());

    const BUVerdict b = borsuk_ulam_feasible({0, 1, 1, 0});
    EXPECT_FALSE(b.feasible);
    EXPECT_EQ(b.witness, BUWitness::OddTrace);
    EXPECT_EQ(to_string(b.trace_j), "1");
    EXPECT_NE(b.explanation.find("is odd"), std::string::npos);

    EXPECT_TRUE(borsuk_ulam_feasible({0, 2, 1, 0}).feasible);

    const BUVerdict c = borsuk_ulam_feasible({0, 1, 5, 0});
    EXPECT_FALSE(c.feasible);
    EXPECT_EQ(c.witness, BUWitness::NonIntegralTrace);

    try {
        borsuk_ulam_feasible({1, 1, 0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::HypothesisViolated);
    }
    EXPECT_THROW(borsuk_ulam_feasible({0, 1, -1, 0}), Error);
}

TEST(BorsukUlam, SolutionsMeetConstraints) {
    for (std::int64_t m1 = 1; m1 <= 6; ++m1)
        for (std::int64_t n0 = 0; n0 <= 6; ++n0)
            for (std::int64_t n1 = 0; n1 <= 6; ++n1) {
                const BUVerdict v = borsuk_ulam_feasible({0, m1, n0, n1});
                if (!v.feasible) continue;
                ASSERT_TRUE(v.solution);
                EXPECT_EQ(GaussianRational(trace(G::J, *v.solution)), v.trace_j);
                EXPECT_EQ(GaussianRational(trace(G::MinusOne, *v.solution)), v.trace_minus_one);
            }
}

TEST(BorsukUlam, FeasibilityMatchesInequality) {
    EXPECT_FALSE(feasibility_equals_inequality({0, 1, 0, 0}));
    EXPECT_FALSE(feasibility_equals_inequality({0, 1, 5, 0}));
    EXPECT_FALSE(feasibility_equals_inequality({0, 3, 2, 0}));
    for (std::int64_t m1 = 1; m1 <= 20; ++m1)
        for (std::int64_t m0 = 0; m0 < m1; ++m0)
            for (std::int64_t n0 = 0; n0 <= 20; ++n0)
                for (std::int64_t n1 = 0; n1 <= 20; ++n1) {
                    const BUParameters p{m0, m1, n0, n1};
                    ASSERT_EQ(borsuk_ulam_feasible(p).feasible, n0 - n1 + 1 <= m1 - m0)
                        << m0 << " " << m1 << " " << n0 << " " << n1;
                }
}

} // namespace
} // namespace spin4
