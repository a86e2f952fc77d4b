#include <gtest/gtest.h>

#include "spin4/manifold_model.hpp"
#include "spin4/obstruction.hpp"

namespace spin4 {
namespace {

ManifoldManifest named(std::initializer_list<NamedSummand> list) {
    ManifoldManifest man;
    for (const auto& s : list) man.summands.emplace_back(s);
    return man;
}

TEST(Assemble, Examples) {
    const Lattice k = assemble(named({{NamedForm::K3, 1}}));
    EXPECT_EQ(k.rank(), 22U);
    EXPECT_EQ(signature(k), (SignatureData{3, 19, 0, -16}));
    EXPECT_EQ(k, k3());

    const Lattice l = assemble(named({{NamedForm::K3, 2}, {NamedForm::S2xS2, 1}}));
    EXPECT_EQ(l.rank(), 46U);
    EXPECT_EQ(signature(l).sigma, -32);

    try {
        assemble(ManifoldManifest{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyManifest);
    }
    EXPECT_THROW(assemble(named({{NamedForm::K3, 0}})), Error);
}

TEST(Assemble, InlineGramAndOrientation) {
    ManifoldManifest man = named({{NamedForm::E8, 1}});
    man.summands.emplace_back(IntMatrix{{0, 1}, {1, 0}});
    EXPECT_EQ(signature(assemble(man)).sigma, 8);
    man.orientation = Orientation::Reversed;
    EXPECT_EQ(signature(assemble(man)), (SignatureData{1, 9, 0, -8}));
}

TEST(NamedForms, ParseRoundTrip) {
    for (NamedForm f : {NamedForm::K3, NamedForm::S2xS2, NamedForm::E8, NamedForm::MinusE8, NamedForm::H}) {
        EXPECT_EQ(parse_named_form(to_string(f)), f);
    }
    EXPECT_FALSE(parse_named_form("CP2").has_value());
}

TEST(InvolutionFS, FixedAndAntiInvariant) {
    const Isometry fs = involution_f_S();
    EXPECT_EQ(fixed_sublattice(fs), (IntMatrix{{1, 1}}));
    EXPECT_EQ(square(fs.lattice(), {1, 1}), 2);
    EXPECT_EQ(fs.apply({1, -1}), (IntVector{-1, 1}));
    EXPECT_EQ(invariant_signature(fs).b_plus_inv, 1U);
    EXPECT_EQ(order(fs), 2U);
}

TEST(InvolutionFK, InvariantSignature) {
    const Isometry fk = involution_f_K();
    const InvariantSignatureData inv = invariant_signature(fk);
    EXPECT_EQ(inv.b_plus_inv, 3U);
    EXPECT_EQ(inv.b_minus_inv, 8U);
    EXPECT_EQ(inv.sigma_inv, -5);
    EXPECT_EQ(order(fk), 2U);
    EXPECT_EQ(classify_involution_type(SpinManifoldData(k3()), fk), InvolutionType::MustBeOdd);
}

TEST(InvolutionF, Examples) {
    const InvariantSignatureData a = invariant_signature(involution_f(1, 0));
    EXPECT_EQ(a.b_plus_inv, 3U);
    EXPECT_EQ(a.b_minus_inv, 8U);
    EXPECT_EQ(a.sigma_inv, -5);

    const InvariantSignatureData b = invariant_signature(involution_f(2, 3));
    EXPECT_EQ(b.b_plus_inv, 9U);
    EXPECT_EQ(b.b_minus_inv, 16U);
    EXPECT_EQ(b.sigma_inv, -7);

    const InvariantSignatureData c = invariant_signature(involution_f(1, 1));
    EXPECT_EQ(c.b_plus_inv, 4U);
    EXPECT_EQ(c.b_minus_inv, 8U);
    EXPECT_EQ(c.sigma_inv, -4);

    try {
        involution_f(0, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadParameters);
    }
}

TEST(InvolutionF, ParametricFamily) {
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 0; n <= 4; ++n) {
            const Isometry f = involution_f(m, n);
            const InvariantSignatureData inv = invariant_signature(f);
            const auto mi = static_cast<std::int64_t>(m);
            const auto ni = static_cast<std::int64_t>(n);
            EXPECT_EQ(inv.b_plus_inv, 3 * m + n);
            EXPECT_EQ(inv.b_minus_inv, 8 * m);
            EXPECT_EQ(inv.sigma_inv, -5 * mi + ni);
            EXPECT_EQ(inv.codimension_b_plus, 0U);

            const SpinManifoldData data(f.lattice());
            EXPECT_NE(2 * inv.sigma_inv, signature(f.lattice()).sigma);
            const ObstructionVerdict v = check_theorem_1_3(data, f);
            EXPECT_EQ(v.verdict, Verdict::Obstructed) << m << "," << n;
            EXPECT_EQ(v.trace.kato_lhs, mi);
        }
    }
}

TEST(NamedInvolution, Build) {
    EXPECT_EQ(build({NamedInvolutionKind::f_S, 0, 0}), involution_f_S());
    EXPECT_EQ(build({NamedInvolutionKind::f_K, 1, 0}), involution_f_K());
    EXPECT_EQ(build({NamedInvolutionKind::f_mn, 1, 0}).matrix(), involution_f_K().matrix());
}

} // namespace
} // namespace spin4
