#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spin4/error.hpp"
#include "spin4/isometry.hpp"
#include "spin4/lattice.hpp"
#include "spin4/rep_ring.hpp"

namespace spin4 {

/// A closed spin 4-manifold as seen through its intersection lattice. Evenness
/// of the lattice stands in for the spin structure.
class SpinManifoldData {
public:
    SpinManifoldData(Lattice lattice, std::string label = {})
        : lattice_(std::move(lattice)), label_(std::move(label)) {
        if (!is_even(lattice_)) {
            throw Error(ErrorCode::NotEven, "lattice '" + label_ + "' has an odd diagonal entry, so it is not spin");
        }
        unimodular_ = is_unimodular(lattice_);
    }

    const Lattice& lattice() const noexcept { return lattice_; }
    const std::string& label() const noexcept { return label_; }
    bool unimodular() const noexcept { return unimodular_; }

    std::vector<std::string> warnings() const {
        if (unimodular_) return {};
        return {"form is not unimodular; it cannot be the intersection form of a closed 4-manifold"};
    }

private:
    Lattice lattice_;
    std::string label_;
    bool unimodular_ = false;
};

enum class Verdict { Obstructed, NotObstructed, HypothesisNotMet };

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::NotObstructed: return "NotObstructed";
    case Verdict::HypothesisNotMet: return "HypothesisNotMet";
    }
    return "?";
}

/// Which hypothesis failed when the verdict is HypothesisNotMet.
enum class Gate {
    None,
    ZeroSignature,
    PositiveSignature,
    EvenTypeAmbiguous,
    SignatureNotDivisibleBy16,
    NoPositivePart,
    TrivialAction,
};

constexpr std::string_view to_string(Gate g) {
    switch (g) {
    case Gate::None: return "none";
    case Gate::ZeroSignature: return "ZeroSignature";
    case Gate::PositiveSignature: return "PositiveSignature";
    case Gate::EvenTypeAmbiguous: return "EvenTypeAmbiguous";
    case Gate::SignatureNotDivisibleBy16: return "SignatureNotDivisibleBy16";
    case Gate::NoPositivePart: return "NoPositivePart";
    case Gate::TrivialAction: return "TrivialAction";
    }
    return "?";
}

namespace rule {
inline constexpr std::string_view kEvenInvolution = "even-involution-signature";
inline constexpr std::string_view kKato = "kato-10/8-involution";
inline constexpr std::string_view kRefinedKato = "refined-kato-10/8-involution";
inline constexpr std::string_view kFiniteOrder = "finite-order-realization";
inline constexpr std::string_view kDehnTwist = "dehn-twist-nonrealization";
inline constexpr std::string_view kHomologicallyTrivial = "homologically-trivial-involution";
inline constexpr std::string_view kFuruta = "furuta-10/8";
} // namespace rule

namespace assumption {
inline const std::string kSmoothSpin =
    "X is a closed oriented smooth 4-manifold with spin structure s, and the lattice is its intersection form "
    "on H_2(X;Z)/Tor";
inline const std::string kPreservesSpin =
    "the finite-order diffeomorphism preserves the orientation of X and the spin structure s";
inline const std::string kOddInvolution =
    "the involution is smooth, orientation-preserving, preserves s, and its lifts to s have order 4 (odd type)";
inline const std::string kSphere =
    "the class is represented by a smoothly embedded 2-sphere; its Dehn twist preserves every spin structure, "
    "so no choice of s is needed";
inline const std::string kSimplyConnected = "X is simply connected (not checked from the lattice)";
inline const std::string kLocallyLinear =
    "a simply connected closed spin 4-manifold with nonzero signature has no homologically trivial locally "
    "linear involution";
inline const std::string kFurutaMap =
    "the finite-dimensional approximation of the monopole map is a Z/4-equivariant map with f(0) = 0";
} // namespace assumption

/// Numbers behind a verdict. Inequalities are decided exactly; the rational
/// left-hand sides are kept for reporting.
struct InequalityTrace {
    SignatureData ambient;
    std::optional<InvariantSignatureData> invariant;
    bool orientation_reversed = false;
    Rational kato_lhs = 0;    // -sigma/16
    Rational refined_lhs = 0; // -sigma/16 + 1
    std::optional<bool> kato_holds;
    std::optional<bool> refined_holds; // set only when codimension_b_plus > 0
    std::optional<bool> identity_branch_holds;
    std::optional<Rational> furuta_lhs; // -sigma/8 + 1
    std::optional<BUParameters> bu_parameters;
    std::optional<BUVerdict> bu;
};

struct ObstructionVerdict {
    Verdict verdict = Verdict::NotObstructed;
    Gate gate = Gate::None;
    std::string fired_rule;
    std::string detail;
    InequalityTrace trace;
    std::vector<std::string> assumptions;
};

namespace detail {

inline ObstructionVerdict hypothesis_not_met(std::string_view rule_name, Gate gate, std::string detail,
                                             InequalityTrace trace) {
    ObstructionVerdict v;
    v.verdict = Verdict::HypothesisNotMet;
    v.gate = gate;
    v.fired_rule = std::string(rule_name);
    v.detail = std::move(detail);
    v.trace = std::move(trace);
    return v;
}

inline void require_same_lattice(const SpinManifoldData& m, const Isometry& a) {
    if (!(m.lattice() == a.lattice())) {
        throw Error(ErrorCode::LatticeMismatch, "isometry does not act on the lattice of '" + m.label() + "'");
    }
}

inline void require_involution(const Isometry& a) {
    if (!is_involution(a)) {
        throw Error(ErrorCode::NotInvolution, "a^2 != id");
    }
}

inline InvariantSignatureData nondegenerate_invariant_signature(const Isometry& a) {
    InvariantSignatureData inv = invariant_signature(a);
    if (inv.b_zero_inv != 0) {
        throw Error(ErrorCode::DegenerateFixedForm,
                    "the form restricted to the fixed sublattice has a radical of rank " +
                        std::to_string(inv.b_zero_inv));
    }
    return inv;
}

inline Rational minus_sigma_over(std::int64_t sigma, long d) {
    Rational q(Integer(-sigma), Integer(d));
    q.canonicalize();
    return q;
}

/// -sigma/16 <= c, decided as 16 c >= -sigma.
inline bool kato_bound_holds(std::int64_t sigma, std::int64_t c) { return 16 * c >= -sigma; }

inline bool divisible_by_16(std::int64_t sigma) { return sigma % 16 == 0; }

/// BU exponents matching an involution with m1 - m0 = c and n0 - n1 = -sigma/16.
inline BUParameters involution_bu_parameters(std::int64_t sigma, std::int64_t c) {
    const std::int64_t n = -sigma / 16;
    return {0, c, std::max<std::int64_t>(n, 0), std::max<std::int64_t>(-n, 0)};
}

} // namespace detail

/// Invariant signature forced on any even-type involution: sigma / 2.
inline std::int64_t even_type_signature(const SpinManifoldData& m) {
    const std::int64_t sigma = signature(m.lattice()).sigma;
    if (sigma % 2 != 0) {
        throw Error(ErrorCode::OddSignature, "sigma = " + std::to_string(sigma) + " is odd");
    }
    return sigma / 2;
}

enum class InvolutionType { MustBeOdd, EvenPossible };

constexpr std::string_view to_string(InvolutionType t) {
    return t == InvolutionType::MustBeOdd ? "MustBeOdd" : "EvenPossible";
}

/// An even-type involution has sigma^a = sigma/2, so any other invariant
/// signature forces odd type.
inline InvolutionType classify_involution_type(const SpinManifoldData& m, const Isometry& a) {
    detail::require_same_lattice(m, a);
    detail::require_involution(a);
    const std::int64_t sigma = signature(m.lattice()).sigma;
    const std::int64_t sigma_inv = invariant_signature(a).sigma_inv;
    return 2 * sigma_inv != sigma ? InvolutionType::MustBeOdd : InvolutionType::EvenPossible;
}

/// Obstructed iff -sigma/16 > b_+ - b_+^a, in which case no odd-type smooth
/// involution induces a.
inline ObstructionVerdict kato_inequality(const SpinManifoldData& m, const Isometry& a) {
    detail::require_same_lattice(m, a);
    detail::require_involution(a);
    InequalityTrace trace;
    trace.ambient = signature(m.lattice());
    const std::int64_t sigma = trace.ambient.sigma;
    trace.kato_lhs = detail::minus_sigma_over(sigma, 16);
    trace.refined_lhs = trace.kato_lhs + 1;
    if (!detail::divisible_by_16(sigma)) {
        return detail::hypothesis_not_met(rule::kKato, Gate::SignatureNotDivisibleBy16,
                                          "sigma = " + std::to_string(sigma) +
                                              " is not divisible by 16, so no smooth spin manifold has this form",
                                          std::move(trace));
    }
    trace.invariant = detail::nondegenerate_invariant_signature(a);
    const auto c = static_cast<std::int64_t>(trace.invariant->codimension_b_plus);
    trace.kato_holds = detail::kato_bound_holds(sigma, c);

    ObstructionVerdict v;
    v.fired_rule = std::string(rule::kKato);
    v.verdict = *trace.kato_holds ? Verdict::NotObstructed : Verdict::Obstructed;
    v.detail = "-sigma/16 = " + to_string(trace.kato_lhs) + (*trace.kato_holds ? " <= " : " > ") +
               "b+ - b+^a = " + std::to_string(c);
    v.assumptions = {assumption::kSmoothSpin, assumption::kOddInvolution};
    v.trace = std::move(trace);
    return v;
}

/// When b_+ - b_+^a > 0: Obstructed iff -sigma/16 + 1 > b_+ - b_+^a. Otherwise
/// the plain Kato inequality is reported.
inline ObstructionVerdict refined_kato_inequality(const SpinManifoldData& m, const Isometry& a) {
    ObstructionVerdict v = kato_inequality(m, a);
    if (v.verdict == Verdict::HypothesisNotMet) {
        v.fired_rule = std::string(rule::kRefinedKato);
        return v;
    }
    const auto c = static_cast<std::int64_t>(v.trace.invariant->codimension_b_plus);
    if (c == 0) {
        v.detail = "b+ - b+^a = 0, refinement does not apply; " + v.detail;
        return v;
    }
    const std::int64_t sigma = v.trace.ambient.sigma;
    v.trace.refined_holds = detail::kato_bound_holds(sigma, c - 1);
    v.trace.bu_parameters = detail::involution_bu_parameters(sigma, c);
    v.trace.bu = borsuk_ulam_feasible(*v.trace.bu_parameters);
    v.fired_rule = std::string(rule::kRefinedKato);
    v.verdict = *v.trace.refined_holds ? Verdict::NotObstructed : Verdict::Obstructed;
    v.detail = "-sigma/16 + 1 = " + to_string(v.trace.refined_lhs) + (*v.trace.refined_holds ? " <= " : " > ") +
               "b+ - b+^a = " + std::to_string(c);
    return v;
}

/// Decides whether an order-2 isometry phi can be induced by a finite-order
/// diffeomorphism preserving orientation and spin structure.
///
/// If g has order 2k then iota = g^k is a smooth involution with iota_* = phi
/// or iota_* = id. In both cases sigma^iota != sigma/2, so iota is of odd type
/// and Kato's inequality applies to it. The id branch needs -sigma/16 <= 0,
/// which fails for sigma < 0, so the verdict is decided on the phi branch:
///   -sigma/16 <= b_+ - b_+^phi, and, if b_+ - b_+^phi > 0,
///   -sigma/16 + 1 <= b_+ - b_+^phi.
/// Obstructed iff one of these fails. The comparison is exact and does not
/// require sigma divisible by 16.
inline ObstructionVerdict check_theorem_1_3(const SpinManifoldData& m, const Isometry& phi,
                                            bool allow_orientation_reversal = false) {
    detail::require_same_lattice(m, phi);
    detail::require_involution(phi);
    if (is_homologically_trivial(phi)) {
        throw Error(ErrorCode::NotInvolution, "phi must have order exactly 2, got the identity");
    }
    InequalityTrace trace;
    trace.ambient = signature(m.lattice());
    if (trace.ambient.sigma == 0) {
        return detail::hypothesis_not_met(rule::kFiniteOrder, Gate::ZeroSignature,
                                          "sigma = 0; the inequalities need nonzero signature", std::move(trace));
    }
    if (trace.ambient.sigma > 0) {
        if (!allow_orientation_reversal) {
            return detail::hypothesis_not_met(rule::kFiniteOrder, Gate::PositiveSignature,
                                              "sigma = " + std::to_string(trace.ambient.sigma) +
                                                  " > 0; reverse the orientation to apply",
                                              std::move(trace));
        }
        ObstructionVerdict v =
            check_theorem_1_3(SpinManifoldData(negate(m.lattice()), m.label()), reverse_orientation(phi), false);
        v.trace.orientation_reversed = true;
        return v;
    }
    const std::int64_t sigma = trace.ambient.sigma;
    trace.kato_lhs = detail::minus_sigma_over(sigma, 16);
    trace.refined_lhs = trace.kato_lhs + 1;
    trace.invariant = detail::nondegenerate_invariant_signature(phi);
    if (2 * trace.invariant->sigma_inv == sigma) {
        return detail::hypothesis_not_met(rule::kFiniteOrder, Gate::EvenTypeAmbiguous,
                                          "sigma^phi = sigma/2 = " + std::to_string(sigma / 2) +
                                              "; an even-type involution cannot be excluded",
                                          std::move(trace));
    }
    const auto c = static_cast<std::int64_t>(trace.invariant->codimension_b_plus);
    trace.kato_holds = detail::kato_bound_holds(sigma, c);
    trace.identity_branch_holds = detail::kato_bound_holds(sigma, 0);
    if (c > 0) trace.refined_holds = detail::kato_bound_holds(sigma, c - 1);

    ObstructionVerdict v;
    v.fired_rule = std::string(rule::kFiniteOrder);
    v.assumptions = {assumption::kSmoothSpin, assumption::kPreservesSpin};
    if (!*trace.kato_holds) {
        v.verdict = Verdict::Obstructed;
        v.detail = "-sigma/16 = " + to_string(trace.kato_lhs) + " > b+ - b+^phi = " + std::to_string(c);
    } else if (trace.refined_holds && !*trace.refined_holds) {
        v.verdict = Verdict::Obstructed;
        v.detail = "b+ - b+^phi = " + std::to_string(c) + " > 0 and -sigma/16 + 1 = " +
                   to_string(trace.refined_lhs) + " > " + std::to_string(c);
    } else {
        v.verdict = Verdict::NotObstructed;
        v.detail = "-sigma/16 = " + to_string(trace.kato_lhs) + " <= b+ - b+^phi = " + std::to_string(c) +
                   (c > 0 ? " and -sigma/16 + 1 = " + to_string(trace.refined_lhs) + " <= " + std::to_string(c)
                          : std::string());
    }
    v.trace = std::move(trace);
    return v;
}

/// The Dehn twist about a (+-2)-sphere in an even lattice with sigma != 0 is
/// never induced by a finite-order diffeomorphism. Orientation is normalized
/// to sigma < 0 first, which swaps (+2)- and (-2)-classes.
inline ObstructionVerdict check_dehn_twist(const SpinManifoldData& m, const SphereClass& s) {
    if (!(s.lattice() == m.lattice())) {
        throw Error(ErrorCode::LatticeMismatch, "sphere class lives in a different lattice");
    }
    const SignatureData sig = signature(m.lattice());
    if (sig.sigma == 0) {
        InequalityTrace trace;
        trace.ambient = sig;
        return detail::hypothesis_not_met(rule::kDehnTwist, Gate::ZeroSignature,
                                          "sigma = 0; the twist may be realizable", std::move(trace));
    }
    const bool reverse = sig.sigma > 0;
    const SpinManifoldData normalized = reverse ? SpinManifoldData(negate(m.lattice()), m.label()) : m;
    const SphereClass sphere(normalized.lattice(), s.vector());
    ObstructionVerdict v = check_theorem_1_3(normalized, dehn_twist_action(sphere));
    v.trace.orientation_reversed = reverse;
    if (v.verdict == Verdict::Obstructed) {
        v.detail = "(" + std::string(sphere.self_intersection() > 0 ? "+2" : "-2") + ")-sphere after " +
                   (reverse ? "reversing" : "keeping") + " orientation: " + v.detail;
        v.fired_rule = std::string(rule::kDehnTwist) + " via " + v.fired_rule;
        v.assumptions.push_back(assumption::kSphere);
    } else if (m.unimodular()) {
        throw std::logic_error("Dehn twist on an even unimodular lattice with nonzero signature was not obstructed: " +
                               v.detail);
    }
    return v;
}

/// No homologically trivial involution exists when sigma != 0.
inline ObstructionVerdict check_homologically_trivial(const SpinManifoldData& m, const Isometry& a) {
    detail::require_same_lattice(m, a);
    ObstructionVerdict v;
    v.fired_rule = std::string(rule::kHomologicallyTrivial);
    v.trace.ambient = signature(m.lattice());
    v.assumptions = {assumption::kSmoothSpin, assumption::kSimplyConnected, assumption::kLocallyLinear};
    const bool trivial = is_homologically_trivial(a);
    if (trivial && v.trace.ambient.sigma != 0) {
        v.verdict = Verdict::Obstructed;
        v.detail = "action is the identity and sigma = " + std::to_string(v.trace.ambient.sigma) + " != 0";
    } else {
        v.verdict = Verdict::NotObstructed;
        v.detail = trivial ? "sigma = 0" : "action on homology is nontrivial";
    }
    return v;
}

/// -sigma/8 + 1 <= b_+ for smooth spin X with b_+ > 0, decided through the
/// Borsuk-Ulam constraint system with m1 - m0 = b_+ and n0 - n1 = -sigma/8.
inline ObstructionVerdict furuta_bound(const SpinManifoldData& m) {
    InequalityTrace trace;
    trace.ambient = signature(m.lattice());
    const std::int64_t sigma = trace.ambient.sigma;
    if (!detail::divisible_by_16(sigma)) {
        return detail::hypothesis_not_met(rule::kFuruta, Gate::SignatureNotDivisibleBy16,
                                          "sigma = " + std::to_string(sigma) +
                                              " is not divisible by 16, so no smooth spin manifold has this form",
                                          std::move(trace));
    }
    if (trace.ambient.b_plus == 0) {
        return detail::hypothesis_not_met(rule::kFuruta, Gate::NoPositivePart, "b+ = 0", std::move(trace));
    }
    const auto b_plus = static_cast<std::int64_t>(trace.ambient.b_plus);
    const std::int64_t n = -sigma / 8;
    trace.furuta_lhs = detail::minus_sigma_over(sigma, 8) + 1;
    trace.bu_parameters = BUParameters{0, b_plus, std::max<std::int64_t>(n, 0), std::max<std::int64_t>(-n, 0)};
    trace.bu = borsuk_ulam_feasible(*trace.bu_parameters);

    ObstructionVerdict v;
    v.fired_rule = std::string(rule::kFuruta);
    v.verdict = trace.bu->feasible ? Verdict::NotObstructed : Verdict::Obstructed;
    v.detail = "-sigma/8 + 1 = " + to_string(*trace.furuta_lhs) + (trace.bu->feasible ? " <= " : " > ") +
               "b+ = " + std::to_string(b_plus) + "; " + trace.bu->explanation;
    v.assumptions = {assumption::kSmoothSpin, assumption::kFurutaMap};
    v.trace = std::move(trace);
    return v;
}

} // namespace spin4
