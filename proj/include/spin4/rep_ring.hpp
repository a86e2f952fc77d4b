#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spin4/error.hpp"
#include "spin4/matrix.hpp"

// Representation ring of G = Z/4 = {1, j, -1, -j}: R(G) = Z[t]/(t^4 - 1) with
// t = C_+ (j acts by i). Then C = 1, C_- = t^3 and C~ = t^2.

namespace spin4 {

struct GaussianInteger {
    Integer re = 0;
    Integer im = 0;

    friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
    friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

/// Element of Q(i); used where a character is divided by a character.
struct GaussianRational {
    Rational re = 0;
    Rational im = 0;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(const GaussianInteger& z) : re(z.re), im(z.im) {}

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    bool is_gaussian_integer() const { return re.get_den() == 1 && im.get_den() == 1; }
    GaussianInteger to_gaussian_integer() const { return {re.get_num(), im.get_num()}; }
};

/// (a + bi) / (c + di), exact.
inline GaussianRational divide(const GaussianInteger& num, const GaussianInteger& den) {
    if (den.is_zero()) {
        throw Error(ErrorCode::SingularDenominator, "division by a zero character value");
    }
    const Integer norm = den.re * den.re + den.im * den.im;
    GaussianInteger p = num * GaussianInteger{den.re, -den.im};
    GaussianRational q{Rational(p.re, norm), Rational(p.im, norm)};
    q.re.canonicalize();
    q.im.canonicalize();
    return q;
}

inline std::string to_string(const GaussianInteger& z) {
    auto imag = [](const Integer& b) {
        if (b == 1) return std::string("i");
        if (b == -1) return std::string("-i");
        return b.get_str() + "i";
    };
    if (z.im == 0) return z.re.get_str();
    if (z.re == 0) return imag(z.im);
    std::string s = z.re.get_str();
    if (z.im > 0) s += "+";
    return s + imag(z.im);
}

inline std::string to_string(const GaussianRational& z) {
    if (z.is_gaussian_integer()) return to_string(z.to_gaussian_integer());
    if (sgn(z.im) == 0) return to_string(z.re);
    std::string s = sgn(z.re) == 0 ? std::string() : to_string(z.re);
    if (sgn(z.im) > 0 && !s.empty()) s += "+";
    return s + "(" + to_string(z.im) + ")i";
}

enum class GroupElement { One, J, MinusOne, MinusJ };

/// Exponent e with chi(g) = i^e.
constexpr int character_exponent(GroupElement g) {
    switch (g) {
    case GroupElement::One: return 0;
    case GroupElement::J: return 1;
    case GroupElement::MinusOne: return 2;
    case GroupElement::MinusJ: return 3;
    }
    return 0;
}

inline constexpr std::array<GroupElement, 4> kGroupElements = {GroupElement::One, GroupElement::J,
                                                              GroupElement::MinusOne, GroupElement::MinusJ};

constexpr std::string_view to_string(GroupElement g) {
    switch (g) {
    case GroupElement::One: return "1";
    case GroupElement::J: return "j";
    case GroupElement::MinusOne: return "-1";
    case GroupElement::MinusJ: return "-j";
    }
    return "?";
}

inline GroupElement parse_group_element(std::string_view s) {
    for (GroupElement g : kGroupElements) {
        if (s == to_string(g)) return g;
    }
    throw Error(ErrorCode::ParseError, "group element must be one of 1, j, -1, -j; got '" + std::string(s) + "'");
}

/// a0 + a1 t + a2 t^2 + a3 t^3 in Z[t]/(t^4 - 1).
class RGElement {
public:
    RGElement() = default;
    RGElement(Integer a0, Integer a1, Integer a2, Integer a3)
        : coeffs_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    static RGElement constant(const Integer& c) { return {c, 0, 0, 0}; }

    /// t^k with k reduced mod 4.
    static RGElement monomial(std::int64_t k) {
        RGElement r;
        r.coeffs_[reduce(k)] = 1;
        return r;
    }

    const Integer& operator[](std::size_t k) const { return coeffs_[k]; }
    const std::array<Integer, 4>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const RGElement&, const RGElement&) = default;

    friend RGElement operator+(const RGElement& a, const RGElement& b) {
        RGElement r;
        for (std::size_t k = 0; k < 4; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend RGElement operator-(const RGElement& a, const RGElement& b) {
        RGElement r;
        for (std::size_t k = 0; k < 4; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    friend RGElement operator*(const RGElement& a, const RGElement& b) {
        RGElement r;
        for (std::size_t p = 0; p < 4; ++p) {
            if (a.coeffs_[p] == 0) continue;
            for (std::size_t q = 0; q < 4; ++q) {
                r.coeffs_[(p + q) % 4] += a.coeffs_[p] * b.coeffs_[q];
            }
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    static std::size_t reduce(std::int64_t k) { return static_cast<std::size_t>(((k % 4) + 4) % 4); }

private:
    std::array<Integer, 4> coeffs_{0, 0, 0, 0};
};

inline RGElement rg_add(const RGElement& a, const RGElement& b) { return a + b; }
inline RGElement rg_mul(const RGElement& a, const RGElement& b) { return a * b; }

inline RGElement rg_pow(RGElement base, std::size_t e) {
    RGElement r = RGElement::constant(1);
    while (e > 0) {
        if (e & 1U) r = r * base;
        base = base * base;
        e >>= 1U;
    }
    return r;
}

/// Canonical text form, e.g. "2 - t - t^3"; zero prints as "0".
inline std::string to_string(const RGElement& a) {
    std::string s;
    for (std::size_t k = 0; k < 4; ++k) {
        const Integer& c = a[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (k == 0 || mag != 1) s += mag.get_str();
        if (k >= 1) s += "t";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

/// Parses sums of terms like "3", "-t", "2t^3", "5*t^6" (exponents reduced mod 4).
inline RGElement parse_rg_element(std::string_view text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (!std::isspace(c)) {
            s += text[i];
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (!s.empty() && j < text.size() && std::isalnum(static_cast<unsigned char>(s.back())) &&
            std::isalnum(static_cast<unsigned char>(text[j]))) {
            throw Error(ErrorCode::ParseError, "missing operator between terms in '" + std::string(text) + "'");
        }
        i = j - 1;
    }
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
    RGElement out;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos) + " in '" + s + "'");
    };
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    };
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Integer coeff = 1;
        std::string num = digits();
        if (!num.empty()) coeff = Integer(num);
        std::int64_t exponent = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (num.empty()) fail("'*' without coefficient");
            ++pos;
            if (pos >= s.size() || s[pos] != 't') fail("expected 't' after '*'");
        }
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::string e = digits();
                if (e.empty()) fail("expected exponent");
                exponent = static_cast<std::int64_t>(std::stoll(e) % 4);
            }
        } else if (num.empty()) {
            fail("expected a coefficient or 't'");
        }
        out = out + RGElement::monomial(exponent) * RGElement::constant(sign * coeff);
    }
    return out;
}

/// Character value tr_g(a): the ring homomorphism t -> chi(g) in {1, i, -1, -i}.
inline GaussianInteger trace(GroupElement g, const RGElement& a) {
    // i^0, i^1, i^2, i^3 as (re, im)
    constexpr int unit_re[4] = {1, 0, -1, 0};
    constexpr int unit_im[4] = {0, 1, 0, -1};
    const int e = character_exponent(g);
    GaussianInteger z;
    for (int k = 0; k < 4; ++k) {
        const int p = (e * k) % 4;
        z.re += unit_re[p] * a[static_cast<std::size_t>(k)];
        z.im += unit_im[p] * a[static_cast<std::size_t>(k)];
    }
    return z;
}

/// A one-dimensional representation t^exponent repeated `multiplicity` times.
struct RepTerm {
    std::int64_t exponent = 0;
    std::int64_t multiplicity = 0;
};

/// lambda_{-1} of a sum of one-dimensional representations: the product of
/// (1 - t^k) over all summands.
inline RGElement lambda_minus_one(const std::vector<RepTerm>& reps) {
    RGElement r = RGElement::constant(1);
    for (const auto& term : reps) {
        if (term.multiplicity < 0) {
            throw Error(ErrorCode::BadParameters, "lambda_{-1} takes non-negative multiplicities");
        }
        const RGElement factor = RGElement::constant(1) - RGElement::monomial(term.exponent);
        r = r * rg_pow(factor, static_cast<std::size_t>(term.multiplicity));
    }
    return r;
}

/// d * tr_g(lambda_{-1}(W - V)) for a virtual difference, evaluated in Q(i) as
/// tr_g(lambda_{-1}(positive part)) / tr_g(lambda_{-1}(negative part)).
inline GaussianRational tom_dieck_trace_exact(GroupElement g, const Integer& fixed_degree,
                                              const std::vector<RepTerm>& difference) {
    std::vector<RepTerm> positive, negative;
    for (const auto& term : difference) {
        if (term.multiplicity > 0) positive.push_back(term);
        if (term.multiplicity < 0) negative.push_back({term.exponent, -term.multiplicity});
    }
    const GaussianInteger num = GaussianInteger{fixed_degree, 0} * trace(g, lambda_minus_one(positive));
    const GaussianInteger den = trace(g, lambda_minus_one(negative));
    if (den.is_zero()) {
        throw Error(ErrorCode::SingularDenominator,
                    "tr_" + std::string(to_string(g)) + " of lambda_{-1}(negative part) vanishes");
    }
    return divide(num, den);
}

/// Character of the equivariant degree predicted by tom Dieck's formula,
/// required to be a Gaussian integer.
inline GaussianInteger tom_dieck_trace(GroupElement g, const Integer& fixed_degree,
                                       const std::vector<RepTerm>& difference) {
    GaussianRational q = tom_dieck_trace_exact(g, fixed_degree, difference);
    if (!q.is_gaussian_integer()) {
        throw Error(ErrorCode::NonIntegralResult, "trace " + to_string(q) + " is not a Gaussian integer");
    }
    return q.to_gaussian_integer();
}

/// Exponents of G-maps (C~^m0 + (C_+ + C_-)^n0)^+ -> (C~^m1 + (C_+ + C_-)^n1)^+.
struct BUParameters {
    std::int64_t m0 = 0;
    std::int64_t m1 = 0;
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
};

enum class BUWitness {
    None,               // feasible
    NonIntegralTrace,   // tr_j(alpha) = 2^e with e < 0
    OddTrace,           // tr_j(alpha) is an integer but a0 - a2 = 2(a1 - a2) forces it even
    NonRealTrace,       // not reachable for this family; kept for completeness of the check
};

constexpr std::string_view to_string(BUWitness w) {
    switch (w) {
    case BUWitness::None: return "none";
    case BUWitness::NonIntegralTrace: return "non-integral";
    case BUWitness::OddTrace: return "odd";
    case BUWitness::NonRealTrace: return "non-real";
    }
    return "?";
}

/// Outcome of solving the degree constraints for an equivariant degree
/// alpha = a0 + a1 t + a2 t^2 + a3 t^3.
struct BUVerdict {
    bool feasible = false;
    BUWitness witness = BUWitness::None;
    std::int64_t exponent = 0;          // (m1 - m0) + (n1 - n0)
    GaussianRational trace_minus_one;   // forced tr_{-1}(alpha)
    GaussianRational trace_j;           // forced tr_j(alpha)
    std::optional<RGElement> solution;  // an integral alpha meeting every constraint
    std::string explanation;
};

/// The fixed sets of -1 are C~^m0 and C~^m1; with m0 < m1 the degree of the
/// fixed-point map is 0. The fixed sets of +-j are {0}, where the map is the
/// identity of S^0, of degree 1.
inline Integer fixed_point_degree(GroupElement g, const BUParameters& p) {
    switch (g) {
    case GroupElement::MinusOne: return p.m0 < p.m1 ? 0 : 1;
    case GroupElement::J:
    case GroupElement::MinusJ: return 1;
    case GroupElement::One: break;
    }
    throw Error(ErrorCode::BadParameters, "the degree of f itself is not determined by the parameters");
}

/// Orthogonal complement of the g-fixed part in W minus that in V, as a
/// virtual sum of one-dimensional representations.
inline std::vector<RepTerm> moving_part_difference(GroupElement g, const BUParameters& p) {
    std::vector<RepTerm> diff;
    // C~ = t^2 is fixed by -1 but moved by +-j; C_+ and C_- are moved by every g != 1.
    if (g == GroupElement::J || g == GroupElement::MinusJ) diff.push_back({2, p.m1 - p.m0});
    if (g != GroupElement::One) {
        diff.push_back({1, p.n1 - p.n0});
        diff.push_back({3, p.n1 - p.n0});
    }
    return diff;
}

/// Decides whether an equivariant degree alpha in R(Z/4) can satisfy the
/// character constraints forced by tom Dieck's formula at -1 and j.
inline BUVerdict borsuk_ulam_feasible(const BUParameters& p) {
    if (p.m0 < 0 || p.m1 < 0 || p.n0 < 0 || p.n1 < 0) {
        throw Error(ErrorCode::BadParameters, "exponents must be non-negative");
    }
    if (p.m0 >= p.m1) {
        throw Error(ErrorCode::HypothesisViolated,
                    "requires m0 < m1 (got m0 = " + std::to_string(p.m0) + ", m1 = " + std::to_string(p.m1) + ")");
    }
    BUVerdict v;
    v.exponent = (p.m1 - p.m0) + (p.n1 - p.n0);
    v.trace_minus_one = tom_dieck_trace_exact(GroupElement::MinusOne, fixed_point_degree(GroupElement::MinusOne, p),
                                              moving_part_difference(GroupElement::MinusOne, p));
    v.trace_j = tom_dieck_trace_exact(GroupElement::J, fixed_point_degree(GroupElement::J, p),
                                      moving_part_difference(GroupElement::J, p));

    // Unknowns a0..a3 in Z subject to
    //   tr_{-1}: a0 - a1 + a2 - a3 = T
    //   tr_j:    a0 - a2 = Re, a1 - a3 = Im.
    // Then a0 = a2 + Re, a1 = a3 + Im and 2(a2 - a3) = T - Re + Im.
    const GaussianRational& tj = v.trace_j;
    const GaussianRational& tm = v.trace_minus_one;
    if (!tj.is_gaussian_integer() || !tm.is_gaussian_integer()) {
        v.witness = BUWitness::NonIntegralTrace;
        v.explanation = "tr_j(alpha) = " + to_string(tj) + " is not an integer, but alpha has integer coefficients";
        return v;
    }
    if (sgn(tm.im) != 0) {
        v.witness = BUWitness::NonRealTrace;
        v.explanation = "tr_{-1}(alpha) = " + to_string(tm) + " must be an integer";
        return v;
    }
    const Integer t = tm.re.get_num();
    const Integer re = tj.re.get_num();
    const Integer im = tj.im.get_num();
    const Integer rhs = t - re + im;
    if (mpz_odd_p(rhs.get_mpz_t())) {
        v.witness = BUWitness::OddTrace;
        v.explanation = "tr_{-1}(alpha) = " + t.get_str() + " and tr_j(alpha) = " + to_string(tj) +
                        " force a0 - a2 = 2(a1 - a2), but tr_j(alpha) = " + to_string(tj) + " is odd";
        return v;
    }
    const Integer a3 = 0;
    const Integer a2 = rhs / 2;
    const Integer a1 = a3 + im;
    const Integer a0 = a2 + re;
    v.feasible = true;
    v.solution = RGElement(a0, a1, a2, a3);
    v.explanation = "alpha = " + to_string(*v.solution) + " satisfies tr_{-1}(alpha) = " + t.get_str() +
                    " and tr_j(alpha) = " + to_string(tj);
    return v;
}

/// Cross-check of the constraint system against n0 - n1 + 1 <= m1 - m0; true
/// means the two disagree.
inline bool feasibility_equals_inequality(const BUParameters& p) {
    const bool feasible = borsuk_ulam_feasible(p).feasible;
    const bool violates = p.n0 - p.n1 + 1 > p.m1 - p.m0;
    return feasible == violates;
}

} // namespace spin4
