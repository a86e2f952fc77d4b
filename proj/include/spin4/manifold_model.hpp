#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spin4/error.hpp"
#include "spin4/isometry.hpp"
#include "spin4/lattice.hpp"

// Connected sums of K3 and S^2 x S^2 and the involutions f_S, f_K and
// f = #m f_K #n f_S, in frozen bases:
//   S^2 x S^2 : H with basis ([S^2 x pt], [pt x S^2])
//   K3        : 3H + 2(-E8), in that block order
// f_K swaps inside each H and maps the i-th basis vector of the first -E8 to
// the i-th basis vector of the second.

namespace spin4 {

enum class NamedForm { K3, S2xS2, E8, MinusE8, H };

constexpr std::string_view to_string(NamedForm f) {
    switch (f) {
    case NamedForm::K3: return "K3";
    case NamedForm::S2xS2: return "S2xS2";
    case NamedForm::E8: return "E8";
    case NamedForm::MinusE8: return "MinusE8";
    case NamedForm::H: return "H";
    }
    return "?";
}

inline std::optional<NamedForm> parse_named_form(std::string_view s) {
    for (NamedForm f : {NamedForm::K3, NamedForm::S2xS2, NamedForm::E8, NamedForm::MinusE8, NamedForm::H}) {
        if (s == to_string(f)) return f;
    }
    return std::nullopt;
}

inline Lattice named_lattice(NamedForm f) {
    switch (f) {
    case NamedForm::K3: return k3();
    case NamedForm::S2xS2:
    case NamedForm::H: return hyperbolic_plane();
    case NamedForm::E8: return e8();
    case NamedForm::MinusE8: return minus_e8();
    }
    throw Error(ErrorCode::SchemaError, "unknown named form");
}

struct NamedSummand {
    NamedForm form = NamedForm::H;
    std::size_t count = 1;
};

using Summand = std::variant<NamedSummand, IntMatrix>;

enum class Orientation { Given, Reversed };

struct ManifoldManifest {
    std::string label;
    std::vector<Summand> summands;
    Orientation orientation = Orientation::Given;
    bool spin = true;
};

/// Orthogonal sum of the summands in listed order, negated for reversed orientation.
inline Lattice assemble(const ManifoldManifest& man) {
    std::vector<Lattice> parts;
    for (const auto& s : man.summands) {
        if (const auto* named = std::get_if<NamedSummand>(&s)) {
            for (std::size_t k = 0; k < named->count; ++k) parts.push_back(named_lattice(named->form));
        } else {
            parts.emplace_back(std::get<IntMatrix>(s));
        }
    }
    Lattice l = direct_sum(parts);
    if (l.rank() == 0) {
        throw Error(ErrorCode::EmptyManifest, "manifest '" + man.label + "' has total rank 0");
    }
    return man.orientation == Orientation::Reversed ? negate(l) : l;
}

/// Manifest for mK3 # nS^2xS^2.
inline ManifoldManifest connected_sum_manifest(std::size_t m, std::size_t n) {
    ManifoldManifest man;
    man.label = std::to_string(m) + "K3#" + std::to_string(n) + "S2xS2";
    if (m > 0) man.summands.emplace_back(NamedSummand{NamedForm::K3, m});
    if (n > 0) man.summands.emplace_back(NamedSummand{NamedForm::S2xS2, n});
    return man;
}

namespace detail {

inline IntMatrix swap_matrix() { return IntMatrix{{0, 1}, {1, 0}}; }

inline IntMatrix f_k_matrix() {
    IntMatrix m;
    for (int i = 0; i < 3; ++i) m = block_diagonal(m, swap_matrix());
    IntMatrix e8_swap(16, 16);
    for (std::size_t i = 0; i < 8; ++i) {
        e8_swap(i, 8 + i) = 1;
        e8_swap(8 + i, i) = 1;
    }
    return block_diagonal(m, e8_swap);
}

} // namespace detail

/// (x, y) -> (y, x) on S^2 x S^2.
inline Isometry involution_f_S() { return Isometry(hyperbolic_plane(), detail::swap_matrix()); }

inline Isometry involution_f_K() { return Isometry(k3(), detail::f_k_matrix()); }

/// #m f_K #n f_S on assemble(connected_sum_manifest(m, n)).
inline Isometry involution_f(std::size_t m, std::size_t n) {
    if (m == 0) {
        throw Error(ErrorCode::BadParameters, "f = #m f_K #n f_S needs m > 0");
    }
    IntMatrix mat;
    for (std::size_t i = 0; i < m; ++i) mat = block_diagonal(mat, detail::f_k_matrix());
    for (std::size_t i = 0; i < n; ++i) mat = block_diagonal(mat, detail::swap_matrix());
    return Isometry(assemble(connected_sum_manifest(m, n)), std::move(mat));
}

enum class NamedInvolutionKind { f_S, f_K, f_mn };

struct NamedInvolution {
    NamedInvolutionKind kind = NamedInvolutionKind::f_S;
    std::size_t m = 1;
    std::size_t n = 0;
};

inline Isometry build(const NamedInvolution& ni) {
    switch (ni.kind) {
    case NamedInvolutionKind::f_S: return involution_f_S();
    case NamedInvolutionKind::f_K: return involution_f_K();
    case NamedInvolutionKind::f_mn: return involution_f(ni.m, ni.n);
    }
    throw Error(ErrorCode::BadParameters, "unknown named involution");
}

} // namespace spin4
