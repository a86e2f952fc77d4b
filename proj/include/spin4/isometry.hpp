#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "spin4/error.hpp"
#include "spin4/lattice.hpp"
#include "spin4/matrix.hpp"

namespace spin4 {

inline constexpr std::size_t kDefaultOrderCap = 120;

/// An automorphism of a lattice: an integer matrix M acting on column vectors
/// with M^T G M = G and det M = +-1.
class Isometry {
public:
    Isometry(Lattice lattice, IntMatrix matrix) : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
        const std::size_t n = lattice_.rank();
        if (matrix_.rows() != n || matrix_.cols() != n) {
            throw Error(ErrorCode::DimensionMismatch, "matrix is " + std::to_string(matrix_.rows()) + "x" +
                                                          std::to_string(matrix_.cols()) + " for a rank " +
                                                          std::to_string(n) + " lattice");
        }
        if (matrix_.transpose() * lattice_.gram() * matrix_ != lattice_.gram()) {
            throw Error(ErrorCode::NotAnIsometry, "M^T G M != G");
        }
        if (abs(determinant(matrix_)) != 1) {
            throw Error(ErrorCode::NotAnIsometry, "det M = " + determinant(matrix_).get_str() + ", expected +-1");
        }
    }

    const Lattice& lattice() const noexcept { return lattice_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

    IntVector apply(const IntVector& x) const { return matrix_ * x; }

    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.lattice_ == b.lattice_ && a.matrix_ == b.matrix_;
    }

private:
    Lattice lattice_;
    IntMatrix matrix_;
};

inline Isometry make_isometry(const Lattice& l, IntMatrix m) { return Isometry(l, std::move(m)); }

inline Isometry identity_isometry(const Lattice& l) { return Isometry(l, IntMatrix::identity(l.rank())); }

inline Isometry negative_identity(const Lattice& l) { return Isometry(l, -IntMatrix::identity(l.rank())); }

/// The same matrix viewed on the orientation-reversed lattice.
inline Isometry reverse_orientation(const Isometry& a) { return Isometry(negate(a.lattice()), a.matrix()); }

/// Class of an embedded (+2)- or (-2)-sphere.
class SphereClass {
public:
    SphereClass(Lattice lattice, IntVector vector) : lattice_(std::move(lattice)), vector_(std::move(vector)) {
        Integer s = square(lattice_, vector_);
        if (s != 2 && s != -2) {
            throw Error(ErrorCode::InvalidSelfIntersection, "v.v = " + s.get_str() + ", expected +2 or -2");
        }
        self_intersection_ = static_cast<int>(s.get_si());
    }

    const Lattice& lattice() const noexcept { return lattice_; }
    const IntVector& vector() const noexcept { return vector_; }
    int self_intersection() const noexcept { return self_intersection_; }

private:
    Lattice lattice_;
    IntVector vector_;
    int self_intersection_ = 0;
};

inline SphereClass make_sphere_class(const Lattice& l, IntVector v) { return SphereClass(l, std::move(v)); }

/// Homology action of the Dehn twist about a (+-2)-sphere: the reflection
/// x -> x - (2 (x.v) / (v.v)) v. For v.v = -2 this is x + (x.v) v, for
/// v.v = +2 it is x - (x.v) v.
inline Isometry dehn_twist_action(const SphereClass& s) {
    const Lattice& l = s.lattice();
    const std::size_t n = l.rank();
    const IntVector& v = s.vector();
    const IntVector gv = l.gram() * v; // (e_j . v) for each basis vector e_j
    const int eps = 2 / s.self_intersection();
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) -= eps * v[i] * gv[j];
    return Isometry(l, std::move(m));
}

/// a after b: the matrix product a.matrix * b.matrix.
inline Isometry compose(const Isometry& a, const Isometry& b) {
    if (!(a.lattice() == b.lattice())) {
        throw Error(ErrorCode::LatticeMismatch, "isometries act on different lattices");
    }
    return Isometry(a.lattice(), a.matrix() * b.matrix());
}

inline bool is_homologically_trivial(const Isometry& a) {
    return a.matrix() == IntMatrix::identity(a.lattice().rank());
}

/// True iff a^2 is the identity (the identity itself included).
inline bool is_involution(const Isometry& a) {
    return a.matrix() * a.matrix() == IntMatrix::identity(a.lattice().rank());
}

inline std::size_t order(const Isometry& a, std::size_t cap = kDefaultOrderCap) {
    if (cap == 0) {
        throw Error(ErrorCode::BadParameters, "order cap must be positive");
    }
    const IntMatrix id = IntMatrix::identity(a.lattice().rank());
    IntMatrix power = a.matrix();
    for (std::size_t k = 1; k <= cap; ++k) {
        if (power == id) return k;
        power = power * a.matrix();
    }
    throw Error(ErrorCode::OrderExceedsCap, "no k <= " + std::to_string(cap) + " with a^k = id");
}

/// Rows form the canonical (Hermite) basis of the saturated fixed sublattice
/// ker(M - I) in Z^n.
inline IntMatrix fixed_sublattice(const Isometry& a) {
    return integer_kernel(a.matrix() - IntMatrix::identity(a.lattice().rank()));
}

/// Gram matrix of the form restricted to the span of the given basis rows.
inline IntMatrix restricted_gram(const Lattice& l, const IntMatrix& basis) {
    return basis * l.gram() * basis.transpose();
}

struct InvariantSignatureData {
    std::size_t b_plus_inv = 0;
    std::size_t b_minus_inv = 0;
    std::size_t b_zero_inv = 0; // nonzero only for degenerate ambient forms
    std::int64_t sigma_inv = 0;
    std::size_t fixed_rank = 0;
    std::size_t codimension_b_plus = 0; // b_plus(ambient) - b_plus_inv

    friend bool operator==(const InvariantSignatureData&, const InvariantSignatureData&) = default;
};

/// Inertia of the form on the fixed part of a finite-order isometry.
inline InvariantSignatureData invariant_signature(const Isometry& a) {
    const IntMatrix basis = fixed_sublattice(a);
    const SignatureData fixed = inertia(restricted_gram(a.lattice(), basis));
    const SignatureData ambient = signature(a.lattice());
    InvariantSignatureData out;
    out.b_plus_inv = fixed.b_plus;
    out.b_minus_inv = fixed.b_minus;
    out.b_zero_inv = fixed.b_zero;
    out.sigma_inv = fixed.sigma;
    out.fixed_rank = basis.rows();
    out.codimension_b_plus = ambient.b_plus >= fixed.b_plus ? ambient.b_plus - fixed.b_plus : 0;
    return out;
}

} // namespace spin4
