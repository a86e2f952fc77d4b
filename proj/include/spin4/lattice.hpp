#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spin4/error.hpp"
#include "spin4/matrix.hpp"

namespace spin4 {

/// Inertia of a real symmetric form: b_plus + b_minus + b_zero equals the rank,
/// sigma = b_plus - b_minus.
struct SignatureData {
    std::size_t b_plus = 0;
    std::size_t b_minus = 0;
    std::size_t b_zero = 0;
    std::int64_t sigma = 0;

    friend bool operator==(const SignatureData&, const SignatureData&) = default;

    friend SignatureData operator+(const SignatureData& a, const SignatureData& b) {
        return {a.b_plus + b.b_plus, a.b_minus + b.b_minus, a.b_zero + b.b_zero, a.sigma + b.sigma};
    }
};

/// A finitely generated free Z-module with a symmetric bilinear form, stored
/// as its Gram matrix. Torsion is not modeled.
class Lattice {
public:
    /// Validates squareness and symmetry.
    explicit Lattice(IntMatrix gram) : gram_(std::move(gram)) {
        if (!gram_.is_square()) {
            throw Error(ErrorCode::NotSquare, "Gram matrix is " + std::to_string(gram_.rows()) + "x" +
                                                  std::to_string(gram_.cols()));
        }
        for (std::size_t i = 0; i < rank(); ++i) {
            for (std::size_t j = i + 1; j < rank(); ++j) {
                if (gram_(i, j) != gram_(j, i)) {
                    throw Error(ErrorCode::NonSymmetric, "gram[" + std::to_string(i) + "][" + std::to_string(j) +
                                                             "] = " + gram_(i, j).get_str() + " but gram[" +
                                                             std::to_string(j) + "][" + std::to_string(i) +
                                                             "] = " + gram_(j, i).get_str());
                }
            }
        }
    }

    const IntMatrix& gram() const noexcept { return gram_; }
    std::size_t rank() const noexcept { return gram_.rows(); }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

private:
    IntMatrix gram_;
};

inline Lattice make_lattice(IntMatrix gram) { return Lattice(std::move(gram)); }

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    return Lattice(block_diagonal(a.gram(), b.gram()));
}

inline Lattice direct_sum(const std::vector<Lattice>& parts) {
    IntMatrix gram;
    for (const auto& p : parts) gram = block_diagonal(gram, p.gram());
    return Lattice(std::move(gram));
}

/// k-fold orthogonal sum of l with itself.
inline Lattice repeat(const Lattice& l, std::size_t k) {
    return direct_sum(std::vector<Lattice>(k, l));
}

/// The same module with the form multiplied by -1 (orientation reversal).
inline Lattice negate(const Lattice& l) { return Lattice(-l.gram()); }

inline Integer inner_product(const Lattice& l, const IntVector& x, const IntVector& y) {
    if (x.size() != l.rank() || y.size() != l.rank()) {
        throw Error(ErrorCode::DimensionMismatch, "vectors of length " + std::to_string(x.size()) + " and " +
                                                      std::to_string(y.size()) + " in a rank " +
                                                      std::to_string(l.rank()) + " lattice");
    }
    Integer s = 0;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < l.rank(); ++j) {
            s += x[i] * l.gram()(i, j) * y[j];
        }
    }
    return s;
}

inline Integer square(const Lattice& l, const IntVector& x) { return inner_product(l, x, x); }

/// Inertia of a symmetric integer matrix by exact LDL^T congruence over Q.
///
/// A nonzero diagonal entry is used as pivot whenever one exists. When the
/// remaining block has zero diagonal but some a_ij != 0, the basis change
/// e_i -> e_i + e_j makes the new diagonal entry 2 a_ij nonzero. Once the
/// remaining block vanishes, its size is the radical dimension.
inline SignatureData inertia(const IntMatrix& gram) {
    if (!gram.is_square()) {
        throw Error(ErrorCode::NotSquare, "inertia of a non-square matrix");
    }
    const std::size_t n = gram.rows();
    RatMatrix a = to_rational(gram);
    SignatureData out;
    std::size_t k = 0;
    while (k < n) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (sgn(a(i, i)) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (sgn(a(i, j)) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi == n) break;
            // e_pi -> e_pi + e_pj, applied to rows then columns.
            for (std::size_t c = k; c < n; ++c) a(pi, c) += a(pj, c);
            for (std::size_t r = k; r < n; ++r) a(r, pi) += a(r, pj);
            pivot = pi;
        }
        if (pivot != k) {
            a.swap_rows(pivot, k);
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, pivot), a(r, k));
        }
        const Rational d = a(k, k);
        if (sgn(d) > 0) {
            ++out.b_plus;
        } else {
            ++out.b_minus;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (sgn(a(r, k)) == 0) continue;
            const Rational f = a(r, k) / d;
            for (std::size_t c = k + 1; c < n; ++c) {
                a(r, c) -= f * a(k, c);
            }
            a(r, k) = 0;
        }
        for (std::size_t c = k + 1; c < n; ++c) a(k, c) = 0;
        ++k;
    }
    out.b_zero = n - out.b_plus - out.b_minus;
    out.sigma = static_cast<std::int64_t>(out.b_plus) - static_cast<std::int64_t>(out.b_minus);
    return out;
}

inline SignatureData signature(const Lattice& l) { return inertia(l.gram()); }

inline bool is_even(const Lattice& l) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (mpz_odd_p(l.gram()(i, i).get_mpz_t())) return false;
    }
    return true;
}

inline Integer determinant(const Lattice& l) { return determinant(l.gram()); }

inline bool is_unimodular(const Lattice& l) { return abs(determinant(l)) == 1; }

// Standard named lattices. Basis conventions are fixed here and relied on by
// the manifold model.

/// Hyperbolic plane H with basis (a, b), a.a = b.b = 0, a.b = 1. This is the
/// form of S^2 x S^2 in the basis [S^2 x pt], [pt x S^2].
inline Lattice hyperbolic_plane() { return Lattice(IntMatrix{{0, 1}, {1, 0}}); }

/// Positive-definite E8 as its Cartan matrix in Bourbaki numbering: the chain
/// 1-3-4-5-6-7-8 with node 2 attached to node 4.
inline Lattice e8() {
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    constexpr std::size_t edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (const auto& e : edges) {
        g(e[0], e[1]) = -1;
        g(e[1], e[0]) = -1;
    }
    return Lattice(std::move(g));
}

inline Lattice minus_e8() { return negate(e8()); }

/// K3 intersection lattice in the basis 3H + 2(-E8).
inline Lattice k3() {
    return direct_sum({hyperbolic_plane(), hyperbolic_plane(), hyperbolic_plane(), minus_e8(), minus_e8()});
}

} // namespace spin4
