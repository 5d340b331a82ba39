#pragma once

#include <cstddef>
#include <vector>

#include "quot/matrix.hpp"

namespace quot {

/// A point of the representation space of the r-framed m-loop quiver in
/// dimension (n, 1): m loop matrices A_1..A_m on k^n plus r framing vectors
/// v_1..v_r in k^n.
class FramedRep {
public:
    /// Validates all shape and field invariants; throws Error / FieldMismatch.
    FramedRep(std::size_t m, std::size_t n, std::size_t r, const Field& field,
              std::vector<Matrix> a, std::vector<Vec> v);

    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    const Field& field() const { return field_; }
    const std::vector<Matrix>& A() const { return a_; }
    const std::vector<Vec>& V() const { return v_; }
    const Matrix& A(std::size_t i) const { return a_.at(i); }
    const Vec& v(std::size_t j) const { return v_.at(j); }

    bool operator==(const FramedRep& o) const;
    bool operator!=(const FramedRep& o) const { return !(*this == o); }

private:
    std::size_t m_, n_, r_;
    Field field_;
    std::vector<Matrix> a_;
    std::vector<Vec> v_;
};

/// Invertible gauge transformation g in GL_n; construction checks rank = n
/// and throws SingularGauge otherwise.
class GaugeElement {
public:
    explicit GaugeElement(Matrix g);

    std::size_t n() const { return g_.rows(); }
    const Matrix& g() const { return g_; }
    const Matrix& g_inverse() const { return g_inv_; }

private:
    Matrix g_;
    Matrix g_inv_;
};

/// All [A_i, A_j] for i < j, ordered lexicographically in (i, j).
std::vector<Matrix> commutators(const FramedRep& rep);

/// True iff every pairwise commutator vanishes.
bool is_commuting(const FramedRep& rep);

/// True iff the smallest A-invariant subspace containing v_1..v_r is all of
/// k^n. Computed by worklist span closure, which stabilizes within n rounds.
bool is_stable(const FramedRep& rep);

/// (g A_1 g^-1, ..., g A_m g^-1, g v_1, ..., g v_r).
FramedRep gauge_act(const GaugeElement& g, const FramedRep& rep);

/// The length-r quotient supported at one point: n = r, all A_i = 0,
/// v_j = e_j. Stable and commuting by construction.
FramedRep punctual_point(std::size_t m, std::size_t r, const Field& field);

/// Diagonal representation supported on n distinct points of affine m-space:
/// A_i = diag of the i-th coordinates, v_j = indicator vector of the points
/// assigned to framing index j. Throws DuplicateSupport when two support
/// tuples coincide. Commuting always; stable because every point is assigned.
FramedRep etale_point(std::size_t m, std::size_t r, std::size_t n, const Field& field,
                      const std::vector<std::vector<Scalar>>& supports,
                      const std::vector<std::size_t>& assignment);

// Coordinates on the representation space: blocks A_1..A_m (row-major n^2
// entries each) followed by v_1..v_r (n entries each). This layout is shared
// by the relation Jacobian, the gauge differential, the potential gradient
// and the Hessian.
struct RepLayout {
    std::size_t m, n, r;

    std::size_t dim() const { return m * n * n + r * n; }
    std::size_t pair_count() const { return m * (m - 1) / 2; }
    std::size_t relation_rows() const { return pair_count() * n * n; }
    std::size_t a_index(std::size_t i, std::size_t row, std::size_t col) const {
        return i * n * n + row * n + col;
    }
    std::size_t v_index(std::size_t j, std::size_t k) const { return m * n * n + j * n + k; }
};

RepLayout layout_of(const FramedRep& rep);

/// Flattens (A, V) into one coordinate vector in RepLayout order.
Vec rep_coordinates(const FramedRep& rep);

/// Inverse of rep_coordinates.
FramedRep rep_from_coordinates(std::size_t m, std::size_t n, std::size_t r, const Field& field,
                               const Vec& coords);

} // namespace quot
