#pragma once

#include "quot/framed_rep.hpp"

namespace quot {

/// Matrix datum (B_1, B_2, i, j) of the rank-r framed moduli model on the
/// plane: B_1, B_2 in End(k^n), i: k^r -> k^n, j: k^n -> k^r.
class AdhmDatum {
public:
    AdhmDatum(std::size_t n, std::size_t r, const Field& field, Matrix b1, Matrix b2, Matrix i, Matrix j);

    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    const Field& field() const { return field_; }
    const Matrix& B1() const { return b1_; }
    const Matrix& B2() const { return b2_; }
    const Matrix& i() const { return i_; }
    const Matrix& j() const { return j_; }

    bool operator==(const AdhmDatum& o) const;

private:
    std::size_t n_, r_;
    Field field_;
    Matrix b1_, b2_, i_, j_;
};

/// [B_1, B_2] + i j (n x n).
Matrix moment(const AdhmDatum& d);

/// True iff the span closure of the columns of i under B_1, B_2 is all of
/// k^n, i.e. no proper subspace contains im i and is B-invariant.
bool is_stable_adhm(const AdhmDatum& d);

/// Rank of the linearization of the moment map at d, as a map from the
/// 2n^2 + 2nr parameter space to the n^2 relation entries. Requires
/// moment(d) = 0 (else NotOnVariety) and stability (else NotStable); equals
/// n^2 there, which gives the moduli space dimension 2nr after subtracting
/// relations and gauge.
std::size_t moment_jacobian_rank(const AdhmDatum& d);

/// Tangent dimension of the framed moduli at a stable solution:
/// dim ker(d moment) - n^2.
std::size_t adhm_tangent_dim(const AdhmDatum& d);

/// Embedding of a commuting stable 2-loop rep as the j = 0 locus:
/// (A_1, A_2, [v_1|...|v_r], 0). Output satisfies moment = 0 and is stable.
AdhmDatum eta_embed(const FramedRep& rep);

/// Inverse of eta_embed on its image: recovers (A, V) from (B, i).
FramedRep eta_restrict(const AdhmDatum& d);

struct FramedQuotDims {
    std::size_t framed_dim; // 2nr
    std::size_t quot_dim;   // (r+1)n
    std::size_t codim;      // n(r-1)
};

/// (2nr, (r+1)n, 2nr - (r+1)n); the codimension always equals n(r-1).
FramedQuotDims framed_vs_quot_dims(std::size_t n, std::size_t r);

} // namespace quot
