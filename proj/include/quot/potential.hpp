#pragma once

#include "quot/framed_rep.hpp"

namespace quot {

/// A three-loop rep together with the potential data evaluated there. The
/// gradient is indexed like the relation-Jacobian columns (RepLayout), the
/// Hessian is symmetric, and all v-indexed gradient entries vanish.
struct PotentialPoint {
    FramedRep rep;
    Scalar value;
    Vec gradient;
    Matrix hessian;
};

/// Evaluates f, grad f and Hess f at rep (m = 3).
PotentialPoint potential_point(const FramedRep& rep);

/// f(A, V) = Tr A_1 [A_2, A_3]. All operations here require m = 3 and throw
/// WrongLoopCount otherwise.
Scalar potential_value(const FramedRep& rep);

/// Coordinate gradient of f in RepLayout order. Blocks: [A_2,A_3]^T for A_1,
/// [A_3,A_1]^T for A_2, [A_1,A_2]^T for A_3; the v-blocks vanish. The
/// gradient vanishes exactly when the rep is commuting.
Vec potential_gradient(const FramedRep& rep);

/// Exact second-derivative matrix of f at rep, (3n^2+rn) square, symmetric,
/// with zero v-rows and v-columns.
Matrix hessian(const FramedRep& rep);

/// True iff ker(hessian) = ker(relation_jacobian) at rep, decided by exact
/// rank of the two matrices and of their vertical stack. Requires a stable
/// commuting rep.
bool crit_equals_commuting_tangent(const FramedRep& rep);

} // namespace quot
