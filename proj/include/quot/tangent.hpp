#pragma once

#include <optional>

#include "quot/framed_rep.hpp"

namespace quot {

enum class Verdict { Smooth, Singular, Unknown };

const char* to_string(Verdict v);

/// Zariski tangent data of the length-n Quot scheme at one matrix point.
struct TangentReport {
    std::size_t ambient_dim;    // (m-1)n^2 + rn
    std::size_t rep_space_dim;  // mn^2 + rn
    std::size_t jacobian_rank;
    std::size_t tangent_dim;    // rep_space_dim - jacobian_rank - n^2
    std::optional<std::size_t> reference_dim;
    Verdict verdict;
};

/// Infinitesimal gauge action at rep: xi |-> ([xi,A_1],...,[xi,A_m],
/// xi v_1,..., xi v_r), as a (mn^2+rn) x n^2 matrix. Rows follow RepLayout,
/// columns are the entries of xi in row-major order. Has rank n^2 exactly
/// when rep is stable.
Matrix gauge_differential(const FramedRep& rep);

/// Linearization of the commutator relations at rep:
/// (a_1..a_m, w_1..w_r) |-> ([a_i,A_j] + [A_i,a_j])_{i<j}, as a
/// (m(m-1)/2 n^2) x (mn^2+rn) matrix. Rows are ordered lexicographically in
/// ((i,j), entry), columns follow RepLayout; the w-columns are zero.
Matrix relation_jacobian(const FramedRep& rep);

/// dim of the Zariski tangent space at a stable commuting point, computed as
/// dim ker(relation_jacobian) - n^2. Throws NotStable / NotCommuting.
std::size_t tangent_dim(const FramedRep& rep);

/// (m-1)n^2 + rn.
std::size_t ambient_dim(std::size_t m, std::size_t n, std::size_t r);

/// Full tangent report. With a reference dimension the verdict is Smooth or
/// Singular; DimensionMismatch is thrown when the reference exceeds the
/// computed tangent dimension (the tangent space can never be smaller than
/// the local dimension).
TangentReport classify_point(const FramedRep& rep, std::optional<std::size_t> expected_dim = std::nullopt);

} // namespace quot
