#pragma once

#include <cstdint>
#include <string>

#include "quot/framed_rep.hpp"
#include "quot/stability.hpp"

namespace quot {

/// Result of an exhaustive F_q point count of the length-n Quot scheme.
struct CountResult {
    std::size_t m, n, r;
    std::uint64_t q;
    std::uint64_t stable_commuting_points;
    std::uint64_t orbit_count;       // stable_commuting_points / |GL_n(F_q)|
    std::uint64_t gauge_group_order; // |GL_n(F_q)|
};

struct EnumerateOptions {
    /// Hard cap on the number of enumerated tuples; exceeding it throws
    /// BudgetExceeded rather than sampling.
    std::uint64_t budget = 100'000'000;
    /// Number of odometer shards processed concurrently (>= 1). Counts are
    /// merged in shard order, so the result does not depend on scheduling.
    unsigned threads = 1;
    /// When set, enumeration runs sequentially in chunks and persists
    /// "next index + partial count" to this file, resuming from it if it
    /// already exists.
    std::string checkpoint_path;
    std::uint64_t checkpoint_stride = 1'000'000;
};

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
std::uint64_t gl_group_order(std::size_t n, std::uint64_t q);

/// Exhaustively enumerates all (A, V) tuples over F_q in odometer order,
/// counts the stable commuting ones and divides by |GL_n(F_q)|. The division
/// must be exact (the gauge action is free on stable tuples); a remainder
/// throws NonIntegralOrbitCount. This module carries its own modular
/// arithmetic so it can serve as an oracle for the exact-linear-algebra path.
CountResult count_quot_points(std::size_t m, std::size_t n, std::size_t r, std::uint64_t q,
                              const EnumerateOptions& opts = {});

/// Counts deformations (A + eps a, V + eps w) over F_q[eps]/(eps^2) of a
/// stable commuting rep over F_q that still satisfy the commutator relations,
/// divided by the q^{n^2} gauge lifts. Equals q^{tangent_dim}.
std::uint64_t count_first_order_lifts(const FramedRep& rep, std::uint64_t budget = 100'000'000);

/// The closed-form orbit count of the n = 1 case as a polynomial in q:
/// q^m (q^r - 1)/(q - 1) = q^m + q^{m+1} + ... + q^{m+r-1}. Its degree is
/// m - 1 + r, the dimension of the n = 1 Quot scheme.
RationalPoly n1_orbit_polynomial(std::size_t m, std::size_t r);

} // namespace quot
