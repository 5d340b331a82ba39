#pragma once

#include "quot/adhm.hpp"
#include "quot/framed_rep.hpp"
#include "quot/rng.hpp"

namespace quot {

/// Uniform scalar: integer in [-box, box] over Q, uniform residue over F_p.
Scalar random_scalar(CounterRng& rng, const Field& field, long long box = 3);

Matrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols, const Field& field,
                     long long box = 3);

Vec random_vec(CounterRng& rng, std::size_t len, const Field& field, long long box = 3);

/// Arbitrary point of the representation space (no stability or commuting
/// guarantee).
FramedRep random_rep(CounterRng& rng, std::size_t m, std::size_t n, std::size_t r, const Field& field,
                     long long box = 3);

/// Random invertible gauge element (rejection sampling).
GaugeElement random_gauge(CounterRng& rng, std::size_t n, const Field& field, long long box = 3);

/// Commuting tuple: A_1 random, the other loops random polynomials in A_1,
/// framing vectors random. Not necessarily stable.
FramedRep random_commuting_rep(CounterRng& rng, std::size_t m, std::size_t n, std::size_t r,
                               const Field& field, long long box = 3);

/// Commuting and stable, by rejection over random_commuting_rep.
FramedRep random_stable_commuting_rep(CounterRng& rng, std::size_t m, std::size_t n, std::size_t r,
                                      const Field& field, long long box = 3);

/// Random etale point: n distinct support tuples in the coordinate box and a
/// random assignment of points to framing indices.
FramedRep random_etale_rep(CounterRng& rng, std::size_t m, std::size_t n, std::size_t r,
                           const Field& field, long long box = 3);

/// Random stable solution of the moment-map equation. Every draw has
/// commuting B's with i j = 0; for r > 1 half of the draws carry a nonzero j
/// (last framing column of i zeroed, j supported on that row).
AdhmDatum random_stable_adhm_solution(CounterRng& rng, std::size_t n, std::size_t r, const Field& field,
                                      long long box = 3);

} // namespace quot
