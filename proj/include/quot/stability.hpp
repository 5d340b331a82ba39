#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quot/field.hpp"

namespace quot {

/// Polynomial with exact rational coefficients, stored in ascending degree
/// with trailing zeros trimmed.
class RationalPoly {
public:
    RationalPoly() = default; // zero polynomial
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly monomial(Rational coeff, std::size_t degree);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const;
    Rational eval(const Rational& x) const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly scaled(const Rational& c) const;

    bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Human-readable form like "1 - 1/2*k + k^2" (variable named k).
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Stability parameter polynomial of degree m-1, encoded by its leading data
/// delta_1..delta_m: delta(k) = delta_1 k^{m-1}/(m-1)! + ... + delta_m.
/// Requires delta_1 > 0.
struct DeltaParams {
    std::size_t m;
    std::vector<Rational> delta; // delta_1..delta_m

    DeltaParams(std::size_t m_dim, std::vector<Rational> coefficients);
    RationalPoly to_polynomial() const;
};

/// P_E - epsilon * delta; epsilon must be 0 or 1.
RationalPoly framed_hilbert_poly(const RationalPoly& p_e, int epsilon, const RationalPoly& delta);

/// (c1H - epsilon * delta_1) / rank; throws ZeroRank unless rank > 0.
Rational slope(const Rational& c1h, int epsilon, const Rational& delta1, const Rational& rk);

enum class FramingCase {
    FramingSurvives, // submodule not contained in the framing kernel
    FramingDies,     // submodule contained in the framing kernel
};

/// Decides whether a rank-r' submodule with the given ordinary slope lies
/// strictly below the framed slope -delta_1/r in the stated case:
/// FramingSurvives compares mu - delta_1/r' < -delta_1/r, FramingDies
/// compares mu < -delta_1/r. Requires 0 < r' < r and 0 < delta_1 < r,
/// otherwise ParameterOutOfRange.
bool submodule_slope_check(long long rk, long long rk_prime, const Rational& delta1,
                        const Rational& mu_h_eprime, FramingCase which);

} // namespace quot
