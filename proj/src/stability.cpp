#include "quot/stability.hpp"

#include <algorithm>

namespace quot {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RationalPoly RationalPoly::monomial(Rational coeff, std::size_t degree) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = std::move(coeff);
    return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::scaled(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (Rational& e : out) e *= c;
    return RationalPoly(std::move(out));
}

std::string RationalPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0) continue;
        std::string term = coeffs_[k].get_str();
        if (k > 0) {
            term = (coeffs_[k] == 1 ? "" : coeffs_[k] == -1 ? "-" : term + "*");
            term += "k";
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (s.empty()) {
            s = term;
        } else if (!term.empty() && term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    return s.empty() ? "0" : s;
}

DeltaParams::DeltaParams(std::size_t m_dim, std::vector<Rational> coefficients)
    : m(m_dim), delta(std::move(coefficients)) {
    if (m < 1) throw ParameterOutOfRange("DeltaParams: dimension must be >= 1");
    if (delta.size() != m) throw ParameterOutOfRange("DeltaParams: expected m coefficients");
    if (sgn(delta.front()) <= 0) throw ParameterOutOfRange("DeltaParams: delta_1 must be positive");
}

RationalPoly DeltaParams::to_polynomial() const {
    RationalPoly out;
    for (std::size_t idx = 0; idx < m; ++idx) {
        const std::size_t degree = m - 1 - idx; // term delta_{idx+1} k^{m-1-idx}/(m-1-idx)!
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(degree));
        out = out + RationalPoly::monomial(delta[idx] / Rational(fact), degree);
    }
    return out;
}

RationalPoly framed_hilbert_poly(const RationalPoly& p_e, int epsilon, const RationalPoly& delta) {
    if (epsilon != 0 && epsilon != 1)
        throw ParameterOutOfRange("framed_hilbert_poly: epsilon must be 0 or 1");
    return epsilon == 0 ? p_e : p_e - delta;
}

Rational slope(const Rational& c1h, int epsilon, const Rational& delta1, const Rational& rk) {
    if (epsilon != 0 && epsilon != 1) throw ParameterOutOfRange("slope: epsilon must be 0 or 1");
    if (sgn(rk) <= 0) throw ZeroRank("slope: rank must be positive");
    Rational num = c1h;
    if (epsilon == 1) num -= delta1;
    return num / rk;
}

bool submodule_slope_check(long long rk, long long rk_prime, const Rational& delta1,
                        const Rational& mu_h_eprime, FramingCase which) {
    if (rk_prime <= 0 || rk_prime >= rk)
        throw ParameterOutOfRange("submodule_slope_check: need 0 < r' < r");
    if (sgn(delta1) <= 0 || delta1 >= Rational(static_cast<long>(rk)))
        throw ParameterOutOfRange("submodule_slope_check: need 0 < delta_1 < r");

    const Rational bound = -delta1 / Rational(static_cast<long>(rk));
    if (which == FramingCase::FramingSurvives) {
        return mu_h_eprime - delta1 / Rational(static_cast<long>(rk_prime)) < bound;
    }
    return mu_h_eprime < bound;
}

} // namespace quot
