#include "quot/field.hpp"

#include <limits>

namespace quot {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_reduce(long long value, std::uint64_t p) {
    long long m = value % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// x with a*x = 1 mod p, for prime p and a not divisible by p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p > std::numeric_limits<std::int32_t>::max() || !is_prime_u64(p)) {
        throw NotPrime("Field::prime: " + std::to_string(p) + " is not a supported prime");
    }
    Field f;
    f.kind_ = FieldKind::Prime;
    f.p_ = p;
    return f;
}

std::string Field::to_string() const {
    if (is_rationals()) return "Q";
    return "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        try {
            std::size_t used = 0;
            unsigned long long p = std::stoull(text.substr(3), &used);
            if (used != text.size() - 3) throw ParseError("Field::parse: trailing characters in '" + text + "'");
            return prime(p);
        } catch (const NotPrime&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("Field::parse: bad field tag '" + text + "'");
        }
    }
    throw ParseError("Field::parse: bad field tag '" + text + "'");
}

Scalar Scalar::of_int(const Field& f, long long value) {
    Scalar s(f);
    if (f.is_rationals()) {
        s.rat_ = Rational(static_cast<long>(value));
    } else {
        s.res_ = mod_reduce(value, f.characteristic());
    }
    return s;
}

Scalar Scalar::of_rational(Rational value) {
    Scalar s(Field::rationals());
    value.canonicalize();
    s.rat_ = std::move(value);
    return s;
}

Scalar Scalar::of_rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero("Scalar::of_rational: zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return of_rational(std::move(q));
}

Scalar Scalar::of_residue(const Field& f, long long value) {
    if (!f.is_prime_field()) throw FieldMismatch("Scalar::of_residue: field is not a prime field");
    return of_int(f, value);
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? sgn(rat_) == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::require_same_field(const Scalar& o, const char* op) const {
    if (field_ != o.field_) {
        throw FieldMismatch(std::string("Scalar: mixed fields in ") + op + " (" + field_.to_string() +
                            " vs " + o.field_.to_string() + ")");
    }
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = -rat_;
    } else {
        const std::uint64_t p = field_.characteristic();
        s.res_ = res_ == 0 ? 0 : p - res_;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o, "+");
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = rat_ + o.rat_;
    } else {
        const std::uint64_t p = field_.characteristic();
        std::uint64_t v = res_ + o.res_;
        s.res_ = v >= p ? v - p : v;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o, "-");
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = rat_ - o.rat_;
    } else {
        const std::uint64_t p = field_.characteristic();
        s.res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + p - o.res_;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o, "*");
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = rat_ * o.rat_;
    } else {
        s.res_ = mul_mod(res_, o.res_, field_.characteristic());
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o, "/");
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("Scalar::inverse: zero is not invertible");
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = inv_mod(res_, field_.characteristic());
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

const Rational& Scalar::rat() const {
    if (!field_.is_rationals()) throw FieldMismatch("Scalar::rat: not a rational scalar");
    return rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw FieldMismatch("Scalar::residue: not a prime-field scalar");
    return res_;
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return rat_.get_str();
    return std::to_string(res_);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw ParseError("Scalar::parse: empty entry");
    try {
        if (f.is_rationals()) {
            Rational q(text);
            if (q.get_den() == 0) throw ParseError("Scalar::parse: zero denominator in '" + text + "'");
            q.canonicalize();
            return of_rational(std::move(q));
        }
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw ParseError("Scalar::parse: trailing characters in '" + text + "'");
        return of_int(f, v);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("Scalar::parse: bad entry '" + text + "'");
    }
}

} // namespace quot
