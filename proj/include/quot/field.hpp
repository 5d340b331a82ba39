#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "quot/errors.hpp"

namespace quot {

/// Exact rational number (arbitrary precision, canonical form).
using Rational = mpq_class;

enum class FieldKind : std::uint8_t { Rationals, Prime };

/// Coefficient field tag: the rationals, or a prime field F_p.
class Field {
public:
    Field() : kind_(FieldKind::Rationals), p_(0) {}

    static Field rationals() { return Field{}; }

    /// Prime field of order p. Throws NotPrime unless p is a prime < 2^31.
    static Field prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::Prime; }

    /// 0 for the rationals, p for F_p.
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const Field&) const = default;

    /// "Q" or "Fp:<p>" -- the tag used in every serialized object.
    std::string to_string() const;
    static Field parse(const std::string& text);

private:
    FieldKind kind_;
    std::uint64_t p_;
};

/// An exact field element: rational, or residue mod p. Arithmetic between
/// scalars of different fields throws FieldMismatch.
class Scalar {
public:
    static Scalar zero(const Field& f) { return of_int(f, 0); }
    static Scalar one(const Field& f) { return of_int(f, 1); }
    static Scalar of_int(const Field& f, long long value);
    static Scalar of_rational(Rational value);
    static Scalar of_rational(long long num, long long den);
    /// Residue class of value mod p (value may be any integer).
    static Scalar of_residue(const Field& f, long long value);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Throws DivisionByZero when o is zero.
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Scalar inverse() const;

    /// Scalars over different fields are never equal.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Rational value; only valid over the rationals.
    const Rational& rat() const;
    /// Residue in [0, p); only valid over a prime field.
    std::uint64_t residue() const;

    /// "num/den" (or "num" for integers) over Q, decimal residue over F_p.
    std::string to_string() const;
    static Scalar parse(const Field& f, const std::string& text);

private:
    explicit Scalar(const Field& f) : field_(f) {}

    void require_same_field(const Scalar& o, const char* op) const;

    Field field_;
    Rational rat_;           // valid over the rationals
    std::uint64_t res_ = 0;  // valid over a prime field
};

} // namespace quot
