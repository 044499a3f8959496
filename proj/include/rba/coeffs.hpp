#pragma once

#include <map>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "rba/errors.hpp"

namespace rba {

using Rational = boost::multiprecision::cpp_rational;

/// A univariate polynomial in the formal weight lambda with exact rational
/// coefficients, stored sparsely. The zero polynomial is the empty map; no
/// stored rational is zero.
class Coeff {
public:
    Coeff() = default; // zero
    Coeff(int v) : Coeff(Rational(v)) {}
    Coeff(Rational v);

    static Coeff lambda(unsigned power = 1);
    static Coeff monomial(Rational c, unsigned power);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Coefficient of lambda^power (zero if absent).
    Rational at(unsigned power) const;
    const std::map<unsigned, Rational>& terms() const { return terms_; }

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(const Coeff& a, const Coeff& b);
    Coeff operator-() const;

    friend bool operator==(const Coeff& a, const Coeff& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

private:
    std::map<unsigned, Rational> terms_;
};

inline Coeff coeff_add(const Coeff& a, const Coeff& b) { return a + b; }
inline Coeff coeff_mul(const Coeff& a, const Coeff& b) { return a * b; }
inline Coeff coeff_neg(const Coeff& a) { return -a; }

/// Whether lambda stays formal or is evaluated at a fixed rational.
class WeightMode {
public:
    static WeightMode symbolic() { return WeightMode{std::nullopt}; }
    static WeightMode numeric(Rational v) { return WeightMode{std::move(v)}; }

    bool is_symbolic() const { return !value_.has_value(); }
    bool is_numeric() const { return value_.has_value(); }
    /// Numeric with value exactly zero (the antipode-capable mode).
    bool is_zero() const { return value_.has_value() && *value_ == 0; }
    const Rational& value() const { return *value_; }

    /// The weight as a scalar: the monomial lambda, or the numeric constant.
    Coeff weight() const;

    friend bool operator==(const WeightMode& a, const WeightMode& b) {
        return a.value_ == b.value_;
    }

private:
    explicit WeightMode(std::optional<Rational> v) : value_(std::move(v)) {}
    std::optional<Rational> value_;
};

/// Evaluation lambda -> value; identity in symbolic mode.
Coeff specialize(const Coeff& a, const WeightMode& mode);

} // namespace rba
