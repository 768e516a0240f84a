#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsym {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(long long n) : value_(n) {}
    Rational(unsigned n) : value_(n) {}
    Rational(unsigned long n) : value_(n) {}
    Rational(unsigned long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "n", "+n", "-n", "n/d" with decimal digits; throws ParseError.
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }

    /// "n" when the denominator is 1, otherwise "n/d".
    std::string to_string() const;

    Rational pow(unsigned exponent) const;

    Rational operator-() const { return Rational(Raw{}, -value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    using Value = boost::multiprecision::cpp_rational;
    struct Raw {};
    Rational(Raw, Value v) : value_(std::move(v)) {}

    Value value_;
};

/// Binomial coefficient C(n, k) as an exact integer; 0 when k < 0 or k > n, and
/// C(-1, -1) = 1 (the convention used by the basis-change coefficients).
BigInt binomial(long n, long k);

} // namespace hsym
