#include "hsym/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "hsym/error.hpp"

namespace hsym {

namespace {

BigInt parse_integer(std::string_view digits, std::size_t offset) {
    if (digits.empty()) {
        throw ParseError("expected digits in rational literal", offset + 1);
    }
    BigInt out = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("unexpected character '") + c + "' in rational literal", offset + i + 1);
        }
        out = out * 10 + (c - '0');
    }
    return out;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = Value(num, den);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    const auto slash = text.find('/', pos);
    BigInt num = parse_integer(text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos), pos);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        std::size_t at = slash + 1;
        if (at < text.size() && (text[at] == '-' || text[at] == '+')) {
            negative = negative != (text[at] == '-');
            ++at;
        }
        den = parse_integer(text.substr(at), at);
        if (den.is_zero()) {
            throw ParseError("zero denominator in rational literal", slash + 2);
        }
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }

BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::to_string() const {
    const BigInt den = denominator();
    if (den == 1) {
        return numerator().str();
    }
    return numerator().str() + "/" + den.str();
}

Rational Rational::pow(unsigned exponent) const {
    Rational out(1);
    Rational base = *this;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            out *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) {
        return std::strong_ordering::less;
    }
    if (b.value_ < a.value_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

BigInt binomial(long n, long k) {
    if (n == -1 && k == -1) {
        return 1;
    }
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt out = 1;
    for (long i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

} // namespace hsym
