#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace langfib {

// Exact rational with int64 parts; all operations route through __int128
// and throw std::overflow_error rather than wrap.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0, gcd(num, den) = 1

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string to_string() const;
};

Rational parse_rational(const std::string& s);  // "3", "-1/2"

}  // namespace langfib
