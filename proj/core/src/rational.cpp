#include "langfib/rational.hpp"

#include <limits>
#include <numeric>

namespace langfib {

namespace {
using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = n < 0 ? -n : n, b = d;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    Rational r;
    r.num = narrow(n / a);
    r.den = narrow(d / a);
    return r;
}
}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

Rational Rational::operator+(const Rational& o) const {
    return make(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return make(i128(num) * o.den - i128(o.num) * den, i128(den) * o.den);
}
Rational Rational::operator*(const Rational& o) const { return make(i128(num) * o.num, i128(den) * o.den); }
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("rational division by zero");
    return make(i128(num) * o.den, i128(den) * o.num);
}
Rational Rational::operator-() const { return make(-i128(num), den); }

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace langfib
