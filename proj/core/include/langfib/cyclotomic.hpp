#pragma once

#include <vector>

#include "langfib/rational.hpp"

namespace langfib {

// Element of Q(zeta_n): polynomial in zeta_n of degree < phi(n), reduced
// modulo the n-th cyclotomic polynomial. Exact arithmetic throughout.
class CycNumber {
public:
    CycNumber() : n_(1), coeffs_(1, Rational(0)) {}
    explicit CycNumber(const Rational& r, int n = 1);

    // zeta_n^k
    static CycNumber root_of_unity(int n, int k);

    int level() const { return n_; }
    bool is_zero() const;
    bool is_rational(Rational* out = nullptr) const;

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator-() const;
    bool operator==(const CycNumber& o) const;

    // Multiplicative inverse via the regular representation; throws on zero.
    CycNumber inverse() const;

    std::string to_string() const;

private:
    int n_;                         // conductor of the ambient field
    std::vector<Rational> coeffs_;  // length phi(n), coefficient of zeta^i

    static CycNumber promote(const CycNumber& x, int n);  // embed into Q(zeta_n), n_ | n
    friend CycNumber promote_pair(const CycNumber&, const CycNumber&, CycNumber&, CycNumber&);
};

// n-th cyclotomic polynomial, ascending integer coefficients.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

int euler_phi(int n);

}  // namespace langfib
