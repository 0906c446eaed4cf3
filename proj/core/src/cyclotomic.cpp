#include "langfib/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace langfib {

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: positive argument required");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials (ascending coefficients), remainder must vanish.
std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<std::int64_t> d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) throw std::domain_error("poly_divide_exact: zero divisor");
    if (num.size() < d.size()) throw std::domain_error("poly_divide_exact: degree underflow");
    std::vector<std::int64_t> q(num.size() - d.size() + 1, 0);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        std::int64_t lead = num[i + d.size() - 1];
        if (lead % d.back() != 0) throw std::domain_error("poly_divide_exact: inexact division");
        std::int64_t c = lead / d.back();
        q[i] = c;
        for (size_t j = 0; j < d.size(); ++j) num[i + j] -= c * d[j];
    }
    for (std::int64_t c : num)
        if (c != 0) throw std::domain_error("poly_divide_exact: nonzero remainder");
    return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<std::int64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: positive index required");
    std::vector<std::int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    std::vector<std::int64_t> result = num;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) result = poly_divide_exact(result, cyclotomic_polynomial(d));
    cache[n] = result;
    return result;
}

namespace {

// Reduce a rational polynomial modulo the (monic, integer) n-th cyclotomic polynomial.
std::vector<Rational> reduce_mod_cyclotomic(std::vector<Rational> p, int n) {
    std::vector<std::int64_t> phi = cyclotomic_polynomial(n);
    size_t deg = phi.size() - 1;  // = euler_phi(n)
    for (size_t i = p.size(); i-- > deg;) {
        Rational c = p[i];
        if (c.is_zero()) continue;
        p[i] = Rational(0);
        for (size_t j = 0; j < deg; ++j)
            p[i - deg + j] = p[i - deg + j] - c * Rational(phi[j]);
    }
    p.resize(deg, Rational(0));
    return p;
}

}  // namespace

CycNumber::CycNumber(const Rational& r, int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CycNumber: bad level");
    coeffs_.assign(euler_phi(n), Rational(0));
    coeffs_[0] = r;
}

CycNumber CycNumber::root_of_unity(int n, int k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: bad order");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> p(static_cast<size_t>(k) + 1, Rational(0));
    p[k] = Rational(1);
    CycNumber z;
    z.n_ = n;
    z.coeffs_ = reduce_mod_cyclotomic(std::move(p), n);
    return z;
}

bool CycNumber::is_zero() const {
    for (const Rational& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycNumber::is_rational(Rational* out) const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    if (out) *out = coeffs_[0];
    return true;
}

CycNumber CycNumber::promote(const CycNumber& x, int n) {
    if (x.n_ == n) return x;
    if (n % x.n_ != 0) throw std::invalid_argument("CycNumber::promote: levels incompatible");
    int step = n / x.n_;  // zeta_old = zeta_new^step
    std::vector<Rational> p(static_cast<size_t>(step) * (x.coeffs_.size() - 1) + 1, Rational(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i) p[i * step] = x.coeffs_[i];
    CycNumber z;
    z.n_ = n;
    z.coeffs_ = reduce_mod_cyclotomic(std::move(p), n);
    return z;
}

CycNumber promote_pair(const CycNumber& a, const CycNumber& b, CycNumber& pa, CycNumber& pb) {
    int n = std::lcm(a.n_, b.n_);
    pa = CycNumber::promote(a, n);
    pb = CycNumber::promote(b, n);
    return pa;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    CycNumber a, b;
    promote_pair(*this, o, a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return a;
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    CycNumber a, b;
    promote_pair(*this, o, a, b);
    std::vector<Rational> prod(2 * a.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] = prod[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    CycNumber r;
    r.n_ = a.n_;
    r.coeffs_ = reduce_mod_cyclotomic(std::move(prod), a.n_);
    return r;
}

bool CycNumber::operator==(const CycNumber& o) const {
    CycNumber a, b;
    promote_pair(*this, o, a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycNumber: inverse of zero");
    size_t d = coeffs_.size();
    // columns of m: coordinates of (this) * zeta^j; solve m y = e_0
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
    CycNumber pw(Rational(1), n_);
    CycNumber zeta = root_of_unity(n_, 1);
    for (size_t j = 0; j < d; ++j) {
        CycNumber col = *this * pw;
        for (size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
        pw = pw * zeta;
    }
    std::vector<Rational> rhs(d, Rational(0));
    rhs[0] = Rational(1);
    // Gaussian elimination over Q
    for (size_t c = 0, r = 0; c < d && r < d; ++c) {
        size_t p = r;
        while (p < d && m[p][c].is_zero()) ++p;
        if (p == d) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < d; ++j) m[r][j] = m[r][j] * inv;
        rhs[r] = rhs[r] * inv;
        for (size_t i = 0; i < d; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < d; ++j) m[i][j] = m[i][j] - f * m[r][j];
            rhs[i] = rhs[i] - f * rhs[r];
        }
        ++r;
    }
    // back-substitute: matrix is reduced row echelon; read off solution
    CycNumber y(Rational(0), n_);
    for (size_t r2 = 0; r2 < d; ++r2) {
        size_t lead = d;
        for (size_t j = 0; j < d; ++j)
            if (!m[r2][j].is_zero()) {
                lead = j;
                break;
            }
        if (lead == d) {
            if (!rhs[r2].is_zero()) throw std::logic_error("CycNumber::inverse: inconsistent system");
            continue;
        }
        y.coeffs_[lead] = rhs[r2];
    }
    if (!((*this * y) == CycNumber(Rational(1), 1))) throw std::logic_error("CycNumber::inverse: verification failed");
    return y;
}

std::string CycNumber::to_string() const {
    Rational r;
    if (is_rational(&r)) return r.to_string();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs_[i].to_string();
        } else {
            if (!(coeffs_[i] == Rational(1))) os << coeffs_[i].to_string() << "*";
            os << "zeta" << n_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace langfib
