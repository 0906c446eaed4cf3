#include "langfib/finitefield.hpp"

#include <array>
#include <stdexcept>

namespace langfib {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr int kDegree = 8;

std::array<int, kDegree> digits_of(int p, u32 code) {
    std::array<int, kDegree> d{};
    for (int i = 0; i < kDegree; ++i) {
        d[i] = static_cast<int>(code % static_cast<u32>(p));
        code /= static_cast<u32>(p);
    }
    return d;
}

u32 code_of(int p, const std::array<int, kDegree>& d) {
    u32 code = 0;
    for (int i = kDegree - 1; i >= 0; --i)
        code = code * static_cast<u32>(p) + static_cast<u32>(d[i]);
    return code;
}

// Dense polynomial over F_p, lowest coefficient first.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly poly_mul(int p, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// a mod f, f monic.
Poly poly_mod(int p, Poly a, const Poly& f) {
    int df = poly_deg(f);
    for (int i = poly_deg(a); i >= df; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= df; ++j) {
            int k = i - df + j;
            a[k] = ((a[k] - c * f[j]) % p + p * p) % p;
        }
    }
    a.resize(df);
    return a;
}

Poly poly_powmod(int p, Poly base, u64 e, const Poly& f) {
    Poly r{1};
    base = poly_mod(p, std::move(base), f);
    while (e > 0) {
        if (e & 1) r = poly_mod(p, poly_mul(p, r, base), f);
        base = poly_mod(p, poly_mul(p, base, base), f);
        e >>= 1;
    }
    r.resize(static_cast<std::size_t>(poly_deg(f)), 0);
    return r;
}

// Monic degree-8 f is irreducible over F_p iff T^(p^8) = T mod f while
// T^(p^4) != T mod f: the first forces all factor degrees to divide 8, the
// second rules out a factorization into degrees dividing 4.
bool octic_irreducible(int p, const Poly& f) {
    u64 p4 = 1, p8 = 1;
    for (int i = 0; i < 4; ++i) p4 *= static_cast<u64>(p);
    p8 = p4 * p4;
    Poly t{0, 1};
    Poly t8 = poly_powmod(p, t, p8, f);
    Poly t4 = poly_powmod(p, t, p4, f);
    Poly tm = poly_mod(p, t, f);
    return t8 == tm && t4 != tm;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

BigField::BigField(int prime) : p_(prime) {
    if (prime != 2 && prime != 3)
        throw std::invalid_argument("BigField: characteristic must be 2 or 3");
    size_ = 1;
    for (int i = 0; i < kDegree; ++i) size_ *= static_cast<u32>(prime);

    // First monic irreducible octic in code order.
    Poly modulus;
    for (u32 low = 1; low < size_; ++low) {
        Poly f(kDegree + 1, 0);
        auto d = digits_of(p_, low);
        for (int i = 0; i < kDegree; ++i) f[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i)];
        f[kDegree] = 1;
        if (f[0] == 0) continue;
        if (octic_irreducible(p_, f)) {
            modulus = f;
            break;
        }
    }
    if (modulus.empty()) throw std::logic_error("BigField: no irreducible octic found");

    auto slow_mul = [&](u32 a, u32 b) -> u32 {
        auto da = digits_of(p_, a);
        auto db = digits_of(p_, b);
        Poly pa(da.begin(), da.end()), pb(db.begin(), db.end());
        Poly r = poly_mod(p_, poly_mul(p_, pa, pb), modulus);
        std::array<int, kDegree> dr{};
        for (int i = 0; i < kDegree; ++i) dr[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
        return code_of(p_, dr);
    };
    auto slow_pow = [&](u32 a, u64 e) -> u32 {
        u32 r = 1;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    const u32 n = size_ - 1;
    const auto primes = prime_factors(n);
    u32 gen = 0;
    for (u32 c = 2; c < size_; ++c) {
        bool ok = true;
        for (u64 r : primes)
            if (slow_pow(c, n / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = c;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("BigField: no generator found");

    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(size_, 0);
    u32 acc = 1;
    for (u32 k = 0; k < n; ++k) {
        exp_[k] = acc;
        log_[acc] = k;
        acc = slow_mul(acc, gen);
    }
    if (acc != 1) throw std::logic_error("BigField: generator order mismatch");
    for (u32 k = 0; k < n; ++k) exp_[n + k] = exp_[k];
}

u32 BigField::add(u32 a, u32 b) const {
    if (p_ == 2) return a ^ b;
    u32 r = 0, m = 1;
    for (int i = 0; i < kDegree; ++i) {
        r += ((a % 3 + b % 3) % 3) * m;
        a /= 3;
        b /= 3;
        m *= 3;
    }
    return r;
}

u32 BigField::neg(u32 a) const {
    if (p_ == 2) return a;
    u32 r = 0, m = 1;
    for (int i = 0; i < kDegree; ++i) {
        r += ((3 - a % 3) % 3) * m;
        a /= 3;
        m *= 3;
    }
    return r;
}

u32 BigField::sub(u32 a, u32 b) const { return add(a, neg(b)); }

u32 BigField::mul(u32 a, u32 b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
}

u32 BigField::inv(u32 a) const {
    if (a == 0) throw std::domain_error("BigField: inverse of zero");
    return exp_[unit_order() - log_[a]];
}

u32 BigField::pow(u32 a, long long e) const {
    const long long n = unit_order();
    if (a == 0) {
        if (e < 0) throw std::domain_error("BigField: negative power of zero");
        return e == 0 ? 1u : 0u;
    }
    long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return exp_[static_cast<std::size_t>(k)];
}

u32 BigField::frobenius(u32 a, int e) const {
    if (a == 0) return 0;
    u64 pe = 1;
    for (int i = 0; i < e; ++i) pe = (pe * static_cast<u64>(p_)) % unit_order();
    return exp_[static_cast<std::size_t>((static_cast<u64>(log_[a]) * pe) % unit_order())];
}

u32 BigField::dlog(u32 a) const {
    if (a == 0) throw std::domain_error("BigField: dlog of zero");
    return log_[a];
}

u32 BigField::from_dlog(u64 k) const { return exp_[static_cast<std::size_t>(k % unit_order())]; }

u32 BigField::subfield_order(int d) const {
    if (d <= 0 || kDegree % d != 0) throw std::invalid_argument("BigField: subfield degree must divide 8");
    u32 q = 1;
    for (int i = 0; i < d; ++i) q *= static_cast<u32>(p_);
    return q;
}

bool BigField::in_subfield(u32 a, int d) const {
    if (a == 0) return true;
    const u32 stride = unit_order() / (subfield_order(d) - 1);
    return log_[a] % stride == 0;
}

u32 BigField::subfield_generator(int d) const {
    return exp_[unit_order() / (subfield_order(d) - 1)];
}

std::vector<u32> BigField::subfield_elements(int d) const {
    const u32 q = subfield_order(d);
    const u32 stride = unit_order() / (q - 1);
    std::vector<u32> out;
    out.reserve(q);
    out.push_back(0);
    for (u32 j = 0; j + 1 < q; ++j) out.push_back(exp_[static_cast<std::size_t>(j) * stride]);
    return out;
}

u32 FqField::unit_index(u32 a) const {
    if (a == 0 || !contains(a)) throw std::domain_error("FqField: not a unit of this subfield");
    const u32 stride = tower->unit_order() / (q - 1);
    return tower->dlog(a) / stride;
}

FqField subfield_view(const BigField& tower, int degree) {
    FqField f;
    f.tower = &tower;
    f.p = tower.prime();
    f.k = degree;
    f.q = tower.subfield_order(degree);
    return f;
}

const BigField& tower_for_prime(int prime) {
    if (prime == 2) {
        static const BigField t2(2);
        return t2;
    }
    if (prime == 3) {
        static const BigField t3(3);
        return t3;
    }
    throw std::invalid_argument("tower_for_prime: characteristic must be 2 or 3");
}

}
