#include "langfib/hermorb.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace langfib {

namespace {
constexpr int kMaxEnumerationBits = 24;

void check_enumerable(int n) {
    if (n < 1) throw std::invalid_argument("sign enumeration needs n >= 1");
    if (n > kMaxEnumerationBits) throw std::invalid_argument("sign enumeration limited to n <= 24");
}
}  // namespace

i64 binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative set size");
    if (k < 0 || k > n) return 0;
    i64 r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, n - i) / (i + 1);
    return r;
}

PadicSplit padic_orbit_split(int n) {
    check_enumerable(n);
    PadicSplit s;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        if (__builtin_parityll(v)) ++s.minus;
        else ++s.plus;
    }
    return s;
}

std::map<std::pair<int, int>, i64> real_signature_count(int n) {
    check_enumerable(n);
    std::map<std::pair<int, int>, i64> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        int q = __builtin_popcountll(v);
        ++out[{n - q, q}];
    }
    return out;
}

int ArchParameter::fixed_count() const {
    int l = 0;
    for (int i = 0; i < n(); ++i)
        if (partner[i] == i) ++l;
    return l;
}

int ArchParameter::pair_count() const { return (n() - fixed_count()) / 2; }

void validate(const ArchParameter& p) {
    int n = p.n();
    if (static_cast<int>(p.partner.size()) != n)
        throw std::invalid_argument("ArchParameter: partner list length mismatch");
    for (int i = 0; i < n; ++i) {
        int j = p.partner[i];
        if (j < 0 || j >= n) throw std::invalid_argument("ArchParameter: partner index out of range");
        if (p.partner[j] != i) throw std::invalid_argument("ArchParameter: pairing is not an involution");
    }
}

ArchParameter arch_parameter_from_exponents(const std::vector<std::pair<i64, i64>>& chars) {
    ArchParameter p;
    int n = static_cast<int>(chars.size());
    p.partner.assign(n, -1);
    for (auto& [a, b] : chars)
        p.tags.push_back("z^" + std::to_string(a) + " zbar^" + std::to_string(b));
    for (int i = 0; i < n; ++i) {
        if (p.partner[i] != -1) continue;
        if (chars[i].first == chars[i].second) {
            p.partner[i] = i;
            continue;
        }
        int mate = -1;
        for (int j = i + 1; j < n; ++j)
            if (p.partner[j] == -1 && chars[j].first == chars[i].second &&
                chars[j].second == chars[i].first) {
                mate = j;
                break;
            }
        if (mate < 0)
            throw std::invalid_argument("arch_parameter_from_exponents: conjugate of " + p.tags[i] +
                                        " is missing, the multiset is not conjugation-stable");
        p.partner[i] = mate;
        p.partner[mate] = i;
    }
    validate(p);
    return p;
}

UnitaryMultTable u_pq_multiplicity(const ArchParameter& p) {
    validate(p);
    UnitaryMultTable t;
    t.l = p.fixed_count();
    t.k = p.pair_count();
    for (int r = 0; r <= t.l; ++r) {
        i64 d = binomial(t.l, r);
        t.dims[{t.k + r, t.k + (t.l - r)}] = d;
        t.total += d;
    }
    t.bc_preimages = i64{1} << t.l;
    if (t.total != t.bc_preimages)
        throw std::logic_error("u_pq_multiplicity: binomial row does not sum to 2^l");
    return t;
}

WeylOrbitTable weyl_innerform_count(const BasedRootDatum& d) {
    validate(d);
    WeylOrbitTable table;
    table.rank = d.rank;

    // Transport the Weyl action to X_* (inverse transpose) and reduce mod 2.
    std::vector<IntMat> w_chars = weyl_group(d);
    table.weyl_order = static_cast<i64>(w_chars.size());
    std::set<IntMat> mod2_action;
    IntMat id = IntMat::identity(d.rank);
    for (const IntMat& w : w_chars) {
        IntMat b = solve_integer_matrix(w.transpose(), id);
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) b.at(i, j) = ((b.at(i, j) % 2) + 2) % 2;
        mod2_action.insert(b);
    }

    std::set<std::vector<i64>> seen;
    std::vector<i64> v(d.rank, 0);
    i64 count = i64{1} << d.rank;
    for (i64 mask = 0; mask < count; ++mask) {
        for (int i = 0; i < d.rank; ++i) v[i] = (mask >> i) & 1;
        if (seen.count(v)) continue;
        std::set<std::vector<i64>> orbit;
        for (const IntMat& b : mod2_action) {
            std::vector<i64> img = b.apply(v);
            for (i64& x : img) x &= 1;
            orbit.insert(std::move(img));
        }
        WeylTorsionOrbit o;
        o.representative = v;
        o.size = static_cast<i64>(orbit.size());
        if (table.weyl_order % o.size != 0)
            throw std::logic_error("weyl_innerform_count: orbit size does not divide |W|");
        o.stabilizer_order = table.weyl_order / o.size;
        table.orbits.push_back(o);
        table.total += o.size;
        seen.insert(orbit.begin(), orbit.end());
    }
    if (table.total != count)
        throw std::logic_error("weyl_innerform_count: orbit sizes do not cover the 2-torsion");
    return table;
}

}  // namespace langfib
