#include "langfib/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace langfib {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<i64> fs) : factors(std::move(fs)) {
    for (i64 d : factors)
        if (d <= 1) throw std::invalid_argument("FiniteAbelianGroup: factors must exceed 1");
}

i64 FiniteAbelianGroup::order() const {
    i64 o = 1;
    for (i64 d : factors) o = checked_mul(o, d);
    return o;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? " x " : "") << "Z/" << factors[i];
    return os.str();
}

FiniteAbelianGroup FiniteAbelianGroup::from_factors(const std::vector<i64>& raw) {
    for (i64 d : raw)
        if (d <= 0) throw std::invalid_argument("from_factors: factors must be positive");
    if (raw.empty()) return FiniteAbelianGroup{};
    LatticeQuotient q = lattice_quotient(static_cast<int>(raw.size()), IntMat::diag(raw));
    return FiniteAbelianGroup(q.factors);
}

AbHom::AbHom(FiniteAbelianGroup s, FiniteAbelianGroup d, IntMat mat)
    : src(std::move(s)), dst(std::move(d)), m(std::move(mat)) {
    if (m.rows() != dst.ngens() || m.cols() != src.ngens())
        throw std::invalid_argument("AbHom: matrix shape mismatch");
    // f(d_j e_j) must vanish: dst_i | src_j * m_ij
    for (int j = 0; j < src.ngens(); ++j)
        for (int i = 0; i < dst.ngens(); ++i)
            if (checked_mul(src.factors[j], m.at(i, j)) % dst.factors[i] != 0)
                throw std::invalid_argument("AbHom: map not well defined on invariant factors");
}

std::vector<i64> AbHom::apply(const std::vector<i64>& x) const {
    return normalize_coords(dst, m.apply(x));
}

bool AbHom::is_zero() const {
    for (int j = 0; j < src.ngens(); ++j)
        for (int i = 0; i < dst.ngens(); ++i)
            if (m.at(i, j) % dst.factors[i] != 0) return false;
    return true;
}

AbHom compose(const AbHom& g, const AbHom& f) {
    if (!(f.dst == g.src)) throw std::invalid_argument("compose: middle groups differ");
    return AbHom(f.src, g.dst, g.m * f.m);
}

namespace {
// Columns spanning {x in Z^s : M x lies in im(D_dst)}.
IntMat congruence_solutions(const IntMat& m, const std::vector<i64>& dst_factors) {
    IntMat d = IntMat::diag(dst_factors);
    IntMat stacked = IntMat::hstack(m, -d);
    IntMat k = kernel_basis(stacked);  // columns in Z^{s+t}
    IntMat proj(m.cols(), k.cols());
    for (int c = 0; c < k.cols(); ++c)
        for (int i = 0; i < m.cols(); ++i) proj.at(i, c) = k.at(i, c);
    return proj;
}
}  // namespace

FiniteAbelianGroup hom_kernel(const AbHom& f) {
    int s = f.src.ngens();
    if (s == 0) return FiniteAbelianGroup{};
    IntMat num = congruence_solutions(f.m, f.dst.factors);
    Subquotient sq = subquotient(s, num, IntMat::diag(f.src.factors));
    std::vector<i64> raw;
    for (i64 d : sq.factors) {
        if (d == 0) throw std::logic_error("hom_kernel: kernel of finite-group map not finite");
        raw.push_back(d);
    }
    return FiniteAbelianGroup::from_factors(raw);
}

FiniteAbelianGroup hom_cokernel(const AbHom& f) {
    int t = f.dst.ngens();
    if (t == 0) return FiniteAbelianGroup{};
    IntMat rels = IntMat::hstack(f.m, IntMat::diag(f.dst.factors));
    LatticeQuotient q = lattice_quotient(t, rels);
    return FiniteAbelianGroup::from_factors(q.factors);
}

i64 hom_image_order(const AbHom& f) {
    return f.src.order() / hom_kernel(f).order();
}

i64 subgroup_index(const FiniteAbelianGroup& g, const IntMat& gens) {
    int k = g.ngens();
    if (k == 0) return 1;
    if (gens.rows() != k) throw std::invalid_argument("subgroup_index: generator coordinates mismatch");
    // [G : H] = |Z^k / (im gens + im D)|
    IntMat rels = IntMat::hstack(gens, IntMat::diag(g.factors));
    return lattice_quotient(k, rels).order();
}

std::vector<i64> normalize_coords(const FiniteAbelianGroup& g, std::vector<i64> x) {
    if (static_cast<int>(x.size()) != g.ngens()) throw std::invalid_argument("normalize_coords: size mismatch");
    for (size_t i = 0; i < x.size(); ++i) {
        x[i] %= g.factors[i];
        if (x[i] < 0) x[i] += g.factors[i];
    }
    return x;
}

std::vector<std::vector<i64>> enumerate_elements(const FiniteAbelianGroup& g) {
    std::vector<std::vector<i64>> out;
    out.reserve(static_cast<size_t>(g.order()));
    std::vector<i64> cur(g.ngens(), 0);
    while (true) {
        out.push_back(cur);
        int i = g.ngens() - 1;
        while (i >= 0) {
            if (++cur[i] < g.factors[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace langfib
