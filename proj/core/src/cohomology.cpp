#include "langfib/cohomology.hpp"

namespace langfib {

namespace {

void require_involution(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("action must be square");
    if (!(a * a).is_identity()) throw std::invalid_argument("action must be an involution");
}

IntMat norm_matrix(const IntMat& a, int order) {
    IntMat n = IntMat::identity(a.rows());
    IntMat p = a;
    for (int k = 1; k < order; ++k) {
        n = n + p;
        if (k + 1 < order) p = p * a;
    }
    return n;
}

// Columns spanning {x : M x ∈ im(D)} for the finite-kind congruence kernels.
IntMat preimage_lattice(const IntMat& m, const std::vector<i64>& factors) {
    IntMat stacked = IntMat::hstack(m, -IntMat::diag(factors));
    IntMat k = kernel_basis(stacked);
    IntMat proj(m.cols(), k.cols());
    for (int c = 0; c < k.cols(); ++c)
        for (int i = 0; i < m.cols(); ++i) proj.at(i, c) = k.at(i, c);
    return proj;
}

FiniteAbelianGroup group_of(const Subquotient& sq) {
    std::vector<i64> raw;
    for (i64 d : sq.factors) {
        if (d == 0) throw std::logic_error("Tate group came out infinite; module is malformed");
        raw.push_back(d);
    }
    return FiniteAbelianGroup::from_factors(raw);
}

}  // namespace

CyclicModule CyclicModule::lattice(IntMat a, int order) {
    if (order < 1) throw std::invalid_argument("CyclicModule: order must be positive");
    if (a.rows() != a.cols()) throw std::invalid_argument("CyclicModule: action must be square");
    if (!a.pow(order).is_identity()) throw std::invalid_argument("CyclicModule: action^order != identity");
    CyclicModule m;
    m.kind = Kind::lattice;
    m.order = order;
    m.action = std::move(a);
    return m;
}

CyclicModule CyclicModule::finite(FiniteAbelianGroup g, IntMat a, int order) {
    if (order < 1) throw std::invalid_argument("CyclicModule: order must be positive");
    if (a.rows() != g.ngens() || a.cols() != g.ngens())
        throw std::invalid_argument("CyclicModule: action shape mismatch");
    AbHom check(g, g, a);  // validates that the action descends to the group
    IntMat p = a.pow(order);
    for (int j = 0; j < g.ngens(); ++j)
        for (int i = 0; i < g.ngens(); ++i) {
            i64 want = (i == j) ? 1 : 0;
            if ((p.at(i, j) - want) % g.factors[i] != 0)
                throw std::invalid_argument("CyclicModule: action^order != identity on the group");
        }
    CyclicModule m;
    m.kind = Kind::finite;
    m.order = order;
    m.action = std::move(a);
    m.group = std::move(g);
    return m;
}

TateGroup tate(int i, const CyclicModule& m) {
    int parity = ((i % 2) + 2) % 2;
    int n = m.ambient_rank();
    IntMat one = IntMat::identity(n);
    IntMat amin1 = m.action - one;
    IntMat norm = norm_matrix(m.action, m.order);

    IntMat num, den;
    if (m.kind == CyclicModule::Kind::lattice) {
        if (parity == 0) {
            num = kernel_basis(amin1);
            den = norm;
        } else {
            num = kernel_basis(norm);
            den = amin1;
        }
    } else {
        IntMat d = IntMat::diag(m.group.factors);
        if (parity == 0) {
            num = preimage_lattice(amin1, m.group.factors);
            den = IntMat::hstack(norm, d);
        } else {
            num = preimage_lattice(norm, m.group.factors);
            den = IntMat::hstack(amin1, d);
        }
    }

    TateGroup t;
    t.sq = subquotient(n, num, den);
    t.group = group_of(t.sq);
    t.module = m;
    t.parity = parity;
    return t;
}

AbHom induced_map(const IntMat& f, int i, const CyclicModule& src_mod, const CyclicModule& dst_mod) {
    if (src_mod.kind != dst_mod.kind) throw std::invalid_argument("induced_map: mixed module kinds unsupported");
    if (src_mod.order != dst_mod.order) throw std::invalid_argument("induced_map: acting groups differ");
    if (f.rows() != dst_mod.ambient_rank() || f.cols() != src_mod.ambient_rank())
        throw std::invalid_argument("induced_map: shape mismatch");
    IntMat lhs = f * src_mod.action;
    IntMat rhs = dst_mod.action * f;
    if (src_mod.kind == CyclicModule::Kind::lattice) {
        if (!(lhs == rhs)) throw std::invalid_argument("induced_map: map is not equivariant");
    } else {
        for (int c = 0; c < lhs.cols(); ++c)
            for (int r = 0; r < lhs.rows(); ++r)
                if ((lhs.at(r, c) - rhs.at(r, c)) % dst_mod.group.factors[r] != 0)
                    throw std::invalid_argument("induced_map: map is not equivariant");
    }

    TateGroup ts = tate(i, src_mod);
    TateGroup td = tate(i, dst_mod);
    IntMat mat(td.group.ngens(), ts.group.ngens());
    for (int j = 0; j < ts.group.ngens(); ++j) {
        std::vector<i64> img = f.apply(ts.sq.gens.col(j));
        std::vector<i64> c = td.sq.coords(img);
        for (int r = 0; r < td.group.ngens(); ++r) mat.at(r, j) = c[r];
    }
    return AbHom(ts.group, td.group, mat);
}

FiniteAbelianGroup torus_h1_real(const IntMat& a) {
    require_involution(a);
    return tate(0, CyclicModule::lattice(-a, 2)).group;
}

FiniteAbelianGroup dual_torus_h1(const IntMat& a) {
    require_involution(a);
    return tate(0, CyclicModule::lattice(a, 2)).group;
}

FiniteAbelianGroup ker1(const IntMat& a) {
    require_involution(a);
    return tate(-1, CyclicModule::lattice(a, 2)).group;
}

FiniteAbelianGroup component_group_torus(const IntMat& a) {
    require_involution(a);
    return tate(1, CyclicModule::lattice(a, 2)).group;
}

FiniteAbelianGroup omega_group(const CyclicModule& z) {
    if (z.kind != CyclicModule::Kind::finite) throw std::invalid_argument("omega_group: finite module required");
    if (z.order != 2) throw std::invalid_argument("omega_group: quadratic action required");
    return tate(1, z).group;
}

InnerformOrbit innerform_orbit(const FiniteAbelianGroup& total, const IntMat& stabilizer_gens) {
    i64 idx = subgroup_index(total, stabilizer_gens);
    return InnerformOrbit{idx, idx};
}

}  // namespace langfib
