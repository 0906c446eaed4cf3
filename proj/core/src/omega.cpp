#include "langfib/omega.hpp"

#include <algorithm>
#include <numeric>

namespace langfib {

namespace {

// Columns: basis of X* ∩ Q-span(roots), the saturation of the root lattice.
IntMat saturated_root_span(const BasedRootDatum& d) {
    int s = static_cast<int>(d.simple.size());
    IntMat rows(s, d.rank);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < d.rank; ++j) rows.at(i, j) = d.roots[d.simple[i]][j];
    IntMat perp = kernel_basis(rows);            // cochar vectors killing the span
    return kernel_basis(perp.transpose());       // chars orthogonal to all of them
}

i64 element_order(const FiniteAbelianGroup& g, const std::vector<i64>& coords) {
    i64 ord = 1;
    for (int i = 0; i < g.ngens(); ++i) {
        i64 d = g.factors[i];
        i64 c = ((coords[i] % d) + d) % d;
        i64 o = d / std::gcd(d, c == 0 ? d : c);
        ord = std::lcm(ord, o);
    }
    return ord;
}

// Permutation induced by the galois generator on simple positions.
std::vector<int> galois_simple_permutation(const GroupForm& f) {
    const auto& d = f.datum;
    int s = static_cast<int>(d.simple.size());
    std::vector<int> perm(s, -1);
    for (int i = 0; i < s; ++i) {
        auto img = f.galois.generator.apply(d.roots[d.simple[i]]);
        for (int j = 0; j < s; ++j)
            if (img == d.roots[d.simple[j]]) {
                perm[i] = j;
                break;
            }
        if (perm[i] < 0) throw std::invalid_argument("galois action does not permute the simple roots");
    }
    return perm;
}

}  // namespace

CenterDualClass omega_class(const GroupForm& form) {
    const BasedRootDatum& d = form.datum;
    validate(d);
    validate_action(d, form.galois);

    CenterDualClass out;
    out.rho_times_two.assign(d.rank, 0);
    for (int i : positive_root_indices(d))
        for (int k = 0; k < d.rank; ++k)
            out.rho_times_two[k] = checked_add(out.rho_times_two[k], d.roots[i][k]);

    int s = static_cast<int>(d.simple.size());
    if (s == 0) {
        out.galois_trivialized = !form.galois.trivial();
        return out;
    }

    // Weight coordinates: v -> (<v, a_i^vee>)_i identifies P with Z^s.
    std::vector<i64> rho_w(s);
    for (int i = 0; i < s; ++i) {
        i64 two_w = pairing(out.rho_times_two, d.coroots[d.simple[i]]);
        if (two_w % 2) throw std::invalid_argument("omega_class: rho is not a weight (malformed datum)");
        rho_w[i] = two_w / 2;
    }

    IntMat m_basis = saturated_root_span(d);
    IntMat covee_t(s, d.rank);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < d.rank; ++j) covee_t.at(i, j) = d.coroots[d.simple[i]][j];
    IntMat rels = covee_t * m_basis;  // image of X* ∩ span in weight coordinates

    LatticeQuotient q = lattice_quotient(s, rels);
    if (!q.finite()) throw std::logic_error("omega_class: ambient quotient not finite");
    out.ambient = FiniteAbelianGroup(q.factors);
    out.element = q.coords(rho_w);
    out.order = static_cast<int>(element_order(out.ambient, out.element));
    if (out.order > 2) throw std::logic_error("omega_class: class order exceeds 2");
    out.trivial = out.order == 1;

    if (!form.galois.trivial()) {
        std::vector<int> perm = galois_simple_permutation(form);
        std::vector<i64> moved(s);
        for (int i = 0; i < s; ++i) moved[perm[i]] = rho_w[i];
        out.galois_trivialized = q.coords(moved) == out.element;
    }
    return out;
}

GroupForm product_form(const GroupForm& f1, const GroupForm& f2) {
    const BasedRootDatum& a = f1.datum;
    const BasedRootDatum& b = f2.datum;
    BasedRootDatum d;
    d.rank = a.rank + b.rank;
    d.name = a.name + " x " + b.name;
    auto pad_left = [&](const std::vector<i64>& v) {
        std::vector<i64> r(d.rank, 0);
        std::copy(v.begin(), v.end(), r.begin());
        return r;
    };
    auto pad_right = [&](const std::vector<i64>& v) {
        std::vector<i64> r(d.rank, 0);
        std::copy(v.begin(), v.end(), r.begin() + a.rank);
        return r;
    };
    for (int i = 0; i < a.nroots(); ++i) {
        d.roots.push_back(pad_left(a.roots[i]));
        d.coroots.push_back(pad_left(a.coroots[i]));
    }
    for (int i = 0; i < b.nroots(); ++i) {
        d.roots.push_back(pad_right(b.roots[i]));
        d.coroots.push_back(pad_right(b.coroots[i]));
    }
    for (int i : a.simple) d.simple.push_back(i);
    for (int i : b.simple) d.simple.push_back(a.nroots() + i);

    IntMat g(d.rank, d.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) g.at(i, j) = f1.galois.generator.at(i, j);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) g.at(a.rank + i, a.rank + j) = f2.galois.generator.at(i, j);
    OuterAction galois{g, std::lcm(f1.galois.order, f2.galois.order)};
    validate(d);
    validate_action(d, galois);
    return GroupForm{d, galois, f1.label + " x " + f2.label};
}

bool omega_additivity_check(const GroupForm& f1, const GroupForm& f2) {
    CenterDualClass c1 = omega_class(f1);
    CenterDualClass c2 = omega_class(f2);
    CenterDualClass cp = omega_class(product_form(f1, f2));

    std::vector<i64> merged = c1.ambient.factors;
    merged.insert(merged.end(), c2.ambient.factors.begin(), c2.ambient.factors.end());
    if (!(FiniteAbelianGroup::from_factors(merged) == cp.ambient)) return false;
    if (cp.order != std::lcm(c1.order, c2.order)) return false;
    return cp.trivial == (c1.trivial && c2.trivial);
}

}  // namespace langfib
