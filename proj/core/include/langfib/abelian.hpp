#pragma once

#include <string>
#include <vector>

#include "langfib/intmat.hpp"

namespace langfib {

// Finite abelian group presented as ⊕ Z/d_i, every d_i > 1; the trivial group
// has no factors. Groups produced by kernels, cokernels, and quotients are in
// invariant-factor form (d_1 | d_2 | ...); a hand-built factor list keeps its
// stated coordinate order, and from_factors refits it to the canonical chain.
struct FiniteAbelianGroup {
    std::vector<i64> factors;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<i64> fs);

    i64 order() const;
    bool trivial() const { return factors.empty(); }
    int ngens() const { return static_cast<int>(factors.size()); }
    bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }
    std::string to_string() const;  // "1" or "Z/2 x Z/4"

    // Canonical form of an arbitrary factor list: drop 1s, refit divisibility chain.
    static FiniteAbelianGroup from_factors(const std::vector<i64>& raw);
};

// Homomorphism f: src -> dst given on invariant-factor generators,
// f(e_j) = sum_i m(i,j) e_i. Well-definedness (src orders map to zero) is checked.
struct AbHom {
    FiniteAbelianGroup src, dst;
    IntMat m;

    AbHom(FiniteAbelianGroup s, FiniteAbelianGroup d, IntMat mat);

    std::vector<i64> apply(const std::vector<i64>& x) const;
    bool is_zero() const;
};

AbHom compose(const AbHom& g, const AbHom& f);  // g ∘ f
FiniteAbelianGroup hom_kernel(const AbHom& f);
FiniteAbelianGroup hom_cokernel(const AbHom& f);
i64 hom_image_order(const AbHom& f);

// Index [G : <gens>] of the subgroup generated by columns of `gens`
// (entries in invariant-factor coordinates of g).
i64 subgroup_index(const FiniteAbelianGroup& g, const IntMat& gens);

// Reduce x into canonical range [0, d_i) componentwise.
std::vector<i64> normalize_coords(const FiniteAbelianGroup& g, std::vector<i64> x);

// Enumerate all elements of g in lexicographic coordinate order.
std::vector<std::vector<i64>> enumerate_elements(const FiniteAbelianGroup& g);

}  // namespace langfib
