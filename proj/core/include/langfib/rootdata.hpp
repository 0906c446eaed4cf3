#pragma once

#include <optional>
#include <string>
#include <vector>

#include "langfib/intmat.hpp"

namespace langfib {

// Based root datum inside (X* = Z^rank, X_* = Z^rank) under the dot pairing.
// roots[i] pairs with coroots[i]; simple indexes the chosen simple system.
struct BasedRootDatum {
    int rank = 0;
    std::vector<std::vector<i64>> roots;
    std::vector<std::vector<i64>> coroots;
    std::vector<int> simple;
    std::string name;

    int nroots() const { return static_cast<int>(roots.size()); }
    bool semisimple_part_empty() const { return roots.empty(); }
};

// Lattice automorphism of X* preserving the based structure.
struct OuterAction {
    IntMat generator;
    int order = 1;

    bool trivial() const { return generator.is_identity(); }
};

struct GroupForm {
    BasedRootDatum datum;
    OuterAction galois;
    std::string label;
};

// Throws std::invalid_argument if any datum invariant fails:
// <a, a^vee> = 2, simple reflections permute the root list, every root is a
// one-signed integer combination of simple roots.
void validate(const BasedRootDatum& d);

// Throws if the action does not preserve the root set, the simple set, or
// fails generator^order = identity.
void validate_action(const BasedRootDatum& d, const OuterAction& a);

i64 pairing(const std::vector<i64>& x, const std::vector<i64>& y);

// Reflection matrices on X* / X_* for the root/coroot pair at index i.
IntMat reflection_on_chars(const BasedRootDatum& d, int root_index);
IntMat reflection_on_cochars(const BasedRootDatum& d, int root_index);

// Full Weyl group as matrices on X*, closure of simple reflections,
// sorted row-major lexicographically. Throws if the closure exceeds 10!.
std::vector<IntMat> weyl_group(const BasedRootDatum& d);

// Indices of positive roots (nonnegative simple coordinates).
std::vector<int> positive_root_indices(const BasedRootDatum& d);

// The unique element sending every positive root to a negative one.
IntMat longest_element(const BasedRootDatum& d);

// True iff some Weyl element acts as -1 on the root span
// (equivalently w0 negates every root). Pure torus: true only at rank 0.
bool minus_one_in_weyl(const BasedRootDatum& d);

// x -> -w0(x) on X*. Order <= 2, permutes the simple roots.
OuterAction duality_involution(const BasedRootDatum& d);

// Twist the form's Galois action by the duality involution.
GroupForm op_form(const GroupForm& f);

// Swap the two lattices: roots <-> coroots.
BasedRootDatum dual_datum(const BasedRootDatum& d);

// Dual of a form: datum dualized, galois transported to the dual side
// (inverse transpose; plain transpose for involutions).
GroupForm dual_form(const GroupForm& f);

// Catalog builder. Tags: A_n, B_n, C_n, D_n, G_2 (simply connected,
// weight-basis coordinates), SL_n, Sp_2n (simply connected), PGL_n, PGSp_2n
// (adjoint, root-basis coordinates), GL_n, SO_n (classical Z^n models),
// U_n (= op_form of split GL_n), torus(r,trivial|sign|swap).
// Underscores optional: "A2" and "A_2" both parse.
GroupForm build_standard(const std::string& tag);

// Simply connected or adjoint datum of the given Cartan type.
// type in {'A','B','C','D','G'}; G requires rank 2.
BasedRootDatum standard_semisimple(char type, int rank, bool adjoint);

// Action permuting the simple roots by `perm` (perm[i] = image position in
// d.simple). Requires X* coordinates aligned with simple positions, as in the
// sc/adjoint catalog data; validated against the root set.
OuterAction simple_perm_action(const BasedRootDatum& d, const std::vector<int>& perm);

// [weight lattice of the derived datum : root lattice], a sanity invariant
// for duality tests (n for A_{n-1}, 2 for B/C/D odd rank, ...).
i64 weight_root_index(const BasedRootDatum& d);

}  // namespace langfib
