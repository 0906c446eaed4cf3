#pragma once

#include "langfib/abelian.hpp"
#include "langfib/rootdata.hpp"

namespace langfib {

// The class of the half-sum of positive roots in P / (X* ∩ root-span), where
// P is the weight lattice of the derived datum (presented in simple-coweight
// coordinates). Order 1 means the associated quadratic character is trivial.
struct CenterDualClass {
    FiniteAbelianGroup ambient;
    std::vector<i64> element;      // coordinates in ambient's invariant factors
    int order = 1;                 // always 1 or 2
    bool trivial = true;
    bool galois_trivialized = false;  // galois nontrivial and it fixes the class
    std::vector<i64> rho_times_two;   // 2*rho in X* coordinates
};

CenterDualClass omega_class(const GroupForm& form);

// Direct product of two forms: lattices summed, roots zero-padded,
// Galois actions block-diagonal.
GroupForm product_form(const GroupForm& f1, const GroupForm& f2);

// The class of the product form matches the product of the two classes:
// ambient factors merge, the order is the lcm, triviality is the conjunction.
bool omega_additivity_check(const GroupForm& f1, const GroupForm& f2);

}  // namespace langfib
