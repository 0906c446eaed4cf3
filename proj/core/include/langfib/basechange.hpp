#pragma once

#include <map>
#include <string>

#include "langfib/cyclotomic.hpp"
#include "langfib/rootdata.hpp"

namespace langfib {

// Laurent polynomial over Q in one variable, exponent -> coefficient.
struct LaurentPoly {
    std::map<int, Rational> terms;

    bool is_constant() const;
    CycNumber eval(const CycNumber& z) const;  // z must be nonzero for negative exponents
    std::string to_string() const;
};

// Grammar: sum of terms [coef][*]z[^exp], plus "1/z" style reciprocals.
// Examples: "z+1/z", "z^2", "w^2-2", "3*z^3 - 1/2 z^-1". Any single variable
// letter is accepted.
LaurentPoly parse_laurent(const std::string& s);

// Exact algebraic point on G_m: a rational multiple of a root of unity.
// Grammar: [rational][*][i | zeta<n>[^k]], e.g. "1", "-i", "2/3", "zeta8^3".
CycNumber parse_point(const std::string& s);

// One-coordinate component of the parameter model: either the torus
// coordinate z itself or the rank-1 quotient coordinate w = z + 1/z.
struct ComponentModel {
    enum class Shape { torus_coordinate, quotient_coordinate };
    Shape shape = Shape::torus_coordinate;
    LaurentPoly map;
};

// Multiplicity of the map at the point: order of vanishing of f(z) - f(z0)
// at z = z0, computed exactly in a cyclotomic field.
int local_degree(const ComponentModel& model, const CycNumber& z0);

// Degree of the base-change map on unramified parameters for a form split
// exactly by the quadratic extension: the order of the degree-1 Tate group of
// the character lattice. A split form (trivial galois) is rejected unless
// force_split is set, in which case the same formula is evaluated anyway.
i64 unramified_bc_degree(const GroupForm& form, bool force_split = false);

}  // namespace langfib
