#pragma once

#include "langfib/abelian.hpp"
#include "langfib/intmat.hpp"

namespace langfib {

// A lattice Z^n or a finite abelian group, equipped with an automorphism of
// finite order m. The single input type for all Tate-cohomology operations.
struct CyclicModule {
    enum class Kind { lattice, finite };
    Kind kind = Kind::lattice;
    int order = 1;                // m with action^m = identity
    IntMat action;                // on Z^rank, or on the invariant-factor generators
    FiniteAbelianGroup group;     // finite kind only

    int ambient_rank() const { return action.rows(); }

    static CyclicModule lattice(IntMat a, int order);
    static CyclicModule finite(FiniteAbelianGroup g, IntMat a, int order);
};

// A Tate cohomology group together with the lifts of its generators, which is
// what induced maps are computed from. `sq.gens` columns are numerator-lattice
// representatives (lattice kind: vectors of Z^rank; finite kind: generator
// coordinates of the underlying finite group).
struct TateGroup {
    FiniteAbelianGroup group;
    Subquotient sq;
    CyclicModule module;
    int parity = 0;  // degree mod 2
};

// Tate cohomology of Z/m in degree i; 2-periodic, so only i mod 2 matters.
// Even: ker(A-1)/im(N), odd: ker(N)/im(A-1), with N = sum of A^k, k < m.
TateGroup tate(int i, const CyclicModule& m);

// The functorial map tate(i, src_mod) -> tate(i, dst_mod) induced by an
// equivariant map f (f * src.action = dst.action * f, checked).
AbHom induced_map(const IntMat& f, int i, const CyclicModule& src_mod, const CyclicModule& dst_mod);

// Dictionary operations, all for involutions (A^2 = 1):

// Galois H^1 of a real torus with cocharacter action A: even Tate group of (X_*, -A).
FiniteAbelianGroup torus_h1_real(const IntMat& a);

// H^1 of the Frobenius on the dual torus: even Tate group of (X*, A).
FiniteAbelianGroup dual_torus_h1(const IntMat& a);

// Ker^1 for a torus split by the quadratic extension: odd Tate group of (X_*, A).
// Its order counts the characters with a fixed base change.
FiniteAbelianGroup ker1(const IntMat& a);

// Component group of the Frobenius fixed points of the dual torus:
// odd Tate group of (X*, A).
FiniteAbelianGroup component_group_torus(const IntMat& a);

// H^1(Z/2, Z) for a finite module Z: odd Tate group.
FiniteAbelianGroup omega_group(const CyclicModule& z);

// Orbit under a finite 2-group action with the given stabilizer:
// both counts equal the subgroup index [total : stabilizer].
struct InnerformOrbit {
    i64 orbit_size = 1;
    i64 innerform_count = 1;
};
InnerformOrbit innerform_orbit(const FiniteAbelianGroup& total, const IntMat& stabilizer_gens);

}  // namespace langfib
