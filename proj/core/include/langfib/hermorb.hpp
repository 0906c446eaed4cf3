#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "langfib/rootdata.hpp"

namespace langfib {

// Hermitian-space and signature combinatorics for unitary groups, plus the
// Weyl-orbit count behind the pure-innerform identity.

// Partition of the 2^n sign vectors by product of signs: the two p-adic
// isomorphism classes of hermitian gluings. Computed by enumeration.
struct PadicSplit {
    i64 plus = 0, minus = 0;
    i64 total() const { return plus + minus; }
};
PadicSplit padic_orbit_split(int n);

// Signature (p, q) -> number of sign vectors realizing it; count is C(n, p).
std::map<std::pair<int, int>, i64> real_signature_count(int n);

// Archimedean parameter: a multiset of character tags with an involution.
// partner[i] == i marks a fixed tag; otherwise partner is a 2-cycle pairing
// a tag with its conjugate.
struct ArchParameter {
    std::vector<std::string> tags;
    std::vector<int> partner;

    int n() const { return static_cast<int>(tags.size()); }
    int fixed_count() const;  // l
    int pair_count() const;   // k, with 2k + l = n
};

// Validates pairing shape: involution, genuine 2-cycles, fixed tags allowed.
void validate(const ArchParameter& p);

// Convenience constructor from characters z^a zbar^b of C^x; conjugation
// swaps the exponents, so fixed tags are exactly those with a == b.
ArchParameter arch_parameter_from_exponents(const std::vector<std::pair<i64, i64>>& chars);

// Invariant-form dimensions across signatures: dim at (k+r, k+s) is C(l, r)
// for r + s = l, zero elsewhere; the parameter is a base change of 2^l
// representations.
struct UnitaryMultTable {
    int k = 0, l = 0;
    std::map<std::pair<int, int>, i64> dims;
    i64 total = 0;          // sum of dims = 2^l
    i64 bc_preimages = 0;   // 2^l
};
UnitaryMultTable u_pq_multiplicity(const ArchParameter& p);

// Orbits of the Weyl group on the 2-torsion of the compact torus,
// realized as X_* / 2 X_*.
struct WeylTorsionOrbit {
    std::vector<i64> representative;  // 0/1 coordinates
    i64 size = 0;
    i64 stabilizer_order = 0;
};
struct WeylOrbitTable {
    int rank = 0;
    i64 weyl_order = 0;
    std::vector<WeylTorsionOrbit> orbits;
    i64 total = 0;  // sum of orbit sizes, must be 2^rank
};
WeylOrbitTable weyl_innerform_count(const BasedRootDatum& d);

i64 binomial(int n, int k);

}  // namespace langfib
