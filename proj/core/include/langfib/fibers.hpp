#pragma once

#include <string>
#include <vector>

#include "langfib/abelian.hpp"

namespace langfib {

enum class TagGalois { fixed, paired };
enum class TagDuality { none, orthogonal, symplectic };

// One irreducible summand of a restricted parameter: dimension, multiplicity,
// and how the quadratic Galois action treats it.
struct IrredTag {
    std::string id;
    int dim = 1;
    int mult = 1;
    TagGalois galois = TagGalois::fixed;
    std::string partner;  // paired only: id of the Galois translate
    TagDuality duality = TagDuality::none;  // U-setting fixed tags only
};

enum class Setting { GL, U };

struct SymbolicParameter {
    Setting setting = Setting::GL;
    int ambient_n = 0;
    std::vector<IrredTag> tags;
};

// Throws std::invalid_argument on violated invariants: dimension sum,
// dangling or non-reciprocal pairs, missing/forbidden duality marks.
void validate(const SymbolicParameter& p);

enum class InvolutionType { inner, outer_symmetric, outer_skew, swap_pair, none };

struct CentralizerFactor {
    std::string label;
    int size = 1;  // the m of the GL_m factor
    InvolutionType type = InvolutionType::none;
};

struct CentralizerShape {
    std::vector<CentralizerFactor> factors;
};

// One GL_{mult} factor per distinct tag; fixed factors carry the involution
// type dictated by the setting, Galois-paired tags collapse to swap factors.
CentralizerShape centralizer(const SymbolicParameter& p);

// Number of lifts when the fiber is nonempty: product over factors of the
// classified first-cohomology sizes (inner GL_m: m+1; every other type: 1).
i64 lift_count(const CentralizerShape& shape);

// The (m+1)-element inner case, broken down by signature p+q = m.
std::vector<std::pair<int, int>> inner_h1_signatures(int m);

// Elementary abelian 2-group with named generators.
struct ComponentGroup {
    std::vector<std::string> generator_labels;
    int rank() const { return static_cast<int>(generator_labels.size()); }
    i64 order() const { return i64(1) << rank(); }
    FiniteAbelianGroup group() const;
};

enum class Level { over_E, over_F };

// GL-setting: trivial at both levels (the centralizer factors are connected).
// U-setting over F: one Z/2 per Galois-fixed orthogonal factor.
ComponentGroup component_group(const SymbolicParameter& p, Level level);

// The classified rank-1 cases: the E-side group Z(sigma)^{W_E} and the action
// of the quadratic Galois group on it.
enum class Sl2Case {
    o2_trivial,        // O_2(C), trivial action
    o2_inner_order4,   // O_2(C), conjugation by an order-4 torus element
    o2_reflection,     // O_2(C), conjugation by a reflection
    cx_trivial,        // C^x, trivial action
    cx_inversion,      // C^x, z -> 1/z
    z2_trivial,        // Z/2, trivial action
    klein_trivial,     // Z/2 + Z/2, trivial action
    klein_unipotent,   // Z/2 + Z/2, the order-2 'unipotent' swap
};

// |H^1(Z/2, -)| for each classified case.
int sl2_h1_size(Sl2Case c);

// Component groups of the same cases: over E, pi_0 of the coefficient group;
// over F, pi_0 of its fixed points.
ComponentGroup component_group(Sl2Case c, Level level);

Sl2Case parse_sl2_case(const std::string& name);
std::string sl2_case_name(Sl2Case c);
std::vector<Sl2Case> all_sl2_cases();

// |coker(pi_0(Z(lift)) -> pi_0(Z(restriction))^Gal)| for elementary 2-groups.
i64 d0_from_pi0(const AbHom& f);

// The final multiplicity: deg_phi/d0 when the character condition holds, 0
// otherwise. Non-divisibility signals inconsistent inputs and throws.
i64 conjecture3_multiplicity(i64 deg_phi, i64 d0, bool character_condition);

}  // namespace langfib
