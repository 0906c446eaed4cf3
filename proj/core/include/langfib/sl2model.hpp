#pragma once

#include <optional>
#include <string>
#include <vector>

#include "langfib/abelian.hpp"
#include "langfib/rational.hpp"

namespace langfib {

// Character of a finite abelian group, x -> exp(2*pi*i * sum_j c_j x_j / d_j),
// stored by its coefficient vector c with c_j reduced mod d_j.
class ModelCharacter {
public:
    ModelCharacter(FiniteAbelianGroup g, std::vector<i64> coeffs);
    static ModelCharacter trivial(const FiniteAbelianGroup& g);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<i64>& coeffs() const { return coeffs_; }

    bool is_trivial() const;
    i64 order() const;
    Rational phase(const std::vector<i64>& x) const;  // value in [0, 1)

    ModelCharacter operator*(const ModelCharacter& o) const;
    ModelCharacter inverse() const;
    ModelCharacter pow(i64 k) const;

    // chi ∘ f for f: G -> H and chi a character of H; the result lives on G.
    ModelCharacter pullback(const AbHom& f) const;

    bool operator==(const ModelCharacter& o) const;
    bool operator!=(const ModelCharacter& o) const { return !(*this == o); }
    bool operator<(const ModelCharacter& o) const;  // coordinate lex, for sets

    std::string to_string() const;

private:
    FiniteAbelianGroup group_;
    std::vector<i64> coeffs_;
};

std::vector<ModelCharacter> all_characters(const FiniteAbelianGroup& g);

// Finite-level model of a quadratic extension E/F of local fields: truncations
// of F^x and E^x together with inclusion, norm, the nontrivial automorphism,
// and the index-2 character of F^x cutting out norms. All six defining laws
// are checked constructively when a model is assembled.
struct LocalUnitModel {
    FiniteAbelianGroup F_group;
    FiniteAbelianGroup E_group;
    AbHom incl;   // F_group -> E_group
    AbHom norm;   // E_group -> F_group
    AbHom sigma;  // involution of E_group
    ModelCharacter omega_EF;

    i64 q = 0;  // residue field size the preset was built from (0 for custom)
    std::string preset_name = "custom";
};

enum class ExtPreset { p_odd_unramified, p_odd_ramified };

// Preset models at residue size q (odd prime power) and even level N >= 2.
// Unramified: F = Z/2N + Z/(q-1) + Z/p, E = Z/N + Z/(q^2-1) + Z/p + Z/p with
// the automorphism acting by Frobenius on the prime-to-p part and by swapping
// the two principal-unit coordinates. Ramified: E = F = Z/2N + Z/(q-1) + Z/p,
// with the automorphism twisting the Teichmueller part by (-1)^valuation.
LocalUnitModel build_model(ExtPreset preset, i64 q, i64 level);

// Custom assembly: validates the six model laws and throws on violation.
LocalUnitModel assemble_model(FiniteAbelianGroup F, FiniteAbelianGroup E, AbHom incl, AbHom norm,
                              AbHom sigma, ModelCharacter omega_EF, i64 q = 0,
                              std::string preset_name = "custom");

// Principal-series parameter: an ordered pair of characters of E_group.
// Equal characters are allowed (that is one of the case III variants).
struct PsParameter {
    ModelCharacter chi1, chi2;
};

// The four distinguished classes of the rank-1 analysis, keyed by the ratio
// r = chi1/chi2: I (r trivial on F, r^2 nontrivial), II (r restricts to
// omega_EF, r quadratic), III (r a norm pullback with r^2 nontrivial, or
// r = 1), IV (r trivial on F, r quadratic nontrivial).
enum class Sl2FieldCase { I, II, III, IV, not_distinguished };

std::string case_name(Sl2FieldCase c);

Sl2FieldCase case_classify(const LocalUnitModel& m, const PsParameter& p);

// Orders of the three character groups in the multiplicity formula
// m = X / (Z / Y): Z = selftwists of Ps(chi1, chi2), Y = selftwists trivial
// on F, X = distinguishing characters of F (tabulated by case).
struct SelftwistSizes {
    i64 X = 0, Y = 0, Z = 0;
};

SelftwistSizes selftwist_groups(const LocalUnitModel& m, const PsParameter& p);

i64 m_pi(const LocalUnitModel& m, const PsParameter& p);

// One F-side source whose base change hits the given parameter, up to twist.
struct BcSource {
    enum class Kind { discrete_series, principal_series };
    Kind kind;
    ModelCharacter param;  // discrete: character of E_group; principal: of F_group
    std::string label;
};

// All F-side sources up to twist: one discrete-series source when the ratio
// is trivial on F and nontrivial, plus one principal-series source per
// twist-class of solutions mu of mu∘norm = ratio. Empty when not distinguished.
std::vector<BcSource> bc_fiber_list(const LocalUnitModel& m, const PsParameter& p);

// Selftwist group of a source inside the characters of F_group.
std::vector<ModelCharacter> source_selftwists(const LocalUnitModel& m, const BcSource& s);

struct TableRow {
    std::string case_label;  // "I", "II", "III(a)", ..., "IV(c)"
    bool realized = false;
    std::string note;     // why the row is missing when !realized
    i64 packet_F = 0;     // L-packet size of the source
    i64 packet_E = 0;     // L-packet size of its base change
    i64 cok = 0;          // packet_E / |image of source selftwists under ∘norm|
    i64 deg_phi = 0;      // local degree of the base-change map on the component
    i64 deg_over_cok = 0;
};

// The seven-row table of distinguished classes. Witness ratios are found by
// search inside the model; rows a preset cannot realize are reported, not
// fabricated.
std::vector<TableRow> table_reproduce(const LocalUnitModel& m);

// Reference values (packet_F, packet_E, cok, deg_phi, deg_over_cok) for rows
// I, II, III(a), III(b), IV(a), IV(b), IV(c).
const std::vector<std::vector<i64>>& reference_sl2_table();

bool table_matches_reference(const std::vector<TableRow>& rows, std::string* why = nullptr);

// For a source p0 of p: the kernel of the norm between the packet-parameter
// quotients E/G(pi) -> F/G(pi0) must equal the image of F-points in E/G(pi).
// Checked by direct enumeration; throws if p0 is not a source of p.
bool whittaker_kernel_check(const LocalUnitModel& m, const PsParameter& p, const BcSource& p0);

struct SweepStats {
    i64 ratios_checked = 0;
    i64 distinguished = 0;
    i64 case_counts[4] = {0, 0, 0, 0};  // I, II, III, IV
    i64 mismatches = 0;                 // m_pi vs fiber size
    i64 kernel_failures = 0;            // whittaker_kernel_check found false
    std::string first_failure;
    bool ok() const { return mismatches == 0 && kernel_failures == 0; }
};

// Exhaustive pass over every ratio character r (each principal-series
// parameter is twist-equivalent to Ps(r, 1)): checks m_pi = number of
// sources and the norm-kernel law for every source of every distinguished r.
SweepStats sweep_distinguished(const LocalUnitModel& m);

}  // namespace langfib
