#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "langfib/finitefield.hpp"

namespace langfib {

using cplx = std::complex<double>;

// 2x2 matrix over the tower, row major.
struct Mat2 {
    std::uint32_t a, b, c, d;
    bool operator==(const Mat2&) const = default;
};

Mat2 mat_mul(const BigField& t, const Mat2& x, const Mat2& y);
std::uint32_t mat_det(const BigField& t, const Mat2& x);
std::uint32_t mat_trace(const BigField& t, const Mat2& x);
Mat2 mat_inverse(const BigField& t, const Mat2& x);
Mat2 mat_frobenius(const BigField& t, const Mat2& x, int e);
Mat2 mat_scalar(std::uint32_t z);

enum class ClassType { central, central_unipotent, split, anisotropic };
enum class GroupKind { GL2, SL2 };

// One conjugacy class. Classes are keyed by (trace, det, semisimple); for SL2
// in odd characteristic the non-semisimple keys split further by the square
// class of the unipotent parameter. An element is semisimple iff it is scalar
// or tr^2 - 4 det != 0, which covers both characteristics.
struct ConjClass {
    Mat2 rep;
    long long size = 0;
    ClassType type;
    std::uint32_t trace, det;
    bool semisimple;
    int unip_square = 0;   // 0 none, 1 square parameter, 2 non-square
    std::uint32_t z = 0;       // central part, central and central_unipotent types
    std::uint32_t x = 0, y = 0;  // eigenvalues in F_s, split type
    std::uint32_t lambda = 0;    // one eigenvalue in F_{s^2}, anisotropic type
};

struct GroupData {
    GroupKind kind;
    int s = 0;          // base field order
    FqField field;      // F_s
    FqField quad;       // F_{s^2}
    long long order = 0;
    std::vector<ConjClass> classes;
    int identity_class = -1;

    // Class of an arbitrary group element, fused by invariants.
    int class_of(const Mat2& m) const;
};

// Enumerates the group and buckets it into classes; s must fit the tower
// (powers of one prime with F_{s^2} inside F_{p^8}: 2, 4, 16 or 3, 9).
GroupData build_group(GroupKind kind, int s, const BigField& tower);

struct CharRow {
    std::string label;
    std::vector<cplx> values;  // indexed by class
    double degree = 0.0;
};

struct CharacterTable {
    GroupData group;
    std::vector<CharRow> rows;
    double row_error = 0.0;  // max |<chi_i, chi_j> - delta|
    double col_error = 0.0;  // max scaled column orthogonality defect
};

// Full irreducible table. GL2 follows the classical four families (one
// dimensionals, Steinberg twists, principal series, cuspidal); SL2 is derived
// by restriction and decomposition, so odd s needs s = 1 mod 4 to keep the
// split constituents rational (only s = 9 arises here).
CharacterTable character_table(GroupKind kind, int s, const BigField& tower);

double orthogonality_error(const CharacterTable& t);
int find_row(const CharacterTable& t, const std::vector<cplx>& values, double tol = 1e-7);

// Row index of chi composed with the entrywise q-power Frobenius; the table
// must live over F_{q^2}. Throws if the twist misses the table.
int frobenius_twist(const CharacterTable& t, int row, int q);
// Row index of the complex conjugate character.
int conjugate_row(const CharacterTable& t, int row);

// dim of the G(F_q)-fixed subspace: (1/|H|) sum over H of chi, H = G(F_q)
// embedded entrywise; table over F_{q^2}. Rounded, residual below 1e-6.
long long invariant_dim(const CharacterTable& t, int row, int q);

// Invertible solutions y of y^[q] = y x with entries in F_{q^8}, at most
// `limit` of them. Empty when the norm obstruction keeps y outside the tower:
// a solution with entries in F_{q^j} exists exactly when x x^[q] ... x^[q^(j-1)]
// is the identity.
std::vector<Mat2> lang_solutions(const BigField& t, const Mat2& x, int q, int limit);

enum class ShintaniStatus { semisimple, solved_quartic, solved_octic, forced, unresolved };

struct ShintaniResult {
    int cls = -1;                 // class of Sh(x); -1 if undetermined
    ShintaniStatus status = ShintaniStatus::unresolved;
    std::vector<int> candidates;  // classes sharing (charpoly, semisimplicity)
};

// Shintani transform on a class: semisimple classes map to themselves; other
// classes go through the Lang solver, and when no solution fits the tower the
// result is still forced whenever only one class matches the invariants.
ShintaniResult shintani_class(const GroupData& g, int cls, const BigField& t, int q);

enum class ShCondition { ok, fails, unknown };

struct TheoremRow {
    std::string label;
    double degree = 0.0;
    long long dim = 0;        // invariant_dim over G(F_q)
    bool sigma_dual = false;  // chi^sigma equals conj(chi)
    ShCondition condition = ShCondition::unknown;
};

struct TheoremReport {
    int q = 0;
    GroupKind kind;
    long long group_order = 0;
    double orth_error = 0.0;
    std::vector<TheoremRow> rows;
    int checked = 0;   // rows with condition ok
    int unknown = 0;   // rows left undecided by the Shintani solver
    bool aggregate_ok = false;  // each ok row has dim in {0,1} and dim=1 <=> sigma_dual
};

// Brute-force check of the distinction criterion over F_{q^2}/F_q, q in {2,3}.
TheoremReport verify_theorem1(int q, GroupKind kind);

// Abelian oracles on F_{q^2}^x over F_q^x. The first recomputes the fixed-space
// dimension of every character by direct averaging and compares it with the
// sigma-duality predicate; the second averages the swap-extended line over
// F_q^x extended by Z/2 and checks the fixed vector survives there.
bool gl1_distinction_matches(int q);
bool gl1_extended_clause(int q);

const char* class_type_name(ClassType t);
const char* shintani_status_name(ShintaniStatus s);
const char* sh_condition_name(ShCondition c);

}
