#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace langfib {

using i64 = std::int64_t;

// Dense row-major integer matrix. All arithmetic is exact; every
// multiply/add routes through __int128 and throws on int64 overflow.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMat: negative dimension");
    }
    IntMat(int rows, int cols, std::vector<i64> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("IntMat: entry count mismatch");
    }

    static IntMat identity(int n);
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
    static IntMat diag(const std::vector<i64>& d);
    static IntMat from_rows(const std::vector<std::vector<i64>>& rows);
    static IntMat col_vector(const std::vector<i64>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    i64& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    i64 at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    // Row-major lexicographic order, dimensions first. Canonical for element sets.
    bool operator<(const IntMat& o) const;

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;
    IntMat pow(i64 e) const;  // e >= 0, square matrices

    std::vector<i64> apply(const std::vector<i64>& v) const;  // matrix * column vector
    std::vector<i64> row(int i) const;
    std::vector<i64> col(int j) const;
    IntMat cols_subset(const std::vector<int>& idx) const;

    bool is_identity() const;
    bool is_zero() const;
    i64 max_abs() const;

    static IntMat hstack(const IntMat& a, const IntMat& b);
    static IntMat vstack(const IntMat& a, const IntMat& b);

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<i64> a_;
};

// Checked scalar helpers shared by the exact kernels.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// Smith normal form: D = U * A * V with U, V unimodular, D diagonal,
// diagonal entries nonnegative and d_1 | d_2 | ... (zeros trail).
struct SmithForm {
    IntMat d, u, v;
    int rank = 0;  // number of nonzero diagonal entries
    std::vector<i64> diagonal() const;
};
SmithForm smith_form(const IntMat& a);

// Basis of {x : A x = 0}, as columns. Always a full Z-basis of the kernel lattice.
IntMat kernel_basis(const IntMat& a);

// A basis (as columns) of the lattice spanned by the columns of `gens`.
IntMat lattice_basis(const IntMat& gens);

// One integer solution of A x = b, if any.
bool solve_integer(const IntMat& a, const std::vector<i64>& b, std::vector<i64>& x);

// Solve A X = B column by column; throws if any column has no integer solution.
IntMat solve_integer_matrix(const IntMat& a, const IntMat& b);

// The quotient Z^n / (column span of rels), with tracked generators.
// factors: invariant factors of the retained summands, 0 marking free ones,
// entries of 1 dropped. lifts: one column of Z^n per retained factor.
// coords(x): coordinates of x in the retained summands (mod the factor when finite).
struct LatticeQuotient {
    int ambient = 0;
    std::vector<i64> factors;
    IntMat lifts;
    bool finite() const;
    i64 order() const;  // throws if infinite
    std::vector<i64> coords(const std::vector<i64>& x) const;

    IntMat u_;                 // full SNF row transform
    std::vector<i64> diag_;    // full SNF diagonal padded to ambient length
    std::vector<int> kept_;    // diagonal positions retained in factors
};
LatticeQuotient lattice_quotient(int ambient_rank, const IntMat& rels);

// Subquotient S / R of Z^n: S spanned by columns of num_gens, R by columns of
// den_gens, R ⊆ S required (checked). Generators are lifted back to Z^n.
struct Subquotient {
    std::vector<i64> factors;  // invariant factors of the quotient, 1s dropped, 0 = free
    IntMat gens;               // ambient-space lifts, one column per factor
    IntMat basis;              // basis of S, columns
    bool finite() const;
    i64 order() const;
    // Coordinates of an ambient vector lying in S, in the retained summands.
    std::vector<i64> coords(const std::vector<i64>& x) const;

    LatticeQuotient q_;
};
Subquotient subquotient(int ambient_rank, const IntMat& num_gens, const IntMat& den_gens);

}  // namespace langfib
