#include "langfib/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace langfib {

namespace {
using i128 = __int128;

i64 narrow(i128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw std::overflow_error("integer overflow in exact matrix arithmetic");
    return static_cast<i64>(v);
}
}  // namespace

i64 checked_add(i64 a, i64 b) { return narrow(i128(a) + i128(b)); }
i64 checked_mul(i64 a, i64 b) { return narrow(i128(a) * i128(b)); }

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::diag(const std::vector<i64>& d) {
    IntMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<i64>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::col_vector(const std::vector<i64>& v) {
    IntMat m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

bool IntMat::operator<(const IntMat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dimension mismatch in product");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            i64 aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = narrow(i128(r.at(i, j)) + i128(aik) * i128(o.at(k, j)));
        }
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat: dimension mismatch in sum");
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_add(a_[i], o.a_[i]);
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const { return *this + (-o); }

IntMat IntMat::operator-() const {
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = narrow(-i128(a_[i]));
    return r;
}

IntMat IntMat::pow(i64 e) const {
    if (rows_ != cols_) throw std::invalid_argument("IntMat: pow of non-square matrix");
    if (e < 0) throw std::invalid_argument("IntMat: negative power");
    IntMat r = identity(rows_);
    IntMat b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::vector<i64> IntMat::apply(const std::vector<i64>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat: apply dimension mismatch");
    std::vector<i64> r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        i128 s = 0;
        for (int j = 0; j < cols_; ++j) s += i128(at(i, j)) * i128(v[j]);
        r[i] = narrow(s);
    }
    return r;
}

std::vector<i64> IntMat::row(int i) const {
    std::vector<i64> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<i64> IntMat::col(int j) const {
    std::vector<i64> r(rows_);
    for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
    return r;
}

IntMat IntMat::cols_subset(const std::vector<int>& idx) const {
    IntMat r(rows_, static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < rows_; ++i) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return r;
}

bool IntMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](i64 v) { return v == 0; });
}

i64 IntMat::max_abs() const {
    i64 m = 0;
    for (i64 v : a_) m = std::max(m, v == std::numeric_limits<i64>::min() ? std::numeric_limits<i64>::max() : std::abs(v));
    return m;
}

IntMat IntMat::hstack(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

IntMat IntMat::vstack(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMat r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

namespace {

struct SnfState {
    IntMat d, u, v;

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i -= q * row j (and mirror on u)
    void row_sub(int i, int j, i64 q) {
        if (q == 0) return;
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) = checked_add(d.at(i, c), -checked_mul(q, d.at(j, c)));
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = checked_add(u.at(i, c), -checked_mul(q, u.at(j, c)));
    }
    void col_sub(int i, int j, i64 q) {
        if (q == 0) return;
        for (int r = 0; r < d.rows(); ++r) d.at(r, i) = checked_add(d.at(r, i), -checked_mul(q, d.at(r, j)));
        for (int r = 0; r < v.rows(); ++r) v.at(r, i) = checked_add(v.at(r, i), -checked_mul(q, v.at(r, j)));
    }
    void row_negate(int i) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithForm smith_form(const IntMat& a) {
    SnfState s{a, IntMat::identity(a.rows()), IntMat::identity(a.cols())};
    int m = a.rows(), n = a.cols();
    int t = 0;
    while (t < m && t < n) {
        // pick the minimal-absolute-value nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        i64 best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                i64 v = s.d.at(i, j);
                if (v == 0) continue;
                i64 av = v < 0 ? -v : v;
                if (pi < 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        s.row_swap(t, pi);
        s.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                i64 q = s.d.at(i, t) / s.d.at(t, t);
                s.row_sub(i, t, q);
                if (s.d.at(i, t) != 0) {
                    s.row_swap(t, i);  // remainder is smaller: Euclid step
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                i64 q = s.d.at(t, j) / s.d.at(t, t);
                s.col_sub(j, t, q);
                if (s.d.at(t, j) != 0) {
                    s.col_swap(t, j);
                    clean = false;
                }
            }
        }
        if (s.d.at(t, t) < 0) s.row_negate(t);

        // enforce d_t | every later entry: fold an offending column in and redo
        i64 p = s.d.at(t, t);
        bool redo = false;
        for (int i = t + 1; i < m && !redo; ++i)
            for (int j = t + 1; j < n && !redo; ++j)
                if (s.d.at(i, j) % p != 0) {
                    s.col_sub(t, j, -1);  // col t += col j
                    redo = true;
                }
        if (!redo) ++t;
    }
    SmithForm f;
    f.d = s.d;
    f.u = s.u;
    f.v = s.v;
    f.rank = t;
    return f;
}

std::vector<i64> SmithForm::diagonal() const {
    std::vector<i64> out;
    int k = std::min(d.rows(), d.cols());
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.push_back(d.at(i, i));
    return out;
}

IntMat kernel_basis(const IntMat& a) {
    SmithForm f = smith_form(a);
    // A x = 0 iff the first `rank` SNF coordinates of V^{-1} x vanish,
    // so the kernel is spanned by the trailing columns of V.
    std::vector<int> idx;
    for (int j = f.rank; j < a.cols(); ++j) idx.push_back(j);
    return f.v.cols_subset(idx);
}

IntMat lattice_basis(const IntMat& gens) {
    SmithForm f = smith_form(gens);
    // im(gens) = U^{-1} im(D); columns d_i * (U^{-1} e_i) for nonzero d_i form a basis.
    // Solve U w = e_i instead of inverting: U is unimodular so SNF solve is exact.
    IntMat basis(gens.rows(), f.rank);
    if (f.rank == 0) return basis;
    IntMat uinv_cols = solve_integer_matrix(f.u, IntMat::identity(f.u.rows()));
    for (int k = 0; k < f.rank; ++k) {
        i64 dk = f.d.at(k, k);
        for (int i = 0; i < gens.rows(); ++i) basis.at(i, k) = checked_mul(dk, uinv_cols.at(i, k));
    }
    return basis;
}

bool solve_integer(const IntMat& a, const std::vector<i64>& b, std::vector<i64>& x) {
    SmithForm f = smith_form(a);
    std::vector<i64> ub = f.u.apply(b);
    std::vector<i64> z(a.cols(), 0);
    int k = std::min(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        i64 di = i < k ? f.d.at(i, i) : 0;
        if (di == 0) {
            if (ub[i] != 0) return false;
        } else {
            if (ub[i] % di != 0) return false;
            if (i < a.cols()) z[i] = ub[i] / di;
        }
    }
    x = f.v.apply(z);
    return true;
}

IntMat solve_integer_matrix(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_integer_matrix: row mismatch");
    SmithForm f = smith_form(a);
    IntMat x(a.cols(), b.cols());
    int k = std::min(a.rows(), a.cols());
    for (int c = 0; c < b.cols(); ++c) {
        std::vector<i64> ub = f.u.apply(b.col(c));
        std::vector<i64> z(a.cols(), 0);
        for (int i = 0; i < a.rows(); ++i) {
            i64 di = i < k ? f.d.at(i, i) : 0;
            if (di == 0) {
                if (ub[i] != 0) throw std::domain_error("solve_integer_matrix: no integer solution");
            } else {
                if (ub[i] % di != 0) throw std::domain_error("solve_integer_matrix: no integer solution");
                if (i < a.cols()) z[i] = ub[i] / di;
            }
        }
        std::vector<i64> xc = f.v.apply(z);
        for (int i = 0; i < a.cols(); ++i) x.at(i, c) = xc[i];
    }
    return x;
}

bool LatticeQuotient::finite() const {
    return std::all_of(factors.begin(), factors.end(), [](i64 d) { return d != 0; });
}

i64 LatticeQuotient::order() const {
    if (!finite()) throw std::domain_error("order of an infinite quotient");
    i64 o = 1;
    for (i64 d : factors) o = checked_mul(o, d);
    return o;
}

std::vector<i64> LatticeQuotient::coords(const std::vector<i64>& x) const {
    std::vector<i64> y = u_.apply(x);
    std::vector<i64> out;
    out.reserve(kept_.size());
    for (size_t k = 0; k < kept_.size(); ++k) {
        i64 d = factors[k];
        i64 v = y[kept_[k]];
        if (d != 0) {
            v %= d;
            if (v < 0) v += d;
        }
        out.push_back(v);
    }
    return out;
}

LatticeQuotient lattice_quotient(int ambient_rank, const IntMat& rels) {
    if (rels.rows() != ambient_rank) throw std::invalid_argument("lattice_quotient: relation rows != ambient rank");
    SmithForm f = smith_form(rels);
    LatticeQuotient q;
    q.ambient = ambient_rank;
    q.u_ = f.u;
    q.diag_.assign(ambient_rank, 0);
    int k = std::min(rels.rows(), rels.cols());
    for (int i = 0; i < k; ++i) q.diag_[i] = f.d.at(i, i);
    IntMat uinv = solve_integer_matrix(f.u, IntMat::identity(ambient_rank));
    std::vector<int> keep;
    for (int i = 0; i < ambient_rank; ++i)
        if (q.diag_[i] != 1) keep.push_back(i);
    q.kept_ = keep;
    q.factors.reserve(keep.size());
    for (int i : keep) q.factors.push_back(q.diag_[i]);
    q.lifts = uinv.cols_subset(keep);
    return q;
}

bool Subquotient::finite() const {
    return std::all_of(factors.begin(), factors.end(), [](i64 d) { return d != 0; });
}

i64 Subquotient::order() const {
    if (!finite()) throw std::domain_error("order of an infinite subquotient");
    i64 o = 1;
    for (i64 d : factors) o = checked_mul(o, d);
    return o;
}

std::vector<i64> Subquotient::coords(const std::vector<i64>& x) const {
    std::vector<i64> y;
    if (!solve_integer(basis, x, y)) throw std::domain_error("Subquotient::coords: vector not in the numerator lattice");
    return q_.coords(y);
}

Subquotient subquotient(int ambient_rank, const IntMat& num_gens, const IntMat& den_gens) {
    if (num_gens.rows() != ambient_rank || den_gens.rows() != ambient_rank)
        throw std::invalid_argument("subquotient: ambient rank mismatch");
    Subquotient s;
    s.basis = lattice_basis(num_gens);
    int r = s.basis.cols();
    // express the denominator generators in numerator coordinates; failure means R ⊄ S
    IntMat rels(r, den_gens.cols());
    for (int c = 0; c < den_gens.cols(); ++c) {
        std::vector<i64> y;
        if (!solve_integer(s.basis, den_gens.col(c), y))
            throw std::domain_error("subquotient: denominator not contained in numerator");
        for (int i = 0; i < r; ++i) rels.at(i, c) = y[i];
    }
    s.q_ = lattice_quotient(r, rels);
    s.factors = s.q_.factors;
    s.gens = s.basis * s.q_.lifts;
    return s;
}

}  // namespace langfib
