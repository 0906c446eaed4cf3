#include "langfib/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace langfib {

namespace {

constexpr size_t kWeylBound = 3628800;  // 10!

std::vector<i64> reflect_char(const std::vector<i64>& x, const std::vector<i64>& root,
                              const std::vector<i64>& coroot) {
    i64 c = pairing(x, coroot);
    std::vector<i64> r = x;
    for (size_t k = 0; k < r.size(); ++k) r[k] = checked_add(r[k], -checked_mul(c, root[k]));
    return r;
}

std::vector<i64> reflect_cochar(const std::vector<i64>& y, const std::vector<i64>& root,
                                const std::vector<i64>& coroot) {
    i64 c = pairing(root, y);
    std::vector<i64> r = y;
    for (size_t k = 0; k < r.size(); ++k) r[k] = checked_add(r[k], -checked_mul(c, coroot[k]));
    return r;
}

// Index of (root, coroot) pair in the datum, -1 if absent.
int find_pair(const BasedRootDatum& d, const std::vector<i64>& root, const std::vector<i64>& coroot) {
    for (int i = 0; i < d.nroots(); ++i)
        if (d.roots[i] == root && d.coroots[i] == coroot) return i;
    return -1;
}

IntMat simple_matrix_cols(const BasedRootDatum& d, bool coroot_side) {
    IntMat m(d.rank, static_cast<int>(d.simple.size()));
    for (size_t j = 0; j < d.simple.size(); ++j) {
        const auto& v = coroot_side ? d.coroots[d.simple[j]] : d.roots[d.simple[j]];
        for (int i = 0; i < d.rank; ++i) m.at(i, static_cast<int>(j)) = v[i];
    }
    return m;
}

}  // namespace

i64 pairing(const std::vector<i64>& x, const std::vector<i64>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("pairing: length mismatch");
    i64 s = 0;
    for (size_t i = 0; i < x.size(); ++i) s = checked_add(s, checked_mul(x[i], y[i]));
    return s;
}

void validate(const BasedRootDatum& d) {
    if (d.rank < 0) throw std::invalid_argument("datum: negative rank");
    if (d.roots.size() != d.coroots.size()) throw std::invalid_argument("datum: root/coroot count mismatch");
    for (int i = 0; i < d.nroots(); ++i) {
        if (static_cast<int>(d.roots[i].size()) != d.rank || static_cast<int>(d.coroots[i].size()) != d.rank)
            throw std::invalid_argument("datum: vector length != rank");
        if (pairing(d.roots[i], d.coroots[i]) != 2)
            throw std::invalid_argument("datum: <root, coroot> != 2");
    }
    std::set<int> seen;
    for (int s : d.simple) {
        if (s < 0 || s >= d.nroots() || !seen.insert(s).second)
            throw std::invalid_argument("datum: bad simple index");
    }
    // simple reflections permute the (root, coroot) pair list
    for (int s : d.simple)
        for (int i = 0; i < d.nroots(); ++i) {
            auto r = reflect_char(d.roots[i], d.roots[s], d.coroots[s]);
            auto c = reflect_cochar(d.coroots[i], d.roots[s], d.coroots[s]);
            if (find_pair(d, r, c) < 0) throw std::invalid_argument("datum: reflection does not permute roots");
        }
    // every root is a one-signed integer combination of simple roots
    IntMat s_cols = simple_matrix_cols(d, false);
    for (int i = 0; i < d.nroots(); ++i) {
        std::vector<i64> coeff;
        if (!solve_integer(s_cols, d.roots[i], coeff))
            throw std::invalid_argument("datum: root outside the simple-root lattice");
        bool nonneg = std::all_of(coeff.begin(), coeff.end(), [](i64 v) { return v >= 0; });
        bool nonpos = std::all_of(coeff.begin(), coeff.end(), [](i64 v) { return v <= 0; });
        if (!nonneg && !nonpos) throw std::invalid_argument("datum: root with mixed-sign simple coordinates");
    }
}

void validate_action(const BasedRootDatum& d, const OuterAction& a) {
    if (a.generator.rows() != d.rank || a.generator.cols() != d.rank)
        throw std::invalid_argument("action: shape mismatch");
    if (a.order < 1 || !a.generator.pow(a.order).is_identity())
        throw std::invalid_argument("action: generator^order != identity");
    if (d.nroots() == 0) return;
    // generator permutes the pair list and the simple subset
    IntMat gt = a.generator.transpose();
    IntMat ginv_t = solve_integer_matrix(gt, IntMat::identity(d.rank));  // action on cochars
    std::set<int> simple_set(d.simple.begin(), d.simple.end());
    for (int i = 0; i < d.nroots(); ++i) {
        auto r = a.generator.apply(d.roots[i]);
        auto c = ginv_t.apply(d.coroots[i]);
        int j = find_pair(d, r, c);
        if (j < 0) throw std::invalid_argument("action: does not preserve the root set");
        if (simple_set.count(i) != simple_set.count(j))
            throw std::invalid_argument("action: does not preserve the simple set");
    }
}

IntMat reflection_on_chars(const BasedRootDatum& d, int i) {
    IntMat m = IntMat::identity(d.rank);
    // I - root * coroot^T
    for (int r = 0; r < d.rank; ++r)
        for (int c = 0; c < d.rank; ++c)
            m.at(r, c) = checked_add(m.at(r, c), -checked_mul(d.roots[i][r], d.coroots[i][c]));
    return m;
}

IntMat reflection_on_cochars(const BasedRootDatum& d, int i) {
    IntMat m = IntMat::identity(d.rank);
    for (int r = 0; r < d.rank; ++r)
        for (int c = 0; c < d.rank; ++c)
            m.at(r, c) = checked_add(m.at(r, c), -checked_mul(d.coroots[i][r], d.roots[i][c]));
    return m;
}

std::vector<IntMat> weyl_group(const BasedRootDatum& d) {
    std::set<IntMat> seen;
    std::vector<IntMat> work;
    seen.insert(IntMat::identity(d.rank));
    work.push_back(IntMat::identity(d.rank));
    std::vector<IntMat> gens;
    gens.reserve(d.simple.size());
    for (int s : d.simple) gens.push_back(reflection_on_chars(d, s));
    while (!work.empty()) {
        IntMat w = work.back();
        work.pop_back();
        for (const IntMat& g : gens) {
            IntMat n = g * w;
            if (seen.insert(n).second) {
                if (seen.size() > kWeylBound) throw std::runtime_error("weyl_group: closure exceeds 10! elements");
                work.push_back(n);
            }
        }
    }
    return std::vector<IntMat>(seen.begin(), seen.end());
}

std::vector<int> positive_root_indices(const BasedRootDatum& d) {
    IntMat s_cols = simple_matrix_cols(d, false);
    std::vector<int> out;
    for (int i = 0; i < d.nroots(); ++i) {
        std::vector<i64> coeff;
        if (!solve_integer(s_cols, d.roots[i], coeff)) throw std::invalid_argument("positive_root_indices: bad datum");
        if (std::all_of(coeff.begin(), coeff.end(), [](i64 v) { return v >= 0; })) out.push_back(i);
    }
    return out;
}

namespace {
bool sends_positives_negative(const BasedRootDatum& d, const IntMat& w, const std::vector<int>& pos) {
    IntMat s_cols = simple_matrix_cols(d, false);
    for (int i : pos) {
        std::vector<i64> coeff;
        if (!solve_integer(s_cols, w.apply(d.roots[i]), coeff)) return false;
        if (!std::all_of(coeff.begin(), coeff.end(), [](i64 v) { return v <= 0; })) return false;
    }
    return true;
}
}  // namespace

IntMat longest_element(const BasedRootDatum& d) {
    if (d.nroots() == 0) throw std::invalid_argument("longest_element: datum has no roots");
    std::vector<int> pos = positive_root_indices(d);
    for (const IntMat& w : weyl_group(d))
        if (sends_positives_negative(d, w, pos)) return w;
    throw std::logic_error("longest_element: no element negates the positive system");
}

bool minus_one_in_weyl(const BasedRootDatum& d) {
    if (d.nroots() == 0) return d.rank == 0;
    IntMat w0 = longest_element(d);
    for (int i = 0; i < d.nroots(); ++i) {
        std::vector<i64> img = w0.apply(d.roots[i]);
        for (int k = 0; k < d.rank; ++k)
            if (img[k] != -d.roots[i][k]) return false;
    }
    return true;
}

OuterAction duality_involution(const BasedRootDatum& d) {
    IntMat m = d.nroots() == 0 ? -IntMat::identity(d.rank) : -longest_element(d);
    OuterAction a{m, m.is_identity() ? 1 : 2};
    validate_action(d, a);
    return a;
}

GroupForm op_form(const GroupForm& f) {
    if (f.galois.order > 2) throw std::invalid_argument("op_form: galois order must be <= 2");
    OuterAction iota = duality_involution(f.datum);
    IntMat g = iota.generator * f.galois.generator;
    OuterAction twisted{g, g.is_identity() ? 1 : 2};
    if (twisted.order == 2 && !(g * g).is_identity())
        throw std::invalid_argument("op_form: twisted action has order > 2");
    validate_action(f.datum, twisted);
    return GroupForm{f.datum, twisted, f.label.empty() ? "op" : f.label + "^op"};
}

BasedRootDatum dual_datum(const BasedRootDatum& d) {
    BasedRootDatum out = d;
    std::swap(out.roots, out.coroots);
    out.name = d.name.empty() ? "dual" : d.name + "^";
    validate(out);
    return out;
}

GroupForm dual_form(const GroupForm& f) {
    BasedRootDatum dd = dual_datum(f.datum);
    // pairing-compatible transport: inverse transpose on the other lattice
    IntMat gt = f.galois.generator.transpose();
    IntMat g = solve_integer_matrix(gt, IntMat::identity(f.datum.rank));
    OuterAction a{g, f.galois.order};
    validate_action(dd, a);
    return GroupForm{dd, a, f.label.empty() ? "dual" : f.label + "^"};
}

namespace {

IntMat cartan_matrix(char type, int n) {
    IntMat c(n, n);
    auto chain = [&](int upto) {
        for (int i = 0; i < upto; ++i) {
            c.at(i, i) = 2;
            if (i + 1 < upto) {
                c.at(i, i + 1) = -1;
                c.at(i + 1, i) = -1;
            }
        }
    };
    switch (type) {
        case 'A':
            chain(n);
            break;
        case 'B':  // last root short
            if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
            chain(n);
            c.at(n - 2, n - 1) = -2;
            break;
        case 'C':  // last root long
            if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
            chain(n);
            c.at(n - 1, n - 2) = -2;
            break;
        case 'D':
            if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
            chain(n - 1);
            c.at(n - 1, n - 1) = 2;
            c.at(n - 3, n - 1) = -1;
            c.at(n - 1, n - 3) = -1;
            break;
        case 'G':
            if (n != 2) throw std::invalid_argument("G type has rank 2");
            c.at(0, 0) = 2;
            c.at(0, 1) = -1;
            c.at(1, 0) = -3;
            c.at(1, 1) = 2;
            break;
        default:
            throw std::invalid_argument("unknown Cartan type");
    }
    return c;
}

// Close simple (root, coroot) pairs under simple reflections.
void close_root_system(BasedRootDatum& d) {
    std::vector<int> simple_pairs = d.simple;
    std::set<std::pair<std::vector<i64>, std::vector<i64>>> seen;
    std::vector<std::pair<std::vector<i64>, std::vector<i64>>> work;
    for (int i = 0; i < d.nroots(); ++i) {
        seen.insert({d.roots[i], d.coroots[i]});
        work.push_back({d.roots[i], d.coroots[i]});
    }
    std::vector<std::pair<std::vector<i64>, std::vector<i64>>> simples;
    for (int s : simple_pairs) simples.push_back({d.roots[s], d.coroots[s]});
    while (!work.empty()) {
        auto [r, c] = work.back();
        work.pop_back();
        for (const auto& [sr, sc] : simples) {
            auto nr = reflect_char(r, sr, sc);
            auto nc = reflect_cochar(c, sr, sc);
            if (seen.insert({nr, nc}).second) {
                if (seen.size() > 10000) throw std::runtime_error("root closure diverges");
                work.push_back({nr, nc});
            }
        }
    }
    d.roots.clear();
    d.coroots.clear();
    for (const auto& [r, c] : seen) {
        d.roots.push_back(r);
        d.coroots.push_back(c);
    }
    d.simple.clear();
    for (const auto& [sr, sc] : simples) d.simple.push_back(find_pair(d, sr, sc));
}

BasedRootDatum classical_datum(const std::string& name, int rank,
                               const std::vector<std::vector<i64>>& simple_roots,
                               const std::vector<std::vector<i64>>& simple_coroots) {
    BasedRootDatum d;
    d.rank = rank;
    d.name = name;
    d.roots = simple_roots;
    d.coroots = simple_coroots;
    for (int i = 0; i < d.nroots(); ++i) d.simple.push_back(i);
    close_root_system(d);
    validate(d);
    return d;
}

std::vector<i64> unit(int n, int i, i64 v = 1) {
    std::vector<i64> e(n, 0);
    e[i] = v;
    return e;
}

std::vector<i64> two_unit(int n, int i, int j, i64 vi, i64 vj) {
    std::vector<i64> e(n, 0);
    e[i] = vi;
    e[j] = vj;
    return e;
}

}  // namespace

BasedRootDatum standard_semisimple(char type, int rank, bool adjoint) {
    IntMat c = cartan_matrix(type, rank);
    BasedRootDatum d;
    d.rank = rank;
    std::ostringstream nm;
    nm << type << "_" << rank << (adjoint ? " (adjoint)" : "");
    d.name = nm.str();
    for (int i = 0; i < rank; ++i) {
        if (adjoint) {
            d.roots.push_back(unit(rank, i));
            d.coroots.push_back(c.col(i));
        } else {
            d.roots.push_back(c.row(i));
            d.coroots.push_back(unit(rank, i));
        }
        d.simple.push_back(i);
    }
    close_root_system(d);
    validate(d);
    return d;
}

namespace {

BasedRootDatum gl_datum(int n) {
    BasedRootDatum d;
    d.rank = n;
    d.name = "GL_" + std::to_string(n);
    if (n >= 2) {
        std::vector<std::vector<i64>> sr, sc;
        for (int i = 0; i + 1 < n; ++i) {
            sr.push_back(two_unit(n, i, i + 1, 1, -1));
            sc.push_back(two_unit(n, i, i + 1, 1, -1));
        }
        d = classical_datum(d.name, n, sr, sc);
        d.name = "GL_" + std::to_string(n);
    }
    return d;
}

BasedRootDatum sp_datum(int two_n) {
    if (two_n < 2 || two_n % 2) throw std::invalid_argument("Sp_2n: even size >= 2 required");
    int n = two_n / 2;
    if (n == 1) {
        // Sp_2 = SL_2
        return standard_semisimple('A', 1, false);
    }
    std::vector<std::vector<i64>> sr, sc;
    for (int i = 0; i + 1 < n; ++i) {
        sr.push_back(two_unit(n, i, i + 1, 1, -1));
        sc.push_back(two_unit(n, i, i + 1, 1, -1));
    }
    sr.push_back(unit(n, n - 1, 2));
    sc.push_back(unit(n, n - 1, 1));
    return classical_datum("Sp_" + std::to_string(two_n), n, sr, sc);
}

BasedRootDatum so_datum(int n) {
    if (n < 2) throw std::invalid_argument("SO_n: n >= 2 required");
    int m = n / 2;
    BasedRootDatum d;
    if (n % 2) {  // B_m with X* = Z^m
        std::vector<std::vector<i64>> sr, sc;
        for (int i = 0; i + 1 < m; ++i) {
            sr.push_back(two_unit(m, i, i + 1, 1, -1));
            sc.push_back(two_unit(m, i, i + 1, 1, -1));
        }
        sr.push_back(unit(m, m - 1, 1));
        sc.push_back(unit(m, m - 1, 2));
        d = classical_datum("SO_" + std::to_string(n), m, sr, sc);
    } else if (m == 1) {  // SO_2: rank-1 torus
        d.rank = 1;
        d.name = "SO_2";
    } else {  // D_m with X* = Z^m
        std::vector<std::vector<i64>> sr, sc;
        for (int i = 0; i + 1 < m; ++i) {
            sr.push_back(two_unit(m, i, i + 1, 1, -1));
            sc.push_back(two_unit(m, i, i + 1, 1, -1));
        }
        sr.push_back(two_unit(m, m - 2, m - 1, 1, 1));
        sc.push_back(two_unit(m, m - 2, m - 1, 1, 1));
        d = classical_datum("SO_" + std::to_string(n), m, sr, sc);
    }
    return d;
}

IntMat torus_action(int rank, const std::string& kind) {
    if (kind == "trivial" || kind.empty()) return IntMat::identity(rank);
    if (kind == "sign") return -IntMat::identity(rank);
    if (kind == "swap") {
        if (rank % 2) throw std::invalid_argument("torus swap action needs even rank");
        IntMat m(rank, rank);
        int h = rank / 2;
        for (int i = 0; i < h; ++i) {
            m.at(i, h + i) = 1;
            m.at(h + i, i) = 1;
        }
        return m;
    }
    throw std::invalid_argument("unknown torus action: " + kind);
}

}  // namespace

OuterAction simple_perm_action(const BasedRootDatum& d, const std::vector<int>& perm) {
    int s = static_cast<int>(d.simple.size());
    if (d.rank != s)
        throw std::invalid_argument("simple_perm_action: coordinates not aligned with simple positions");
    if (static_cast<int>(perm.size()) != s) throw std::invalid_argument("simple_perm_action: bad permutation size");
    IntMat m(s, s);
    std::vector<bool> hit(static_cast<std::size_t>(s), false);
    for (int i = 0; i < s; ++i) {
        if (perm[i] < 0 || perm[i] >= s) throw std::invalid_argument("simple_perm_action: bad permutation");
        if (hit[static_cast<std::size_t>(perm[i])])
            throw std::invalid_argument("simple_perm_action: not a permutation");
        hit[static_cast<std::size_t>(perm[i])] = true;
        m.at(perm[i], i) = 1;
    }
    int order = 1;
    IntMat p = m;
    while (!p.is_identity()) {
        p = p * m;
        if (++order > s + 1) throw std::logic_error("simple_perm_action: order runaway");
    }
    OuterAction a{m, order};
    validate_action(d, a);
    // the stated permutation must be the one induced on simple roots
    for (int i = 0; i < s; ++i) {
        auto img = m.apply(d.roots[d.simple[i]]);
        if (img != d.roots[d.simple[perm[i]]])
            throw std::invalid_argument("simple_perm_action: matrix does not realize the permutation");
    }
    return a;
}

GroupForm build_standard(const std::string& tag) {
    std::string t;
    for (char ch : tag)
        if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);

    if (t.rfind("torus(", 0) == 0) {
        if (t.back() != ')') throw std::invalid_argument("bad torus tag: " + tag);
        std::string inner = t.substr(6, t.size() - 7);
        auto comma = inner.find(',');
        int rank = std::stoi(comma == std::string::npos ? inner : inner.substr(0, comma));
        std::string kind = comma == std::string::npos ? "trivial" : inner.substr(comma + 1);
        if (rank < 0) throw std::invalid_argument("bad torus rank");
        BasedRootDatum d;
        d.rank = rank;
        d.name = t;
        IntMat g = torus_action(rank, kind);
        OuterAction a{g, g.is_identity() ? 1 : 2};
        return GroupForm{d, a, t};
    }

    size_t p = 0;
    while (p < t.size() && !isdigit(static_cast<unsigned char>(t[p])) && t[p] != '_') ++p;
    std::string family = t.substr(0, p);
    if (p < t.size() && t[p] == '_') ++p;
    if (p >= t.size()) throw std::invalid_argument("catalog tag needs a size: " + tag);
    int n = std::stoi(t.substr(p));

    BasedRootDatum d;
    if (family == "A" || family == "B" || family == "C" || family == "D" || family == "G") {
        d = standard_semisimple(family[0], n, false);
    } else if (family == "GL") {
        d = gl_datum(n);
    } else if (family == "SL") {
        if (n < 2) throw std::invalid_argument("SL_n needs n >= 2");
        d = standard_semisimple('A', n - 1, false);
        d.name = "SL_" + std::to_string(n);
    } else if (family == "PGL") {
        if (n < 2) throw std::invalid_argument("PGL_n needs n >= 2");
        d = standard_semisimple('A', n - 1, true);
        d.name = "PGL_" + std::to_string(n);
    } else if (family == "Sp") {
        d = sp_datum(n);
    } else if (family == "PGSp") {
        if (n < 2 || n % 2) throw std::invalid_argument("PGSp_2n: even size required");
        d = n == 2 ? standard_semisimple('A', 1, true) : standard_semisimple('C', n / 2, true);
        d.name = "PGSp_" + std::to_string(n);
    } else if (family == "SO") {
        d = so_datum(n);
    } else if (family == "U") {
        GroupForm gl = build_standard("GL_" + std::to_string(n));
        GroupForm u = op_form(gl);
        u.label = "U_" + std::to_string(n);
        return u;
    } else {
        throw std::invalid_argument("unknown catalog tag: " + tag);
    }
    validate(d);
    return GroupForm{d, OuterAction{IntMat::identity(d.rank), 1}, d.name};
}

i64 weight_root_index(const BasedRootDatum& d) {
    int s = static_cast<int>(d.simple.size());
    if (s == 0) return 1;
    // In weight coordinates the root lattice is spanned by the Cartan rows.
    IntMat cart(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            cart.at(i, j) = pairing(d.roots[d.simple[i]], d.coroots[d.simple[j]]);
    return lattice_quotient(s, cart.transpose()).order();
}

}  // namespace langfib
