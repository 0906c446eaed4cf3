#include "langfib/sl2model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "langfib/basechange.hpp"

namespace langfib {

namespace {

i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd64(a, b), b);
}

void require_same_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": characters live on different groups");
}

}  // namespace

ModelCharacter::ModelCharacter(FiniteAbelianGroup g, std::vector<i64> coeffs)
    : group_(std::move(g)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != group_.ngens())
        throw std::invalid_argument("ModelCharacter: coefficient count mismatch");
    coeffs_ = normalize_coords(group_, std::move(coeffs_));
}

ModelCharacter ModelCharacter::trivial(const FiniteAbelianGroup& g) {
    return ModelCharacter(g, std::vector<i64>(g.ngens(), 0));
}

bool ModelCharacter::is_trivial() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c == 0; });
}

i64 ModelCharacter::order() const {
    i64 o = 1;
    for (int j = 0; j < group_.ngens(); ++j) {
        i64 d = group_.factors[j];
        o = lcm64(o, d / gcd64(d, coeffs_[j]));
    }
    return o;
}

Rational ModelCharacter::phase(const std::vector<i64>& x) const {
    if (static_cast<int>(x.size()) != group_.ngens())
        throw std::invalid_argument("ModelCharacter::phase: coordinate count mismatch");
    Rational s(0);
    for (int j = 0; j < group_.ngens(); ++j) {
        i64 d = group_.factors[j];
        s = s + Rational(checked_mul(coeffs_[j], ((x[j] % d) + d) % d), d);
    }
    i64 fl = s.num >= 0 ? s.num / s.den : -(((-s.num) + s.den - 1) / s.den);
    return s - Rational(fl);
}

ModelCharacter ModelCharacter::operator*(const ModelCharacter& o) const {
    require_same_group(group_, o.group_, "ModelCharacter::operator*");
    std::vector<i64> c(coeffs_);
    for (size_t j = 0; j < c.size(); ++j) c[j] = checked_add(c[j], o.coeffs_[j]);
    return ModelCharacter(group_, std::move(c));
}

ModelCharacter ModelCharacter::inverse() const {
    std::vector<i64> c(coeffs_);
    for (i64& v : c) v = -v;
    return ModelCharacter(group_, std::move(c));
}

ModelCharacter ModelCharacter::pow(i64 k) const {
    std::vector<i64> c(group_.ngens());
    for (int j = 0; j < group_.ngens(); ++j) {
        i64 d = group_.factors[j];
        c[j] = static_cast<i64>((static_cast<__int128>(coeffs_[j]) * k) % d);
    }
    return ModelCharacter(group_, std::move(c));
}

ModelCharacter ModelCharacter::pullback(const AbHom& f) const {
    require_same_group(group_, f.dst, "ModelCharacter::pullback");
    std::vector<i64> c(f.src.ngens());
    for (int j = 0; j < f.src.ngens(); ++j) {
        Rational s(0);
        for (int i = 0; i < f.dst.ngens(); ++i)
            s = s + Rational(checked_mul(coeffs_[i], f.m.at(i, j)), f.dst.factors[i]);
        Rational t = s * Rational(f.src.factors[j]);
        if (!t.is_integer())
            throw std::logic_error("ModelCharacter::pullback: composite is not a character (hom invalid)");
        c[j] = t.num;
    }
    return ModelCharacter(f.src, std::move(c));
}

bool ModelCharacter::operator==(const ModelCharacter& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
}

bool ModelCharacter::operator<(const ModelCharacter& o) const {
    if (group_.factors != o.group_.factors) return group_.factors < o.group_.factors;
    return coeffs_ < o.coeffs_;
}

std::string ModelCharacter::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t j = 0; j < coeffs_.size(); ++j) os << (j ? "," : "") << coeffs_[j];
    os << ']';
    return os.str();
}

std::vector<ModelCharacter> all_characters(const FiniteAbelianGroup& g) {
    std::vector<ModelCharacter> out;
    out.reserve(static_cast<size_t>(g.order()));
    for (auto& c : enumerate_elements(g)) out.emplace_back(g, c);
    return out;
}

namespace {

bool homs_equal(const AbHom& a, const AbHom& b) {
    if (!(a.src == b.src) || !(a.dst == b.dst)) return false;
    for (int i = 0; i < a.m.rows(); ++i)
        for (int j = 0; j < a.m.cols(); ++j)
            if ((a.m.at(i, j) - b.m.at(i, j)) % a.dst.factors[i] != 0) return false;
    return true;
}

std::set<std::vector<i64>> image_set(const AbHom& f) {
    std::set<std::vector<i64>> out;
    for (auto& x : enumerate_elements(f.src)) out.insert(f.apply(x));
    return out;
}

void verify_model(const LocalUnitModel& m) {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("LocalUnitModel: " + what);
    };
    if (!(m.incl.src == m.F_group) || !(m.incl.dst == m.E_group)) fail("incl must map F_group to E_group");
    if (!(m.norm.src == m.E_group) || !(m.norm.dst == m.F_group)) fail("norm must map E_group to F_group");
    if (!(m.sigma.src == m.E_group) || !(m.sigma.dst == m.E_group)) fail("sigma must act on E_group");
    if (!(m.omega_EF.group() == m.F_group)) fail("omega_EF must be a character of F_group");

    AbHom id_E(m.E_group, m.E_group, IntMat::identity(m.E_group.ngens()));
    if (!homs_equal(compose(m.sigma, m.sigma), id_E)) fail("sigma is not an involution");

    std::set<std::vector<i64>> fixed;
    for (auto& x : enumerate_elements(m.E_group))
        if (m.sigma.apply(x) == x) fixed.insert(x);
    if (fixed != image_set(m.incl)) fail("fixed points of sigma differ from the image of incl");

    AbHom sq(m.F_group, m.F_group, IntMat::identity(m.F_group.ngens()) + IntMat::identity(m.F_group.ngens()));
    if (!homs_equal(compose(m.norm, m.incl), sq)) fail("norm ∘ incl is not squaring on F_group");

    AbHom one_plus_sigma(m.E_group, m.E_group, IntMat::identity(m.E_group.ngens()) + m.sigma.m);
    if (!homs_equal(compose(m.incl, m.norm), one_plus_sigma)) fail("incl ∘ norm is not 1 + sigma");

    if (m.omega_EF.is_trivial() || !m.omega_EF.pow(2).is_trivial()) fail("omega_EF must have exact order 2");
    if (!m.omega_EF.pullback(m.norm).is_trivial()) fail("omega_EF does not vanish on norms");
    if (checked_mul(hom_image_order(m.norm), 2) != m.F_group.order())
        fail("norm image does not have index 2 in F_group");
}

i64 odd_prime_of(i64 q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("build_model: q must be an odd prime power");
    i64 p = 3;
    while (p * p <= q && q % p != 0) p += 2;
    if (p * p > q) p = q;
    i64 r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw std::invalid_argument("build_model: q must be an odd prime power");
    return p;
}

}  // namespace

LocalUnitModel assemble_model(FiniteAbelianGroup F, FiniteAbelianGroup E, AbHom incl, AbHom norm,
                              AbHom sigma, ModelCharacter omega_EF, i64 q, std::string preset_name) {
    LocalUnitModel m{std::move(F), std::move(E), std::move(incl), std::move(norm),
                     std::move(sigma), std::move(omega_EF), q, std::move(preset_name)};
    verify_model(m);
    return m;
}

LocalUnitModel build_model(ExtPreset preset, i64 q, i64 level) {
    i64 p = odd_prime_of(q);
    if (level < 2 || level % 2 != 0) throw std::invalid_argument("build_model: level must be even and >= 2");
    i64 n = level;
    if (preset == ExtPreset::p_odd_unramified) {
        // Coordinates: F = (valuation mod 2N, multiplicative part mod q-1,
        // principal unit); E = (valuation mod N, multiplicative part mod
        // q^2-1, two principal-unit coordinates swapped by the automorphism).
        FiniteAbelianGroup F({2 * n, q - 1, p});
        FiniteAbelianGroup E({n, checked_mul(q, q) - 1, p, p});
        AbHom incl(F, E, IntMat(4, 3, {1, 0, 0, 0, q + 1, 0, 0, 0, 1, 0, 0, 1}));
        AbHom norm(E, F, IntMat(3, 4, {2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1}));
        AbHom sigma(E, E, IntMat(4, 4, {1, 0, 0, 0, 0, q, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
        ModelCharacter omega(F, {n, 0, 0});
        return assemble_model(F, E, incl, norm, sigma, omega, q, "p-odd-unramified");
    }
    // Ramified: a uniformizer squares to -1 times one of F, so the
    // automorphism and the norm twist the multiplicative part by the
    // valuation times (q-1)/2.
    i64 h = (q - 1) / 2;
    FiniteAbelianGroup F({2 * n, q - 1, p});
    AbHom incl(F, F, IntMat(3, 3, {2, 0, 0, 0, 1, 0, 0, 0, 1}));
    AbHom norm(F, F, IntMat(3, 3, {1, 0, 0, h, 2, 0, 0, 0, 2}));
    AbHom sigma(F, F, IntMat(3, 3, {1, 0, 0, h, 1, 0, 0, 0, 1}));
    ModelCharacter omega(F, {q % 4 == 3 ? n : 0, h, 0});
    return assemble_model(F, F, incl, norm, sigma, omega, q, "p-odd-ramified");
}

std::string case_name(Sl2FieldCase c) {
    switch (c) {
        case Sl2FieldCase::I: return "I";
        case Sl2FieldCase::II: return "II";
        case Sl2FieldCase::III: return "III";
        case Sl2FieldCase::IV: return "IV";
        case Sl2FieldCase::not_distinguished: return "not-distinguished";
    }
    return "?";
}

namespace {

ModelCharacter ratio_of(const LocalUnitModel& m, const PsParameter& p) {
    require_same_group(p.chi1.group(), m.E_group, "PsParameter");
    require_same_group(p.chi2.group(), m.E_group, "PsParameter");
    return p.chi1 * p.chi2.inverse();
}

// All mu on F_group with mu ∘ norm = r.
std::vector<ModelCharacter> norm_solutions(const LocalUnitModel& m, const ModelCharacter& r) {
    std::vector<ModelCharacter> out;
    for (auto& mu : all_characters(m.F_group))
        if (mu.pullback(m.norm) == r) out.push_back(mu);
    return out;
}

std::vector<ModelCharacter> pair_selftwists(const LocalUnitModel& m, const PsParameter& p) {
    std::vector<ModelCharacter> out;
    for (auto& mu : all_characters(m.E_group)) {
        ModelCharacter a = mu * p.chi1;
        ModelCharacter b = mu * p.chi2;
        bool same = (a == p.chi1 && b == p.chi2) || (a == p.chi2 && b == p.chi1);
        if (same) out.push_back(mu);
    }
    return out;
}

// |G / joint kernel of the given characters|: the packet size attached to a
// parameter whose selftwist characters are `twists`.
i64 packet_size(const FiniteAbelianGroup& g, const std::vector<ModelCharacter>& twists) {
    i64 kernel = 0;
    for (auto& x : enumerate_elements(g)) {
        bool in_all = true;
        for (auto& t : twists)
            if (!t.phase(x).is_zero()) {
                in_all = false;
                break;
            }
        if (in_all) ++kernel;
    }
    return g.order() / kernel;
}

}  // namespace

Sl2FieldCase case_classify(const LocalUnitModel& m, const PsParameter& p) {
    ModelCharacter r = ratio_of(m, p);
    if (r.is_trivial()) return Sl2FieldCase::III;
    bool r_triv_on_F = r.pullback(m.incl).is_trivial();
    bool sigma_fixed = r.pullback(m.sigma) == r;
    if (!r_triv_on_F && !sigma_fixed) return Sl2FieldCase::not_distinguished;
    if (!r.pow(2).is_trivial()) {
        if (r_triv_on_F) return Sl2FieldCase::I;
        if (!norm_solutions(m, r).empty()) return Sl2FieldCase::III;
        return Sl2FieldCase::not_distinguished;
    }
    // r has exact order 2
    if (r_triv_on_F) return Sl2FieldCase::IV;
    if (r.pullback(m.incl) == m.omega_EF) return Sl2FieldCase::II;
    return Sl2FieldCase::not_distinguished;
}

SelftwistSizes selftwist_groups(const LocalUnitModel& m, const PsParameter& p) {
    Sl2FieldCase label = case_classify(m, p);
    if (label == Sl2FieldCase::not_distinguished)
        throw std::domain_error("selftwist_groups: parameter is not of distinguished type");
    SelftwistSizes s;
    for (auto& mu : pair_selftwists(m, p)) {
        ++s.Z;
        if (mu.pullback(m.incl).is_trivial()) ++s.Y;
    }
    // Distinguishing characters per case, from the rank-1 multiplicity table.
    switch (label) {
        case Sl2FieldCase::I: s.X = 1; break;
        case Sl2FieldCase::II: s.X = 2; break;
        case Sl2FieldCase::III: s.X = 2; break;
        case Sl2FieldCase::IV: s.X = 3; break;
        default: break;
    }
    return s;
}

i64 m_pi(const LocalUnitModel& m, const PsParameter& p) {
    SelftwistSizes s = selftwist_groups(m, p);
    if (s.Y == 0 || s.Z % s.Y != 0)
        throw std::logic_error("m_pi: selftwists trivial on F do not divide all selftwists");
    i64 zy = s.Z / s.Y;
    if (s.X % zy != 0) throw std::logic_error("m_pi: multiplicity formula is not integral");
    return s.X / zy;
}

std::vector<BcSource> bc_fiber_list(const LocalUnitModel& m, const PsParameter& p) {
    if (case_classify(m, p) == Sl2FieldCase::not_distinguished) return {};
    ModelCharacter r = ratio_of(m, p);
    std::vector<BcSource> out;

    if (!r.is_trivial() && r.pullback(m.incl).is_trivial()) {
        // r = chi / (chi ∘ sigma) has a solution; the solution yields the
        // unique discrete-type source (all solutions differ by norm
        // pullbacks, which are twists).
        bool found = false;
        for (auto& chi : all_characters(m.E_group)) {
            if (chi * chi.pullback(m.sigma).inverse() == r) {
                out.push_back({BcSource::Kind::discrete_series, chi, "Ds" + chi.to_string()});
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("bc_fiber_list: ratio trivial on F has no twisted-conjugacy solution");
    }

    // Principal sources: twist-classes {mu, mu^-1} of solutions of mu ∘ norm = r.
    std::set<ModelCharacter> reps;
    for (auto& mu : norm_solutions(m, r)) reps.insert(std::min(mu, mu.inverse()));
    for (auto& mu : reps)
        out.push_back({BcSource::Kind::principal_series, mu, "Ps(" + mu.to_string() + ",1)"});
    return out;
}

std::vector<ModelCharacter> source_selftwists(const LocalUnitModel& m, const BcSource& s) {
    std::vector<ModelCharacter> out;
    if (s.kind == BcSource::Kind::discrete_series) {
        require_same_group(s.param.group(), m.E_group, "source_selftwists");
        ModelCharacter conj_ratio = s.param.pullback(m.sigma) * s.param.inverse();
        for (auto& nu : all_characters(m.F_group)) {
            ModelCharacter pb = nu.pullback(m.norm);
            if (pb.is_trivial() || pb == conj_ratio) out.push_back(nu);
        }
    } else {
        require_same_group(s.param.group(), m.F_group, "source_selftwists");
        ModelCharacter one = ModelCharacter::trivial(m.F_group);
        for (auto& nu : all_characters(m.F_group)) {
            ModelCharacter a = nu * s.param;
            bool same = (a == s.param && nu == one) || (a == one && nu == s.param);
            if (same) out.push_back(nu);
        }
    }
    return out;
}

namespace {

struct PacketData {
    i64 packet_F, packet_E, cok;
};

PacketData packets_for(const LocalUnitModel& m, const PsParameter& p, const BcSource& src) {
    std::vector<ModelCharacter> z = pair_selftwists(m, p);
    std::vector<ModelCharacter> t = source_selftwists(m, src);
    PacketData d{};
    d.packet_F = packet_size(m.F_group, t);
    d.packet_E = packet_size(m.E_group, z);

    std::set<ModelCharacter> z_set(z.begin(), z.end());
    std::set<ModelCharacter> jt;
    for (auto& nu : t) {
        ModelCharacter pb = nu.pullback(m.norm);
        if (!z_set.count(pb))
            throw std::logic_error("packets_for: source selftwist does not base-change to a selftwist");
        jt.insert(pb);
    }
    i64 jsize = static_cast<i64>(jt.size());
    if (d.packet_E % jsize != 0) throw std::logic_error("packets_for: cokernel is not integral");
    d.cok = d.packet_E / jsize;
    return d;
}

std::optional<ModelCharacter> find_case_ratio(const LocalUnitModel& m, Sl2FieldCase wanted,
                                              bool nontrivial_only) {
    ModelCharacter one = ModelCharacter::trivial(m.E_group);
    for (auto& r : all_characters(m.E_group)) {
        if (nontrivial_only && r.is_trivial()) continue;
        if (case_classify(m, {r, one}) == wanted) return r;
    }
    return std::nullopt;
}

struct RowPlan {
    const char* label;
    Sl2FieldCase wanted;
    size_t source_index;
    ComponentModel::Shape shape;
    const char* map;
    const char* point;
};

// Component models for the base-change map at each witness: unramified twist
// coordinates double without folding (z^2, smooth at 1); in case II both
// coordinates fold and the map ramifies at the witness (z + 1/z at -1); the
// case IV principal rows sit on folded lines away from ramification (w^2 - 2
// at 2).
const RowPlan kRowPlans[7] = {
    {"I", Sl2FieldCase::I, 0, ComponentModel::Shape::torus_coordinate, "z^2", "1"},
    {"II", Sl2FieldCase::II, 0, ComponentModel::Shape::torus_coordinate, "z + 1/z", "-1"},
    {"III(a)", Sl2FieldCase::III, 0, ComponentModel::Shape::torus_coordinate, "z^2", "1"},
    {"III(b)", Sl2FieldCase::III, 1, ComponentModel::Shape::torus_coordinate, "z^2", "1"},
    {"IV(a)", Sl2FieldCase::IV, 0, ComponentModel::Shape::torus_coordinate, "z^2", "1"},
    {"IV(b)", Sl2FieldCase::IV, 1, ComponentModel::Shape::quotient_coordinate, "w^2 - 2", "2"},
    {"IV(c)", Sl2FieldCase::IV, 2, ComponentModel::Shape::quotient_coordinate, "w^2 - 2", "2"},
};

const size_t kExpectedSourceCount[7] = {1, 1, 2, 2, 3, 3, 3};

}  // namespace

std::vector<TableRow> table_reproduce(const LocalUnitModel& m) {
    std::vector<TableRow> rows;
    ModelCharacter one = ModelCharacter::trivial(m.E_group);
    for (int i = 0; i < 7; ++i) {
        const RowPlan& plan = kRowPlans[i];
        TableRow row;
        row.case_label = plan.label;
        std::optional<ModelCharacter> r = find_case_ratio(m, plan.wanted, true);
        if (!r) {
            row.note = "case " + case_name(plan.wanted) + " is not realizable in this model";
            rows.push_back(row);
            continue;
        }
        PsParameter p{*r, one};
        std::vector<BcSource> fibers = bc_fiber_list(m, p);
        if (fibers.size() != kExpectedSourceCount[i])
            throw std::logic_error("table_reproduce: unexpected source count for case " +
                                   case_name(plan.wanted));
        PacketData d = packets_for(m, p, fibers[plan.source_index]);
        row.realized = true;
        row.packet_F = d.packet_F;
        row.packet_E = d.packet_E;
        row.cok = d.cok;
        ComponentModel cm{plan.shape, parse_laurent(plan.map)};
        row.deg_phi = local_degree(cm, parse_point(plan.point));
        if (row.deg_phi % row.cok != 0)
            throw std::logic_error("table_reproduce: local degree is not divisible by the cokernel");
        row.deg_over_cok = row.deg_phi / row.cok;
        rows.push_back(row);
    }
    return rows;
}

const std::vector<std::vector<i64>>& reference_sl2_table() {
    static const std::vector<std::vector<i64>> table = {
        {2, 1, 1, 1, 1}, {1, 2, 2, 2, 1}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1},
        {4, 2, 1, 1, 1}, {2, 2, 1, 1, 1}, {2, 2, 1, 1, 1},
    };
    return table;
}

bool table_matches_reference(const std::vector<TableRow>& rows, std::string* why) {
    const auto& ref = reference_sl2_table();
    if (rows.size() != ref.size()) {
        if (why) *why = "row count mismatch";
        return false;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        const TableRow& r = rows[i];
        if (!r.realized) {
            if (why) *why = "row " + r.case_label + ": " + r.note;
            return false;
        }
        std::vector<i64> got = {r.packet_F, r.packet_E, r.cok, r.deg_phi, r.deg_over_cok};
        if (got != ref[i]) {
            if (why) {
                std::ostringstream os;
                os << "row " << r.case_label << ": got (";
                for (size_t j = 0; j < got.size(); ++j) os << (j ? "," : "") << got[j];
                os << ") expected (";
                for (size_t j = 0; j < ref[i].size(); ++j) os << (j ? "," : "") << ref[i][j];
                os << ")";
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

bool whittaker_kernel_check(const LocalUnitModel& m, const PsParameter& p, const BcSource& p0) {
    std::vector<BcSource> fibers = bc_fiber_list(m, p);
    bool matched = false;
    for (auto& s : fibers)
        if (s.kind == p0.kind && s.param == p0.param) matched = true;
    if (!matched)
        throw std::invalid_argument("whittaker_kernel_check: p0 is not a base-change source of p");

    std::vector<ModelCharacter> z = pair_selftwists(m, p);
    std::set<std::vector<i64>> g_pi;
    for (auto& x : enumerate_elements(m.E_group)) {
        bool in_all = true;
        for (auto& mu : z)
            if (!mu.phase(x).is_zero()) {
                in_all = false;
                break;
            }
        if (in_all) g_pi.insert(x);
    }
    std::vector<ModelCharacter> t = source_selftwists(m, p0);
    std::set<std::vector<i64>> g_pi0;
    for (auto& f : enumerate_elements(m.F_group)) {
        bool in_all = true;
        for (auto& nu : t)
            if (!nu.phase(f).is_zero()) {
                in_all = false;
                break;
            }
        if (in_all) g_pi0.insert(f);
    }

    // The norm must carry G(pi) into G(pi0), otherwise the quotient map the
    // check is about does not even exist.
    for (auto& x : g_pi)
        if (!g_pi0.count(m.norm.apply(x)))
            throw std::logic_error("whittaker_kernel_check: norm does not respect the selftwist kernels");

    std::set<std::vector<i64>> kernel_side;
    for (auto& x : enumerate_elements(m.E_group))
        if (g_pi0.count(m.norm.apply(x))) kernel_side.insert(x);

    std::set<std::vector<i64>> f_side;
    for (auto& f : enumerate_elements(m.F_group)) {
        std::vector<i64> base = m.incl.apply(f);
        for (auto& g : g_pi) {
            std::vector<i64> sum(base);
            for (size_t j = 0; j < sum.size(); ++j) sum[j] = checked_add(sum[j], g[j]);
            f_side.insert(normalize_coords(m.E_group, std::move(sum)));
        }
    }
    return kernel_side == f_side;
}

SweepStats sweep_distinguished(const LocalUnitModel& m) {
    SweepStats stats;
    ModelCharacter one = ModelCharacter::trivial(m.E_group);
    for (auto& r : all_characters(m.E_group)) {
        ++stats.ratios_checked;
        PsParameter p{r, one};
        Sl2FieldCase label = case_classify(m, p);
        if (label == Sl2FieldCase::not_distinguished) continue;
        ++stats.distinguished;
        ++stats.case_counts[static_cast<int>(label)];
        i64 mult = m_pi(m, p);
        std::vector<BcSource> fibers = bc_fiber_list(m, p);
        if (mult != static_cast<i64>(fibers.size())) {
            ++stats.mismatches;
            if (stats.first_failure.empty())
                stats.first_failure = "ratio " + r.to_string() + ": m_pi = " + std::to_string(mult) +
                                      " but " + std::to_string(fibers.size()) + " sources";
            continue;
        }
        for (auto& src : fibers) {
            if (!whittaker_kernel_check(m, p, src)) {
                ++stats.kernel_failures;
                if (stats.first_failure.empty())
                    stats.first_failure = "ratio " + r.to_string() + ": kernel law fails at " + src.label;
            }
        }
    }
    return stats;
}

}  // namespace langfib
