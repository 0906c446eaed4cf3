// Command line front end: table emission and self-verifying wrappers around
// the library. JSON is the canonical format; md and csv render the same
// payload. Exit codes: 0 ok, 1 verification failure, 2 usage, 3 internal
// inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "langfib/basechange.hpp"
#include "langfib/cohomology.hpp"
#include "langfib/fibers.hpp"
#include "langfib/gl2chars.hpp"
#include "langfib/hermorb.hpp"
#include "langfib/omega.hpp"
#include "langfib/rootdata.hpp"
#include "langfib/sl2model.hpp"

using nlohmann::json;
using namespace langfib;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string value_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Payload convention: a JSON object; the optional keys "columns" (strings)
// and "rows" (arrays) carry tabular data, everything else is scalar metadata.
std::string render(const json& payload, const std::string& fmt) {
    if (fmt == "json") return payload.dump(2) + "\n";
    const bool tabular = payload.contains("columns") && payload.contains("rows");
    std::ostringstream out;
    if (fmt == "csv") {
        if (tabular) {
            const auto& cols = payload["columns"];
            for (std::size_t i = 0; i < cols.size(); ++i)
                out << (i ? "," : "") << csv_quote(value_text(cols[i]));
            out << "\n";
            for (const auto& row : payload["rows"]) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << csv_quote(value_text(row[i]));
                out << "\n";
            }
        } else {
            out << "key,value\n";
            for (const auto& [k, v] : payload.items())
                out << csv_quote(k) << "," << csv_quote(value_text(v)) << "\n";
        }
        return out.str();
    }
    // markdown
    for (const auto& [k, v] : payload.items()) {
        if (k == "columns" || k == "rows") continue;
        out << k << ": " << value_text(v) << "\n";
    }
    if (tabular) {
        const auto& cols = payload["columns"];
        out << "\n|";
        for (const auto& c : cols) out << " " << value_text(c) << " |";
        out << "\n|";
        for (std::size_t i = 0; i < cols.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& row : payload["rows"]) {
            out << "|";
            for (const auto& v : row) out << " " << value_text(v) << " |";
            out << "\n";
        }
    }
    return out.str();
}

IntMat mat_from_json(const json& j) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols)
            throw std::invalid_argument("matrix rows have unequal lengths");
        for (int c = 0; c < cols; ++c) m.at(i, c) = j.at(i).at(c).get<i64>();
    }
    return m;
}

int matrix_order(const IntMat& a) {
    IntMat p = a;
    for (int k = 1; k <= 16; ++k) {
        if (p.is_identity()) return k;
        p = p * a;
    }
    throw std::invalid_argument("matrix order exceeds 16");
}

// A form is a catalog tag, inline JSON, or @file with the root-datum schema
// {"rank", "roots", "coroots", "simple", "galois"?, "label"?}.
GroupForm parse_form(std::string spec) {
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot read form file " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        spec = ss.str();
    }
    const auto first = spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && spec[first] == '{') {
        const json j = json::parse(spec);
        GroupForm f;
        f.datum.rank = j.at("rank").get<int>();
        for (const auto& r : j.at("roots")) f.datum.roots.push_back(r.get<std::vector<i64>>());
        for (const auto& r : j.at("coroots")) f.datum.coroots.push_back(r.get<std::vector<i64>>());
        f.datum.simple = j.at("simple").get<std::vector<int>>();
        f.label = j.value("label", "custom");
        f.datum.name = f.label;
        if (j.contains("galois")) {
            f.galois.generator = mat_from_json(j.at("galois"));
            f.galois.order = matrix_order(f.galois.generator);
        } else {
            f.galois.generator = IntMat::identity(f.datum.rank);
            f.galois.order = 1;
        }
        validate(f.datum);
        validate_action(f.datum, f.galois);
        return f;
    }
    return build_standard(spec);
}

json sl2_rows_payload(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({r.case_label, r.packet_F, r.packet_E, r.cok, r.deg_phi, r.deg_over_cok,
                       r.realized ? "yes" : "no"});
    return out;
}

std::string group_text(const FiniteAbelianGroup& g) { return g.to_string(); }

int run_sl2_table(i64 q, i64 level, bool ramified, bool verify, const std::string& fmt) {
    const LocalUnitModel model =
        build_model(ramified ? ExtPreset::p_odd_ramified : ExtPreset::p_odd_unramified, q, level);
    const auto rows = table_reproduce(model);
    json payload = {
        {"q", q},
        {"level", level},
        {"preset", model.preset_name},
        {"columns", {"case", "packet_F", "packet_E", "cok", "deg_phi", "deg_over_cok", "realized"}},
        {"rows", sl2_rows_payload(rows)},
    };
    std::string why;
    const bool match = table_matches_reference(rows, &why);
    if (verify) {
        payload["matches_reference"] = match;
        if (!match) payload["mismatch"] = why;
    }
    std::cout << render(payload, fmt);
    return verify && !match ? kExitVerify : kExitOk;
}

int run_ff_verify(int q, const std::string& group, const std::string& fmt) {
    const GroupKind kind = group == "gl2" ? GroupKind::GL2 : GroupKind::SL2;
    const TheoremReport rep = verify_theorem1(q, kind);
    json rows = json::array();
    const BigField& tower = tower_for_prime(q);
    const GroupData gd = build_group(kind, q * q, tower);
    for (const auto& r : rep.rows)
        rows.push_back({r.label, r.degree, r.dim, r.sigma_dual ? "yes" : "no",
                        sh_condition_name(r.condition)});
    json payload = {
        {"q", q},
        {"group", group},
        {"group_order", rep.group_order},
        {"classes", gd.classes.size()},
        {"orthogonality_error", rep.orth_error},
        {"checked", rep.checked},
        {"unknown", rep.unknown},
        {"aggregate_ok", rep.aggregate_ok},
        {"columns", {"character", "degree", "invariant_dim", "sigma_dual", "condition"}},
        {"rows", rows},
    };
    std::cout << render(payload, fmt);
    return rep.aggregate_ok ? kExitOk : kExitVerify;
}

int run_omega(const std::string& form_spec, const std::string& fmt) {
    const GroupForm f = parse_form(form_spec);
    const CenterDualClass c = omega_class(f);
    json cls = json::array();
    for (std::size_t i = 0; i < c.element.size(); ++i)
        cls.push_back(Rational(c.element[i], c.ambient.factors[i]).to_string());
    json payload = {
        {"form", f.label},
        {"trivial", c.trivial},
        {"order", c.order},
        {"class", cls},
        {"ambient", group_text(c.ambient)},
        {"galois_trivialized", c.galois_trivialized},
    };
    std::cout << render(payload, fmt);
    return kExitOk;
}

int run_bc_degree(const std::string& form_spec, const std::string& fmt) {
    const GroupForm f = parse_form(form_spec);
    const i64 deg = unramified_bc_degree(f);
    json payload = {{"form", f.label}, {"degree", deg}};
    std::cout << render(payload, fmt);
    return kExitOk;
}

int run_local_degree(const std::string& map, const std::string& at, const std::string& fmt) {
    ComponentModel model;
    model.map = parse_laurent(map);
    model.shape = map.find('w') != std::string::npos ? ComponentModel::Shape::quotient_coordinate
                                                     : ComponentModel::Shape::torus_coordinate;
    const CycNumber z0 = parse_point(at);
    const int deg = local_degree(model, z0);
    json payload = {{"map", map}, {"at", z0.to_string()}, {"degree", deg}};
    std::cout << render(payload, fmt);
    return kExitOk;
}

int run_unitary_mult(const std::string& chars, const std::string& fmt) {
    const json j = json::parse(chars);
    std::vector<std::pair<i64, i64>> exps;
    const json& list = j.is_object() ? j.at("exponents") : j;
    for (const auto& e : list) exps.emplace_back(e.at(0).get<i64>(), e.at(1).get<i64>());
    const ArchParameter p = arch_parameter_from_exponents(exps);
    const UnitaryMultTable t = u_pq_multiplicity(p);
    json rows = json::array();
    for (const auto& [sig, dim] : t.dims) rows.push_back({sig.first, sig.second, dim});
    json payload = {
        {"n", p.n()},      {"pairs", t.k},
        {"fixed", t.l},    {"total", t.total},
        {"bc_preimages", t.bc_preimages},
        {"columns", {"p", "q", "dim"}},
        {"rows", rows},
    };
    std::cout << render(payload, fmt);
    return kExitOk;
}

int run_orbits(const std::string& tag, const std::string& fmt) {
    const GroupForm f = build_standard(tag);
    const WeylOrbitTable t = weyl_innerform_count(f.datum);
    json rows = json::array();
    for (const auto& o : t.orbits) {
        std::string rep;
        for (i64 v : o.representative) rep += v ? '1' : '0';
        rows.push_back({rep, o.size, o.stabilizer_order});
    }
    json payload = {
        {"type", tag},
        {"rank", t.rank},
        {"weyl_order", t.weyl_order},
        {"total", t.total},
        {"columns", {"representative", "size", "stabilizer_order"}},
        {"rows", rows},
    };
    std::cout << render(payload, fmt);
    return kExitOk;
}

int run_padic_split(int n, const std::string& fmt) {
    const PadicSplit s = padic_orbit_split(n);
    json payload = {{"n", n}, {"plus", s.plus}, {"minus", s.minus}, {"total", s.total()}};
    std::cout << render(payload, fmt);
    return kExitOk;
}

// Module schema: {"kind":"lattice","action":[[int]],"order":int} or
// {"kind":"finite","factors":[int],"action":[[int]],"order":int?}.
int run_tate(int degree, const std::string& chars, const std::string& fmt) {
    std::string text = chars;
    if (text.empty()) {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    const json j = json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    CyclicModule m;
    if (kind == "lattice") {
        m = CyclicModule::lattice(mat_from_json(j.at("action")), j.at("order").get<int>());
    } else if (kind == "finite") {
        FiniteAbelianGroup g(j.at("factors").get<std::vector<i64>>());
        m = CyclicModule::finite(g, mat_from_json(j.at("action")), j.value("order", 2));
    } else {
        throw std::invalid_argument("module kind must be lattice or finite");
    }
    const TateGroup t = tate(degree, m);
    json payload = {
        {"degree", degree},
        {"invariant_factors", t.group.factors},
        {"order", t.group.order()},
        {"group", group_text(t.group)},
    };
    std::cout << render(payload, fmt);
    return kExitOk;
}

// Parameter schema: {"setting":"GL|U","n":int,"tags":[{"id"?, "dim", "mult",
// "galois":"fixed|pair:<id>", "duality":"orth|symp"?}]}.
int run_lift_count(const std::string& chars, const std::string& fmt) {
    const json j = json::parse(chars);
    SymbolicParameter p;
    const std::string setting = j.at("setting").get<std::string>();
    if (setting == "GL")
        p.setting = Setting::GL;
    else if (setting == "U")
        p.setting = Setting::U;
    else
        throw std::invalid_argument("setting must be GL or U");
    p.ambient_n = j.at("n").get<int>();
    int auto_id = 0;
    for (const auto& tj : j.at("tags")) {
        IrredTag t;
        t.id = tj.value("id", "t" + std::to_string(auto_id));
        ++auto_id;
        t.dim = tj.value("dim", 1);
        t.mult = tj.value("mult", 1);
        const std::string g = tj.value("galois", "fixed");
        if (g == "fixed") {
            t.galois = TagGalois::fixed;
        } else if (g.rfind("pair:", 0) == 0) {
            t.galois = TagGalois::paired;
            t.partner = g.substr(5);
        } else {
            throw std::invalid_argument("galois must be fixed or pair:<id>");
        }
        if (tj.contains("duality")) {
            const std::string d = tj.at("duality").get<std::string>();
            if (d == "orth")
                t.duality = TagDuality::orthogonal;
            else if (d == "symp")
                t.duality = TagDuality::symplectic;
            else
                throw std::invalid_argument("duality must be orth or symp");
        }
        p.tags.push_back(std::move(t));
    }
    validate(p);
    const CentralizerShape shape = centralizer(p);
    json rows = json::array();
    const char* names[] = {"inner", "outer_symmetric", "outer_skew", "swap_pair", "none"};
    for (const auto& f : shape.factors) {
        const i64 h1 = f.type == InvolutionType::inner ? f.size + 1 : 1;
        rows.push_back({f.label, f.size, names[static_cast<int>(f.type)], h1});
    }
    json payload = {
        {"setting", setting},
        {"lift_count", lift_count(shape)},
        {"columns", {"factor", "size", "type", "h1"}},
        {"rows", rows},
    };
    std::cout << render(payload, fmt);
    return kExitOk;
}

int run_weyl(const std::string& form_spec, const std::string& fmt) {
    const GroupForm f = parse_form(form_spec);
    const auto w = weyl_group(f.datum);
    const IntMat w0 = longest_element(f.datum);
    const OuterAction iota = duality_involution(f.datum);
    json payload = {
        {"form", f.label},
        {"rank", f.datum.rank},
        {"order", w.size()},
        {"minus_one_in_weyl", minus_one_in_weyl(f.datum)},
        {"duality_trivial", iota.trivial()},
        {"w0_is_minus_identity", (-w0).is_identity()},
    };
    std::cout << render(payload, fmt);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite computations behind quadratic base change: tables, characters, orbits"};
    app.require_subcommand(1);

    std::string fmt;
    const char* env_fmt = std::getenv("LANGFIB_FORMAT");
    std::string default_fmt = env_fmt ? env_fmt : "md";
    app.add_option("--format", fmt, "Output format: md, csv, json")
        ->envname("LANGFIB_FORMAT")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    long long seed = 0;
    app.add_option("--seed", seed, "Seed for randomized corpora (reserved; output is deterministic)");

    auto* sl2 = app.add_subcommand("sl2-table", "Distinguished principal-series table of the rank one model");
    i64 q = 3, level = 8;
    bool ramified = false, verify = false;
    sl2->add_option("--q", q, "Residue field size, odd prime power");
    sl2->add_option("--level", level, "Even truncation level N >= 2");
    sl2->add_flag("--ramified", ramified, "Use the ramified preset");
    sl2->add_flag("--verify", verify, "Compare against the reference table; exit 1 on mismatch");

    auto* ff = app.add_subcommand("ff-verify", "Finite field distinction brute force over F_{q^2}/F_q");
    int ffq = 2;
    std::string ffgroup = "gl2";
    ff->add_option("--q", ffq, "Base field size")->check(CLI::IsMember({"2", "3"}));
    ff->add_option("--group", ffgroup, "gl2 or sl2")->check(CLI::IsMember({"gl2", "sl2"}));

    auto* om = app.add_subcommand("omega", "Quadratic character class of a form");
    std::string om_form;
    om->add_option("--form", om_form, "Catalog tag, inline JSON, or @file")->required();

    auto* bc = app.add_subcommand("bc-degree", "Unramified base change degree of a form");
    std::string bc_form;
    bc->add_option("--form", bc_form, "Catalog tag, inline JSON, or @file")->required();

    auto* ld = app.add_subcommand("local-degree", "Vanishing order of a coordinate map at a point");
    std::string ld_map, ld_at;
    ld->add_option("--map", ld_map, "Laurent polynomial, e.g. \"z+1/z\" or \"w^2-2\"")->required();
    ld->add_option("--at", ld_at, "Point: rational times root of unity, e.g. \"-1\", \"zeta8^3\"")->required();

    auto* um = app.add_subcommand("unitary-mult", "Signature multiplicity table of an archimedean parameter");
    std::string um_chars;
    um->add_option("--chars", um_chars, "JSON list of exponent pairs [[a,b],...]")->required();

    auto* orb = app.add_subcommand("orbits", "Weyl orbits on 2-torsion: the innerform count identity");
    std::string orb_type;
    orb->add_option("--type", orb_type, "Catalog tag, e.g. B_2")->required();

    auto* ps = app.add_subcommand("padic-split", "Split of sign vectors into the two p-adic hermitian classes");
    int ps_n = 1;
    ps->add_option("--n", ps_n, "Number of rank one pieces")->required()->check(CLI::Range(0, 24));

    auto* tt = app.add_subcommand("tate", "Tate cohomology of a cyclic module (JSON from --chars or stdin)");
    int tt_n = 0;
    std::string tt_chars;
    tt->add_option("--n", tt_n, "Cohomological degree");
    tt->add_option("--chars", tt_chars, "Module JSON (read from stdin when omitted)");

    auto* lc = app.add_subcommand("lift-count", "Base change lift count of a symbolic parameter");
    std::string lc_chars;
    lc->add_option("--chars", lc_chars, "Parameter JSON")->required();

    auto* wy = app.add_subcommand("weyl", "Weyl group facts of a form");
    std::string wy_form;
    wy->add_option("--form", wy_form, "Catalog tag, inline JSON, or @file")->required();

    // --format and --seed live on the parent; let them appear after the
    // subcommand name as well.
    for (auto* s : app.get_subcommands(nullptr)) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }
    if (fmt.empty()) {
        fmt = default_fmt;
        if (fmt != "md" && fmt != "csv" && fmt != "json") {
            std::cerr << "invalid LANGFIB_FORMAT: " << fmt << "\n";
            return kExitUsage;
        }
    }

    try {
        if (*sl2) return run_sl2_table(q, level, ramified, verify, fmt);
        if (*ff) return run_ff_verify(ffq, ffgroup, fmt);
        if (*om) return run_omega(om_form, fmt);
        if (*bc) return run_bc_degree(bc_form, fmt);
        if (*ld) return run_local_degree(ld_map, ld_at, fmt);
        if (*um) return run_unitary_mult(um_chars, fmt);
        if (*orb) return run_orbits(orb_type, fmt);
        if (*ps) return run_padic_split(ps_n, fmt);
        if (*tt) return run_tate(tt_n, tt_chars, fmt);
        if (*lc) return run_lift_count(lc_chars, fmt);
        if (*wy) return run_weyl(wy_form, fmt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
