#include "langfib/fibers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace langfib {

void validate(const SymbolicParameter& p) {
    std::map<std::string, const IrredTag*> by_id;
    i64 total = 0;
    for (const IrredTag& t : p.tags) {
        if (t.dim < 1 || t.mult < 1) throw std::invalid_argument("tag with nonpositive dim or mult");
        if (t.id.empty() || !by_id.emplace(t.id, &t).second)
            throw std::invalid_argument("tag ids must be nonempty and distinct");
        total = checked_add(total, checked_mul(t.dim, t.mult));
    }
    if (total != p.ambient_n) throw std::invalid_argument("tag dimensions do not sum to the ambient n");
    for (const IrredTag& t : p.tags) {
        if (p.setting == Setting::GL && t.duality != TagDuality::none)
            throw std::invalid_argument("GL-setting tag cannot carry a duality mark: " + t.id);
        if (t.galois == TagGalois::paired) {
            auto it = by_id.find(t.partner);
            if (it == by_id.end() || it->second == &t)
                throw std::invalid_argument("paired tag without a distinct partner: " + t.id);
            const IrredTag& q = *it->second;
            if (q.galois != TagGalois::paired || q.partner != t.id)
                throw std::invalid_argument("pairing is not reciprocal: " + t.id);
            if (q.dim != t.dim || q.mult != t.mult)
                throw std::invalid_argument("paired tags must share dim and mult: " + t.id);
        } else if (p.setting == Setting::U && t.duality == TagDuality::none) {
            throw std::invalid_argument("U-setting fixed tag needs a duality mark: " + t.id);
        }
    }
}

CentralizerShape centralizer(const SymbolicParameter& p) {
    validate(p);
    CentralizerShape shape;
    std::set<std::string> consumed;
    for (const IrredTag& t : p.tags) {
        if (consumed.count(t.id)) continue;
        CentralizerFactor f;
        f.size = t.mult;
        if (t.galois == TagGalois::paired) {
            consumed.insert(t.partner);
            f.label = t.id + "<->" + t.partner;
            f.type = InvolutionType::swap_pair;
        } else {
            f.label = t.id;
            if (p.setting == Setting::GL)
                f.type = InvolutionType::inner;
            else
                f.type = t.duality == TagDuality::orthogonal ? InvolutionType::outer_symmetric
                                                             : InvolutionType::outer_skew;
        }
        consumed.insert(t.id);
        shape.factors.push_back(std::move(f));
    }
    return shape;
}

i64 lift_count(const CentralizerShape& shape) {
    i64 n = 1;
    for (const CentralizerFactor& f : shape.factors)
        if (f.type == InvolutionType::inner) n = checked_mul(n, f.size + 1);
    return n;
}

std::vector<std::pair<int, int>> inner_h1_signatures(int m) {
    if (m < 0) throw std::invalid_argument("inner_h1_signatures: negative size");
    std::vector<std::pair<int, int>> out;
    out.reserve(m + 1);
    for (int q = 0; q <= m; ++q) out.push_back({m - q, q});
    return out;
}

FiniteAbelianGroup ComponentGroup::group() const {
    return FiniteAbelianGroup(std::vector<i64>(generator_labels.size(), 2));
}

ComponentGroup component_group(const SymbolicParameter& p, Level level) {
    validate(p);
    ComponentGroup g;
    if (level == Level::over_E) return g;  // products of GL_m(C): connected
    if (p.setting == Setting::U) {
        for (const IrredTag& t : p.tags)
            if (t.galois == TagGalois::fixed && t.duality == TagDuality::orthogonal)
                g.generator_labels.push_back(t.id);
    }
    // GL-setting over F: the fixed-point factors are again general linear groups
    return g;
}

int sl2_h1_size(Sl2Case c) {
    switch (c) {
        case Sl2Case::o2_trivial: return 3;
        case Sl2Case::o2_inner_order4: return 1;
        case Sl2Case::o2_reflection: return 3;
        case Sl2Case::cx_trivial: return 2;
        case Sl2Case::cx_inversion: return 1;
        case Sl2Case::z2_trivial: return 2;
        case Sl2Case::klein_trivial: return 4;
        case Sl2Case::klein_unipotent: return 1;
    }
    throw std::invalid_argument("unknown rank-1 case");
}

ComponentGroup component_group(Sl2Case c, Level level) {
    ComponentGroup g;
    auto z2 = [&](const std::string& l) { g.generator_labels.push_back(l); };
    if (level == Level::over_E) {
        switch (c) {
            case Sl2Case::o2_trivial:
            case Sl2Case::o2_inner_order4:
            case Sl2Case::o2_reflection: z2("det"); break;
            case Sl2Case::cx_trivial:
            case Sl2Case::cx_inversion: break;
            case Sl2Case::z2_trivial: z2("z"); break;
            case Sl2Case::klein_trivial:
            case Sl2Case::klein_unipotent:
                z2("z1");
                z2("z2");
                break;
        }
        return g;
    }
    switch (c) {
        case Sl2Case::o2_trivial: z2("det"); break;
        case Sl2Case::o2_inner_order4: break;  // fixed points: the connected torus SO_2
        case Sl2Case::o2_reflection:           // fixed points: {1, -1, r, -r}
            z2("-1");
            z2("r");
            break;
        case Sl2Case::cx_trivial: break;
        case Sl2Case::cx_inversion: break;  // classified as trivial alongside the other C^x case
        case Sl2Case::z2_trivial: z2("z"); break;
        case Sl2Case::klein_trivial:
            z2("z1");
            z2("z2");
            break;
        case Sl2Case::klein_unipotent: z2("diag"); break;
    }
    return g;
}

Sl2Case parse_sl2_case(const std::string& name) {
    for (Sl2Case c : all_sl2_cases())
        if (sl2_case_name(c) == name) return c;
    throw std::invalid_argument("unknown rank-1 case: " + name);
}

std::string sl2_case_name(Sl2Case c) {
    switch (c) {
        case Sl2Case::o2_trivial: return "o2-trivial";
        case Sl2Case::o2_inner_order4: return "o2-inner-order4";
        case Sl2Case::o2_reflection: return "o2-reflection";
        case Sl2Case::cx_trivial: return "cx-trivial";
        case Sl2Case::cx_inversion: return "cx-inversion";
        case Sl2Case::z2_trivial: return "z2-trivial";
        case Sl2Case::klein_trivial: return "klein-trivial";
        case Sl2Case::klein_unipotent: return "klein-unipotent";
    }
    throw std::invalid_argument("unknown rank-1 case");
}

std::vector<Sl2Case> all_sl2_cases() {
    return {Sl2Case::o2_trivial,   Sl2Case::o2_inner_order4, Sl2Case::o2_reflection,
            Sl2Case::cx_trivial,   Sl2Case::cx_inversion,    Sl2Case::z2_trivial,
            Sl2Case::klein_trivial, Sl2Case::klein_unipotent};
}

i64 d0_from_pi0(const AbHom& f) {
    for (i64 d : f.src.factors)
        if (d != 2) throw std::invalid_argument("d0: source is not an elementary 2-group");
    for (i64 d : f.dst.factors)
        if (d != 2) throw std::invalid_argument("d0: target is not an elementary 2-group");
    return hom_cokernel(f).order();
}

i64 conjecture3_multiplicity(i64 deg_phi, i64 d0, bool character_condition) {
    if (deg_phi < 1 || d0 < 1) throw std::invalid_argument("multiplicity inputs must be positive");
    if (deg_phi % d0 != 0)
        throw std::invalid_argument("multiplicity: d0 does not divide the map degree (inconsistent inputs)");
    return character_condition ? deg_phi / d0 : 0;
}

}  // namespace langfib
