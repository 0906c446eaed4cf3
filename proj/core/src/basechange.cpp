#include "langfib/basechange.hpp"

#include <cctype>

#include "langfib/cohomology.hpp"

namespace langfib {

bool LaurentPoly::is_constant() const {
    for (const auto& [e, c] : terms)
        if (e != 0 && !c.is_zero()) return false;
    return true;
}

CycNumber LaurentPoly::eval(const CycNumber& z) const {
    CycNumber zinv;
    bool have_inv = false;
    CycNumber acc(Rational(0), 1);
    for (const auto& [e, c] : terms) {
        if (c.is_zero()) continue;
        CycNumber p(Rational(1), 1);
        if (e > 0) {
            for (int k = 0; k < e; ++k) p = p * z;
        } else if (e < 0) {
            if (!have_inv) {
                zinv = z.inverse();
                have_inv = true;
            }
            for (int k = 0; k < -e; ++k) p = p * zinv;
        }
        acc = acc + CycNumber(c, 1) * p;
    }
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it->second.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (it->first == 0) {
            out += it->second.to_string();
        } else {
            if (!(it->second == Rational(1))) out += it->second.to_string() + "*";
            out += "z";
            if (it->first != 1) out += "^" + std::to_string(it->first);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

bool is_var(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

// One term: [coef][*|/]var[^exp] or a bare rational. All terms of an
// expression must agree on the variable letter.
void parse_term(const std::string& t, LaurentPoly& out, char& var) {
    if (t.empty()) throw std::invalid_argument("empty term in map expression");
    size_t vpos = std::string::npos;
    for (size_t i = 0; i < t.size(); ++i)
        if (is_var(t[i])) {
            vpos = i;
            break;
        }
    if (vpos == std::string::npos) {
        Rational c = parse_rational(t);
        out.terms[0] = out.terms.count(0) ? out.terms[0] + c : c;
        return;
    }
    if (var == 0)
        var = t[vpos];
    else if (t[vpos] != var)
        throw std::invalid_argument("mixed variable names in map expression");
    Rational coef(1);
    bool reciprocal = false;
    std::string pre = t.substr(0, vpos);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    if (!pre.empty() && pre.back() == '/') {
        reciprocal = true;
        pre.pop_back();
    }
    if (pre == "-")
        coef = Rational(-1);
    else if (!pre.empty())
        coef = parse_rational(pre);

    int exp = 1;
    size_t p = vpos + 1;
    if (p < t.size()) {
        if (t[p] != '^') throw std::invalid_argument("bad term syntax: " + t);
        exp = std::stoi(t.substr(p + 1));
    }
    if (reciprocal) exp = -exp;
    out.terms[exp] = out.terms.count(exp) ? out.terms[exp] + coef : coef;
}

}  // namespace

LaurentPoly parse_laurent(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty map expression");

    LaurentPoly out;
    char var = 0;
    size_t start = 0;
    for (size_t i = 1; i <= t.size(); ++i) {
        if (i == t.size() || ((t[i] == '+' || t[i] == '-') && t[i - 1] != '^' && t[i - 1] != '*' && t[i - 1] != '/')) {
            std::string term = t.substr(start, i - start);
            if (term == "+" || term.empty()) throw std::invalid_argument("bad map expression: " + s);
            if (term[0] == '+') term.erase(0, 1);
            parse_term(term, out, var);
            start = i;
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
    return out;
}

CycNumber parse_point(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty point");

    bool neg = false;
    size_t p = 0;
    if (t[p] == '+' || t[p] == '-') neg = t[p++] == '-';

    Rational coef(1);
    size_t numstart = p;
    while (p < t.size() && (std::isdigit(static_cast<unsigned char>(t[p])) || t[p] == '/')) ++p;
    if (p > numstart) coef = parse_rational(t.substr(numstart, p - numstart));
    if (p < t.size() && t[p] == '*') ++p;
    if (neg) coef = -coef;

    if (p == t.size()) return CycNumber(coef, 1);

    int n = 0, k = 1;
    if (t[p] == 'i' && p + 1 == t.size()) {
        n = 4;
    } else if (t.compare(p, 4, "zeta") == 0) {
        p += 4;
        size_t q = p;
        while (q < t.size() && std::isdigit(static_cast<unsigned char>(t[q]))) ++q;
        if (q == p) throw std::invalid_argument("zeta needs an order: " + s);
        n = std::stoi(t.substr(p, q - p));
        p = q;
        if (p < t.size()) {
            if (t[p] != '^') throw std::invalid_argument("bad point syntax: " + s);
            k = std::stoi(t.substr(p + 1));
        }
    } else {
        throw std::invalid_argument("bad point syntax: " + s);
    }
    return CycNumber(coef, 1) * CycNumber::root_of_unity(n, k);
}

int local_degree(const ComponentModel& model, const CycNumber& z0) {
    if (model.map.is_constant()) throw std::invalid_argument("local_degree: map must be nonconstant");
    if (z0.is_zero()) throw std::domain_error("local_degree: point not on the component");

    CycNumber v0 = model.map.eval(z0);
    // exponent range, widened to include 0 so the constant -f(z0) fits after shifting
    int emin = 0, emax = 0;
    for (const auto& [e, c] : model.map.terms)
        if (!c.is_zero()) {
            emin = std::min(emin, e);
            emax = std::max(emax, e);
        }

    // h(z) = z^{-emin} (f(z) - f(z0)); vanishing order at z0 is unchanged
    std::vector<CycNumber> h(static_cast<size_t>(emax - emin) + 1, CycNumber(Rational(0), 1));
    for (const auto& [e, c] : model.map.terms) h[e - emin] = CycNumber(c, 1);
    h[-emin] = h[-emin] - v0;

    int mult = 0;
    while (true) {
        // Horner remainder and synthetic quotient by (z - z0)
        CycNumber rem(Rational(0), 1);
        std::vector<CycNumber> quot(h.size() > 1 ? h.size() - 1 : 0, CycNumber(Rational(0), 1));
        CycNumber carry(Rational(0), 1);
        for (size_t i = h.size(); i-- > 0;) {
            CycNumber v = h[i] + carry;
            if (i == 0) {
                rem = v;
            } else {
                quot[i - 1] = v;
                carry = v * z0;
            }
        }
        if (!rem.is_zero()) break;
        ++mult;
        h = quot;
        if (h.empty()) break;
    }
    if (mult == 0) throw std::logic_error("local_degree: point is not in the fiber of its own value");
    return mult;
}

i64 unramified_bc_degree(const GroupForm& form, bool force_split) {
    validate(form.datum);
    validate_action(form.datum, form.galois);
    if (form.galois.order > 2)
        throw std::invalid_argument("unramified_bc_degree: only quadratic galois actions are supported");
    if (form.galois.trivial() && !force_split)
        throw std::invalid_argument(
            "unramified_bc_degree: split form; the degree formula assumes splitting by the quadratic extension");
    return tate(1, CyclicModule::lattice(form.galois.generator, 2)).group.order();
}

}  // namespace langfib
