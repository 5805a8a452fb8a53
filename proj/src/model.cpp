#include "csp/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace csp {

bool FiberModel::zero_differential() const {
    for (auto& p : d)
        if (!p.is_zero()) return false;
    return true;
}

std::vector<int> FiberModel::degrees() const {
    std::vector<int> r;
    r.reserve(gens.size());
    for (auto& g : gens) r.push_back(g.degree);
    return r;
}

int FiberModel::find_gen(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i);
    return -1;
}

namespace {

// Shared Leibniz walk. diff[i] is the differential of generator i; t is a cycle.
Polynomial leibniz(const GeneratorList& gens, const std::vector<Polynomial>& diff,
                   const Polynomial& p) {
    Polynomial out;
    for (auto& [m, c] : p.terms) {
        // odd part: D(v_{i0}..v_{ik}) = sum_j (-1)^j v_{..^j..} D(v_{ij}); the
        // differential of an odd generator has even degree and commutes out.
        for (size_t j = 0; j < m.odd.size(); ++j) {
            const Polynomial& dg = diff[m.odd[j]];
            if (dg.is_zero()) continue;
            Monomial rest = m;
            rest.odd.erase(rest.odd.begin() + static_cast<long>(j));
            Rational coef = (j % 2 == 0) ? c : -c;
            out += coef * (Polynomial::monomial(rest) * dg);
        }
        // even part: D(x^e) = e x^(e-1) D(x), no sign.
        for (size_t j = 0; j < m.even.size(); ++j) {
            const Polynomial& dg = diff[m.even[j].first];
            if (dg.is_zero()) continue;
            Monomial rest = m;
            if (rest.even[j].second == 1)
                rest.even.erase(rest.even.begin() + static_cast<long>(j));
            else
                rest.even[j].second -= 1;
            out += (c * m.even[j].second) * (Polynomial::monomial(rest) * dg);
        }
    }
    return out;
}

void check_generators(const GeneratorList& gens, ValidationReport& rep) {
    std::set<std::string> names;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree < 2)
            rep.violations.push_back("generator " + gens[i].name +
                                     " has degree < 2 (model not simply connected)");
        if (!names.insert(gens[i].name).second)
            rep.violations.push_back("duplicate generator name " + gens[i].name);
        if (i + 1 < gens.size() && gens[i + 1].degree < gens[i].degree)
            rep.violations.push_back("generators not in degree order at " + gens[i + 1].name);
    }
}

void check_differentials(const GeneratorList& gens, const std::vector<Polynomial>& diff,
                         bool allow_t, ValidationReport& rep) {
    for (size_t i = 0; i < diff.size(); ++i) {
        const Polynomial& dg = diff[i];
        if (dg.is_zero()) continue;
        for (auto& [m, c] : dg.terms) {
            std::string where = "d " + gens[i].name + " term " + to_string(m, gens);
            if (m.degree(gens) != gens[i].degree + 1)
                rep.violations.push_back(where + ": degree " + std::to_string(m.degree(gens)) +
                                         " != " + std::to_string(gens[i].degree + 1));
            if (m.word_length() < 2)
                rep.violations.push_back(where + ": not decomposable");
            if (!allow_t && m.t_exp > 0)
                rep.violations.push_back(where + ": fiber differential involves t");
            for (int j : m.odd)
                if (j >= static_cast<int>(i))
                    rep.violations.push_back(where + ": involves " + gens[j].name +
                                             " not earlier in the generator order");
            for (auto& [j, e] : m.even)
                if (j >= static_cast<int>(i))
                    rep.violations.push_back(where + ": involves " + gens[j].name +
                                             " not earlier in the generator order");
        }
    }
    // d of d
    for (size_t i = 0; i < diff.size(); ++i) {
        if (diff[i].is_zero()) continue;
        Polynomial dd = leibniz(gens, diff, diff[i]);
        if (!dd.is_zero())
            rep.violations.push_back("d^2 " + gens[i].name + " = " + to_string(dd, gens) +
                                     " != 0");
    }
}

}  // namespace

Polynomial apply_differential(const FiberModel& m, const Polynomial& p) {
    return leibniz(m.gens, m.d, p);
}

Polynomial apply_differential(const RelativeModel& m, const Polynomial& p) {
    return leibniz(m.fiber.gens, m.D, p);
}

ValidationReport validate_model(const FiberModel& m) {
    ValidationReport rep;
    check_generators(m.gens, rep);
    if (m.d.size() != m.gens.size()) {
        rep.violations.push_back("differential list does not match generator list");
        return rep;
    }
    check_differentials(m.gens, m.d, /*allow_t=*/false, rep);
    return rep;
}

ValidationReport validate_model(const RelativeModel& m) {
    ValidationReport rep;
    check_generators(m.fiber.gens, rep);
    if (m.fiber.d.size() != m.fiber.gens.size() || m.D.size() != m.fiber.gens.size()) {
        rep.violations.push_back("differential list does not match generator list");
        return rep;
    }
    check_differentials(m.fiber.gens, m.fiber.d, /*allow_t=*/false, rep);
    check_differentials(m.fiber.gens, m.D, /*allow_t=*/true, rep);
    // D modulo (t) must recover the fiber differential.
    for (size_t i = 0; i < m.D.size(); ++i) {
        Polynomial mod_t;
        for (auto& [mon, c] : m.D[i].terms)
            if (mon.t_exp == 0) mod_t.terms.emplace(mon, c);
        if (!(mod_t - m.fiber.d[i]).is_zero())
            rep.violations.push_back("D " + m.fiber.gens[i].name +
                                     " does not restrict to the fiber differential mod (t)");
    }
    return rep;
}

FiberModel sphere_product_fiber(const std::vector<int>& degrees) {
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    FiberModel m;
    for (size_t i = 0; i < sorted.size(); ++i)
        m.gens.push_back({"v" + std::to_string(i + 1), sorted[i]});
    m.d.assign(sorted.size(), Polynomial::zero());
    return m;
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

// Longest declared generator name (or "t") starting at the cursor.
int match_name(Cursor& c, const GeneratorList& gens, bool& is_t) {
    c.skip_ws();
    int best = -1;
    size_t best_len = 0;
    for (size_t g = 0; g < gens.size(); ++g) {
        const std::string& n = gens[g].name;
        if (c.s.compare(c.i, n.size(), n) == 0 && n.size() > best_len) {
            best = static_cast<int>(g);
            best_len = n.size();
        }
    }
    is_t = false;
    if (c.s.compare(c.i, 1, "t") == 0 && best_len < 1) {
        is_t = true;
        c.i += 1;
        return -1;
    }
    if (best < 0) return -1;
    c.i += best_len;
    return best;
}

long parse_uint(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw UsageError("expected integer in polynomial: '" + c.s + "'");
    return std::stol(c.s.substr(start, c.i - start));
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const GeneratorList& gens) {
    Polynomial out;
    Cursor c{text};
    if (c.done()) throw UsageError("empty polynomial");
    bool first = true;
    while (!c.done()) {
        Rational sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -1;
            ++c.i;
        } else if (!first) {
            throw UsageError("expected + or - between terms: '" + text + "'");
        }
        first = false;
        // optional rational coefficient
        Rational coef = sign;
        c.skip_ws();
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            Int num(parse_uint(c));
            Int den = 1;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '/') {
                ++c.i;
                den = Int(parse_uint(c));
                if (den == 0) throw UsageError("zero denominator: '" + text + "'");
            }
            coef *= Rational(num, den);
        }
        // factors by juxtaposition
        Monomial mono;
        Polynomial term = Polynomial::monomial(mono, 1);
        bool any_factor = false;
        while (true) {
            c.skip_ws();
            if (c.i >= c.s.size()) break;
            char nx = c.s[c.i];
            if (nx == '+' || nx == '-') break;
            bool is_t = false;
            size_t save = c.i;
            int g = match_name(c, gens, is_t);
            if (!is_t && g < 0) {
                if (nx == '1' && !any_factor) {  // bare constant term handled above
                    break;
                }
                throw UsageError("unknown generator at '" + text.substr(save) + "'");
            }
            long exp = 1;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                exp = parse_uint(c);
            }
            Monomial f;
            if (is_t) {
                f.t_exp = static_cast<int>(exp);
            } else if (gens[g].is_odd()) {
                if (exp != 1) {
                    if (exp == 0) continue;
                    // odd generator squared is zero
                    term = Polynomial::zero();
                    f = Monomial{};
                } else {
                    f.odd = {g};
                }
            } else {
                f.even = {{g, static_cast<int>(exp)}};
            }
            term = term * Polynomial::monomial(f, 1);
            any_factor = true;
        }
        out += coef * term;
    }
    return out;
}

ParsedModel parse_model(const std::string& text) {
    struct Line {
        std::string s;
    };
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string ln;
        while (std::getline(is, ln)) {
            auto hash = ln.find('#');
            if (hash != std::string::npos) ln.erase(hash);
            bool blank = true;
            for (char ch : ln)
                if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
            if (!blank) lines.push_back(ln);
        }
    }
    GeneratorList gens;
    bool has_t = false;
    std::vector<std::pair<std::string, std::string>> dlines;  // (name, poly text)
    for (auto& ln : lines) {
        std::istringstream is(ln);
        std::string tok;
        is >> tok;
        if (tok == "d") {
            std::string name;
            is >> name;
            std::string rest;
            std::getline(is, rest);
            auto eq = rest.find('=');
            if (eq == std::string::npos)
                throw UsageError("malformed differential line: '" + ln + "'");
            dlines.emplace_back(name, rest.substr(eq + 1));
        } else {
            int deg = 0;
            if (!(is >> deg)) throw UsageError("malformed generator line: '" + ln + "'");
            if (tok == "t") {
                if (deg != 2) throw UsageError("base generator t must have degree 2");
                has_t = true;
            } else {
                gens.push_back({tok, deg});
            }
        }
    }
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Generator& a, const Generator& b) { return a.degree < b.degree; });

    ParsedModel pm;
    pm.relative = has_t;
    pm.fiber.gens = gens;
    pm.fiber.d.assign(gens.size(), Polynomial::zero());
    std::vector<Polynomial> D(gens.size(), Polynomial::zero());
    for (auto& [name, ptext] : dlines) {
        if (name == "t") {
            Polynomial p = parse_polynomial(ptext, gens);
            if (!p.is_zero()) throw UsageError("the base generator t must be a cycle");
            continue;
        }
        int g = -1;
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) g = static_cast<int>(i);
        if (g < 0) throw UsageError("differential for unknown generator '" + name + "'");
        std::string trimmed = ptext;
        Polynomial p;
        {
            Cursor c{trimmed};
            if (c.done() || (c.peek() == '0' && trimmed.find_first_not_of(" 0\t") ==
                                                    std::string::npos))
                p = Polynomial::zero();
            else
                p = parse_polynomial(trimmed, gens);
        }
        D[g] = p;
        Polynomial fiber_part;
        for (auto& [mon, c] : p.terms)
            if (mon.t_exp == 0) fiber_part.terms.emplace(mon, c);
        pm.fiber.d[g] = fiber_part;
    }
    if (has_t) {
        RelativeModel rm;
        rm.fiber = pm.fiber;
        rm.D = D;
        pm.rel = std::move(rm);
    } else {
        for (size_t i = 0; i < D.size(); ++i)
            for (auto& [mon, c] : D[i].terms)
                if (mon.t_exp > 0)
                    throw UsageError("differential of " + gens[i].name +
                                     " involves t but no base generator t was declared");
    }
    return pm;
}

std::string print_model(const FiberModel& m) {
    std::ostringstream os;
    for (auto& g : m.gens) os << g.name << " " << g.degree << "\n";
    for (size_t i = 0; i < m.gens.size(); ++i)
        if (!m.d[i].is_zero())
            os << "d " << m.gens[i].name << " = " << to_string(m.d[i], m.gens) << "\n";
    return os.str();
}

std::string print_model(const RelativeModel& m) {
    std::ostringstream os;
    os << "t 2\n";
    for (auto& g : m.fiber.gens) os << g.name << " " << g.degree << "\n";
    for (size_t i = 0; i < m.fiber.gens.size(); ++i)
        if (!m.D[i].is_zero())
            os << "d " << m.fiber.gens[i].name << " = " << to_string(m.D[i], m.fiber.gens)
               << "\n";
    return os.str();
}

}  // namespace csp
