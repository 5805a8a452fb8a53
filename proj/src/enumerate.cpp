#include "csp/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace csp {

namespace {

void collect_supports(const FiberModel& fiber, int target, int budget, int min_gen,
                      Monomial& cur, std::vector<Monomial>& out) {
    if (budget == 0) {
        if (!cur.is_one()) out.push_back(cur);
        // fall through: smaller supports with t powers are emitted by caller
    }
    for (int g = min_gen; g < target; ++g) {
        const Generator& gen = fiber.gens[g];
        if (gen.degree > budget) continue;
        if (gen.is_odd()) {
            cur.odd.push_back(g);
            collect_supports(fiber, target, budget - gen.degree, g + 1, cur, out);
            cur.odd.pop_back();
        } else {
            for (int e = 1; e * gen.degree <= budget; ++e) {
                cur.even.emplace_back(g, e);
                collect_supports(fiber, target, budget - e * gen.degree, g + 1, cur, out);
                cur.even.pop_back();
            }
        }
    }
}

}  // namespace

std::vector<AdmissibleTerm> admissible_terms(const FiberModel& fiber, int target) {
    const int goal = fiber.gens.at(target).degree + 1;
    // supports of every degree <= goal with matching parity (t absorbs the rest)
    std::vector<Monomial> supports;
    for (int d = 2; d <= goal; ++d) {
        if ((goal - d) % 2 != 0) continue;
        Monomial cur;
        collect_supports(fiber, target, d, 0, cur, supports);
    }
    std::vector<AdmissibleTerm> terms;
    for (auto& s : supports) {
        AdmissibleTerm t;
        t.target = target;
        t.mono = s;
        t.mono.t_exp = (goal - s.degree(fiber.gens)) / 2;
        if (t.mono.word_length() < 2) continue;
        terms.push_back(std::move(t));
    }
    std::sort(terms.begin(), terms.end(), [&](const AdmissibleTerm& a, const AdmissibleTerm& b) {
        Monomial sa = a.mono, sb = b.mono;
        sa.t_exp = sb.t_exp = 0;
        int wa = sa.word_length(), wb = sb.word_length();
        if (wa != wb) return wa < wb;
        return sa < sb;
    });
    // pure t power last
    if (goal % 2 == 0) {
        AdmissibleTerm t;
        t.target = target;
        t.mono.t_exp = goal / 2;
        if (t.mono.word_length() >= 2) terms.push_back(std::move(t));
    }
    return terms;
}

bool pre_c_symplectic(const std::vector<int>& degrees) {
    std::vector<int> d = degrees;
    for (int x : d)
        if (x % 2 == 0 || x <= 1) throw UsageError("pre_c_symplectic expects odd degrees > 1");
    if (!std::is_sorted(d.begin(), d.end()))
        throw UsageError("pre_c_symplectic expects sorted degrees");
    const int n = static_cast<int>(d.size());
    if (n % 2 == 0) return false;
    for (int i = 1; i <= (n - 1) / 2; ++i)
        if (d[i - 1] + d[n - 1 - i] >= d[n - 1]) return false;
    return true;
}

namespace {

struct Enumerator {
    const FiberModel& fiber;
    const std::vector<Rational>& coeffs;
    const EnumLimits& limits;
    const FieldSpec& field;
    ModelCatalog catalog;
    std::vector<std::vector<AdmissibleTerm>> terms;  // t-positive terms per generator
    std::vector<std::vector<int>> pattern;           // chosen term indices per generator
    std::set<IntMat> seen;                           // closed lattices already in the catalog
    long long assignments = 0;
    bool stop = false;

    Enumerator(const FiberModel& f, const std::vector<Rational>& c, const EnumLimits& l,
               const FieldSpec& k)
        : fiber(f), coeffs(c), limits(l), field(k) {
        catalog.fiber = fiber;
        catalog.provenance = "enumerated";
        const int n = static_cast<int>(fiber.gens.size());
        terms.resize(n);
        pattern.assign(n, {});
        for (int i = 0; i < n; ++i) {
            for (auto& t : admissible_terms(fiber, i))
                if (t.mono.t_exp >= 1) terms[i].push_back(t);
            if (static_cast<int>(terms[i].size()) > limits.max_terms_per_generator) {
                terms[i].resize(limits.max_terms_per_generator);
                catalog.incomplete = true;
            }
        }
    }

    bool budget() {
        if (assignments >= limits.max_assignments) {
            catalog.incomplete = true;
            stop = true;
        }
        return !stop;
    }

    void run() { choose_pattern(0); }

    void choose_pattern(int gi) {
        if (stop) return;
        const int n = static_cast<int>(fiber.gens.size());
        if (gi == n) {
            finish_pattern();
            return;
        }
        const int k = static_cast<int>(terms[gi].size());
        for (unsigned mask = 0; mask < (1u << k) && !stop; ++mask) {
            pattern[gi].clear();
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) pattern[gi].push_back(b);
            choose_pattern(gi + 1);
        }
        pattern[gi].clear();
    }

    void finish_pattern() {
        ++assignments;
        if (!budget()) return;
        // lattice depends only on the set of nonzero terms
        ConstraintLattice lat;
        lat.ambient_rank = static_cast<int>(fiber.gens.size());
        for (size_t i = 0; i < fiber.gens.size(); ++i)
            for (auto& [mon, c] : fiber.d[i].terms) {
                std::vector<Int> row(lat.ambient_rank, 0);
                for (int j : mon.odd) row[j] += 1;
                for (auto& [j, e] : mon.even) row[j] += e;
                row[i] -= 1;
                lat.ambient.push_back(std::move(row));
            }
        for (size_t i = 0; i < fiber.gens.size(); ++i)
            for (int ti : pattern[i]) {
                const Monomial& mon = terms[i][ti].mono;
                std::vector<Int> row(lat.ambient_rank, 0);
                for (int j : mon.odd) row[j] += 1;
                for (auto& [j, e] : mon.even) row[j] += e;
                row[i] -= 1;
                lat.relations.push_back(std::move(row));
            }
        IntMat key = field_closure(lat, field);
        if (seen.count(key)) return;
        // search coefficient assignments for this pattern until one certifies
        RelativeModel rm;
        rm.fiber = fiber;
        rm.D = fiber.d;
        choose_coeffs(0, rm, key);
    }

    void choose_coeffs(int gi, RelativeModel& rm, const IntMat& key) {
        if (stop) return;
        const int n = static_cast<int>(fiber.gens.size());
        if (gi == n) {
            ++assignments;
            if (!budget()) return;
            CsCertificate cert = c_symplectic_certify(rm);
            if (!cert.certified) return;
            CatalogEntry e;
            e.label = "m" + std::to_string(catalog.entries.size() + 1);
            e.model = rm;
            e.cert = std::move(cert);
            e.lattice = extract_constraint_lattice(rm);
            catalog.entries.push_back(std::move(e));
            seen.insert(key);
            if (limits.max_models >= 0 &&
                static_cast<long long>(catalog.entries.size()) >= limits.max_models)
                stop = true;
            return;
        }
        tune_generator(gi, 0, rm, key);
    }

    // assign a coefficient to each chosen term of generator gi, then d^2 gate
    void tune_generator(int gi, size_t term_pos, RelativeModel& rm, const IntMat& key) {
        if (stop) return;
        if (seen.count(key)) return;  // an earlier branch certified this class
        if (term_pos == pattern[gi].size()) {
            Polynomial dd = apply_differential(rm, rm.D[gi]);
            if (!dd.is_zero()) return;
            choose_coeffs(gi + 1, rm, key);
            return;
        }
        const Monomial& mono = terms[gi][pattern[gi][term_pos]].mono;
        for (const Rational& c : coeffs) {
            if (stop) return;
            rm.D[gi] += Polynomial::monomial(mono, c);
            tune_generator(gi, term_pos + 1, rm, key);
            rm.D[gi] -= Polynomial::monomial(mono, c);
        }
    }
};

}  // namespace

ModelCatalog enumerate_models(const FiberModel& fiber, const std::vector<Rational>& coefficients,
                              const EnumLimits& limits, const FieldSpec& dedup_field,
                              bool apply_gate) {
    for (const Rational& c : coefficients)
        if (c == 0) throw UsageError("enumeration coefficients must be nonzero");
    if (apply_gate) {
        bool all_odd = true;
        for (auto& g : fiber.gens)
            if (!g.is_odd()) all_odd = false;
        int fd = formal_dimension(fiber);  // throws on unsupported shapes
        if (fd % 2 == 0) {
            ModelCatalog empty;
            empty.fiber = fiber;
            empty.provenance = "enumerated";
            return empty;
        }
        if (all_odd && fiber.zero_differential() && !pre_c_symplectic(fiber.degrees())) {
            ModelCatalog empty;
            empty.fiber = fiber;
            empty.provenance = "enumerated";
            return empty;
        }
    }
    Enumerator e(fiber, coefficients, limits, dedup_field);
    e.run();
    return std::move(e.catalog);
}

ModelCatalog cp_family(int n) {
    if (n < 2 || n % 2 != 0) throw UsageError("cp_family expects an even n >= 2");
    FiberModel fiber;
    fiber.gens = {{"x", 2}, {"y", 2 * n + 1}, {"z", 2 * n + 3}};
    fiber.d.assign(3, Polynomial::zero());
    Monomial xn1;
    xn1.even = {{0, n + 1}};
    fiber.d[1] = Polynomial::monomial(xn1);

    ModelCatalog cat;
    cat.fiber = fiber;
    cat.provenance = "family(cp:" + std::to_string(n) + ")";

    std::vector<int> exps = {0};
    for (int i = 1; i <= n; ++i)
        if ((n + 1) % i == 0) exps.push_back(i);

    for (int i : exps) {
        RelativeModel rm;
        rm.fiber = fiber;
        rm.D.assign(3, Polynomial::zero());
        Polynomial dy = fiber.d[1];
        Monomial pure;
        pure.t_exp = n + 1;
        dy += Polynomial::monomial(pure);
        if (i >= 1) {
            Monomial mid;
            mid.even = {{0, i}};
            mid.t_exp = n + 1 - i;
            dy += Polynomial::monomial(mid);
        }
        rm.D[1] = dy;
        Monomial xz;
        xz.even = {{0, 1}};
        xz.t_exp = n + 1;
        rm.D[2] = Polynomial::monomial(xz);

        ValidationReport rep = validate_model(rm);
        if (!rep.ok()) throw std::logic_error("cp_family produced an invalid model");
        CatalogEntry e;
        e.label = "i=" + std::to_string(i);
        e.model = rm;
        e.cert = c_symplectic_certify(rm);
        if (!e.cert.certified)
            throw std::logic_error("cp_family model failed certification: " + e.cert.reason);
        e.lattice = extract_constraint_lattice(rm);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

ModelCatalog sp_chain(int n) {
    if (n < 1 || n % 2 == 0) throw UsageError("sp_chain expects an odd n >= 1");
    std::vector<int> degrees;
    for (int i = 1; i <= n; ++i) degrees.push_back(4 * i - 1);
    FiberModel fiber = sphere_product_fiber(degrees);

    ModelCatalog cat;
    cat.fiber = fiber;
    cat.provenance = "family(sp:" + std::to_string(n) + ")";

    // top differential: pairings v_i v_(n-i) t plus t^(2n)
    Polynomial top;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        Monomial m;
        m.odd = {i - 1, n - i - 1};
        std::sort(m.odd.begin(), m.odd.end());
        m.t_exp = 1;
        top += Polynomial::monomial(m);
    }
    {
        Monomial m;
        m.t_exp = 2 * n;
        top += Polynomial::monomial(m);
    }

    // support choices (j, k) for the nested differentials D v_i, i rising from
    // (n+1)/2; j = n - i throughout.
    std::vector<std::pair<int, int>> steps;  // (target i, partner k), 1-based
    auto add_steps = [&](std::vector<int> ks) {
        int i = (n + 1) / 2;
        for (int k : ks) steps.emplace_back(i++, k);
    };
    switch (n) {
        case 1:
        case 3: break;  // no valid nested differential below the top generator
        case 5: add_steps({1, 3}); break;
        case 7: add_steps({1, 3, 2}); break;
        case 9: add_steps({1, 1, 4, 2}); break;
        case 11: add_steps({1, 1, 2, 4, 3}); break;
        default: {
            std::vector<int> ks;
            for (int i = (n + 1) / 2; i <= n - 1; ++i) ks.push_back(i < n - 1 ? 1 : 2);
            add_steps(ks);
            break;
        }
    }

    const int chain_len = static_cast<int>(steps.size()) + 1;
    for (int m = 1; m <= chain_len; ++m) {
        RelativeModel rm;
        rm.fiber = fiber;
        rm.D.assign(n, Polynomial::zero());
        rm.D[n - 1] = top;
        for (int s = 0; s < m - 1; ++s) {
            auto [i, k] = steps[s];
            int j = n - i;
            Monomial mono;
            mono.odd = {j - 1, k - 1};
            std::sort(mono.odd.begin(), mono.odd.end());
            int e = (degrees[i - 1] + 1 - degrees[j - 1] - degrees[k - 1]) / 2;
            mono.t_exp = e;
            rm.D[i - 1] = Polynomial::monomial(mono);
        }
        ValidationReport rep = validate_model(rm);
        if (!rep.ok()) throw std::logic_error("sp_chain produced an invalid model");
        CatalogEntry e;
        e.label = "mu" + std::to_string(m);
        e.model = rm;
        e.cert = c_symplectic_certify(rm);
        if (!e.cert.certified)
            throw std::logic_error("sp_chain model failed certification: " + e.cert.reason);
        e.lattice = extract_constraint_lattice(rm);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

}  // namespace csp
