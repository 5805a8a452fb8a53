#include "csp/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace csp {

namespace {

// Differential term on an odd-sphere-product fiber: support by 1-based
// generator positions; the t exponent is forced by degree balance. An empty
// support is the pure t power.
struct TermSpec {
    int target;                // 1-based
    std::vector<int> support;  // 1-based, empty = pure t power
    const char* coeff = "1";
};

struct EntrySpec {
    const char* label;
    std::vector<TermSpec> terms;
};

struct FixtureSpec {
    const char* name;
    std::vector<int> degrees;
    std::vector<EntrySpec> entries;
};

// clang-format off
const std::vector<FixtureSpec>& specs() {
    static const std::vector<FixtureSpec> s = {
        // one-generator relation v1v2t + t^4; the only certified class
        {"ex5.1a", {3, 3, 7}, {
            {"m1", {{3, {1, 2}}, {3, {}}}},
        }},
        // the two admissible pairings
        {"ex5.1b", {7, 9, 11, 13, 23}, {
            {"m1", {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"m2", {{5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
        }},
        // three pairings through v1v6
        {"ex5.1c", {9, 9, 11, 13, 15, 17, 29}, {
            {"m1", {{7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"m2", {{7, {1, 6}}, {7, {2, 4}}, {7, {3, 5}}, {7, {}}}},
            {"m3", {{7, {1, 6}}, {7, {2, 3}}, {7, {4, 5}}, {7, {}}}},
        }},
        {"ex5.1d", {9, 11, 13, 15, 17, 19, 31}, {
            {"1", {{7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"2", {{7, {1, 6}}, {7, {2, 4}}, {7, {3, 5}}, {7, {}}}},
            {"3", {{7, {1, 5}}, {7, {2, 6}}, {7, {3, 4}}, {7, {}}}},
            {"4", {{7, {1, 4}}, {7, {2, 6}}, {7, {3, 5}}, {7, {}}}},
        }},
        {"ex5.2a", {3, 5, 7, 9, 13}, {
            {"1", {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"2", {{4, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
        }},
        {"ex5.2b", {3, 5, 7, 9, 15}, {
            {"1", {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"2", {{4, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"3", {{5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"4", {{4, {1, 2}}, {5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
        }},
        {"ex5.2c", {3, 5, 7, 9, 17}, {
            {"1", {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"2", {{4, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"3", {{5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"4", {{4, {1, 2}}, {5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"5", {{5, {1, 2}}, {5, {3, 4}}, {5, {}}}},
        }},
        {"ex5.2-2a", {3, 5, 7, 11, 15}, {
            {"1", {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"2", {{4, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"3", {{4, {1, 3}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
        }},
        {"ex5.2-2b", {7, 9, 11, 13, 41}, {
            {"1", {{5, {1, 2, 3, 4}}, {5, {}}}},
            {"2", {{5, {1, 2}}, {5, {3, 4}}, {5, {}}}},
            {"3", {{5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"4", {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
        }},
        {"ex5.3-1a", {3, 5, 9, 13, 17}, {
            {"1", {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"2", {{3, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"3", {{4, {1, 3}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"4", {{4, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"5", {{3, {1, 2}}, {4, {1, 3}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
        }},
        {"ex5.3-1b", {7, 9, 11, 17, 45}, {
            {"1", {{5, {1, 2, 3, 4}}, {5, {}}}},
            {"2", {{5, {1, 2}}, {5, {3, 4}}, {5, {}}}},
            {"3", {{5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"4", {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"5", {{4, {1, 2}}, {5, {1, 2, 3, 4}}, {5, {}}}},
            {"6", {{4, {1, 2}}, {5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"7", {{4, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
        }},
        {"ex5.4", {3, 5, 9, 15, 33}, {
            {"1",  {{5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"2",  {{4, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"3",  {{4, {1, 3}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"4",  {{3, {1, 2}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"5",  {{3, {1, 2}}, {4, {1, 3}}, {5, {1, 4}}, {5, {2, 3}}, {5, {}}}},
            {"6",  {{5, {1, 2}}, {5, {3, 4}}, {5, {}}}},
            {"7",  {{4, {1, 3}}, {5, {1, 2}}, {5, {3, 4}}, {5, {}}}},
            {"8",  {{4, {2, 3}}, {5, {1, 2}}, {5, {3, 4}}, {5, {}}}},
            {"9",  {{5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"10", {{4, {1, 2}}, {5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"11", {{4, {2, 3}}, {5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"12", {{3, {1, 2}}, {5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"13", {{3, {1, 2}}, {4, {2, 3}}, {5, {1, 3}}, {5, {2, 4}}, {5, {}}}},
            {"14", {{5, {1, 2, 3, 4}}, {5, {}}}},
            {"15", {{4, {1, 2}}, {5, {1, 2, 3, 4}}, {5, {}}}},
            {"16", {{4, {1, 3}}, {5, {1, 2, 3, 4}}, {5, {}}}},
            {"17", {{4, {2, 3}}, {5, {1, 2, 3, 4}}, {5, {}}}},
            {"18", {{3, {1, 2}}, {5, {1, 2, 3, 4}}, {5, {}}}},
            {"19", {{3, {1, 2}}, {4, {1, 3}}, {5, {1, 2, 3, 4}}, {5, {}}}},
            {"20", {{3, {1, 2}}, {4, {2, 3}}, {5, {1, 2, 3, 4}}, {5, {}}}},
        }},
        // common top differential v1v6t^3 + v2v5t + v3v4t + t^18 per entry
        {"e7", {3, 11, 15, 19, 23, 27, 35}, {
            {"1",    {{7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"2",    {{4, {1, 3}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"3",    {{5, {1, 2}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"4",    {{6, {1, 2}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"5",    {{6, {1, 3}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"6",    {{6, {1, 4}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"7",    {{6, {1, 5}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"8",    {{4, {1, 3}}, {5, {1, 2}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"9",    {{4, {1, 3}}, {6, {1, 2}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"10",   {{4, {1, 3}}, {6, {1, 4}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"11",   {{4, {1, 3}}, {6, {1, 5}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"12",   {{5, {1, 2}}, {6, {1, 3}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"13",   {{5, {1, 2}}, {6, {1, 4}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"14",   {{5, {1, 2}}, {6, {1, 5}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"15",   {{4, {1, 3}}, {5, {1, 2}}, {6, {1, 4}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"16",   {{4, {1, 3}}, {5, {1, 2}}, {6, {1, 5}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"17",   {{5, {1, 3}}, {6, {2, 3}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"18",   {{4, {1, 2}}, {5, {1, 3}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"(18)", {{4, {1, 2}, "-1"}, {6, {2, 3}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"19",   {{4, {1, 2}}, {5, {1, 3}, "2"}, {6, {2, 3}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"(19)", {{3, {1, 2}}, {5, {1, 4}, "-1"}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
            {"20",   {{3, {1, 2}}, {4, {1, 2}, "-1"}, {5, {1, 4}, "-1"}, {6, {2, 3}}, {7, {1, 6}}, {7, {2, 5}}, {7, {3, 4}}, {7, {}}}},
        }},
    };
    return s;
}
// clang-format on

ModelCatalog build_fixture(const FixtureSpec& spec) {
    FiberModel fiber = sphere_product_fiber(spec.degrees);
    ModelCatalog cat;
    cat.fiber = fiber;
    cat.provenance = std::string("fixture(") + spec.name + ")";
    for (auto& es : spec.entries) {
        RelativeModel rm;
        rm.fiber = fiber;
        rm.D.assign(fiber.gens.size(), Polynomial::zero());
        for (auto& ts : es.terms) {
            Monomial mono;
            for (int s : ts.support) mono.odd.push_back(s - 1);
            std::sort(mono.odd.begin(), mono.odd.end());
            int deg = mono.degree(fiber.gens);
            int goal = fiber.gens.at(ts.target - 1).degree + 1;
            if ((goal - deg) % 2 != 0 || goal < deg)
                throw std::logic_error("fixture term does not balance");
            mono.t_exp = (goal - deg) / 2;
            rm.D[ts.target - 1] += Polynomial::monomial(mono, parse_rational(ts.coeff));
        }
        ValidationReport rep = validate_model(rm);
        if (!rep.ok())
            throw std::logic_error("fixture " + std::string(spec.name) + " entry " + es.label +
                                   " invalid: " + rep.violations.front());
        CatalogEntry e;
        e.label = es.label;
        e.model = rm;
        e.cert = c_symplectic_certify(rm);
        if (!e.cert.certified)
            throw std::logic_error("fixture " + std::string(spec.name) + " entry " + es.label +
                                   " not certified: " + e.cert.reason);
        e.lattice = extract_constraint_lattice(rm);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (auto& s : specs()) names.push_back(s.name);
    for (int n = 1; n <= 11; n += 2) names.push_back("sp" + std::to_string(n));
    names.push_back("cp-example");
    return names;
}

bool has_fixture(const std::string& name) {
    auto all = fixture_names();
    return std::find(all.begin(), all.end(), name) != all.end();
}

ModelCatalog get_fixture(const std::string& name) {
    for (auto& s : specs()) {
        if (name == s.name) {
            ModelCatalog cat = build_fixture(s);
            return cat;
        }
    }
    if (name.rfind("sp", 0) == 0 && name.size() > 2) {
        int n = std::stoi(name.substr(2));
        ModelCatalog cat = sp_chain(n);
        cat.provenance = "fixture(" + name + ")";
        return cat;
    }
    if (name == "cp-example") {
        ModelCatalog cat = cp_family(14);
        cat.provenance = "fixture(cp-example)";
        return cat;
    }
    throw UsageError("unknown fixture '" + name + "'");
}

}  // namespace csp
