#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csp/enumerate.hpp"
#include "csp/fixtures.hpp"

using namespace csp;

namespace {

std::string term_str(const FiberModel& f, const AdmissibleTerm& t) {
    return to_string(t.mono, f.gens);
}

}  // namespace

TEST_CASE("admissible terms for the ex5.4 fiber") {
    FiberModel f = sphere_product_fiber({3, 5, 9, 15, 33});
    auto v4 = admissible_terms(f, 3);
    std::vector<std::string> got;
    for (auto& t : v4) got.push_back(term_str(f, t));
    CHECK(got == std::vector<std::string>{"v1v2t^4", "v1v3t^2", "v2v3t", "t^8"});
    auto v3 = admissible_terms(f, 2);
    got.clear();
    for (auto& t : v3) got.push_back(term_str(f, t));
    CHECK(got == std::vector<std::string>{"v1v2t", "t^5"});
    auto v5 = admissible_terms(f, 4);
    got.clear();
    for (auto& t : v5) got.push_back(term_str(f, t));
    CHECK(got == std::vector<std::string>{"v1v2t^13", "v1v3t^11", "v1v4t^8", "v2v3t^10",
                                          "v2v4t^7", "v3v4t^5", "v1v2v3v4t", "t^17"});
    for (auto& t : v5)
        CHECK(t.mono.degree(f.gens) == f.gens[4].degree + 1);
}

TEST_CASE("pre_c_symplectic") {
    CHECK(pre_c_symplectic({3, 3, 7}));
    CHECK(!pre_c_symplectic({11, 15, 19}));
    CHECK(pre_c_symplectic({7}));
    CHECK(!pre_c_symplectic({3, 5}));          // even count
    CHECK(pre_c_symplectic({3, 5, 9, 15, 33}));
    CHECK_THROWS_AS(pre_c_symplectic({3, 4, 7}), UsageError);
}

TEST_CASE("enumerate (3,3,7) with coefficient 1 gives exactly one class") {
    EnumLimits limits;
    ModelCatalog cat = enumerate_models(sphere_product_fiber({3, 3, 7}), {Rational(1)},
                                        limits, FieldSpec::rationals());
    REQUIRE(cat.entries.size() == 1);
    CHECK(!cat.incomplete);
    // the certified model is D v3 = v1v2t + t^4
    const RelativeModel& rm = cat.entries[0].model;
    CHECK(to_string(rm.D[2], rm.fiber.gens) == "v1v2t + t^4");
    // and it matches the bundled catalog
    ModelCatalog fix = get_fixture("ex5.1a");
    CHECK(subgroup_equals(cat.entries[0].lattice, fix.entries[0].lattice,
                          FieldSpec::rationals()));
}

TEST_CASE("even formal dimension yields the empty catalog") {
    EnumLimits limits;
    ModelCatalog cat = enumerate_models(sphere_product_fiber({3, 5}), {Rational(1)}, limits,
                                        FieldSpec::rationals());
    CHECK(cat.entries.empty());
    ModelCatalog cat2 = enumerate_models(sphere_product_fiber({11, 15, 19}), {Rational(1)},
                                         limits, FieldSpec::rationals());
    CHECK(cat2.entries.empty());
}

TEST_CASE("enumerating the ex5.1b fiber finds exactly the two pairings") {
    EnumLimits limits;
    ModelCatalog cat = enumerate_models(sphere_product_fiber({7, 9, 11, 13, 23}),
                                        {Rational(1)}, limits, FieldSpec::closure());
    ModelCatalog fix = get_fixture("ex5.1b");
    REQUIRE(cat.entries.size() == 2);
    for (auto& e : fix.entries) {
        bool found = false;
        for (auto& c : cat.entries)
            if (subgroup_equals(c.lattice, e.lattice, FieldSpec::closure())) found = true;
        CHECK(found);
    }
}

TEST_CASE("cp_family matches the published subgroup orders") {
    ModelCatalog c14 = cp_family(14);
    std::vector<std::string> labels;
    for (auto& e : c14.entries) labels.push_back(e.label);
    CHECK(labels == std::vector<std::string>{"i=0", "i=1", "i=3", "i=5"});
    ModelCatalog c8 = cp_family(8);
    REQUIRE(c8.entries.size() == 3);  // i in {0, 1, 3}
    ModelCatalog c2 = cp_family(2);
    REQUIRE(c2.entries.size() == 2);  // i in {0, 1}
    CHECK_THROWS_AS(cp_family(3), UsageError);
    for (auto& e : c14.entries) {
        CHECK(e.cert.certified);
        CHECK(e.cert.formal_dimension_Y == 4 * 14 + 2);
        CHECK(e.cert.top_power == 2 * 14 + 1);
    }
}

TEST_CASE("sp_chain shapes") {
    CHECK(sp_chain(1).entries.size() == 1);
    CHECK(sp_chain(3).entries.size() == 1);
    CHECK(sp_chain(5).entries.size() == 3);
    CHECK(sp_chain(7).entries.size() == 4);
    CHECK_THROWS_AS(sp_chain(4), UsageError);
    // Sp(5) subgroup formulas, including b^5 = 1 in the last one
    ModelCatalog sp5 = sp_chain(5);
    FieldSpec c5 = FieldSpec::cyclotomic(5);
    AbelianStructure s3 = points_structure(sp5.entries[2].lattice, c5);
    CHECK(s3.order() == 5);
    AbelianStructure s2 = points_structure(sp5.entries[1].lattice, c5);
    CHECK(s2.free_rank == 1);
    // and over Q the last group is trivial
    CHECK(points_structure(sp5.entries[2].lattice, FieldSpec::rationals()).order() == 1);
}

TEST_CASE("enumeration caps flag the catalog as incomplete") {
    EnumLimits limits;
    limits.max_assignments = 3;
    ModelCatalog cat = enumerate_models(sphere_product_fiber({3, 5, 9, 15, 33}),
                                        {Rational(1)}, limits, FieldSpec::rationals());
    CHECK(cat.incomplete);
}

TEST_CASE("max_models stops the search after the first witness") {
    EnumLimits limits;
    limits.max_models = 1;
    ModelCatalog cat = enumerate_models(sphere_product_fiber({3, 5, 9, 15, 33}),
                                        {Rational(1)}, limits, FieldSpec::rationals());
    CHECK(cat.entries.size() == 1);
}
