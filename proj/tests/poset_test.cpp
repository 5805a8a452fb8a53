#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csp/fixtures.hpp"
#include "csp/poset.hpp"

#include <set>

using namespace csp;

namespace {

std::set<std::pair<std::string, std::string>> labeled_edges(const CsPoset& p) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto& [a, b] : p.hasse)
        out.emplace(p.elements[a].labels.front(), p.elements[b].labels.front());
    return out;
}

}  // namespace

TEST_CASE("c_value") {
    CHECK(c_value(15) == 3);
    CHECK(c_value(9) == 3);
    CHECK(c_value(105) == 4);
    CHECK(c_value(2) == 2);
    CHECK(c_value(27) == 4);
    CHECK(c_value(75) == 4);
    CHECK_THROWS_AS(c_value(1), UsageError);
}

TEST_CASE("empty catalog gives the empty poset") {
    ModelCatalog cat;
    cat.fiber = sphere_product_fiber({3, 5});
    CsPoset p = build_poset(cat, FieldSpec::rationals());
    CHECK(p.elements.empty());
    DepthReport d = depth(p);
    CHECK(d.depth == 0);
}

TEST_CASE("ex5.4 poset sizes and depth") {
    ModelCatalog cat = get_fixture("ex5.4");
    CsPoset pc = build_poset(cat, FieldSpec::cyclotomic(5));
    CHECK(pc.elements.size() == 20);
    CHECK(depth(pc).depth == 4);
    CsPoset pq = build_poset(cat, FieldSpec::rationals());
    CHECK(pq.elements.size() == 19);
    CHECK(depth(pq).depth == 4);
    int merged = pq.find_label("5");
    REQUIRE(merged >= 0);
    CHECK(pq.elements[merged].labels == std::vector<std::string>{"5", "13"});
    CHECK(pq.elements[merged].dims == std::vector<long long>{149, 144});
    CHECK(pq.elements[merged].min_dim == 144);
}

TEST_CASE("hasse is the transitive reduction") {
    ModelCatalog cat = get_fixture("ex5.4");
    CsPoset p = build_poset(cat, FieldSpec::cyclotomic(5));
    // adding back transitive edges recovers the strict order
    const size_t n = p.elements.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (auto& [a, b] : p.hasse) reach[a][b] = 1;  // a covers b (a larger)
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (reach[i][j])
                    for (size_t k = 0; k < n; ++k)
                        if (reach[j][k] && !reach[i][k]) {
                            reach[i][k] = 1;
                            changed = true;
                        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            bool strict_less = i != j && p.leq[j][i];  // j strictly below i
            CHECK(strict_less == static_cast<bool>(reach[i][j]));
        }
}

TEST_CASE("a 3-chain reduces to 2 edges and coheights count classes") {
    ModelCatalog cat = sp_chain(5);
    CsPoset p = build_poset(cat, FieldSpec::closure());
    REQUIRE(p.elements.size() == 3);
    CHECK(p.hasse.size() == 2);
    DepthReport d = depth(p);
    CHECK(d.depth == 3);
    CHECK(d.height == 2);
    int top = p.find_label("mu1"), bottom = p.find_label("mu3");
    CHECK(element_coheight(p, top) == 1);
    CHECK(element_coheight(p, bottom) == 3);
    CHECK_THROWS_AS(element_coheight(p, 99), UsageError);
}

TEST_CASE("ex5.1d is an antichain of four") {
    CsPoset p = build_poset(get_fixture("ex5.1d"), FieldSpec::rationals());
    CHECK(p.elements.size() == 4);
    CHECK(p.hasse.empty());
    CHECK(depth(p).depth == 1);
}

TEST_CASE("cp(14) over cyc:15 is the divisor diamond") {
    CsPoset p = build_poset(get_fixture("cp-example"), FieldSpec::cyclotomic(15));
    REQUIRE(p.elements.size() == 4);
    auto edges = labeled_edges(p);
    std::set<std::pair<std::string, std::string>> expect = {
        {"i=0", "i=3"}, {"i=0", "i=5"}, {"i=3", "i=1"}, {"i=5", "i=1"}};
    CHECK(edges == expect);
    CHECK(depth(p).depth == 3);
}

TEST_CASE("cp depth over the closure equals c(n+1), and 1 over Q") {
    for (int n : {2, 4, 8, 14}) {
        ModelCatalog cat = cp_family(n);
        CHECK(depth(build_poset(cat, FieldSpec::closure())).depth == c_value(n + 1));
        CHECK(depth(build_poset(cat, FieldSpec::rationals())).depth == 1);
    }
}

TEST_CASE("cp(14) depth rises strictly along the field tower") {
    ModelCatalog cat = cp_family(14);
    int dq = depth(build_poset(cat, FieldSpec::rationals())).depth;
    int d3 = depth(build_poset(cat, FieldSpec::cyclotomic(3))).depth;
    int d15 = depth(build_poset(cat, FieldSpec::cyclotomic(15))).depth;
    CHECK(dq < d3);
    CHECK(d3 < d15);
    CHECK(dq == 1);
    CHECK(d15 == 3);
}

TEST_CASE("element count never grows when the field shrinks") {
    for (auto name : {"ex5.4", "ex5.3-1a", "cp-example", "sp5"}) {
        ModelCatalog cat = get_fixture(name);
        size_t nq = build_poset(cat, FieldSpec::rationals()).elements.size();
        size_t nbar = build_poset(cat, FieldSpec::closure()).elements.size();
        CHECK(nq <= nbar);
    }
}

TEST_CASE("ex5.4 depth witness descends to 5=13 over Q") {
    ModelCatalog cat = get_fixture("ex5.4");
    CsPoset p = build_poset(cat, FieldSpec::rationals());
    DepthReport d = depth(p);
    REQUIRE(d.depth == 4);
    // the witness chain ends at the merged class 5=13
    int last = d.witness.back();
    CHECK(p.elements[last].labels == std::vector<std::string>{"5", "13"});
    // and starts at 14, the largest subgroup
    int first = d.witness.front();
    CHECK(p.elements[first].labels == std::vector<std::string>{"14"});
}
