#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csp/fixtures.hpp"
#include "csp/lattice.hpp"
#include "test_support.hpp"

#include <random>

using namespace csp;

namespace {

std::vector<Int> row(std::initializer_list<long> v) {
    std::vector<Int> r;
    for (long x : v) r.push_back(Int(x));
    return r;
}

ConstraintLattice fixture_lattice(const std::string& fixture, const std::string& label) {
    ModelCatalog cat = get_fixture(fixture);
    for (auto& e : cat.entries)
        if (e.label == label) return e.lattice;
    throw std::logic_error("row not found");
}

IntMat random_lattice(std::mt19937& rng, int n, int rows) {
    std::uniform_int_distribution<int> val(-4, 4);
    IntMat m(rows, std::vector<Int>(n));
    for (auto& r : m)
        for (auto& v : r) v = val(rng);
    return m;
}

}  // namespace

TEST_CASE("root counts") {
    FieldSpec q = FieldSpec::rationals(), c5 = FieldSpec::cyclotomic(5),
              c6 = FieldSpec::cyclotomic(6), bar = FieldSpec::closure();
    CHECK(q.root_count(2) == 2);
    CHECK(q.root_count(5) == 1);
    CHECK(q.root_count(6) == 2);
    CHECK(c5.root_count(5) == 5);    // 2m = 10, gcd(5,10) = 5
    CHECK(c5.root_count(10) == 10);
    CHECK(c5.root_count(3) == 1);
    CHECK(c6.root_count(6) == 6);    // m even: M = 6
    CHECK(c6.root_count(4) == 2);
    CHECK(bar.root_count(15) == 15);
    CHECK_NOTHROW(FieldSpec::parse("cyc:15"));
    CHECK_THROWS_AS(FieldSpec::parse("cyc:2"), UsageError);
    CHECK_THROWS_AS(FieldSpec::parse("r"), UsageError);
}

TEST_CASE("smith normal form basics") {
    // diag(2,3) -> diag(1,6)
    SnfResult s = smith_normal_form({row({2, 0}), row({0, 3})});
    CHECK(s.invariant_factors() == std::vector<Int>{1, 6});
    // identity stays identity
    SnfResult id = smith_normal_form({row({1, 0}), row({0, 1})});
    CHECK(id.invariant_factors() == std::vector<Int>{1, 1});
    // the ex5.4 row-5 lattice has invariant factors (1,1,1,1,5)
    ConstraintLattice l5 = fixture_lattice("ex5.4", "5");
    SnfResult s5 = smith_normal_form(l5.stacked());
    CHECK(s5.invariant_factors() == std::vector<Int>{1, 1, 1, 1, 5});
}

TEST_CASE("snf postconditions on random matrices") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dim(1, 6);
    auto matmul = [](const IntMat& a, const IntMat& b) {
        IntMat c(a.size(), std::vector<Int>(b[0].size(), 0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t k = 0; k < b.size(); ++k)
                for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    auto det = [&](IntMat m) -> Int {
        // fraction-free elimination determinant (small sizes)
        Int sign = 1, denom = 1;
        size_t n = m.size();
        for (size_t k = 0; k < n; ++k) {
            size_t piv = k;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            if (piv != k) {
                std::swap(m[piv], m[k]);
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; ++i)
                for (size_t j = k + 1; j < n; ++j) {
                    m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                    if (k > 0) m[i][j] /= denom;
                }
            denom = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    };
    for (int iter = 0; iter < 400; ++iter) {
        int r = dim(rng), c = dim(rng);
        IntMat m = random_lattice(rng, c, r);
        SnfResult s = smith_normal_form(m);
        CHECK(matmul(matmul(s.u, m), s.v) == s.s);
        Int du = det(s.u), dv = det(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        // v * v_inv = identity
        IntMat vv = matmul(s.v, s.v_inv);
        for (size_t i = 0; i < vv.size(); ++i)
            for (size_t j = 0; j < vv.size(); ++j) CHECK(vv[i][j] == (i == j ? 1 : 0));
        auto f = s.invariant_factors();
        for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    }
}

TEST_CASE("extract_constraint_lattice on ex5.4 row 1") {
    ConstraintLattice l = fixture_lattice("ex5.4", "1");
    CHECK(l.ambient_rank == 5);
    CHECK(l.ambient.empty());
    // relations: c1c4 = c5, c2c3 = c5, c5 = 1  -> ad = bc = 1, e = 1
    IntMat expect = {row({1, 0, 0, 1, -1}), row({0, 1, 1, 0, -1}), row({0, 0, 0, 0, 1})};
    CHECK(hermite_normal_form(l.stacked(), 5) == hermite_normal_form(expect, 5));
}

TEST_CASE("lattice depends only on the set of nonzero terms") {
    ModelCatalog cat = get_fixture("ex5.4");
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> pick(1, 5);
    for (auto& e : cat.entries) {
        RelativeModel scaled = e.model;
        for (auto& p : scaled.D) {
            Polynomial q;
            for (auto& [m, c] : p.terms) q += Polynomial::monomial(m, c * pick(rng));
            p = q;
        }
        ConstraintLattice l = extract_constraint_lattice(scaled);
        CHECK(l.canonical_key() == e.lattice.canonical_key());
    }
}

TEST_CASE("points structure over the three field kinds") {
    // mu1 of ex5.4: rank-2 torus, no torsion
    ConstraintLattice l1 = fixture_lattice("ex5.4", "1");
    AbelianStructure s1 = points_structure(l1, FieldSpec::rationals());
    CHECK(s1.free_rank == 2);
    CHECK(s1.torsion.empty());
    CHECK(s1.str() == "(K*)^2");
    // mu5: trivial over Q, Z/5 over cyclotomic(5)
    ConstraintLattice l5 = fixture_lattice("ex5.4", "5");
    AbelianStructure q5 = points_structure(l5, FieldSpec::rationals());
    CHECK(q5.free_rank == 0);
    CHECK(q5.order() == 1);
    CHECK(q5.str() == "{0}");
    AbelianStructure c5 = points_structure(l5, FieldSpec::cyclotomic(5));
    CHECK(c5.order() == 5);
    CHECK(c5.str() == "Z/5");
}

TEST_CASE("closure examples from ex5.4") {
    FieldSpec q = FieldSpec::rationals(), c5 = FieldSpec::cyclotomic(5);
    ConstraintLattice l5 = fixture_lattice("ex5.4", "5");
    // over Q the mu5 subgroup is trivial: closure is the full lattice Z^5
    IntMat full;
    for (int i = 0; i < 5; ++i) {
        std::vector<Int> r(5, 0);
        r[i] = 1;
        full.push_back(r);
    }
    CHECK(field_closure(l5, q) == hermite_normal_form(full, 5));
    // single invariant factor 2 over Q stays put (-1 is rational)
    IntMat two = {row({2, 0}), row({0, 1})};
    CHECK(field_closure(two, 2, q) == hermite_normal_form(two, 2));
    // over the closure the lattice is already closed
    ConstraintLattice l13 = fixture_lattice("ex5.4", "13");
    CHECK(field_closure(l13, FieldSpec::closure()) ==
          hermite_normal_form(l13.stacked(), 5));
    // mu5 = mu13 over Q but not over cyclotomic(5)
    CHECK(subgroup_equals(l5, l13, q));
    CHECK(!subgroup_equals(l5, l13, c5));
    CHECK(subgroup_equals(l5, l5, c5));
}

TEST_CASE("inclusion examples from ex5.4") {
    FieldSpec c5 = FieldSpec::cyclotomic(5);
    auto inc = [&](const char* a, const char* b, const FieldSpec& k) {
        return subgroup_includes(fixture_lattice("ex5.4", a), fixture_lattice("ex5.4", b), k);
    };
    CHECK(inc("2", "1", c5));        // Hasse edge 1 - 2
    CHECK(inc("5", "19", c5));       // diagram (1) edge 19 - 5
    CHECK(!inc("2", "6", c5));       // generic point of mu2 has ab != 1
}

TEST_CASE("closure operator laws on random lattices") {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> ndist(1, 6), rdist(0, 6), fdist(0, 3);
    for (int iter = 0; iter < 400; ++iter) {
        int n = ndist(rng);
        IntMat L = random_lattice(rng, n, rdist(rng));
        FieldSpec k;
        switch (fdist(rng)) {
            case 0: k = FieldSpec::rationals(); break;
            case 1: k = FieldSpec::cyclotomic(3 + (iter % 10)); break;
            default: k = FieldSpec::closure(); break;
        }
        IntMat cl = field_closure(L, n, k);
        // extensive
        CHECK(row_lattice_contains(cl, L, n));
        // idempotent
        CHECK(field_closure(cl, n, k) == cl);
        // monotone: L subset L+extra implies cl(L) subset cl(L+extra)
        IntMat L2 = L;
        IntMat extra = random_lattice(rng, n, 1);
        L2.push_back(extra[0]);
        CHECK(row_lattice_contains(field_closure(L2, n, k), cl, n));
    }
}

TEST_CASE("over the closure, inclusion is pure lattice containment") {
    std::mt19937 rng(2718);
    FieldSpec bar = FieldSpec::closure();
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + iter % 5;
        ConstraintLattice a, b;
        a.ambient_rank = b.ambient_rank = n;
        a.relations = random_lattice(rng, n, 1 + iter % 4);
        b.relations = random_lattice(rng, n, 1 + (iter / 2) % 4);
        bool lhs = subgroup_includes(a, b, bar);
        bool rhs = row_lattice_contains(a.relations, b.relations, n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lattice decisions agree with brute-force point enumeration") {
    std::mt19937 rng(97531);
    std::uniform_int_distribution<int> ndist(1, 4), vdist(-4, 4), ddist(1, 6), fdist(0, 2);
    int cases = 0;
    while (cases < 1000) {
        int n = ndist(rng);
        // force a finite point group: random rows plus a diagonal of small orders
        IntMat L = random_lattice(rng, n, 1 + cases % 3);
        for (int i = 0; i < n; ++i) {
            std::vector<Int> r(n, 0);
            r[i] = ddist(rng);
            L.push_back(r);
        }
        IntMat M = random_lattice(rng, n, 1 + (cases / 3) % 3);
        for (int i = 0; i < n; ++i) {
            std::vector<Int> r(n, 0);
            r[i] = ddist(rng);
            M.push_back(r);
        }
        FieldSpec k;
        switch (fdist(rng)) {
            case 0: k = FieldSpec::rationals(); break;
            case 1: k = FieldSpec::cyclotomic(3 + cases % 13); break;
            default: k = FieldSpec::closure(); break;
        }
        csp::testing::PointSet pa, pb;
        pa = csp::testing::enumerate_points(L, n, k);
        pb = csp::testing::enumerate_points(M, n, k);
        if (static_cast<double>(pa.modulus) * pa.modulus * pa.modulus * pa.modulus > 3e5)
            continue;  // keep the brute force at desk scale
        ConstraintLattice la, lb;
        la.ambient_rank = lb.ambient_rank = n;
        la.relations = L;
        lb.relations = M;
        CHECK(subgroup_includes(la, lb, k) == csp::testing::point_subset(pa, pb));
        CHECK(subgroup_equals(la, lb, k) ==
              (csp::testing::point_subset(pa, pb) && csp::testing::point_subset(pb, pa)));
        // and the structure's order matches the point count
        AbelianStructure sa = points_structure(la, k);
        CHECK(sa.order() == static_cast<long long>(pa.points.size()));
        ++cases;
    }
}

TEST_CASE("repeated even degrees are rejected") {
    FiberModel f;
    f.gens = {{"x", 2}, {"w", 2}, {"y", 5}};
    f.d.assign(3, Polynomial::zero());
    RelativeModel rm;
    rm.fiber = f;
    rm.D = f.d;
    CHECK_THROWS_AS(extract_constraint_lattice(rm), UsageError);
}

TEST_CASE("cp family point groups") {
    ModelCatalog cat = cp_family(14);
    REQUIRE(cat.entries.size() == 4);
    FieldSpec c15 = FieldSpec::cyclotomic(15);
    for (auto& e : cat.entries) {
        AbelianStructure s = points_structure(e.lattice, c15);
        if (e.label == "i=0") CHECK(s.order() == 15);
        if (e.label == "i=1") CHECK(s.order() == 1);
        if (e.label == "i=3") CHECK(s.order() == 3);
        if (e.label == "i=5") CHECK(s.order() == 5);
    }
}
