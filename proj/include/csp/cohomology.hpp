#pragma once

#include "csp/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace csp {

struct BettiTable {
    std::map<int, long long> by_degree;  // degrees with entries in [0, computed_up_to]
    int computed_up_to = -1;

    long long at(int k) const {
        auto it = by_degree.find(k);
        return it == by_degree.end() ? 0 : it->second;
    }
};

struct CsCertificate {
    bool certified = false;
    std::string reason;        // empty when certified; rejection cause otherwise
    int formal_dimension_Y = -1;
    int top_power = -1;
    long long total_dim = 0;
    BettiTable betti;
};

// All canonical monomials of total degree k, deterministic order.
std::vector<Monomial> basis_in_degree(const FiberModel& m, int k);
std::vector<Monomial> basis_in_degree(const RelativeModel& m, int k);

// Exact Betti numbers of degrees 0..up_to (rational coefficients).
BettiTable betti_numbers(const FiberModel& m, int up_to);
BettiTable betti_numbers(const RelativeModel& m, int up_to);

// Top nonzero cohomology degree for the finite-dimensional fiber shapes:
// zero-differential products of odd spheres, and one even generator x with a
// single relation dy = x^k (projective-space type factors). Throws UsageError
// for shapes whose finiteness this library does not decide.
int formal_dimension(const FiberModel& m);

// Certifies that the total space carries a top power of [t]:
//   parity gate, the Gysin window b_N = b_{N+1} = 0 above the fiber dimension
//   N, top degree N-1 one-dimensional, and [t^((N-1)/2)] nonzero.
CsCertificate c_symplectic_certify(const RelativeModel& m);

// Dimension of degree-|g| decomposable cocycles of the fiber modulo
// coboundaries: the count of independent unipotent directions attached to g.
int unipotent_parameter_count(const FiberModel& m, int gen_index);

// Exact rank of an integer matrix given as sparse rows (col, value), used by
// the per-degree boundary computations. Exposed for the test oracle.
struct SparseRow {
    std::vector<std::pair<int, Int>> entries;  // sorted by column
};
long long sparse_rank(std::vector<SparseRow> rows);

}  // namespace csp
