#pragma once

#include "csp/cohomology.hpp"
#include "csp/lattice.hpp"
#include "csp/model.hpp"

#include <string>
#include <vector>

namespace csp {

// One degree-balanced candidate term for D v_target. The t exponent is forced
// by the support, so each target has finitely many terms.
struct AdmissibleTerm {
    int target = 0;
    Monomial mono;  // includes the forced t power
};

// Complete list of balanced terms with support below `target`, deterministic
// order: nonempty supports by (word length, support), the pure t power last.
std::vector<AdmissibleTerm> admissible_terms(const FiberModel& fiber, int target);

struct EnumLimits {
    int max_terms_per_generator = 8;
    long long max_assignments = 10'000'000;
    long long max_models = -1;  // stop after this many certified classes (<0: all)
};

struct CatalogEntry {
    std::string label;
    RelativeModel model;
    CsCertificate cert;
    ConstraintLattice lattice;
};

struct ModelCatalog {
    FiberModel fiber;
    std::vector<CatalogEntry> entries;
    std::string provenance;  // "enumerated", "fixture(<name>)", "family(<name>)"
    bool incomplete = false;

    bool empty() const { return entries.empty(); }
};

// Product of odd spheres with sorted degrees: true iff a c-symplectic total
// space exists (odd count and the pairwise sums below the top degree).
bool pre_c_symplectic(const std::vector<int>& degrees);

// All coefficient assignments from coefficients + {0} to the admissible terms
// of the fiber, filtered by d*d = 0 and the c-symplectic certificate, one
// entry per distinct field-closed constraint lattice. Fibers failing the
// parity gate or pre_c_symplectic yield the empty catalog (when gate is on).
ModelCatalog enumerate_models(const FiberModel& fiber, const std::vector<Rational>& coefficients,
                              const EnumLimits& limits, const FieldSpec& dedup_field,
                              bool apply_gate = true);

// Projective-space-type family: fiber (x, y, z | dy = x^(n+1)) with one model
// per admissible exponent i (a proper divisor of n+1, or 0).
ModelCatalog cp_family(int n);

// The explicit chain of (n+1)/2 nested models on the rank-n symplectic-group
// fiber (degrees 4i-1).
ModelCatalog sp_chain(int n);

}  // namespace csp
