#pragma once

#include "csp/model.hpp"

#include <string>
#include <vector>

namespace csp {

// A coefficient field abstracted by its group of roots of unity.
struct FieldSpec {
    enum class Kind { rationals, cyclotomic, closure };
    Kind kind = Kind::rationals;
    long m = 0;  // cyclotomic order, >= 3

    // Number of d-th roots of unity in the field.
    Int root_count(const Int& d) const;

    static FieldSpec rationals() { return {Kind::rationals, 0}; }
    static FieldSpec cyclotomic(long m);
    static FieldSpec closure() { return {Kind::closure, 0}; }
    static FieldSpec parse(const std::string& token);  // q | cyc:<m> | qbar
    std::string str() const;

    bool operator==(const FieldSpec&) const = default;
};

using IntMat = std::vector<std::vector<Int>>;

// Canonical row Hermite form: positive pivots, entries above a pivot reduced
// into [0, pivot). Lattice equality is row-wise comparison of these.
IntMat hermite_normal_form(IntMat rows, int cols);
bool row_lattice_contains(const IntMat& outer, const IntMat& inner, int cols);

struct SnfResult {
    IntMat u, s, v;      // u*m*v = s, u and v unimodular, s diagonal with s1|s2|...
    IntMat v_inv;
    std::vector<Int> invariant_factors() const;
};
SnfResult smith_normal_form(const IntMat& m);

// Relations cutting the diagonal subgroup out of the torus (K*)^rank.
// `ambient` holds the relations of the full self-equivalence torus (from the
// fiber differential); `relations` the extra ones of a particular fibration.
struct ConstraintLattice {
    int ambient_rank = 0;
    IntMat ambient;
    IntMat relations;

    IntMat stacked() const;
    IntMat canonical_key() const;  // HNF of the stack
};

// Read the diagonal relations off a relative model: one relation per monomial
// term of each D v_i (t contributes nothing); pure t powers force c_i = 1.
// Fiber-differential relations land in `ambient`.
ConstraintLattice extract_constraint_lattice(const RelativeModel& m);

struct AbelianStructure {
    int free_rank = 0;
    std::vector<Int> torsion;          // invariant factors >= 2
    FieldSpec over_field;
    std::vector<Int> realized_orders;  // root_count of each torsion factor

    bool finite() const { return free_rank == 0; }
    Int order() const;  // 0 when infinite
    std::string str() const;  // "(K*)^2", "Z/15", "(K*)^1 x Z/2", "{0}"
};

// Largest relation lattice with the same K-points (a closure operator).
IntMat field_closure(const IntMat& rows, int rank, const FieldSpec& k);
IntMat field_closure(const ConstraintLattice& l, const FieldSpec& k);

AbelianStructure points_structure(const ConstraintLattice& l, const FieldSpec& k);

// points(l1) subset of points(l2), resp. equality, over K.
bool subgroup_includes(const ConstraintLattice& l1, const ConstraintLattice& l2,
                       const FieldSpec& k);
bool subgroup_equals(const ConstraintLattice& l1, const ConstraintLattice& l2,
                     const FieldSpec& k);

}  // namespace csp
