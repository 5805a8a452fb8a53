#pragma once

#include "csp/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csp {

// Free graded-commutative algebra on simply connected generators with a
// decomposable, lower-triangular differential. Differentials never involve t.
struct FiberModel {
    GeneratorList gens;
    std::vector<Polynomial> d;  // d[i] = differential of gens[i]

    bool zero_differential() const;
    std::vector<int> degrees() const;
    int find_gen(const std::string& name) const;  // -1 if absent
};

// The fiber algebra with the degree-2 base generator t adjoined (D t = 0).
// D[i] extends d[i] by terms with positive t exponent.
struct RelativeModel {
    FiberModel fiber;
    std::vector<Polynomial> D;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Leibniz extension of the generator differentials; degree +1.
Polynomial apply_differential(const FiberModel& m, const Polynomial& p);
Polynomial apply_differential(const RelativeModel& m, const Polynomial& p);

// Checks grading, decomposability, nilpotence (lower triangularity) and
// d*d = 0; the relative form also checks that D reduces to d modulo (t).
ValidationReport validate_model(const FiberModel& m);
ValidationReport validate_model(const RelativeModel& m);

// Sphere-product fiber: one odd generator per degree, zero differential.
FiberModel sphere_product_fiber(const std::vector<int>& degrees);

// ---- model description text ----------------------------------------------
//
// One generator per line "name degree" (a generator literally named `t` of
// degree 2 marks a relative model), then differential lines
// "d name = <polynomial>" with +, -, ^ and juxtaposition for products.
// Whitespace-insensitive; '#' starts a comment.

struct ParsedModel {
    bool relative = false;
    FiberModel fiber;
    std::optional<RelativeModel> rel;
};

ParsedModel parse_model(const std::string& text);
Polynomial parse_polynomial(const std::string& text, const GeneratorList& gens);
std::string print_model(const RelativeModel& m);
std::string print_model(const FiberModel& m);

}  // namespace csp
