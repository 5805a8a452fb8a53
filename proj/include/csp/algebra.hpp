#pragma once

#include "csp/numbers.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace csp {

struct Generator {
    std::string name;
    int degree = 0;

    bool is_odd() const { return degree % 2 != 0; }
};

// Generators of a model, in their fixed total order (degree, then declaration).
using GeneratorList = std::vector<Generator>;

// A canonical monomial in Lambda(odd gens) (x) K[even gens] (x) K[t].
// Odd generators appear at most once (exterior law); `t` is kept apart from
// the generator list since every relative model adjoins the same degree-2 base.
struct Monomial {
    std::vector<int> odd;                    // strictly increasing generator ids
    std::vector<std::pair<int, int>> even;   // (generator id, exponent >= 1), increasing ids
    int t_exp = 0;

    bool is_one() const { return odd.empty() && even.empty() && t_exp == 0; }

    int degree(const GeneratorList& gens) const;
    // Word length: odd count + even exponents + t exponent (t and even powers
    // count with multiplicity for the decomposability test).
    int word_length() const;
    bool contains_gen(int id) const;

    auto operator<=>(const Monomial&) const = default;
};

// Exact linear combination of equal-degree monomials (zero poly allowed).
struct Polynomial {
    std::map<Monomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    static Polynomial zero() { return {}; }
    static Polynomial monomial(Monomial m, Rational c = 1);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    // Degree of a homogeneous polynomial; -1 for zero, throws if mixed.
    int degree(const GeneratorList& gens) const;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, Polynomial p);

// Product of canonical monomials with the Koszul sign; zero iff a shared odd
// generator squares away. Returns sign in {-1,0,1}.
int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out);

std::string to_string(const Monomial& m, const GeneratorList& gens);
std::string to_string(const Polynomial& p, const GeneratorList& gens);

}  // namespace csp
