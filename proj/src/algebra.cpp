#include "csp/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace csp {

int Monomial::degree(const GeneratorList& gens) const {
    int d = 2 * t_exp;
    for (int i : odd) d += gens.at(i).degree;
    for (auto& [i, e] : even) d += e * gens.at(i).degree;
    return d;
}

int Monomial::word_length() const {
    int w = t_exp + static_cast<int>(odd.size());
    for (auto& [i, e] : even) w += e;
    return w;
}

bool Monomial::contains_gen(int id) const {
    if (std::binary_search(odd.begin(), odd.end(), id)) return true;
    for (auto& [i, e] : even)
        if (i == id) return true;
    return false;
}

int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out) {
    out.odd.clear();
    out.even.clear();
    out.t_exp = a.t_exp + b.t_exp;

    // Merge odd parts counting inversions; a repeated index is an exterior square.
    out.odd.reserve(a.odd.size() + b.odd.size());
    size_t i = 0, j = 0;
    long swaps = 0;
    while (i < a.odd.size() && j < b.odd.size()) {
        if (a.odd[i] == b.odd[j]) return 0;
        if (a.odd[i] < b.odd[j]) {
            out.odd.push_back(a.odd[i++]);
        } else {
            // b.odd[j] moves past the remaining odd generators of a
            swaps += static_cast<long>(a.odd.size() - i);
            out.odd.push_back(b.odd[j++]);
        }
    }
    while (i < a.odd.size()) out.odd.push_back(a.odd[i++]);
    while (j < b.odd.size()) out.odd.push_back(b.odd[j++]);

    // Even parts add exponents.
    out.even.reserve(a.even.size() + b.even.size());
    size_t p = 0, q = 0;
    while (p < a.even.size() && q < b.even.size()) {
        if (a.even[p].first == b.even[q].first) {
            out.even.emplace_back(a.even[p].first, a.even[p].second + b.even[q].second);
            ++p, ++q;
        } else if (a.even[p].first < b.even[q].first) {
            out.even.push_back(a.even[p++]);
        } else {
            out.even.push_back(b.even[q++]);
        }
    }
    while (p < a.even.size()) out.even.push_back(a.even[p++]);
    while (q < b.even.size()) out.even.push_back(b.even[q++]);

    return swaps % 2 == 0 ? 1 : -1;
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
    Polynomial p;
    if (c != 0) p.terms.emplace(std::move(m), std::move(c));
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, coef] : terms) coef *= c;
    return *this;
}

int Polynomial::degree(const GeneratorList& gens) const {
    int d = -1;
    for (auto& [m, c] : terms) {
        int md = m.degree(gens);
        if (d == -1) d = md;
        else if (d != md) throw UsageError("polynomial is not homogeneous");
    }
    return d;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    Monomial prod;
    for (auto& [ma, ca] : a.terms) {
        for (auto& [mb, cb] : b.terms) {
            int sign = multiply_monomials(ma, mb, prod);
            if (sign == 0) continue;
            Rational c = ca * cb;
            if (sign < 0) c = -c;
            auto it = r.terms.find(prod);
            if (it == r.terms.end()) {
                r.terms.emplace(prod, c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

std::string to_string(const Monomial& m, const GeneratorList& gens) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    // even generators print in id order interleaved with odd by id
    size_t oi = 0, ei = 0;
    while (oi < m.odd.size() || ei < m.even.size()) {
        bool take_odd =
            ei == m.even.size() || (oi < m.odd.size() && m.odd[oi] < m.even[ei].first);
        if (take_odd) {
            os << gens.at(m.odd[oi++]).name;
        } else {
            os << gens.at(m.even[ei].first).name;
            if (m.even[ei].second > 1) os << "^" << m.even[ei].second;
            ++ei;
        }
    }
    if (m.t_exp > 0) {
        os << "t";
        if (m.t_exp > 1) os << "^" << m.t_exp;
    }
    return os.str();
}

std::string to_string(const Polynomial& p, const GeneratorList& gens) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || m.is_one()) {
            os << to_string(a);
            if (!m.is_one()) os << " ";
        }
        if (!m.is_one()) os << to_string(m, gens);
        first = false;
    }
    return os.str();
}

}  // namespace csp
