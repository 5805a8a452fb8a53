#include "csp/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace csp {

// ---- fields -----------------------------------------------------------------

Int FieldSpec::root_count(const Int& d) const {
    Int a = abs(d);
    if (a == 0) return 0;
    switch (kind) {
        case Kind::rationals:
            return gcd(a, Int(2));
        case Kind::cyclotomic: {
            Int M = (m % 2 == 0) ? Int(m) : Int(2 * m);
            return gcd(a, M);
        }
        case Kind::closure:
            return a;
    }
    return 1;
}

FieldSpec FieldSpec::cyclotomic(long m) {
    if (m < 3) throw UsageError("cyclotomic order must be >= 3");
    return {Kind::cyclotomic, m};
}

FieldSpec FieldSpec::parse(const std::string& token) {
    if (token == "q" || token == "Q") return rationals();
    if (token == "qbar" || token == "Qbar") return closure();
    if (token.rfind("cyc:", 0) == 0) {
        try {
            return cyclotomic(std::stol(token.substr(4)));
        } catch (const std::exception&) {
            throw UsageError("malformed field token '" + token + "'");
        }
    }
    throw UsageError("unknown field '" + token + "' (expected q, cyc:<m> or qbar)");
}

std::string FieldSpec::str() const {
    switch (kind) {
        case Kind::rationals: return "q";
        case Kind::cyclotomic: return "cyc:" + std::to_string(m);
        case Kind::closure: return "qbar";
    }
    return "?";
}

// ---- Hermite form ------------------------------------------------------------

IntMat hermite_normal_form(IntMat rows, int cols) {
    IntMat mat;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != cols)
            throw UsageError("lattice row of wrong length");
        for (auto& v : r)
            if (v != 0) {
                mat.push_back(r);
                break;
            }
    }
    int r0 = 0;
    for (int c = 0; c < cols && r0 < static_cast<int>(mat.size()); ++c) {
        // euclid the column below r0 down to one nonzero entry
        while (true) {
            int nz = -1, cnt = 0;
            for (int r = r0; r < static_cast<int>(mat.size()); ++r)
                if (mat[r][c] != 0) {
                    ++cnt;
                    if (nz < 0 || abs(mat[r][c]) < abs(mat[nz][c])) nz = r;
                }
            if (cnt == 0 || cnt == 1) break;
            for (int r = r0; r < static_cast<int>(mat.size()); ++r) {
                if (r == nz || mat[r][c] == 0) continue;
                Int q = mat[r][c] / mat[nz][c];
                for (int j = 0; j < cols; ++j) mat[r][j] -= q * mat[nz][j];
            }
        }
        int piv = -1;
        for (int r = r0; r < static_cast<int>(mat.size()); ++r)
            if (mat[r][c] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(mat[r0], mat[piv]);
        if (mat[r0][c] < 0)
            for (auto& v : mat[r0]) v = -v;
        for (int r = 0; r < r0; ++r) {
            // canonical: entries above pivot in [0, pivot)
            Int q = mat[r][c] / mat[r0][c];
            if (mat[r][c] - q * mat[r0][c] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < cols; ++j) mat[r][j] -= q * mat[r0][j];
        }
        ++r0;
    }
    mat.resize(r0);
    return mat;
}

bool row_lattice_contains(const IntMat& outer, const IntMat& inner, int cols) {
    IntMat h = hermite_normal_form(outer, cols);
    IntMat stacked = h;
    for (auto& r : inner) stacked.push_back(r);
    return hermite_normal_form(stacked, cols) == h;
}

// ---- Smith form ---------------------------------------------------------------

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> f;
    for (size_t i = 0; i < s.size() && i < (s.empty() ? 0 : s[0].size()); ++i)
        if (s[i][i] != 0) f.push_back(s[i][i]);
    return f;
}

SnfResult smith_normal_form(const IntMat& m_in) {
    const int rows = static_cast<int>(m_in.size());
    const int cols = rows ? static_cast<int>(m_in[0].size()) : 0;
    SnfResult res;
    res.s = m_in;
    auto ident = [](int n) {
        IntMat id(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    };
    res.u = ident(rows);
    res.v = ident(cols);
    res.v_inv = ident(cols);
    auto& A = res.s;

    auto row_swap = [&](int i, int j) {
        std::swap(A[i], A[j]);
        std::swap(res.u[i], res.u[j]);
    };
    auto row_addmul = [&](int dst, int src, const Int& k) {
        for (int c = 0; c < cols; ++c) A[dst][c] += k * A[src][c];
        for (int c = 0; c < rows; ++c) res.u[dst][c] += k * res.u[src][c];
    };
    auto col_swap = [&](int i, int j) {
        for (auto& r : A) std::swap(r[i], r[j]);
        for (auto& r : res.v) std::swap(r[i], r[j]);
        std::swap(res.v_inv[i], res.v_inv[j]);
    };
    auto col_neg = [&](int i) {
        for (auto& r : A) r[i] = -r[i];
        for (auto& r : res.v) r[i] = -r[i];
        for (auto& x : res.v_inv[i]) x = -x;
    };
    auto col_addmul = [&](int dst, int src, const Int& k) {
        for (auto& r : A) r[dst] += k * r[src];
        for (auto& r : res.v) r[dst] += k * r[src];
        for (int c = 0; c < cols; ++c) res.v_inv[src][c] -= k * res.v_inv[dst][c];
    };

    int t = 0;
    while (t < rows && t < cols) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (A[i][j] != 0 && (pi < 0 || abs(A[i][j]) < abs(A[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        while (true) {
            bool clean = true;
            for (int i = t + 1; i < rows; ++i)
                if (A[i][t] != 0) {
                    Int q = A[i][t] / A[t][t];
                    row_addmul(i, t, -q);
                    if (A[i][t] != 0) {
                        row_swap(t, i);
                        clean = false;
                    }
                }
            for (int j = t + 1; j < cols; ++j)
                if (A[t][j] != 0) {
                    Int q = A[t][j] / A[t][t];
                    col_addmul(j, t, -q);
                    if (A[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
            if (!clean) continue;
            bool divides = true;
            for (int i = t + 1; i < rows && divides; ++i)
                for (int j = t + 1; j < cols && divides; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        row_addmul(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (A[t][t] < 0) col_neg(t);
        ++t;
    }
    return res;
}

// ---- constraint lattices -------------------------------------------------------

IntMat ConstraintLattice::stacked() const {
    IntMat all = ambient;
    for (auto& r : relations) all.push_back(r);
    return all;
}

IntMat ConstraintLattice::canonical_key() const {
    return hermite_normal_form(stacked(), ambient_rank);
}

namespace {

std::vector<Int> term_relation(const Monomial& m, int target, int n) {
    std::vector<Int> row(n, 0);
    for (int j : m.odd) row[j] += 1;
    for (auto& [j, e] : m.even) row[j] += e;
    row[target] -= 1;
    return row;
}

}  // namespace

ConstraintLattice extract_constraint_lattice(const RelativeModel& m) {
    const int n = static_cast<int>(m.fiber.gens.size());
    // the diagonal ansatz needs distinct even generator degrees
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!m.fiber.gens[i].is_odd() && !m.fiber.gens[j].is_odd() &&
                m.fiber.gens[i].degree == m.fiber.gens[j].degree)
                throw UsageError("diagonal ansatz unsupported: repeated even degree " +
                                 std::to_string(m.fiber.gens[i].degree));
    ConstraintLattice lat;
    lat.ambient_rank = n;
    for (int i = 0; i < n; ++i)
        for (auto& [mon, c] : m.fiber.d[i].terms)
            lat.ambient.push_back(term_relation(mon, i, n));
    for (int i = 0; i < n; ++i)
        for (auto& [mon, c] : m.D[i].terms)
            if (mon.t_exp > 0)  // t^0 terms are the fiber differential, already ambient
                lat.relations.push_back(term_relation(mon, i, n));
    return lat;
}

// ---- closure, structure, comparisons -------------------------------------------

IntMat field_closure(const IntMat& rows, int rank, const FieldSpec& k) {
    if (rows.empty()) return {};
    SnfResult snf = smith_normal_form(rows);
    IntMat out;
    const auto factors = snf.invariant_factors();
    for (size_t i = 0; i < factors.size(); ++i) {
        Int rho = k.root_count(factors[i]);
        std::vector<Int> row(rank, 0);
        for (int c = 0; c < rank; ++c) row[c] = rho * snf.v_inv[i][c];
        out.push_back(std::move(row));
    }
    return hermite_normal_form(out, rank);
}

IntMat field_closure(const ConstraintLattice& l, const FieldSpec& k) {
    return field_closure(l.stacked(), l.ambient_rank, k);
}

Int AbelianStructure::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (auto& r : realized_orders) o *= r;
    return o;
}

std::string AbelianStructure::str() const {
    std::vector<Int> cyc;
    for (auto& r : realized_orders)
        if (r > 1) cyc.push_back(r);
    std::sort(cyc.begin(), cyc.end());
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "(K*)^" << free_rank;
        first = false;
    }
    for (auto& c : cyc) {
        if (!first) os << " x ";
        os << "Z/" << c.str();
        first = false;
    }
    if (first) os << "{0}";
    return os.str();
}

AbelianStructure points_structure(const ConstraintLattice& l, const FieldSpec& k) {
    AbelianStructure st;
    st.over_field = k;
    SnfResult snf = smith_normal_form(l.stacked());
    auto factors = l.stacked().empty() ? std::vector<Int>{} : snf.invariant_factors();
    st.free_rank = l.ambient_rank - static_cast<int>(factors.size());
    for (auto& d : factors) {
        if (d >= 2) st.torsion.push_back(d);
        Int rho = k.root_count(d);
        if (rho > 1) st.realized_orders.push_back(rho);
    }
    return st;
}

bool subgroup_includes(const ConstraintLattice& l1, const ConstraintLattice& l2,
                       const FieldSpec& k) {
    if (l1.ambient_rank != l2.ambient_rank ||
        hermite_normal_form(l1.ambient, l1.ambient_rank) !=
            hermite_normal_form(l2.ambient, l2.ambient_rank))
        throw UsageError("subgroup comparison across different ambient tori");
    IntMat cl1 = field_closure(l1, k);
    return row_lattice_contains(cl1, l2.stacked(), l1.ambient_rank);
}

bool subgroup_equals(const ConstraintLattice& l1, const ConstraintLattice& l2,
                     const FieldSpec& k) {
    if (l1.ambient_rank != l2.ambient_rank ||
        hermite_normal_form(l1.ambient, l1.ambient_rank) !=
            hermite_normal_form(l2.ambient, l2.ambient_rank))
        throw UsageError("subgroup comparison across different ambient tori");
    return field_closure(l1, k) == field_closure(l2, k);
}

}  // namespace csp
