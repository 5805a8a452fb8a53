#include "csp/cohomology.hpp"

#include <algorithm>
#include <numeric>

namespace csp {

namespace {

// Enumerate square-free odd parts and even powers with total degree k,
// optionally adding t powers. Deterministic: results sorted by Monomial order.
void enumerate_basis(const GeneratorList& gens, int k, bool with_t,
                     std::vector<Monomial>& out) {
    Monomial cur;
    // walk generators in order, choosing exponent 0/1 for odd, 0..k/deg for even
    std::vector<int> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    struct Frame {
        size_t gi;
        int remaining;
    };
    // recursive lambda
    auto rec = [&](auto&& self, size_t gi, int remaining) -> void {
        if (remaining == 0 || gi == gens.size()) {
            if (remaining == 0) {
                out.push_back(cur);
            } else if (with_t && remaining % 2 == 0) {
                Monomial m = cur;
                m.t_exp = remaining / 2;
                out.push_back(m);
            }
            return;
        }
        // skip to next generator
        self(self, gi + 1, remaining);
        const Generator& g = gens[gi];
        if (g.is_odd()) {
            if (g.degree <= remaining) {
                cur.odd.push_back(static_cast<int>(gi));
                self(self, gi + 1, remaining - g.degree);
                cur.odd.pop_back();
            }
        } else {
            for (int e = 1; e * g.degree <= remaining; ++e) {
                cur.even.emplace_back(static_cast<int>(gi), e);
                self(self, gi + 1, remaining - e * g.degree);
                cur.even.pop_back();
            }
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

std::vector<Monomial> basis_in_degree(const FiberModel& m, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    if (k == 0) {
        out.push_back(Monomial{});
        return out;
    }
    enumerate_basis(m.gens, k, /*with_t=*/false, out);
    return out;
}

std::vector<Monomial> basis_in_degree(const RelativeModel& m, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    if (k == 0) {
        out.push_back(Monomial{});
        return out;
    }
    enumerate_basis(m.fiber.gens, k, /*with_t=*/true, out);
    return out;
}

// ---- sparse exact elimination ----------------------------------------------

namespace {

// Incremental integer Gauss: stored rows are gcd-normalized and own distinct
// pivot columns. Feeding a row reduces it against the store; a nonzero
// remainder becomes a new pivot row.
class Eliminator {
  public:
    // returns true if the row was independent (rank grew)
    bool feed(SparseRow row) {
        reduce(row);
        if (row.entries.empty()) return false;
        normalize(row);
        int pcol = pick_pivot(row);
        pivot_of_col_[pcol] = static_cast<int>(rows_.size());
        pivot_col_.push_back(pcol);
        rows_.push_back(std::move(row));
        return true;
    }

    // true iff the row lies in the span of the rows fed so far (row untouched)
    bool in_span(SparseRow row) const {
        reduce(row);
        return row.entries.empty();
    }

    long long rank() const { return static_cast<long long>(rows_.size()); }

  private:
    static const Int* find_col(const SparseRow& r, int col) {
        auto it = std::lower_bound(
            r.entries.begin(), r.entries.end(), col,
            [](const std::pair<int, Int>& e, int c) { return e.first < c; });
        return (it != r.entries.end() && it->first == col) ? &it->second : nullptr;
    }

    // row := (a*row - b*pivot)/g, fraction-free with gcd scaling
    static void combine(SparseRow& row, const Int& rv, const SparseRow& piv, const Int& pv) {
        Int g = gcd(rv, pv);
        Int a = pv / g, b = rv / g;
        SparseRow out;
        out.entries.reserve(row.entries.size() + piv.entries.size());
        size_t i = 0, j = 0;
        while (i < row.entries.size() && j < piv.entries.size()) {
            if (row.entries[i].first == piv.entries[j].first) {
                Int v = a * row.entries[i].second - b * piv.entries[j].second;
                if (v != 0) out.entries.emplace_back(row.entries[i].first, std::move(v));
                ++i, ++j;
            } else if (row.entries[i].first < piv.entries[j].first) {
                out.entries.emplace_back(row.entries[i].first, a * row.entries[i].second);
                ++i;
            } else {
                out.entries.emplace_back(piv.entries[j].first, -b * piv.entries[j].second);
                ++j;
            }
        }
        for (; i < row.entries.size(); ++i)
            out.entries.emplace_back(row.entries[i].first, a * row.entries[i].second);
        for (; j < piv.entries.size(); ++j)
            out.entries.emplace_back(piv.entries[j].first, -b * piv.entries[j].second);
        row = std::move(out);
    }

    static void normalize(SparseRow& row) {
        Int g = 0;
        for (auto& [c, v] : row.entries) {
            g = gcd(g, v);
            if (g == 1) break;
        }
        if (g > 1)
            for (auto& [c, v] : row.entries) v /= g;
    }

    void reduce(SparseRow& row) const {
        bool changed = true;
        while (changed && !row.entries.empty()) {
            changed = false;
            for (auto& [col, val] : row.entries) {
                auto it = pivot_of_col_.find(col);
                if (it != pivot_of_col_.end()) {
                    const SparseRow& piv = rows_[it->second];
                    combine(row, val, piv, *find_col(piv, col));
                    normalize(row);
                    changed = true;
                    break;
                }
            }
        }
    }

    int pick_pivot(const SparseRow& row) const {
        // prefer a unit entry in a fresh column; fall back to smallest |value|
        int best = row.entries.front().first;
        Int best_abs = abs(row.entries.front().second);
        for (auto& [c, v] : row.entries) {
            Int a = abs(v);
            if (a < best_abs) {
                best = c;
                best_abs = a;
            }
            if (best_abs == 1) break;
        }
        return best;
    }

    std::vector<SparseRow> rows_;
    std::vector<int> pivot_col_;
    std::map<int, int> pivot_of_col_;
};

}  // namespace

long long sparse_rank(std::vector<SparseRow> rows) {
    Eliminator e;
    for (auto& r : rows) e.feed(std::move(r));
    return e.rank();
}

// ---- Betti numbers ----------------------------------------------------------

namespace {

// Differential of one basis monomial expressed in the degree-(k+1) basis.
template <typename ModelT>
SparseRow boundary_row(const ModelT& model, const Monomial& mono,
                       const std::map<Monomial, int>& next_index) {
    Polynomial dm = apply_differential(model, Polynomial::monomial(mono));
    SparseRow row;
    row.entries.reserve(dm.terms.size());
    Int lcm_den = 1;
    for (auto& [m, c] : dm.terms) lcm_den = lcm(lcm_den, denominator(c));
    for (auto& [m, c] : dm.terms) {
        auto it = next_index.find(m);
        if (it == next_index.end())
            throw std::logic_error("boundary left the enumerated basis");
        row.entries.emplace_back(it->second, numerator(c) * (lcm_den / denominator(c)));
    }
    std::sort(row.entries.begin(), row.entries.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return row;
}

template <typename ModelT>
BettiTable betti_impl(const ModelT& model, int up_to) {
    BettiTable table;
    table.computed_up_to = up_to;
    if (up_to < 0) return table;

    std::vector<long long> dim(up_to + 2, 0), rank(up_to + 2, 0);
    std::vector<Monomial> cur = basis_in_degree(model, 0);
    for (int k = 0; k <= up_to; ++k) {
        std::vector<Monomial> next = basis_in_degree(model, k + 1);
        dim[k] = static_cast<long long>(cur.size());
        std::map<Monomial, int> next_index;
        for (size_t i = 0; i < next.size(); ++i) next_index.emplace(next[i], static_cast<int>(i));
        // rank of d_k : C^k -> C^{k+1}; degrees are independent of each other
        Eliminator elim;
        for (auto& mono : cur) {
            SparseRow row = boundary_row(model, mono, next_index);
            if (!row.entries.empty()) elim.feed(std::move(row));
        }
        rank[k] = elim.rank();
        cur = std::move(next);
    }
    for (int k = 0; k <= up_to; ++k) {
        long long b = dim[k] - rank[k] - (k > 0 ? rank[k - 1] : 0);
        if (b != 0) table.by_degree[k] = b;
    }
    return table;
}

}  // namespace

BettiTable betti_numbers(const FiberModel& m, int up_to) { return betti_impl(m, up_to); }
BettiTable betti_numbers(const RelativeModel& m, int up_to) { return betti_impl(m, up_to); }

// ---- formal dimension -------------------------------------------------------

int formal_dimension(const FiberModel& m) {
    bool all_odd = true;
    for (auto& g : m.gens)
        if (!g.is_odd()) all_odd = false;
    if (all_odd && m.zero_differential()) {
        int s = 0;
        for (auto& g : m.gens) s += g.degree;
        return s;
    }
    // one even generator x, exactly one relation dy = x^k, everything else a cycle
    int even_idx = -1;
    for (size_t i = 0; i < m.gens.size(); ++i) {
        if (!m.gens[i].is_odd()) {
            if (even_idx >= 0) throw UsageError("formal dimension: several even generators");
            even_idx = static_cast<int>(i);
        }
    }
    if (even_idx < 0)
        throw UsageError("formal dimension: fiber with nonzero differential on odd generators");
    int rel_idx = -1;
    int power = 0;
    for (size_t i = 0; i < m.gens.size(); ++i) {
        if (m.d[i].is_zero()) continue;
        if (rel_idx >= 0) throw UsageError("formal dimension: more than one relation");
        if (m.d[i].terms.size() != 1) throw UsageError("formal dimension: relation not a monomial");
        const Monomial& mon = m.d[i].terms.begin()->first;
        if (!mon.odd.empty() || mon.even.size() != 1 || mon.even[0].first != even_idx)
            throw UsageError("formal dimension: relation is not a power of the even generator");
        rel_idx = static_cast<int>(i);
        power = mon.even[0].second;
    }
    if (rel_idx < 0)
        throw UsageError("formal dimension: free even generator (infinite cohomology)");
    // truncated polynomial algebra on x times the exterior algebra on the
    // remaining odd generators
    int fd = (power - 1) * m.gens[even_idx].degree;
    for (size_t i = 0; i < m.gens.size(); ++i)
        if (static_cast<int>(i) != even_idx && static_cast<int>(i) != rel_idx)
            fd += m.gens[i].degree;
    return fd;
}

// ---- c-symplectic certificate ----------------------------------------------

CsCertificate c_symplectic_certify(const RelativeModel& m) {
    CsCertificate cert;
    int fiber_fd = formal_dimension(m.fiber);
    if (fiber_fd % 2 == 0) {
        cert.reason = "parity: fiber formal dimension " + std::to_string(fiber_fd) + " is even";
        return cert;
    }
    const int N = fiber_fd;
    cert.betti = betti_numbers(m, N + 1);
    if (cert.betti.at(N) != 0 || cert.betti.at(N + 1) != 0) {
        cert.reason = "window: cohomology does not vanish above degree " + std::to_string(N - 1);
        return cert;
    }
    long long total = 0;
    int fd_y = -1;
    for (auto& [k, b] : cert.betti.by_degree) {
        if (k <= N - 1 && b != 0) {
            total += b;
            fd_y = std::max(fd_y, k);
        }
    }
    if (fd_y != N - 1 || cert.betti.at(N - 1) != 1) {
        cert.reason = "top-degree: expected one class in degree " + std::to_string(N - 1);
        return cert;
    }
    // top power of [t]: t^((N-1)/2) must not be a coboundary
    const int m_top = (N - 1) / 2;
    {
        std::vector<Monomial> below = basis_in_degree(m, N - 2);
        std::vector<Monomial> top = basis_in_degree(m, N - 1);
        std::map<Monomial, int> top_index;
        for (size_t i = 0; i < top.size(); ++i) top_index.emplace(top[i], static_cast<int>(i));
        Eliminator image;
        struct FeedAll {};
        for (auto& mono : below) {
            Polynomial dm = apply_differential(m, Polynomial::monomial(mono));
            if (dm.is_zero()) continue;
            SparseRow row;
            Int lcm_den = 1;
            for (auto& [mm, c] : dm.terms) lcm_den = lcm(lcm_den, denominator(c));
            for (auto& [mm, c] : dm.terms)
                row.entries.emplace_back(top_index.at(mm),
                                         numerator(c) * (lcm_den / denominator(c)));
            std::sort(row.entries.begin(), row.entries.end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
            image.feed(std::move(row));
        }
        Monomial t_top;
        t_top.t_exp = m_top;
        SparseRow target;
        target.entries.emplace_back(top_index.at(t_top), Int(1));
        if (image.in_span(target)) {
            cert.reason = "top-class: [t^" + std::to_string(m_top) + "] vanishes";
            return cert;
        }
    }
    cert.certified = true;
    cert.formal_dimension_Y = N - 1;
    cert.top_power = m_top;
    cert.total_dim = total;
    return cert;
}

int unipotent_parameter_count(const FiberModel& m, int gen_index) {
    const int k = m.gens.at(gen_index).degree;
    std::vector<Monomial> basis = basis_in_degree(m, k);
    std::vector<Monomial> decomposable;
    for (auto& mono : basis)
        if (mono.word_length() >= 2) decomposable.push_back(mono);
    if (m.zero_differential())
        return static_cast<int>(decomposable.size());
    // cocycles among decomposables, modulo coboundaries from degree k-1
    std::vector<Monomial> above = basis_in_degree(m, k + 1);
    std::map<Monomial, int> above_index;
    for (size_t i = 0; i < above.size(); ++i) above_index.emplace(above[i], static_cast<int>(i));
    std::vector<SparseRow> rows;
    for (auto& mono : decomposable)
        rows.push_back(boundary_row(m, mono, above_index));
    long long rank_d = sparse_rank(rows);
    long long cocycles = static_cast<long long>(decomposable.size()) - rank_d;
    std::vector<Monomial> below = basis_in_degree(m, k - 1);
    std::map<Monomial, int> here_index;
    for (size_t i = 0; i < basis.size(); ++i) here_index.emplace(basis[i], static_cast<int>(i));
    rows.clear();
    for (auto& mono : below)
        rows.push_back(boundary_row(m, mono, here_index));
    long long boundaries = sparse_rank(rows);
    return static_cast<int>(cocycles - boundaries);
}

}  // namespace csp
