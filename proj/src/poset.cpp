#include "csp/poset.hpp"

#include <algorithm>
#include <map>

namespace csp {

int CsPoset::find_label(const std::string& label) const {
    for (size_t i = 0; i < elements.size(); ++i)
        for (auto& l : elements[i].labels)
            if (l == label) return static_cast<int>(i);
    return -1;
}

CsPoset build_poset(const ModelCatalog& catalog, const FieldSpec& k) {
    CsPoset p;
    p.field = k;
    if (catalog.entries.empty()) return p;

    int unipotent = 0;
    for (size_t g = 0; g < catalog.fiber.gens.size(); ++g)
        unipotent += unipotent_parameter_count(catalog.fiber, static_cast<int>(g));

    // group entries by field-closed lattice
    std::map<IntMat, size_t> by_key;
    std::vector<const CatalogEntry*> reps;
    for (auto& e : catalog.entries) {
        IntMat key = field_closure(e.lattice, k);
        auto [it, fresh] = by_key.try_emplace(key, p.elements.size());
        if (fresh) {
            CsPoset::Element el;
            el.closed_lattice = key;
            el.structure = points_structure(e.lattice, k);
            el.unipotent = unipotent;
            p.elements.push_back(std::move(el));
            reps.push_back(&e);
        }
        CsPoset::Element& el = p.elements[it->second];
        el.labels.push_back(e.label);
        el.dims.push_back(e.cert.total_dim);
    }
    // deterministic numbering: sort by canonical closed lattice
    std::vector<size_t> order(p.elements.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return p.elements[a].closed_lattice < p.elements[b].closed_lattice;
    });
    CsPoset sorted;
    sorted.field = k;
    std::vector<const CatalogEntry*> sorted_reps;
    for (size_t i : order) {
        sorted.elements.push_back(std::move(p.elements[i]));
        sorted_reps.push_back(reps[i]);
    }
    p = std::move(sorted);
    reps = std::move(sorted_reps);
    for (auto& el : p.elements)
        el.min_dim = *std::min_element(el.dims.begin(), el.dims.end());

    const size_t n = p.elements.size();
    p.leq.assign(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            p.leq[i][j] =
                (i == j) || subgroup_includes(reps[i]->lattice, reps[j]->lattice, k);
    p.hasse = hasse_edges(p);
    return p;
}

std::vector<std::pair<int, int>> hasse_edges(const CsPoset& p) {
    std::vector<std::pair<int, int>> edges;
    const size_t n = p.elements.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j || !p.leq[i][j]) continue;  // candidate i < j
            bool cover = true;
            for (size_t m = 0; m < n && cover; ++m)
                if (m != i && m != j && p.leq[i][m] && p.leq[m][j]) cover = false;
            if (cover) edges.emplace_back(static_cast<int>(j), static_cast<int>(i));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

DepthReport depth(const CsPoset& p) {
    DepthReport rep;
    const size_t n = p.elements.size();
    if (n == 0) return rep;
    // longest chain of strictly smaller subgroups below each element; process
    // elements by the number of elements below them (a linear extension)
    std::vector<int> down(n, 1), next(n, -1), below_count(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && p.leq[j][i]) ++below_count[i];
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return below_count[a] != below_count[b] ? below_count[a] < below_count[b] : a < b;
    });
    for (size_t idx : order)
        for (size_t j = 0; j < n; ++j)
            if (j != idx && p.leq[j][idx] &&
                (down[j] + 1 > down[idx] ||
                 (down[j] + 1 == down[idx] && static_cast<int>(j) < next[idx]))) {
                down[idx] = down[j] + 1;
                next[idx] = static_cast<int>(j);
            }
    int top = 0;
    for (size_t i = 1; i < n; ++i)
        if (down[i] > down[top]) top = static_cast<int>(i);
    rep.depth = down[top];
    rep.height = rep.depth - 1;
    for (int cur = top; cur >= 0; cur = next[cur]) rep.witness.push_back(cur);
    return rep;
}

int element_coheight(const CsPoset& p, int element) {
    const size_t n = p.elements.size();
    if (element < 0 || element >= static_cast<int>(n))
        throw UsageError("unknown poset element id");
    std::vector<int> up(n, -1);
    auto rec = [&](auto&& self, size_t i) -> int {
        if (up[i] >= 0) return up[i];
        int best = 1;
        for (size_t j = 0; j < n; ++j)
            if (j != i && p.leq[i][j])  // i strictly below j
                best = std::max(best, 1 + self(self, j));
        up[i] = best;
        return best;
    };
    return rec(rec, static_cast<size_t>(element));
}

int c_value(long long q) {
    if (q < 2) throw UsageError("c_value expects q >= 2");
    int total = 0;
    long long rest = q;
    for (long long p = 2; p * p <= rest; ++p)
        while (rest % p == 0) {
            rest /= p;
            ++total;
        }
    if (rest > 1) ++total;
    return total + 1;
}

}  // namespace csp
