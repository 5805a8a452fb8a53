#pragma once

#include "csp/enumerate.hpp"
#include "csp/lattice.hpp"

#include <string>
#include <vector>

namespace csp {

// Partial order of the distinct diagonal subgroups of a catalog over a field.
struct CsPoset {
    struct Element {
        std::vector<std::string> labels;   // catalog entry labels merged here
        IntMat closed_lattice;             // canonical field-closed relation lattice
        AbelianStructure structure;
        std::vector<long long> dims;       // dim H*(Y) per merged representative
        long long min_dim = 0;
        int unipotent = 0;                 // fiber-level unipotent parameter count
    };
    std::vector<Element> elements;         // deterministic order (lattice key)
    std::vector<std::vector<char>> leq;    // leq[i][j]: subgroup i inside subgroup j
    std::vector<std::pair<int, int>> hasse;  // covers, directed larger -> smaller
    FieldSpec field;

    int find_label(const std::string& label) const;  // -1 if absent
};

struct DepthReport {
    int depth = 0;                 // classes in the longest chain; 0 for empty
    int height = 0;                // edges in the longest chain
    std::vector<int> witness;      // element ids, larger subgroup first
};

CsPoset build_poset(const ModelCatalog& catalog, const FieldSpec& k);
std::vector<std::pair<int, int>> hasse_edges(const CsPoset& p);
DepthReport depth(const CsPoset& p);

// Longest chain ending at the element, counted in classes (maximal -> 1).
int element_coheight(const CsPoset& p, int element);

// One plus the sum of prime-factorization exponents of q >= 2.
int c_value(long long q);

}  // namespace csp
