#pragma once

#include "csp/enumerate.hpp"
#include "csp/poset.hpp"

#include <string>

namespace csp {

// Everything one analysis run produces, in catalog-file form.
struct CatalogFile {
    int format_version = 1;
    FieldSpec field;
    std::string provenance;
    bool incomplete = false;
    FiberModel fiber;
    struct Model {
        std::string label;
        // differential as (generator, coefficient string, monomial string) triples
        struct Term {
            std::string gen;
            std::string coeff;
            std::string monomial;
        };
        std::vector<Term> terms;
        long long dim = 0;  // dim H*(Y)
    };
    std::vector<Model> models;
    struct ClassInfo {
        std::vector<std::string> labels;
        IntMat lattice;
        std::string structure;
        std::vector<long long> dims;
        long long min_dim = 0;
        int unipotent = 0;
    };
    std::vector<ClassInfo> classes;
    std::vector<std::pair<int, int>> order;  // pairs (i, j) with class i <= class j, i != j
    std::vector<std::pair<int, int>> hasse;  // covers, larger -> smaller
    DepthReport depth_report;
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

CatalogFile make_catalog_file(const ModelCatalog& cat, const CsPoset& poset,
                              const DepthReport& depth);

std::string catalog_to_json(const CatalogFile& c);
CatalogFile catalog_from_json(const std::string& text);

// Atomic file writes (temp file + rename). Throws std::ios_base::failure on I/O error.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

void save_catalog(const CatalogFile& c, const std::string& path);
CatalogFile load_catalog(const std::string& path);

// DOT digraph of the Hasse diagram, nodes rank-grouped by co-height.
std::string poset_to_dot(const CsPoset& p);
void export_dot(const CsPoset& p, const std::string& path);

}  // namespace csp
