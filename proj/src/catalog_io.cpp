#include "csp/catalog_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace csp {

using ordered_json = nlohmann::ordered_json;

CatalogFile make_catalog_file(const ModelCatalog& cat, const CsPoset& poset,
                              const DepthReport& depth) {
    CatalogFile c;
    c.field = poset.field;
    c.provenance = cat.provenance;
    c.incomplete = cat.incomplete;
    c.fiber = cat.fiber;
    for (auto& e : cat.entries) {
        CatalogFile::Model m;
        m.label = e.label;
        m.dim = e.cert.total_dim;
        for (size_t i = 0; i < e.model.D.size(); ++i)
            for (auto& [mono, coef] : e.model.D[i].terms)
                m.terms.push_back({cat.fiber.gens[i].name, to_string(coef),
                                   to_string(mono, cat.fiber.gens)});
        c.models.push_back(std::move(m));
    }
    for (auto& el : poset.elements) {
        CatalogFile::ClassInfo ci;
        ci.labels = el.labels;
        ci.lattice = el.closed_lattice;
        ci.structure = el.structure.str();
        ci.dims = el.dims;
        ci.min_dim = el.min_dim;
        ci.unipotent = el.unipotent;
        c.classes.push_back(std::move(ci));
    }
    for (size_t i = 0; i < poset.elements.size(); ++i)
        for (size_t j = 0; j < poset.elements.size(); ++j)
            if (i != j && poset.leq[i][j])
                c.order.emplace_back(static_cast<int>(i), static_cast<int>(j));
    c.hasse = poset.hasse;
    c.depth_report = depth;
    return c;
}

namespace {

ordered_json mat_to_json(const IntMat& m) {
    ordered_json rows = ordered_json::array();
    for (auto& r : m) {
        ordered_json row = ordered_json::array();
        for (auto& v : r) row.push_back(to_ll(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMat mat_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected array of rows");
    IntMat m;
    for (auto& row : j) {
        if (!row.is_array()) throw SchemaError(where + ": expected integer row");
        std::vector<Int> r;
        for (auto& v : row) {
            if (!v.is_number_integer()) throw SchemaError(where + ": expected integer entry");
            r.push_back(Int(v.get<long long>()));
        }
        m.push_back(std::move(r));
    }
    return m;
}

const ordered_json& field_at(const ordered_json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

std::string catalog_to_json(const CatalogFile& c) {
    ordered_json j;
    j["format_version"] = c.format_version;
    j["field"] = c.field.str();
    j["provenance"] = c.provenance;
    j["incomplete"] = c.incomplete;
    ordered_json fib;
    fib["generators"] = ordered_json::array();
    for (auto& g : c.fiber.gens)
        fib["generators"].push_back(ordered_json{{"name", g.name}, {"degree", g.degree}});
    ordered_json fd = ordered_json::array();
    for (size_t i = 0; i < c.fiber.gens.size(); ++i)
        for (auto& [mono, coef] : c.fiber.d[i].terms)
            fd.push_back(ordered_json{{"gen", c.fiber.gens[i].name},
                                      {"coeff", to_string(coef)},
                                      {"monomial", to_string(mono, c.fiber.gens)}});
    fib["differential"] = std::move(fd);
    j["fiber"] = std::move(fib);
    j["models"] = ordered_json::array();
    for (auto& m : c.models) {
        ordered_json jm;
        jm["label"] = m.label;
        jm["dim"] = m.dim;
        jm["terms"] = ordered_json::array();
        for (auto& t : m.terms)
            jm["terms"].push_back(
                ordered_json{{"gen", t.gen}, {"coeff", t.coeff}, {"monomial", t.monomial}});
        j["models"].push_back(std::move(jm));
    }
    j["classes"] = ordered_json::array();
    for (auto& ci : c.classes) {
        ordered_json jc;
        jc["labels"] = ci.labels;
        jc["lattice"] = mat_to_json(ci.lattice);
        jc["structure"] = ci.structure;
        jc["dims"] = ci.dims;
        jc["min_dim"] = ci.min_dim;
        jc["unipotent"] = ci.unipotent;
        j["classes"].push_back(std::move(jc));
    }
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
        ordered_json a = ordered_json::array();
        for (auto& [x, y] : v) a.push_back(ordered_json::array({x, y}));
        return a;
    };
    j["order"] = pairs(c.order);
    j["hasse"] = pairs(c.hasse);
    j["depth"] = ordered_json{{"depth", c.depth_report.depth},
                              {"height", c.depth_report.height},
                              {"witness", c.depth_report.witness}};
    return j.dump(2) + "\n";
}

CatalogFile catalog_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    CatalogFile c;
    if (!field_at(j, "format_version").is_number_integer() ||
        field_at(j, "format_version").get<int>() != 1)
        throw SchemaError("format_version: expected 1");
    c.field = FieldSpec::parse(field_at(j, "field").get<std::string>());
    c.provenance = field_at(j, "provenance").get<std::string>();
    c.incomplete = field_at(j, "incomplete").get<bool>();
    const auto& fib = field_at(j, "fiber");
    for (auto& g : field_at(fib, "generators"))
        c.fiber.gens.push_back(
            {field_at(g, "name").get<std::string>(), field_at(g, "degree").get<int>()});
    c.fiber.d.assign(c.fiber.gens.size(), Polynomial::zero());
    auto term_into = [&](const ordered_json& t, std::vector<Polynomial>& dst,
                         const std::string& where) {
        std::string gen = field_at(t, "gen").get<std::string>();
        int gi = c.fiber.find_gen(gen);
        if (gi < 0) throw SchemaError(where + ": unknown generator '" + gen + "'");
        Rational coef = parse_rational(field_at(t, "coeff").get<std::string>());
        std::string ms = field_at(t, "monomial").get<std::string>();
        Polynomial p;
        try {
            p = parse_polynomial(ms, c.fiber.gens);
        } catch (const UsageError& e) {
            throw SchemaError(where + ": " + e.what());
        }
        if (p.terms.size() != 1 || p.terms.begin()->second != 1)
            throw SchemaError(where + ": expected a single monomial, got '" + ms + "'");
        const Monomial& mono = p.terms.begin()->first;
        if (mono.degree(c.fiber.gens) != c.fiber.gens[gi].degree + 1)
            throw SchemaError(where + ": term '" + ms + "' does not balance for d " + gen);
        dst[gi] += Polynomial::monomial(mono, coef);
    };
    for (auto& t : field_at(fib, "differential"))
        term_into(t, c.fiber.d, "fiber differential");
    for (auto& jm : field_at(j, "models")) {
        CatalogFile::Model m;
        m.label = field_at(jm, "label").get<std::string>();
        m.dim = field_at(jm, "dim").get<long long>();
        std::vector<Polynomial> check(c.fiber.gens.size(), Polynomial::zero());
        for (auto& t : field_at(jm, "terms")) {
            term_into(t, check, "model " + m.label);
            m.terms.push_back({field_at(t, "gen").get<std::string>(),
                               field_at(t, "coeff").get<std::string>(),
                               field_at(t, "monomial").get<std::string>()});
        }
        c.models.push_back(std::move(m));
    }
    for (auto& jc : field_at(j, "classes")) {
        CatalogFile::ClassInfo ci;
        for (auto& l : field_at(jc, "labels")) ci.labels.push_back(l.get<std::string>());
        ci.lattice = mat_from_json(field_at(jc, "lattice"), "class lattice");
        ci.structure = field_at(jc, "structure").get<std::string>();
        for (auto& d : field_at(jc, "dims")) ci.dims.push_back(d.get<long long>());
        ci.min_dim = field_at(jc, "min_dim").get<long long>();
        ci.unipotent = field_at(jc, "unipotent").get<int>();
        c.classes.push_back(std::move(ci));
    }
    auto pairs_from = [&](const ordered_json& a, const std::string& where) {
        std::vector<std::pair<int, int>> v;
        for (auto& p : a) {
            if (!p.is_array() || p.size() != 2) throw SchemaError(where + ": expected pair");
            int x = p[0].get<int>(), y = p[1].get<int>();
            int k = static_cast<int>(c.classes.size());
            if (x < 0 || y < 0 || x >= k || y >= k)
                throw SchemaError(where + ": class id out of range");
            v.emplace_back(x, y);
        }
        return v;
    };
    c.order = pairs_from(field_at(j, "order"), "order");
    c.hasse = pairs_from(field_at(j, "hasse"), "hasse");
    const auto& jd = field_at(j, "depth");
    c.depth_report.depth = field_at(jd, "depth").get<int>();
    c.depth_report.height = field_at(jd, "height").get<int>();
    for (auto& w : field_at(jd, "witness"))
        c.depth_report.witness.push_back(w.get<int>());
    return c;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::ios_base::failure("cannot open '" + tmp + "' for writing");
        os << contents;
        if (!os.flush()) throw std::ios_base::failure("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::ios_base::failure("cannot move '" + tmp + "' to '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void save_catalog(const CatalogFile& c, const std::string& path) {
    write_file_atomic(path, catalog_to_json(c));
}

CatalogFile load_catalog(const std::string& path) {
    return catalog_from_json(read_file(path));
}

std::string poset_to_dot(const CsPoset& p) {
    std::ostringstream os;
    os << "digraph csposet {\n";
    os << "  rankdir=TB;\n  node [shape=box];\n";
    // rank groups by co-height
    std::map<int, std::vector<int>> by_coheight;
    for (size_t i = 0; i < p.elements.size(); ++i)
        by_coheight[element_coheight(p, static_cast<int>(i))].push_back(static_cast<int>(i));
    for (size_t i = 0; i < p.elements.size(); ++i) {
        const auto& el = p.elements[i];
        std::string label;
        for (auto& l : el.labels) label += (label.empty() ? "" : "=") + l;
        os << "  c" << i << " [label=\"" << label << " / " << el.structure.str() << " / "
           << el.min_dim << "\"];\n";
    }
    for (auto& [h, ids] : by_coheight) {
        os << "  { rank=same;";
        for (int id : ids) os << " c" << id << ";";
        os << " }\n";
    }
    for (auto& [from, to] : p.hasse) os << "  c" << from << " -> c" << to << ";\n";
    os << "}\n";
    return os.str();
}

void export_dot(const CsPoset& p, const std::string& path) {
    write_file_atomic(path, poset_to_dot(p));
}

}  // namespace csp
