#include "csp/catalog_io.hpp"
#include "csp/fixtures.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

// exit codes: 0 success, 2 usage, 3 enumeration cap hit, 4 I/O, 5 schema
constexpr int kOk = 0, kUsage = 2, kCap = 3, kIo = 4, kSchema = 5;

std::vector<csp::Rational> parse_coeffs(const std::string& csv) {
    std::vector<csp::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(csp::parse_rational(item));
    }
    if (out.empty()) throw csp::UsageError("empty coefficient list");
    return out;
}

std::vector<int> parse_degrees(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw csp::UsageError("malformed degree list '" + csv + "'");
        }
    }
    if (out.empty()) throw csp::UsageError("empty degree list");
    return out;
}

struct AnalyzeArgs {
    std::string degrees, fixture, model_path, field = "q", coeffs = "1,-1,2";
    int cp = -1, sp = -1;
    int max_terms = 8;
    long long max_assignments = 10'000'000;
    std::string dot_path, json_path;
    bool quiet = false;
};

int run_analyze(const AnalyzeArgs& a) {
    csp::FieldSpec field = csp::FieldSpec::parse(a.field);
    int sources = (!a.degrees.empty() && a.fixture.empty() ? 1 : 0) + (a.cp >= 0 ? 1 : 0) +
                  (a.sp >= 0 ? 1 : 0) + (!a.fixture.empty() ? 1 : 0) +
                  (!a.model_path.empty() ? 1 : 0);
    if (sources != 1)
        throw csp::UsageError(
            "exactly one fiber source required (--degrees, --cp, --sp, --fixture, --model)");

    csp::EnumLimits limits;
    limits.max_terms_per_generator = a.max_terms;
    limits.max_assignments = a.max_assignments;

    csp::ModelCatalog catalog;
    if (a.cp >= 0) {
        catalog = csp::cp_family(a.cp);
    } else if (a.sp >= 0) {
        catalog = csp::sp_chain(a.sp);
    } else if (!a.fixture.empty()) {
        catalog = csp::get_fixture(a.fixture);
        if (!a.degrees.empty()) {
            auto want = parse_degrees(a.degrees);
            std::sort(want.begin(), want.end());
            if (want != catalog.fiber.degrees())
                throw csp::UsageError("--degrees does not match fixture '" + a.fixture + "'");
        }
    } else if (!a.model_path.empty()) {
        csp::ParsedModel pm = csp::parse_model(csp::read_file(a.model_path));
        if (pm.relative) {
            csp::ValidationReport rep = csp::validate_model(*pm.rel);
            if (!rep.ok()) throw csp::UsageError("model invalid: " + rep.violations.front());
            catalog.fiber = pm.rel->fiber;
            catalog.provenance = "model(" + a.model_path + ")";
            csp::CatalogEntry e;
            e.label = "m1";
            e.model = *pm.rel;
            e.cert = csp::c_symplectic_certify(*pm.rel);
            if (e.cert.certified) {
                e.lattice = csp::extract_constraint_lattice(*pm.rel);
                catalog.entries.push_back(std::move(e));
            } else if (!a.quiet) {
                std::cout << "model not c-symplectic (" << e.cert.reason << ")\n";
            }
        } else {
            catalog = csp::enumerate_models(pm.fiber, parse_coeffs(a.coeffs), limits, field);
            catalog.provenance = "model(" + a.model_path + ")";
        }
    } else {
        std::vector<int> degrees = parse_degrees(a.degrees);
        std::sort(degrees.begin(), degrees.end());
        bool even_degree = false;
        int sum = 0;
        for (int d : degrees) {
            if (d % 2 == 0) even_degree = true;
            sum += d;
        }
        if (even_degree || sum % 2 == 0) {
            // parity gate: no c-symplectic total space over this fiber
            if (!a.quiet) std::cout << "fiber formal dimension even; depth 0\n";
            catalog.fiber = csp::sphere_product_fiber(degrees);
            catalog.provenance = "enumerated";
        } else {
            catalog =
                csp::enumerate_models(csp::sphere_product_fiber(degrees),
                                      parse_coeffs(a.coeffs), limits, field);
        }
    }

    csp::CsPoset poset = csp::build_poset(catalog, field);
    csp::DepthReport dr = csp::depth(poset);
    if (!a.quiet) {
        std::cout << "classes: " << poset.elements.size() << ", depth: " << dr.depth << "\n";
        if (a.cp >= 0)
            std::cout << "depth: " << dr.depth << " = c(" << (a.cp + 1) << ")\n";
        if (!dr.witness.empty() && dr.depth > 1) {
            std::cout << "chain:";
            for (int id : dr.witness) {
                std::cout << " ";
                bool first = true;
                for (auto& l : poset.elements[id].labels) {
                    std::cout << (first ? "" : "=") << l;
                    first = false;
                }
            }
            std::cout << "\n";
        }
        if (catalog.incomplete)
            std::cout << "warning: enumeration caps hit, catalog incomplete\n";
    }
    if (!a.json_path.empty() || !a.dot_path.empty()) {
        csp::CatalogFile cf = csp::make_catalog_file(catalog, poset, dr);
        if (!a.json_path.empty()) csp::save_catalog(cf, a.json_path);
        if (!a.dot_path.empty()) csp::export_dot(poset, a.dot_path);
    }
    return catalog.incomplete ? kCap : kOk;
}

int run_show(const std::string& path, const std::string& dot_path, bool quiet) {
    csp::CatalogFile cf = csp::load_catalog(path);
    if (!quiet) {
        std::cout << "field: " << cf.field.str() << ", provenance: " << cf.provenance << "\n";
        std::cout << "classes: " << cf.classes.size() << ", depth: " << cf.depth_report.depth
                  << "\n";
        for (size_t i = 0; i < cf.classes.size(); ++i) {
            const auto& c = cf.classes[i];
            std::cout << "  class " << i << ":";
            for (auto& l : c.labels) std::cout << " " << l;
            std::cout << "  " << c.structure << "  dim " << c.min_dim << "\n";
        }
    }
    if (!dot_path.empty()) {
        // re-derive a poset skeleton rich enough for DOT from the stored data
        throw csp::UsageError("--dot is only available with analyze");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"c-symplectic poset structure toolkit"};
    app.require_subcommand(1);

    AnalyzeArgs a;
    CLI::App* analyze = app.add_subcommand("analyze", "run the full pipeline on one fiber");
    analyze->add_option("--degrees", a.degrees, "sphere product fiber, e.g. 3,5,9,15,33");
    analyze->add_option("--cp", a.cp, "projective-type family CP^n x S^(2n+3), n even");
    analyze->add_option("--sp", a.sp, "symplectic-group chain Sp(n), n odd");
    analyze->add_option("--fixture", a.fixture, "bundled catalog name (see list-fixtures)");
    analyze->add_option("--model", a.model_path, "model description file");
    analyze->add_option("--field", a.field, "coefficient field: q, cyc:<m>, qbar");
    analyze->add_option("--coeffs", a.coeffs, "enumeration coefficients (default 1,-1,2)");
    analyze->add_option("--max-terms", a.max_terms, "admissible terms kept per generator");
    analyze->add_option("--max-assignments", a.max_assignments, "enumeration budget");
    analyze->add_option("--dot", a.dot_path, "write Hasse diagram in DOT format");
    analyze->add_option("--json", a.json_path, "write the catalog as JSON");
    analyze->add_flag("--quiet", a.quiet, "suppress the summary");

    std::string show_path, show_dot;
    bool show_quiet = false;
    CLI::App* show = app.add_subcommand("show", "load a catalog file and print its summary");
    show->add_option("catalog", show_path, "catalog JSON path")->required();
    show->add_option("--dot", show_dot, "unsupported; kept for symmetry");
    show->add_flag("--quiet", show_quiet, "suppress the summary");

    CLI::App* lf = app.add_subcommand("list-fixtures", "list bundled catalog names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(a);
        if (show->parsed()) return run_show(show_path, show_dot, show_quiet);
        if (lf->parsed()) {
            for (auto& n : csp::fixture_names()) std::cout << n << "\n";
            return kOk;
        }
    } catch (const csp::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kSchema;
    } catch (const csp::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kOk;
}
