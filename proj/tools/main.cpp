#include "parhol/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace parhol;

void add_bounds_options(CLI::App* cmd, Bounds* b) {
    cmd->add_option("--aiii-max", b->aiii_sum_max,
                    "catalog cap on a+b for AIII(a,b)")
        ->check(CLI::Range(2, 64));
    cmd->add_option("--ci-max", b->ci_max, "catalog cap on n for CI(n)")
        ->check(CLI::Range(2, 32));
    cmd->add_option("--diii-max", b->diii_max, "catalog cap on n for DIII(n)")
        ->check(CLI::Range(5, 32));
    cmd->add_option("--quadric-max", b->quadric_max,
                    "catalog cap on n for Quadric(n)")
        ->check(CLI::Range(3, 64));
}

int run_catalog(const Bounds& bounds) {
    for (const auto& d : enumerate(bounds))
        std::cout << d.str() << "  dim = " << d.dim_c()
                  << ", rank = " << d.rank()
                  << ", isotropy = " << isotropy(d).str()
                  << ", codim(f_1) = " << first_codim(d) << "\n";
    return 0;
}

int run_dim(const std::string& space, int deg) {
    HSSDescriptor d = parse_space(space);
    EmbeddingReport r = embedding_report(d, deg);
    std::cout << "N_" << deg << " = " << r.n_deg << ", dim = " << d.dim_c()
              << ", codim = " << r.codim << "\n";
    return 0;
}

int run_holonomy(const std::string& space, const Bounds& bounds) {
    HSSDescriptor ambient = parse_space(space);
    Submanifold orbit = orbit_submanifold(ambient);
    HSSDescriptor hol = holonomy_with_certificate(orbit, bounds);
    std::cout << "ambient " << ambient.str() << ": complex orbit "
              << orbit.str() << " (codim " << orbit.codim()
              << "), normal holonomy " << hol.str()
              << " (unique match within bounds)\n";
    HSSDescriptor stored = stored_normal_holonomy(ambient);
    if (!(hol == stored)) {
        std::cout << "MISMATCH: stored table entry is " << stored.str()
                  << "\n";
        return 2;
    }
    return 0;
}

void print_summary(const VerificationSummary& s) {
    std::cout << "suite " << s.suite << ": " << s.entries_checked
              << " entries, " << s.failures.size() << " failures ("
              << s.wall_seconds << " s)\n";
    for (const auto& f : s.failures)
        std::cout << "  FAIL " << f.entry << ": " << f.detail << "\n";
    for (const auto& n : s.notes) std::cout << "  note: " << n << "\n";
}

int run_verify(const std::string& suite, const Bounds& bounds, bool json) {
    std::vector<VerificationSummary> results;
    if (suite == "all") {
        results = verify_all(bounds);
    } else if (suite == "table2") {
        results.push_back(verify_table2(bounds));
    } else if (suite == "table1") {
        results.push_back(verify_table1(bounds));
    } else if (suite == "para") {
        results.push_back(verify_para(bounds));
    } else if (suite == "alto") {
        results.push_back(verify_alto(bounds));
    } else if (suite == "orbits") {
        results.push_back(verify_orbits(bounds));
    } else {
        std::cerr << "unknown suite: " << suite
                  << " (expected table2|table1|para|alto|orbits|all)\n";
        return 1;
    }
    bool failed = false;
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& s : results) out.push_back(to_json(s));
        std::cout << out.dump(2) << "\n";
    }
    for (const auto& s : results) {
        if (!json) print_summary(s);
        failed = failed || !s.ok();
    }
    return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "parhol: catalog, canonical-embedding dimensions, normal-holonomy "
        "matching and verification suites for parallel complex "
        "submanifolds of projective space"};
    app.require_subcommand(1);

    Bounds bounds;

    auto* cat = app.add_subcommand("catalog",
                                   "list the irreducible Hermitian "
                                   "symmetric spaces within bounds");
    add_bounds_options(cat, &bounds);

    std::string space;
    int deg = 1;
    auto* dim = app.add_subcommand(
        "dim", "projective dimension and codimension of a canonical "
               "embedding");
    dim->add_option("space", space, "space name, e.g. AIII(2,4) or EIII")
        ->required();
    dim->add_option("--deg", deg, "embedding degree (default 1)")
        ->check(CLI::Range(1, 16));

    auto* hol = app.add_subcommand(
        "holonomy", "complex orbit and normal holonomy of a Table-1 "
                    "ambient space");
    hol->add_option("space", space, "ambient space name")->required();
    add_bounds_options(hol, &bounds);

    std::string suite;
    bool json = false;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "table2|table1|para|alto|orbits|all")
        ->required();
    ver->add_flag("--json", json, "emit the summaries as JSON");
    add_bounds_options(ver, &bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (cat->parsed()) return run_catalog(bounds);
        if (dim->parsed()) return run_dim(space, deg);
        if (hol->parsed()) return run_holonomy(space, bounds);
        if (ver->parsed()) return run_verify(suite, bounds, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
