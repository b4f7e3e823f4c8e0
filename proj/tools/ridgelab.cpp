#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ridgelab/activation.hpp"
#include "ridgelab/field_file.hpp"
#include "ridgelab/source.hpp"

namespace {

using namespace ridgelab::cli;

void add_grid_flags(CLI::App* cmd, GridOptions& g) {
    cmd->add_option("--dim", g.dimension, "Spatial dimension (2 or 3)")->capture_default_str();
    cmd->add_option("--directions", g.directions, "Number of directions")->capture_default_str();
    cmd->add_option("--b-range", g.b_range, "Location range lo,hi (or half-width)")->capture_default_str();
    cmd->add_option("--b-count", g.b_count, "Location samples")->capture_default_str();
    cmd->add_option("--scales", g.scales, "Scale range lo,hi (fractions like 1/16 allowed)")->capture_default_str();
    cmd->add_option("--scale-count", g.scale_count, "Geometric scale samples")->capture_default_str();
    cmd->add_option("--omega-range", g.omega_range, "Symmetric frequency range lo,hi (or half-width)")
        ->capture_default_str();
    cmd->add_option("--omega-count", g.omega_count, "Frequency samples")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ridgelab: ridgelet, Radon and wavelet transforms with checked identities"};
    app.require_subcommand(1);
    app.allow_extras(false);

    TransformOptions transform;
    auto* t = app.add_subcommand("transform", "Ridgelet transform of a catalog function or field file");
    add_grid_flags(t, transform.grid);
    t->add_option("--input", transform.input, "Catalog name or path to a kind=field file")->required();
    t->add_option("--psi", transform.psi, "Activation function")->capture_default_str();
    t->add_option("--out", transform.out, "Output field file")->required();
    t->add_option("--plot", transform.plot, "CSV with sup_b |Phi| per scale and b-profiles");

    CheckOptions check;
    auto* c = app.add_subcommand("check", "Run identity suites and print a CSV report");
    add_grid_flags(c, check.grid);
    c->add_option("--suite", check.suite,
                  "reconstruct|parseval|transpose|factorize|radon-duality|radon-via-ridgelet|desingularize|all")
        ->capture_default_str();
    c->add_option("--psi", check.psi, "Analysis activation")->capture_default_str();
    c->add_option("--eta", check.eta, "Synthesis activation")->capture_default_str();

    ConstantsOptions constants;
    auto* k = app.add_subcommand("constants", "Admissibility and reconstruction constants");
    k->add_option("--psi", constants.psi, "Analysis activation")->required();
    k->add_option("--eta", constants.eta, "Synthesis activation (defaults to psi)");
    k->add_option("--dim", constants.dimension, "Spatial dimension")->capture_default_str();

    Remark43Options demo;
    auto* d = app.add_subcommand("demo-remark43", "Scale decay of R_psi phi for psi = remark43(n)");
    d->add_option("--dim", demo.dimension, "Spatial dimension")->capture_default_str();
    d->add_option("--directions", demo.directions, "Number of directions")->capture_default_str();
    d->add_option("--b-range", demo.b_range, "Location range lo,hi")->capture_default_str();
    d->add_option("--b-count", demo.b_count, "Location samples (must include b = 0)")->capture_default_str();
    d->add_option("--scale-min", demo.scale_min, "Smallest scale")->capture_default_str();
    d->add_option("--scale-max", demo.scale_max, "Largest scale")->capture_default_str();
    d->add_option("--scale-count", demo.scale_count, "Geometric scale samples")->capture_default_str();
    d->add_option("--omega-range", demo.omega_range, "Symmetric frequency range")->capture_default_str();
    d->add_option("--omega-count", demo.omega_count, "Frequency samples")->capture_default_str();
    d->add_option("--plot", demo.plot, "Write the (a, a R) table here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*t) return cmd_transform(transform, std::cout);
        if (*c) return cmd_check(check, std::cout, std::cerr);
        if (*k) return cmd_constants(constants, std::cout);
        if (*d) return cmd_demo_remark43(demo, std::cout);
    } catch (const ridgelab::CatalogError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCatalog;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ridgelab::FieldFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ridgelab::ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
