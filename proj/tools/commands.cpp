#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>
#include <vector>

#include "ridgelab/activation.hpp"
#include "ridgelab/field_file.hpp"
#include "ridgelab/radon.hpp"
#include "ridgelab/ridgelet.hpp"
#include "ridgelab/source.hpp"

namespace ridgelab::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) throw UsageError("not a number: '" + text + "'");
    return v;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    return out;
}

double sampled_norm(const SampledField& f) {
    double s = 0.0;
    for (const cplx& v : f.values) s += std::norm(v);
    return std::sqrt(s * f.grid.cell_volume());
}

double sinogram_norm(const SinogramField& f) {
    double s = 0.0;
    for (std::size_t k = 0; k < f.directions.size(); ++k)
        for (std::size_t i = 0; i < f.p_axis.count(); ++i)
            s += f.directions.weight(k) * f.p_axis.trapezoid_weight(i) * std::norm(f.at(k, i));
    return std::sqrt(s);
}

// Rows whose comparison is a relative distance between two fields carry the norms of the
// reference and the result in the lhs/rhs columns.
ReportRow distance_row(const std::string& name, double reference_norm, double result_norm, double distance, double tol) {
    return {name, reference_norm, result_norm, distance, tol, distance <= tol};
}

CartesianGrid pairing_grid(int n) { return CartesianGrid::cube(n, 8.0, n == 2 ? 129 : 49); }

ReportRow suite_reconstruct(const ReconstructionPair& pair, const YGrid& y, const Axis& omega) {
    const int n = y.dimension();
    const CartesianGrid grid = CartesianGrid::cube(n, 4.0, n == 2 ? 33 : 17);
    const TestFunction f = TestFunction::gaussian(n);
    Reconstruction r = reconstruct(f, pair, y, omega, grid);
    return distance_row("reconstruct", sampled_norm(sample(f, grid)), sampled_norm(r.field), r.rel_l2, 5e-2);
}

ReportRow suite_parseval(const ReconstructionPair& pair, const YGrid& y, const Axis& omega) {
    const TestFunction f = TestFunction::gaussian(y.dimension());
    return make_row("parseval", parseval_check(f, f, pair, y, omega, pairing_grid(y.dimension())), 2e-2);
}

ReportRow suite_transpose(const ReconstructionPair& pair, const YGrid& y, const Axis& omega) {
    const int n = y.dimension();
    const TestFunction f = TestFunction::gaussian(n);
    RidgeletField phi = separable_bump(y, 0.0, 0.75, 1.5, 0.2);
    const CartesianGrid grid = CartesianGrid::cube(n, 6.0, n == 2 ? 61 : 31);
    return make_row("transpose", transpose_check(f, phi, pair.psi, omega, grid), 1e-3);
}

ReportRow suite_factorize(const ReconstructionPair& pair, const YGrid& y, const Axis& omega) {
    const TestFunction f = TestFunction::gaussian(y.dimension());
    FactorizationCheck r = factorization_check(f, pair.psi, y, omega, y.b_axis());
    return distance_row("factorize", r.max_direct, r.max_via_radon, r.deviation, 1e-10);
}

ReportRow suite_radon_duality(const YGrid& y, const Axis& omega) {
    const int n = y.dimension();
    SampledField f = sample(TestFunction::gaussian(n), pairing_grid(n));
    auto rho = [](const Vec3&, double p) { return cplx(std::exp(-p * p)); };
    return make_row("radon-duality", duality_check(f, rho, y.directions(), y.b_axis(), omega), 1e-3);
}

ReportRow suite_radon_via_ridgelet(const ReconstructionPair& pair, const YGrid& y, const Axis& omega) {
    const TestFunction f = TestFunction::lizorkin_radial(y.dimension());
    RadonViaRidgelet r = radon_via_ridgelet(f, pair, y, omega, y.b_axis());
    return distance_row("radon-via-ridgelet", sinogram_norm(r.reference), sinogram_norm(r.sinogram), r.rel_l2, 2e-2);
}

ReportRow suite_desingularize(const ReconstructionPair& pair, const YGrid& y, const Axis& omega) {
    const int n = y.dimension();
    const TestFunction f = TestFunction::gaussian(n);
    const TestFunction phi = TestFunction::gaussian(n);
    return make_row("desingularize",
                    desingularization_check(f, phi, pair, y, omega, y.b_axis(), pairing_grid(n)), 2e-2);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"reconstruct",   "parseval",           "transpose",    "factorize",
                                                   "radon-duality", "radon-via-ridgelet", "desingularize"};
    return names;
}

ReportRow run_suite(const std::string& name, const ReconstructionPair& pair, const YGrid& y, const Axis& omega) {
    if (name == "reconstruct") return suite_reconstruct(pair, y, omega);
    if (name == "parseval") return suite_parseval(pair, y, omega);
    if (name == "transpose") return suite_transpose(pair, y, omega);
    if (name == "factorize") return suite_factorize(pair, y, omega);
    if (name == "radon-duality") return suite_radon_duality(y, omega);
    if (name == "radon-via-ridgelet") return suite_radon_via_ridgelet(pair, y, omega);
    if (name == "desingularize") return suite_desingularize(pair, y, omega);
    throw UsageError("unknown suite '" + name + "'");
}

namespace {

void write_plot(const std::string& path, const RidgeletField& field) {
    std::ofstream out = open_output(path);
    const YGrid& g = field.grid;
    out << "series,a,b,abs_value\n" << std::setprecision(12);
    for (std::size_t j = 0; j < g.scales().count(); ++j) {
        double m = 0.0;
        for (std::size_t k = 0; k < g.directions().size(); ++k)
            for (std::size_t i = 0; i < g.b_axis().count(); ++i) m = std::max(m, std::abs(field.at(k, i, j)));
        out << "sup_b," << g.scales()[j] << ",," << m << '\n';
    }
    for (double target : {0.25, 1.0, 4.0}) {
        const std::size_t j = g.scales().nearest(target);
        for (std::size_t i = 0; i < g.b_axis().count(); ++i)
            out << "profile," << g.scales()[j] << ',' << g.b_axis()[i] << ',' << std::abs(field.at(0, i, j)) << '\n';
    }
}

std::string format_constant(cplx v) {
    std::ostringstream s;
    s << std::setprecision(10);
    if (std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v.real()))) {
        s << v.real();
    } else {
        s << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    }
    return s.str();
}

}  // namespace

double parse_number(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return to_double(text);
    const double den = to_double(text.substr(slash + 1));
    if (den == 0.0) throw UsageError("zero denominator in '" + text + "'");
    return to_double(text.substr(0, slash)) / den;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        const double h = parse_number(text);
        if (h <= 0.0) throw UsageError("half-width must be positive: '" + text + "'");
        return {-h, h};
    }
    const double lo = parse_number(text.substr(0, comma)), hi = parse_number(text.substr(comma + 1));
    if (!(lo < hi)) throw UsageError("range must satisfy lo < hi: '" + text + "'");
    return {lo, hi};
}

YGrid GridOptions::ygrid() const {
    if (dimension != 2 && dimension != 3) throw UsageError("--dim must be 2 or 3");
    const auto [b_lo, b_hi] = parse_range(b_range);
    const auto [a_lo, a_hi] = parse_range(scales);
    if (a_lo <= 0.0) throw UsageError("--scales must be positive");
    if (directions < 1 || b_count < 2 || scale_count < 2) throw UsageError("grid counts too small");
    return YGrid(make_direction_set(dimension, directions), Axis(b_lo, b_hi, b_count), ScaleGrid(a_lo, a_hi, scale_count));
}

Axis GridOptions::omega() const {
    const auto [lo, hi] = parse_range(omega_range);
    Axis axis(lo, hi, omega_count);
    if (!axis.is_symmetric()) throw UsageError("--omega-range must be symmetric about 0");
    return axis;
}

int cmd_transform(const TransformOptions& options, std::ostream& out) {
    if (options.out.empty()) throw UsageError("--out is required");
    const ActivationFunction psi = parse_activation(options.psi);
    GridOptions grid_options = options.grid;

    std::optional<SampledField> sampled;
    std::optional<TestFunction> analytic;
    if (std::filesystem::is_regular_file(options.input)) {
        AnyField loaded = read_field_file(options.input);
        auto* f = std::get_if<SampledField>(&loaded);
        if (f == nullptr) throw UsageError("--input file must hold a kind=field grid");
        grid_options.dimension = f->grid.dimension();
        sampled = std::move(*f);
    } else {
        analytic = parse_test_function(options.input, grid_options.dimension);
    }
    const YGrid y = grid_options.ygrid();
    const Axis omega = grid_options.omega();
    const Source source = sampled ? Source(*sampled) : Source(*analytic);

    RidgeletField field = ridgelet(source, psi, y, omega);
    write_field_file(options.out, field);
    if (!options.plot.empty()) write_plot(options.plot, field);

    const auto dims = field_dims(field);
    out << "wrote " << options.out << ": kind=ridgelet dims=" << dims[0] << 'x' << dims[1] << 'x' << dims[2] << '\n';
    return kExitOk;
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<std::string> suites;
    if (options.suite == "all") {
        suites = suite_names();
    } else if (std::ranges::find(suite_names(), options.suite) != suite_names().end()) {
        suites = {options.suite};
    } else {
        throw UsageError("unknown suite '" + options.suite + "'");
    }
    const YGrid y = options.grid.ygrid();
    const Axis omega = options.grid.omega();
    const ActivationFunction psi = parse_activation(options.psi);
    const ActivationFunction eta = parse_activation(options.eta);

    std::optional<ReconstructionPair> pair;
    try {
        pair = make_pair(psi, eta, y.dimension());
    } catch (const ConstantError& e) {
        err << "invalid reconstruction pair (" << options.psi << ", " << options.eta << "): " << e.what() << '\n';
        return kExitCheckFailed;
    }

    std::vector<ReportRow> rows;
    for (const auto& s : suites) rows.push_back(run_suite(s, *pair, y, omega));
    write_report(out, rows);
    const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_constants(const ConstantsOptions& options, std::ostream& out) {
    if (options.dimension < 1 || options.dimension > 3) throw UsageError("--dim must be 1, 2 or 3");
    const ActivationFunction psi = parse_activation(options.psi);
    const ActivationFunction eta = parse_activation(options.eta.empty() ? options.psi : options.eta);
    const int n = options.dimension;

    out << "psi: " << psi.name() << '\n' << "eta: " << eta.name() << '\n' << "dimension: " << n << '\n';
    const Admissibility adm = is_admissible(psi, n);
    out << "admissible: " << (adm.admissible ? "true" : "false") << '\n';
    if (adm.admissible) out << "admissibility_integral: " << format_constant(adm.value) << '\n';
    auto report = [&out](const char* label, const std::function<cplx()>& compute) {
        std::string text;
        try {
            text = format_constant(compute());
        } catch (const ConstantError& e) {
            text = std::string("undefined (") + e.what() + ")";
        }
        out << label << ": " << text << '\n';
    };
    report("K", [&] { return k_constant(psi, eta, n); });
    report("c", [&] { return c_constant(psi, eta); });
    return kExitOk;
}

int cmd_demo_remark43(const Remark43Options& options, std::ostream& out) {
    GridOptions g;
    g.dimension = options.dimension;
    g.directions = options.directions;
    g.b_range = options.b_range;
    g.b_count = options.b_count;
    std::ostringstream scales;
    scales << std::setprecision(17) << options.scale_min << ',' << options.scale_max;
    g.scales = scales.str();
    g.scale_count = options.scale_count;
    g.omega_range = options.omega_range;
    g.omega_count = options.omega_count;

    const YGrid y = g.ygrid();
    const Axis omega = g.omega();
    Remark43Demo demo;
    try {
        demo = remark43_demo(y, omega);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::ostringstream table;
    table << "a,a_times_R\n" << std::setprecision(12);
    for (std::size_t j = 0; j < demo.scales.size(); ++j) table << demo.scales[j] << ',' << demo.scaled_values[j] << '\n';
    if (options.plot.empty()) {
        out << table.str();
    } else {
        std::ofstream plot = open_output(options.plot);
        plot << table.str();
    }

    const double target = 24.0 * std::sqrt(std::numbers::pi);
    const double plateau_gap = std::abs(demo.plateau - target) / target;
    const bool plateau_ok = plateau_gap <= 1e-2;
    const bool slope_ok = std::abs(demo.slope_fit.slope + 1.0) <= 2e-2;
    out << std::setprecision(8);
    out << "# plateau " << demo.plateau << " target " << target << " rel_gap " << plateau_gap << " tol 0.01 "
        << (plateau_ok ? "pass" : "fail") << '\n';
    out << "# pointwise_max_rel_dev_on_[8,32] " << demo.pointwise_deviation << '\n';
    out << "# slope " << demo.slope_fit.slope << " target -1 tol 0.02 " << (slope_ok ? "pass" : "fail") << '\n';
    return plateau_ok && slope_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace ridgelab::cli
