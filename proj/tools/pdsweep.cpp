// Sweep CLI: parameter sweeps over the array scaling laws, verification
// runs, layout/profile dumps, and SVG rendering of sweep CSVs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdarray/beam.hpp"
#include "pdarray/errors.hpp"
#include "pdarray/hexgeom.hpp"
#include "pdarray/plot.hpp"
#include "pdarray/sweep.hpp"
#include "pdarray/verify.hpp"

namespace {

namespace fs = std::filesystem;
using namespace pdarray;

// Relative outputs land in $PDARRAY_OUT_DIR when it is set.
fs::path resolve_out(const std::string& out, const std::string& defaultName) {
    fs::path p = out.empty() ? fs::path(defaultName) : fs::path(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("PDARRAY_OUT_DIR"); dir && *dir)
            p = fs::path(dir) / p;
    }
    return p;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path.string());
    out << contents;
    if (!out) throw std::invalid_argument("write failed: " + path.string());
}

beam::BeamKind parse_beam(const std::string& name) {
    static const std::map<std::string, beam::BeamKind> names = {
        {"degenerate", beam::BeamKind::Degenerate},
        {"uniform", beam::BeamKind::Uniform},
        {"gaussian", beam::BeamKind::Gaussian},
        {"lg10", beam::BeamKind::Lg10}};
    const auto it = names.find(name);
    if (it == names.end()) throw CLI::ValidationError("--beams", "unknown beam: " + name);
    return it->second;
}

struct SweepOptions {
    std::string kind;
    int g_max = -1; // per-kind default applied later
    double rho = 0.5;
    double rho0 = 1.0;
    std::vector<double> xi = {1.0, 0.5, 0.0};
    std::vector<double> snr_db = {10.0, 20.0};
    std::vector<std::string> beams;
    std::string distance_model = "paper-faithful";
    std::string normalization = "reference-disk";
    std::string out;
    bool serial = false;
};

int run_sweep(const SweepOptions& opt) {
    const RunMode mode = opt.serial ? RunMode::Serial : RunMode::Parallel;
    const auto model = opt.distance_model == "exact-lattice"
                           ? hexgeom::DistanceModel::ExactLattice
                           : hexgeom::DistanceModel::PaperFaithful;
    const auto norm = opt.normalization == "array-sum" ? beam::Normalization::ArraySum
                                                       : beam::Normalization::ReferenceDisk;
    sweep::Table table;
    std::string defaultName;
    if (opt.kind == "betamin") {
        sweep::BetaMinSweep spec;
        if (opt.g_max >= 0) spec.g_max = opt.g_max;
        spec.xi = opt.xi;
        spec.snr_db = opt.snr_db;
        table = sweep::sweep_betamin(spec, mode);
        defaultName = "betamin.csv";
    } else if (opt.kind == "beta-fixed") {
        sweep::FixedRhoSweep spec;
        if (opt.g_max >= 0) spec.g_max = opt.g_max;
        spec.rho = opt.rho;
        spec.model = model;
        spec.norm = norm;
        if (!opt.beams.empty()) {
            spec.beams.clear();
            for (const auto& b : opt.beams) spec.beams.push_back(parse_beam(b));
        }
        table = sweep::sweep_beta_fixed_rho(spec, mode);
        defaultName = "beta_fixed.csv";
    } else if (opt.kind == "beta-scaled") {
        sweep::ScaledRhoSweep spec;
        if (opt.g_max >= 0) spec.g_max = opt.g_max;
        spec.rho0 = opt.rho0;
        spec.model = model;
        spec.norm = norm;
        if (!opt.beams.empty()) {
            spec.beams.clear();
            for (const auto& b : opt.beams) spec.beams.push_back(parse_beam(b));
        }
        table = sweep::sweep_beta_scaled_rho(spec, mode);
        defaultName = "beta_scaled.csv";
    } else {
        throw CLI::ValidationError("--sweep", "unknown sweep kind: " + opt.kind);
    }
    const fs::path path = resolve_out(opt.out, defaultName);
    write_file(path, table.csv());
    std::cout << path.string() << ": " << table.rows.size() << " rows\n";
    return 0;
}

int run_verify(const std::string& profileName, const std::string& out, bool serial) {
    const auto profile =
        profileName == "strict" ? verify::Profile::Strict : verify::Profile::Default;
    const auto report = verify::run(profile, serial ? RunMode::Serial : RunMode::Parallel);
    std::size_t failed = 0;
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "PASS  " : "FAIL  ") << check.name << "  observed "
                  << check.observed << " vs bound " << check.bound;
        if (!check.detail.empty()) std::cout << "  [" << check.detail << "]";
        std::cout << '\n';
        if (!check.passed) ++failed;
    }
    std::ostringstream os;
    verify::write_report_csv(os, report);
    const fs::path path = resolve_out(out, "verify_report.csv");
    write_file(path, os.str());
    std::cout << (failed == 0 ? "verify: all checks passed"
                              : "verify: " + std::to_string(failed) + " check(s) failed")
              << " (report: " << path.string() << ")\n";
    return failed == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photodetector-array receiver scaling sweeps"};
    app.require_subcommand(1);

    // sweep
    SweepOptions so;
    auto* sweepCmd = app.add_subcommand("sweep", "Run a parameter sweep and write a CSV");
    sweepCmd->set_config("--config", "", "Config file (key=value, one per line); flags win");
    sweepCmd->add_option("--sweep", so.kind, "Sweep kind: betamin|beta-fixed|beta-scaled")
        ->required()
        ->check(CLI::IsMember({"betamin", "beta-fixed", "beta-scaled"}));
    sweepCmd->add_option("--G-max", so.g_max, "Largest ring count G (M = 1+3G(G+1))");
    sweepCmd->add_option("--rho", so.rho, "PD-radius-to-waist ratio (beta-fixed)");
    sweepCmd->add_option("--rho0", so.rho0, "rho0 in rho = rho0/(G+1) (beta-scaled)");
    sweepCmd->add_option("--xi", so.xi, "Bandwidth scaling exponents (betamin)")
        ->delimiter(',');
    sweepCmd->add_option("--snr-db", so.snr_db, "Electrical SNR points in dB (betamin)")
        ->delimiter(',');
    sweepCmd
        ->add_option("--beams", so.beams,
                     "Beams: gaussian,lg10,uniform,degenerate (beta-fixed/beta-scaled)")
        ->delimiter(',');
    sweepCmd
        ->add_option("--distance-model", so.distance_model,
                     "PD distance model: paper-faithful|exact-lattice")
        ->check(CLI::IsMember({"paper-faithful", "exact-lattice"}));
    sweepCmd
        ->add_option("--normalization", so.normalization,
                     "Fraction normalization: reference-disk|array-sum")
        ->check(CLI::IsMember({"reference-disk", "array-sum"}));
    sweepCmd->add_option("--out", so.out, "Output CSV path (default per sweep kind)");
    sweepCmd->add_flag("--serial", so.serial, "Disable parallel evaluation");

    // verify
    std::string verifyProfile = "default", verifyOut;
    bool verifySerial = false;
    auto* verifyCmd =
        app.add_subcommand("verify", "Run the oracle/invariant suite; exit 2 on failure");
    verifyCmd->add_option("--profile", verifyProfile, "default|strict (strict is a failure demo)")
        ->check(CLI::IsMember({"default", "strict"}));
    verifyCmd->add_option("--out", verifyOut, "Report CSV path");
    verifyCmd->add_flag("--serial", verifySerial, "Disable parallel evaluation");

    // plot
    std::string plotCsv, plotOut, plotKind = "betamin", plotTitle;
    auto* plotCmd = app.add_subcommand("plot", "Render a sweep CSV as an SVG chart");
    plotCmd->add_option("--csv", plotCsv, "Input CSV from a sweep run")->required();
    plotCmd->add_option("--kind", plotKind, "betamin|beta-fixed|beta-scaled")
        ->check(CLI::IsMember({"betamin", "beta-fixed", "beta-scaled"}));
    plotCmd->add_option("--title", plotTitle, "Chart title");
    plotCmd->add_option("--out", plotOut, "Output SVG path");

    // layout
    int layoutG = 3;
    double layoutRho = 0.5;
    std::string layoutModel = "paper-faithful", layoutOut;
    auto* layoutCmd = app.add_subcommand("layout", "Dump the hexagonal PD layout as CSV");
    layoutCmd->add_option("--G", layoutG, "Ring count")->required();
    layoutCmd->add_option("--rho", layoutRho, "PD-radius-to-waist ratio")->required();
    layoutCmd->add_option("--distance-model", layoutModel, "paper-faithful|exact-lattice")
        ->check(CLI::IsMember({"paper-faithful", "exact-lattice"}));
    layoutCmd->add_option("--out", layoutOut, "Output CSV path");

    // profile
    std::string profBeam = "gaussian", profNorm = "reference-disk", profModel = "paper-faithful",
                profOut;
    int profG = 3;
    double profRho = 0.5;
    auto* profCmd = app.add_subcommand("profile", "Dump per-PD capture fractions as CSV");
    profCmd->add_option("--beam", profBeam, "gaussian|lg10|uniform|degenerate")->required();
    profCmd->add_option("--G", profG, "Ring count")->required();
    profCmd->add_option("--rho", profRho, "PD-radius-to-waist ratio")->required();
    profCmd->add_option("--normalization", profNorm, "reference-disk|array-sum")
        ->check(CLI::IsMember({"reference-disk", "array-sum"}));
    profCmd->add_option("--distance-model", profModel, "paper-faithful|exact-lattice")
        ->check(CLI::IsMember({"paper-faithful", "exact-lattice"}));
    profCmd->add_option("--out", profOut, "Output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweepCmd->parsed()) return run_sweep(so);
        if (verifyCmd->parsed()) return run_verify(verifyProfile, verifyOut, verifySerial);
        if (plotCmd->parsed()) {
            plot::PlotSpec spec;
            spec.kind = plotKind == "betamin"
                            ? plot::PlotKind::BetaMin
                            : (plotKind == "beta-fixed" ? plot::PlotKind::BetaFixedRho
                                                        : plot::PlotKind::BetaScaledRho);
            spec.title = plotTitle;
            const fs::path path = resolve_out(plotOut, plotKind + ".svg");
            plot::render_plot(plotCsv, spec, path.string());
            std::cout << path.string() << '\n';
            return 0;
        }
        if (layoutCmd->parsed()) {
            const auto model = layoutModel == "exact-lattice"
                                   ? hexgeom::DistanceModel::ExactLattice
                                   : hexgeom::DistanceModel::PaperFaithful;
            std::ostringstream os;
            hexgeom::write_layout_csv(os, hexgeom::layout(layoutG, layoutRho, model));
            const fs::path path = resolve_out(layoutOut, "layout.csv");
            write_file(path, os.str());
            std::cout << path.string() << '\n';
            return 0;
        }
        if (profCmd->parsed()) {
            const auto model = profModel == "exact-lattice"
                                   ? hexgeom::DistanceModel::ExactLattice
                                   : hexgeom::DistanceModel::PaperFaithful;
            const auto norm = profNorm == "array-sum" ? beam::Normalization::ArraySum
                                                      : beam::Normalization::ReferenceDisk;
            const auto lay = hexgeom::layout(profG, profRho, model);
            std::ostringstream os;
            beam::write_profile_csv(os, beam::capture_profile({parse_beam(profBeam), 0.0}, lay, norm));
            const fs::path path = resolve_out(profOut, "profile.csv");
            write_file(path, os.str());
            std::cout << path.string() << '\n';
            return 0;
        }
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
