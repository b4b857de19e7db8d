#include "fraccable/harness.hpp"
#include "fraccable/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string weights_csv(const fraccable::WeightTable& table)
{
    std::string out = "k,omega_k\n";
    char buf[64];
    for (int k = 0; k <= table.n_max(); ++k) {
        std::snprintf(buf, sizeof(buf), "%d,%.16e\n", k, table.omega[k]);
        out += buf;
    }
    return out;
}

std::string profile_csv(const std::vector<fraccable::ProfilePoint>& profile)
{
    std::string out = "level,t,error\n";
    char buf[96];
    for (const auto& p : profile) {
        std::snprintf(buf, sizeof(buf), "%d,%.10g,%.10E\n", p.level, p.t, p.error);
        out += buf;
    }
    return out;
}

int run_weights(const std::string& family, double alpha, double theta, int n,
                const std::string& out_path)
{
    const fraccable::ThetaScheme scheme{fraccable::family_from_name(family), alpha, theta};
    const fraccable::WeightTable table = fraccable::make_weights(scheme, n);
    const std::string csv = weights_csv(table);
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    return 0;
}

int run_spectral_contour(int grid, const std::string& out_path)
{
    // H(alpha, theta) over the FBN admissible region, theta mapped per alpha
    // onto [-1/(2 alpha), 1].
    std::string csv = "alpha,theta,H\n";
    char buf[96];
    for (int i = 0; i < grid; ++i) {
        const double alpha = static_cast<double>(i + 1) / grid;
        const double lo = -1.0 / (2.0 * alpha);
        for (int j = 0; j < grid; ++j) {
            const double theta = lo + (1.0 - lo) * j / (grid - 1);
            const double H = fraccable::h_of(alpha, theta, fraccable::Family::FBN);
            std::snprintf(buf, sizeof(buf), "%.8g,%.8g,%.10E\n", alpha, theta, H);
            csv += buf;
        }
    }
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    return 0;
}

struct SolveSpec {
    fraccable::BenchmarkCase benchmark;
    fraccable::SweepEntry entry;
    std::vector<double> sigma_override;
    bool has_sigma_override = false;
    std::vector<int> snapshots;
};

SolveSpec parse_config(const fs::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config " + path.string());
    json cfg = json::parse(in);

    SolveSpec spec;
    spec.benchmark.id = fraccable::benchmark_from_name(cfg.at("benchmark"));
    spec.benchmark.gamma = cfg.at("gamma");
    spec.benchmark.kappa = cfg.value("kappa", 0.5);
    spec.benchmark.mu = cfg.value("mu", 1.0);

    spec.entry.family = fraccable::family_from_name(cfg.value("family", "fbt"));
    spec.entry.theta_gamma = cfg.value("theta_gamma", 0.0);
    spec.entry.theta_kappa = cfg.value("theta_kappa", 0.0);
    spec.entry.n_cells = cfg.at("n_cells");
    spec.entry.n_steps = cfg.at("n_steps");
    spec.entry.correction = cfg.value("correction", false);
    if (cfg.contains("sigma")) {
        spec.sigma_override = cfg["sigma"].get<std::vector<double>>();
        spec.has_sigma_override = true;
    }
    if (cfg.contains("snapshots"))
        spec.snapshots = cfg["snapshots"].get<std::vector<int>>();
    return spec;
}

std::string snapshot_csv(const fraccable::FemSpace& space, const std::vector<double>& coeffs)
{
    const auto& mesh = space.mesh();
    char buf[128];
    std::string out = mesh.dim == 1 ? "x,u\n" : "x,y,u\n";
    const double h = mesh.cell_size();
    auto value = [&](int i, int j) {
        if (i < 1 || i > mesh.n_cells - 1 || (mesh.dim == 2 && (j < 1 || j > mesh.n_cells - 1)))
            return 0.0;
        const int ni = mesh.n_cells - 1;
        return coeffs[mesh.dim == 1 ? i - 1 : (j - 1) * ni + (i - 1)];
    };
    if (mesh.dim == 1) {
        for (int i = 0; i <= mesh.n_cells; ++i) {
            std::snprintf(buf, sizeof(buf), "%.10g,%.10E\n", i * h, value(i, 0));
            out += buf;
        }
    } else {
        for (int j = 0; j <= mesh.n_cells; ++j)
            for (int i = 0; i <= mesh.n_cells; ++i) {
                std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10E\n", i * h, j * h, value(i, j));
                out += buf;
            }
    }
    return out;
}

int run_solve(const std::string& config_path, const std::string& out_dir)
{
    const SolveSpec spec = parse_config(config_path);
    const fraccable::CableProblem problem = spec.benchmark.make_problem();

    fraccable::Mesh mesh{problem.dim, problem.length, spec.entry.n_cells};
    fraccable::FemSpace space(mesh);

    fraccable::SchemeConfig config;
    config.family = spec.entry.family;
    config.theta_gamma = spec.entry.theta_gamma;
    config.theta_kappa = spec.entry.theta_kappa;
    config.tau = problem.T / spec.entry.n_steps;
    config.n_steps = spec.entry.n_steps;
    if (spec.entry.correction)
        config.correction_sigma =
            spec.has_sigma_override ? spec.sigma_override : spec.benchmark.default_sigma();

    fraccable::CableSolver solver(problem, space, config);
    const fraccable::SolveResult result = solver.run();

    const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    fs::create_directories(dir);

    if (!result.per_level_error.empty())
        write_file(dir / "levels.csv", profile_csv(fraccable::error_profile(result)));

    json summary{{"benchmark", fraccable::benchmark_name(spec.benchmark.id)},
                 {"family", fraccable::family_name(config.family)},
                 {"gamma", problem.gamma},
                 {"kappa", problem.kappa},
                 {"mu", problem.mu},
                 {"theta_gamma", config.theta_gamma},
                 {"theta_kappa", config.theta_kappa},
                 {"tau", config.tau},
                 {"n_steps", config.n_steps},
                 {"n_cells", spec.entry.n_cells},
                 {"h_cell", mesh.cell_size()},
                 {"h_diag", mesh.diagonal_size()},
                 {"correction_sigma", config.correction_sigma},
                 {"wall_seconds", result.wall_seconds},
                 {"factorizations", result.factorizations},
                 {"linear_solves", result.linear_solves},
                 {"approximate_laplacian", result.approximate_laplacian}};
    if (!result.per_level_error.empty()) {
        summary["max_error"] = result.max_error;
        summary["argmax_level"] = result.argmax_level;
    }
    write_file(dir / "summary.json", summary.dump(2));

    for (int level : spec.snapshots) {
        if (level < 0 || level > config.n_steps) {
            std::cerr << "snapshot level " << level << " out of range, skipped\n";
            continue;
        }
        char name[64];
        std::snprintf(name, sizeof(name), "snapshot_%04d.csv", level);
        write_file(dir / name, snapshot_csv(space, result.u_coeffs(level)));
    }

    if (!result.per_level_error.empty())
        std::cout << "E(tau,h) = " << result.max_error << " (argmax level "
                  << result.argmax_level << ")\n";
    std::cout << "outputs in " << dir.string() << "\n";
    return 0;
}

int run_sweep(const std::string& table, bool paper_scale, int workers,
              const std::string& out_dir, bool check)
{
    fraccable::ConvergenceReport merged;
    for (const fraccable::TableBlock& block : fraccable::table_preset(table, paper_scale)) {
        fraccable::ConvergenceReport report =
            fraccable::sweep(block.benchmark, block.grid, workers);
        for (auto& row : report.rows) merged.rows.push_back(std::move(row));
    }

    const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    fs::create_directories(dir);
    write_file(dir / "report.csv", merged.to_csv());
    write_file(dir / "report.json", merged.to_json());
    for (std::size_t i = 0; i < merged.rows.size(); ++i) {
        if (merged.rows[i].profile.empty()) continue;
        std::vector<fraccable::ProfilePoint> profile(merged.rows[i].profile.size());
        for (std::size_t n = 0; n < profile.size(); ++n)
            profile[n] = {static_cast<int>(n), static_cast<double>(n) * merged.rows[i].tau,
                          merged.rows[i].profile[n]};
        char name[64];
        std::snprintf(name, sizeof(name), "profile_%03zu.csv", i);
        write_file(dir / name, profile_csv(profile));
    }
    std::cout << merged.to_csv();

    if (check) {
        bool all_ok = true;
        for (const auto& c : fraccable::check_table(table, merged, paper_scale)) {
            std::cout << (c.ok ? "  ok   " : "  FAIL ") << c.description << "\n";
            all_ok = all_ok && c.ok;
        }
        return all_ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fractional Cable equation solver (FBT/FBN theta-methods + FEM)"};
    app.require_subcommand(1);

    // weights
    auto* w = app.add_subcommand("weights", "Emit convolution weights as CSV");
    std::string w_family = "fbt", w_out;
    double w_alpha = 0.5, w_theta = 0.0;
    int w_n = 100;
    w->add_option("--family", w_family, "fbt or fbn");
    w->add_option("--alpha", w_alpha, "fractional order in (0,1]")->required();
    w->add_option("--theta", w_theta, "method parameter");
    w->add_option("--n", w_n, "highest weight index");
    w->add_option("--out", w_out, "output file (default stdout)");

    // spectral
    auto* sp = app.add_subcommand("spectral", "Symbol positivity and Szego utilities");
    std::string sp_family = "fbt", sp_out;
    double sp_alpha = 1.0, sp_theta = 0.0, sp_shift = 0.0, sp_tol = 1e-8;
    int sp_n = 64, sp_grid = 41;
    bool sp_eps = false, sp_mineig = false, sp_contour = false;
    sp->add_option("--family", sp_family, "fbt or fbn");
    sp->add_option("--alpha", sp_alpha, "fractional order in (0,1]");
    sp->add_option("--theta", sp_theta, "method parameter");
    sp->add_flag("--epsilon0", sp_eps, "print the Szego constant");
    sp->add_option("--tol", sp_tol, "quadrature tolerance for --epsilon0");
    sp->add_flag("--mineig", sp_mineig, "print the shifted Toeplitz minimum eigenvalue");
    sp->add_option("--n", sp_n, "matrix order for --mineig");
    sp->add_option("--shift", sp_shift, "last-entry shift for --mineig");
    sp->add_flag("--contour", sp_contour, "emit the H(alpha,theta) grid as CSV");
    sp->add_option("--grid", sp_grid, "grid points per axis for --contour");
    sp->add_option("--out", sp_out, "output file for --contour");

    // solve
    auto* so = app.add_subcommand("solve", "Run one configured solve");
    std::string so_config, so_out;
    so->add_option("--config", so_config, "JSON config file")->required();
    so->add_option("--out", so_out, "output directory");

    // sweep
    auto* sw = app.add_subcommand("sweep", "Run a benchmark table preset");
    std::string sw_table, sw_out;
    int sw_workers = 4;
    bool sw_paper = false, sw_check = false;
    sw->add_option("--table", sw_table, "preset id: 1,2,3,4,4.1,4.2,5,6,7,8")->required();
    sw->add_flag("--paper-scale", sw_paper, "full-resolution meshes for the 2D presets");
    sw->add_option("--workers", sw_workers, "concurrent runs");
    sw->add_option("--out", sw_out, "output directory");
    sw->add_flag("--check", sw_check, "verify pinned tolerances; nonzero exit on violation");

    CLI11_PARSE(app, argc, argv);

    try {
        if (w->parsed()) return run_weights(w_family, w_alpha, w_theta, w_n, w_out);
        if (sp->parsed()) {
            const fraccable::ThetaScheme scheme{fraccable::family_from_name(sp_family),
                                                sp_alpha, sp_theta};
            if (sp_eps)
                std::cout.precision(12), std::cout << fraccable::szego_epsilon0(scheme, sp_tol)
                                                   << "\n";
            if (sp_mineig) {
                const auto table = fraccable::make_weights(scheme, sp_n);
                std::cout.precision(12);
                std::cout << fraccable::toeplitz_min_eigen(table, sp_n, sp_shift) << "\n";
            }
            if (sp_contour) return run_spectral_contour(sp_grid, sp_out);
            if (!sp_eps && !sp_mineig && !sp_contour)
                throw CLI::ValidationError("spectral: pick --epsilon0, --mineig or --contour");
            return 0;
        }
        if (so->parsed()) return run_solve(so_config, so_out);
        if (sw->parsed()) return run_sweep(sw_table, sw_paper, sw_workers, sw_out, sw_check);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
