#pragma once

#include "fraccable/solver.hpp"

#include <string>
#include <vector>

namespace fraccable {

enum class BenchmarkId { Example1_1D_weak, Example1_ML, Example2_2D_smooth };

std::string benchmark_name(BenchmarkId id);
BenchmarkId benchmark_from_name(const std::string& name);

/// One benchmark problem with its parameters bound; the exact solution and
/// source term are mutually consistent by construction.
struct BenchmarkCase {
    BenchmarkId id = BenchmarkId::Example1_1D_weak;
    double gamma = 0.5;
    double kappa = 0.5;
    double mu = 1.0;

    CableProblem make_problem() const;
    /// Correction exponents matching the initial-layer expansion of u - u0.
    std::vector<double> default_sigma() const;
};

/// Source term for u = (1 + t^gamma + t^kappa + t^3) sin(2 pi x) on (0,1),
/// derived in closed form through the fractional power rule.
double manufactured_source_1d(double gamma, double kappa, double mu, double x, double t);

/// Source term for u = (1 + 3 t^3) sin(2 pi x) sin(2 pi y) on (0,1)^2.
double manufactured_source_2d(double gamma, double kappa, double mu,
                              double x, double y, double t);

/// order_i = log2(E_i / E_{i+1}) for refinement factor 2; nonpositive
/// errors yield NaN markers.
std::vector<double> observed_order(std::span<const double> errors);

struct SweepEntry {
    int n_steps = 10;
    int n_cells = 10;
    Family family = Family::FBT;
    double theta_gamma = 0.0;
    double theta_kappa = 0.0;
    bool correction = false;
};

struct ReportRow {
    BenchmarkId benchmark;
    Family family;
    double gamma, kappa, mu;
    double theta_gamma, theta_kappa;
    bool corrected;
    double tau;
    int n_cells;
    double h_cell, h_diag;
    double error = 0.0;
    double order = 0.0;  // NaN where not applicable
    bool failed = false;
    std::string fail_reason;
    double wall_seconds = 0.0;
    std::vector<double> profile;  // per-level errors of this run
};

struct ConvergenceReport {
    std::vector<ReportRow> rows;
    std::string to_csv() const;
    std::string to_json() const;
};

/// Run the solver over every grid entry; rows keep grid order and orders are
/// computed only between adjacent rows that differ in the one refined
/// parameter. Entries run concurrently across `workers` threads.
ConvergenceReport sweep(const BenchmarkCase& benchmark, std::span<const SweepEntry> grid,
                        int workers = 1);

struct ProfilePoint {
    int level;
    double t;
    double error;
};

std::vector<ProfilePoint> error_profile(const SolveResult& result);
int argmax_level(std::span<const ProfilePoint> profile);

/// Benchmark table presets (ids "1","2","3","4","4.1","4.2","5","6","7","8").
struct TableBlock {
    BenchmarkCase benchmark;
    std::vector<SweepEntry> grid;
};

std::vector<std::string> known_tables();
std::vector<TableBlock> table_preset(const std::string& table_id, bool paper_scale);

/// Pinned expectations for the presets that carry them; returns one line per
/// check. `ok` false anywhere means the tolerance was violated.
struct CheckResult {
    std::string description;
    bool ok;
};

std::vector<CheckResult> check_table(const std::string& table_id,
                                     const ConvergenceReport& report, bool paper_scale);

}  // namespace fraccable
