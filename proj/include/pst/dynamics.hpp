#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pst/rng.hpp"

namespace pst {

// Capability vector (s_1..s_n, v) in the unit box.
struct CapabilityState {
    std::vector<double> s;
    double v = 0.0;
    double t = 0.0;
};

struct DynParams {
    double alpha = 1.0;
    double beta = 1.0;
    double dt = 1e-2;
    double horizon = 500.0;
    int stride = 10; // keep every stride-th step in the trajectory
};

// ds_i = alpha (1 - s_i) [v - s_i]_+ ; dv = beta (1 - v) max_i s_i.
// Returns (ds_1..ds_n, dv); all components are >= 0 inside the box. Throws
// ConfigError when the state leaves [0,1]^{n+1} beyond a 1e-9 slack.
std::vector<double> capability_rhs(const CapabilityState& state, const DynParams& p);

struct Trajectory {
    std::vector<CapabilityState> samples; // samples.front() = initial state
    double max_clamp_delta = 0.0;         // largest box-projection correction
};

// Classical RK4 with box projection after each step. The projection must be
// a numerical no-op for reasonable dt; max_clamp_delta records the worst
// correction so callers can assert it stays below 1e-12.
Trajectory integrate(const CapabilityState& s0, const DynParams& p);

struct MonotonicityFinding {
    std::string coord; // "s3" or "v"
    size_t sample_index = 0;
    double magnitude = 0.0; // size of the decrease
};

struct TheoremReport {
    std::vector<double> max_violation_s; // per coordinate, 0 when monotone
    double max_violation_v = 0.0;
    std::optional<MonotonicityFinding> worst_violation;
    bool box_ok = true;
    // |s_i(T) - v(T)| for every i with s_i(0) < v(T).
    double max_claim3_gap = 0.0;
    int claim3_count = 0;
    double endpoint_rhs_norm = 0.0;
    double tol = 0.0;
    bool monotone_ok = false; // all violations <= 1e-9 per step
    bool claim3_ok = false;   // all gaps <= tol

    bool pass() const { return monotone_ok && box_ok && claim3_ok; }
};

TheoremReport check_theorem(const Trajectory& traj, const DynParams& p, double tol);

struct SweepConfig {
    CapabilityState s0;
    DynParams params;
};

struct SweepRow {
    SweepConfig config;
    TheoremReport report;
};

std::vector<SweepRow> run_sweep(const std::vector<SweepConfig>& grid, double tol);

// Random initial conditions; when v_above_s is set, v(0) is drawn strictly
// above max_i s_i(0).
std::vector<SweepConfig> random_sweep_configs(int count, int n_min, int n_max,
                                              const DynParams& base, bool v_above_s,
                                              Rng& rng);

// Trajectory CSV columns: t, s_1..s_n, v. Sweep CSV: one row per config.
void save_trajectory_csv(const Trajectory& traj, const std::string& path);
void save_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

} // namespace pst
