#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edgesim/simcore.hpp"

namespace edgesim {

// Scenario parameters with per-case defaults matching the two experiment
// presets. Config files override individual keys.
struct CaseParams {
    int case_id = 1;

    int horizon_s = 1024;  // T
    int sbs_count = 4;     // M
    int user_count = 32;   // N
    int file_count = 128;  // F
    double file_length_mbit = 1.0;  // L
    double bitrate_mbit_s = 1.0;    // B

    double backhaul_capacity = 2.0;   // C_b (case 1)
    double wireless_capacity = 64.0;  // C_w (64 in case 1, 32 in case 2)
    double d2d_capacity = 64.0;       // C_d (case 2)
    int community_count = 3;          // K (case 2)
    int max_requests = 2048;          // R_star (2048 / 9464)

    int cf_rank = 8;
    double cf_lr = 0.01;
    int cf_epochs = 200;
    double cf_lambda = 0.02;

    int pa_m = 2;  // preferential-attachment edges per node

    bool pooled_training = false;
    bool independent_ground_truth = false;

    BackhaulSharing backhaul_sharing = BackhaulSharing::pooled;
};

CaseParams case1_defaults();
CaseParams case2_defaults();

// Fixed normalized operating points for the two load regimes.
struct RegimePreset {
    std::string name;   // "low" or "high"
    double r_hat = 0.0;
    double s_hat = 0.0;
    double alpha_hat = 0.0;  // case 1
    double beta_hat = 0.0;   // case 2
};

RegimePreset regime_preset(int case_id, const std::string& name);

enum class SweepParam { requests, cache, zipf, crp };

const char* sweep_param_name(SweepParam p);
SweepParam sweep_param_from_name(const std::string& name);

// Normalized <-> absolute parameter mapping (R by R_star, S by L*F,
// alpha by 2, beta by 100).
double normalize_param(SweepParam p, double absolute, const CaseParams& params);
double denormalize_param(SweepParam p, double normalized, const CaseParams& params);

struct RunOutcome {
    MetricsReport proactive;
    MetricsReport reactive;
    std::uint64_t trace_digest = 0;
};

// Full case-study pipelines; both approaches consume the identical trace.
RunOutcome run_case1(const CaseParams& params, double r_hat, double s_hat, double alpha_hat,
                     std::uint64_t seed, std::ostream* events = nullptr);
RunOutcome run_case2(const CaseParams& params, double r_hat, double s_hat, double beta_hat,
                     std::uint64_t seed, std::ostream* events = nullptr);

struct SweepSpec {
    int case_id = 1;
    SweepParam varying = SweepParam::requests;
    std::vector<double> grid;      // normalized values in [0, 1]
    int seed_count = 1;
    std::uint64_t master_seed = 1;
    std::string regime = "low";
    CaseParams params;             // base parameters (defaults or config)
    int threads = 1;
};

struct SweepRow {
    int case_id = 1;
    std::string regime;
    std::string approach;  // "proactive" or "reactive"
    std::string param;
    double value = 0.0;
    double satisfied_mean = 0.0;
    double satisfied_std = 0.0;
    double load_mean = 0.0;
    double load_std = 0.0;
    int seeds = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

// Runs every (grid point x seed) cell; cells derive their seeds from
// (master seed, case, regime, grid index, seed index) so results do not
// depend on scheduling. Rows ordered by (regime, approach, grid value).
SweepResult sweep(const SweepSpec& spec);

std::string csv_string(const SweepResult& result);
void write_csv(const SweepResult& result, const std::string& path);

}  // namespace edgesim
