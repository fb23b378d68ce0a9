#pragma once

#include <iosfwd>
#include <string>

#include "edgesim/experiments.hpp"

namespace edgesim {

// Applies "key = value" overrides to base. Lines starting with '#' and
// blank lines are skipped; unknown keys raise ConfigError. Keys: T, M, N,
// F, L, B, C_b, C_w, C_d, K, R_star, cf_rank, cf_lr, cf_epochs, cf_lambda,
// pa_m, pooled_training, independent_ground_truth.
CaseParams apply_config(std::istream& in, CaseParams base);
CaseParams load_config_file(const std::string& path, CaseParams base);

}  // namespace edgesim
