#pragma once

#include <vector>

#include "edgesim/rng.hpp"
#include "edgesim/workload.hpp"

namespace edgesim {

struct Rating {
    int user = 0;
    int item = 0;
    double value = 0.0;
};

// Sparse user x file observation matrix. Pairs absent from `observed` are
// missing data, not zero ratings.
struct RatingMatrix {
    int user_count = 0;
    int file_count = 0;
    std::vector<Rating> observed;  // at most one entry per (user, item)

    bool empty() const { return observed.empty(); }
};

struct MaskSplit {
    RatingMatrix train;
    RatingMatrix test;
};

// Fitted predictor: r_hat(u,i) = mean + user_bias[u] + item_bias[i]
// + <user_factors[u], item_factors[i]>. latent_rank == 0 is the pure
// additive baseline.
struct CFModel {
    int user_count = 0;
    int file_count = 0;
    double global_mean = 0.0;
    std::vector<double> user_bias;
    std::vector<double> item_bias;
    int latent_rank = 0;
    std::vector<double> user_factors;  // user_count x latent_rank, row major
    std::vector<double> item_factors;  // file_count x latent_rank, row major
    double reg_weight = 0.0;
};

// Dense predicted-score matrix.
struct EstimatedPopularity {
    int user_count = 0;
    int file_count = 0;
    std::vector<double> values;  // row major

    double at(int u, int i) const { return values[static_cast<std::size_t>(u) * file_count + i]; }
};

// r(u,i) = number of requests by user u for file i; zero counts stay
// unobserved.
RatingMatrix build_ground_truth(const RequestTrace& trace, int user_count, int file_count);

// Moves round(holdout_fraction * |observed|) uniformly chosen entries into
// the test matrix.
MaskSplit mask_training(const RatingMatrix& src, double holdout_fraction, Rng& rng);

CFModel fit_baseline(const RatingMatrix& train, double reg_weight, double learning_rate,
                     int epochs, Rng& rng);

CFModel fit_regularized_svd(const RatingMatrix& train, int rank, double reg_weight,
                            double learning_rate, int epochs, Rng& rng);

double predict(const CFModel& model, int user, int item);

EstimatedPopularity estimate_matrix(const CFModel& model);

double rmse(const CFModel& model, const RatingMatrix& test);

// Regularized squared-error objective the fits minimize:
//   sum over observed (r - r_hat)^2
//   + reg * (sum b_u^2 + sum b_i^2 + sum |p_u|^2 + sum |q_i|^2)
double objective(const CFModel& model, const RatingMatrix& data);

// Analytic partial derivatives of objective(); index addresses the flat
// parameter vector [user_bias, item_bias, user_factors, item_factors].
int parameter_count(const CFModel& model);
double objective_gradient(const CFModel& model, const RatingMatrix& data, int index);
double get_parameter(const CFModel& model, int index);
void set_parameter(CFModel& model, int index, double value);

}  // namespace edgesim
