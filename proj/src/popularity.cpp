#include "edgesim/popularity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "edgesim/errors.hpp"

namespace edgesim {

RatingMatrix build_ground_truth(const RequestTrace& trace, int user_count, int file_count) {
    RatingMatrix m;
    m.user_count = user_count;
    m.file_count = file_count;

    std::unordered_map<std::int64_t, double> counts;
    counts.reserve(trace.entries.size());
    for (const auto& e : trace.entries) {
        if (e.user_id < 0 || e.user_id >= user_count || e.file_id < 0 || e.file_id >= file_count)
            throw std::invalid_argument("build_ground_truth: trace entry out of range");
        counts[static_cast<std::int64_t>(e.user_id) * file_count + e.file_id] += 1.0;
    }
    m.observed.reserve(counts.size());
    for (const auto& [key, value] : counts) {
        m.observed.push_back({static_cast<int>(key / file_count),
                              static_cast<int>(key % file_count), value});
    }
    // Hash order is not deterministic across platforms; fix it.
    std::sort(m.observed.begin(), m.observed.end(), [](const Rating& a, const Rating& b) {
        return a.user != b.user ? a.user < b.user : a.item < b.item;
    });
    return m;
}

MaskSplit mask_training(const RatingMatrix& src, double holdout_fraction, Rng& rng) {
    if (!(holdout_fraction >= 0.0 && holdout_fraction <= 1.0))
        throw std::invalid_argument("mask_training: holdout_fraction outside [0, 1]");
    if (src.empty() && holdout_fraction > 0.0)
        throw EmptyDataError("mask_training: empty source matrix");

    const std::size_t n = src.observed.size();
    const auto holdout = static_cast<std::size_t>(std::llround(holdout_fraction * static_cast<double>(n)));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);

    MaskSplit split;
    split.train.user_count = split.test.user_count = src.user_count;
    split.train.file_count = split.test.file_count = src.file_count;
    split.test.observed.reserve(holdout);
    split.train.observed.reserve(n - holdout);
    for (std::size_t i = 0; i < n; ++i) {
        (i < holdout ? split.test : split.train).observed.push_back(src.observed[order[i]]);
    }
    return split;
}

namespace {

double observed_mean(const RatingMatrix& train) {
    double sum = 0.0;
    for (const auto& r : train.observed) sum += r.value;
    return sum / static_cast<double>(train.observed.size());
}

CFModel make_model(const RatingMatrix& train, int rank, double reg_weight) {
    CFModel model;
    model.user_count = train.user_count;
    model.file_count = train.file_count;
    model.global_mean = observed_mean(train);
    model.user_bias.assign(train.user_count, 0.0);
    model.item_bias.assign(train.file_count, 0.0);
    model.latent_rank = rank;
    model.reg_weight = reg_weight;
    return model;
}

// One SGD pass per epoch over the observed triples in a freshly shuffled
// order.
void sgd_fit(CFModel& model, const RatingMatrix& train, double lr, int epochs, Rng& rng) {
    std::vector<std::size_t> order(train.observed.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const int k = model.latent_rank;
    const double lambda = model.reg_weight;

    for (int epoch = 0; epoch < epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t idx : order) {
            const Rating& r = train.observed[idx];
            double* pu = k > 0 ? &model.user_factors[static_cast<std::size_t>(r.user) * k] : nullptr;
            double* qi = k > 0 ? &model.item_factors[static_cast<std::size_t>(r.item) * k] : nullptr;
            double pred = model.global_mean + model.user_bias[r.user] + model.item_bias[r.item];
            for (int d = 0; d < k; ++d) pred += pu[d] * qi[d];
            const double err = r.value - pred;

            double& bu = model.user_bias[r.user];
            double& bi = model.item_bias[r.item];
            bu += lr * (err - lambda * bu);
            bi += lr * (err - lambda * bi);
            for (int d = 0; d < k; ++d) {
                const double pud = pu[d];
                pu[d] += lr * (err * qi[d] - lambda * pud);
                qi[d] += lr * (err * pud - lambda * qi[d]);
            }
        }
    }
}

}  // namespace

CFModel fit_baseline(const RatingMatrix& train, double reg_weight, double learning_rate,
                     int epochs, Rng& rng) {
    if (train.empty()) throw EmptyDataError("fit_baseline: empty training matrix");
    if (!std::isfinite(reg_weight) || !std::isfinite(learning_rate) || learning_rate <= 0.0)
        throw std::invalid_argument("fit_baseline: bad hyperparameters");
    if (epochs < 1) throw std::invalid_argument("fit_baseline: epochs must be >= 1");

    CFModel model = make_model(train, 0, reg_weight);
    sgd_fit(model, train, learning_rate, epochs, rng);
    return model;
}

CFModel fit_regularized_svd(const RatingMatrix& train, int rank, double reg_weight,
                            double learning_rate, int epochs, Rng& rng) {
    if (train.empty()) throw EmptyDataError("fit_regularized_svd: empty training matrix");
    if (!std::isfinite(reg_weight) || !std::isfinite(learning_rate) || learning_rate <= 0.0)
        throw std::invalid_argument("fit_regularized_svd: bad hyperparameters");
    if (rank < 0) throw std::invalid_argument("fit_regularized_svd: negative rank");
    if (epochs < 1) throw std::invalid_argument("fit_regularized_svd: epochs must be >= 1");

    CFModel model = make_model(train, rank, reg_weight);
    if (rank > 0) {
        model.user_factors.resize(static_cast<std::size_t>(train.user_count) * rank);
        model.item_factors.resize(static_cast<std::size_t>(train.file_count) * rank);
        for (double& v : model.user_factors) v = rng.uniform(-0.05, 0.05);
        for (double& v : model.item_factors) v = rng.uniform(-0.05, 0.05);
    }
    sgd_fit(model, train, learning_rate, epochs, rng);
    return model;
}

double predict(const CFModel& model, int user, int item) {
    if (user < 0 || user >= model.user_count || item < 0 || item >= model.file_count)
        throw std::invalid_argument("predict: index out of range");
    double pred = model.global_mean + model.user_bias[user] + model.item_bias[item];
    for (int d = 0; d < model.latent_rank; ++d) {
        pred += model.user_factors[static_cast<std::size_t>(user) * model.latent_rank + d] *
                model.item_factors[static_cast<std::size_t>(item) * model.latent_rank + d];
    }
    return pred;
}

EstimatedPopularity estimate_matrix(const CFModel& model) {
    EstimatedPopularity p;
    p.user_count = model.user_count;
    p.file_count = model.file_count;
    p.values.resize(static_cast<std::size_t>(model.user_count) * model.file_count);
    for (int u = 0; u < model.user_count; ++u)
        for (int i = 0; i < model.file_count; ++i)
            p.values[static_cast<std::size_t>(u) * model.file_count + i] = predict(model, u, i);
    return p;
}

double rmse(const CFModel& model, const RatingMatrix& test) {
    if (test.empty()) throw EmptyDataError("rmse: empty test matrix");
    double sum = 0.0;
    for (const auto& r : test.observed) {
        const double e = r.value - predict(model, r.user, r.item);
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(test.observed.size()));
}

double objective(const CFModel& model, const RatingMatrix& data) {
    double sq = 0.0;
    for (const auto& r : data.observed) {
        const double e = r.value - predict(model, r.user, r.item);
        sq += e * e;
    }
    double reg = 0.0;
    for (double b : model.user_bias) reg += b * b;
    for (double b : model.item_bias) reg += b * b;
    for (double v : model.user_factors) reg += v * v;
    for (double v : model.item_factors) reg += v * v;
    return sq + model.reg_weight * reg;
}

int parameter_count(const CFModel& model) {
    return model.user_count + model.file_count +
           static_cast<int>(model.user_factors.size() + model.item_factors.size());
}

namespace {

// Flat layout: [user_bias | item_bias | user_factors | item_factors].
double* parameter_ref(CFModel& model, int index) {
    int n = model.user_count;
    if (index < n) return &model.user_bias[index];
    index -= n;
    n = model.file_count;
    if (index < n) return &model.item_bias[index];
    index -= n;
    n = static_cast<int>(model.user_factors.size());
    if (index < n) return &model.user_factors[index];
    index -= n;
    return &model.item_factors[index];
}

}  // namespace

double get_parameter(const CFModel& model, int index) {
    return *parameter_ref(const_cast<CFModel&>(model), index);
}

void set_parameter(CFModel& model, int index, double value) {
    *parameter_ref(model, index) = value;
}

double objective_gradient(const CFModel& model, const RatingMatrix& data, int index) {
    const int k = model.latent_rank;
    const int nu = model.user_count;
    const int nf = model.file_count;
    double grad = 2.0 * model.reg_weight * get_parameter(model, index);

    for (const auto& r : data.observed) {
        const double e = r.value - predict(model, r.user, r.item);
        if (index < nu) {
            if (r.user == index) grad += -2.0 * e;
        } else if (index < nu + nf) {
            if (r.item == index - nu) grad += -2.0 * e;
        } else if (index < nu + nf + nu * k) {
            const int flat = index - nu - nf;
            if (r.user == flat / k)
                grad += -2.0 * e * model.item_factors[static_cast<std::size_t>(r.item) * k + flat % k];
        } else {
            const int flat = index - nu - nf - nu * k;
            if (r.item == flat / k)
                grad += -2.0 * e * model.user_factors[static_cast<std::size_t>(r.user) * k + flat % k];
        }
    }
    return grad;
}

}  // namespace edgesim
