#include "edgesim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "edgesim/errors.hpp"

namespace edgesim {

ZipfDist zipf_pmf(int file_count, double exponent) {
    if (file_count < 1) throw std::invalid_argument("zipf_pmf: file_count must be >= 1");
    if (!(exponent >= 0.0) || !std::isfinite(exponent))
        throw std::invalid_argument("zipf_pmf: exponent must be finite and >= 0");

    ZipfDist dist;
    dist.exponent = exponent;
    dist.pmf.resize(file_count);
    double total = 0.0;
    for (int k = 0; k < file_count; ++k) {
        double w = std::pow(static_cast<double>(k + 1), -exponent);
        dist.pmf[k] = w;
        total += w;
    }
    for (double& p : dist.pmf) p /= total;

    dist.cdf.resize(file_count);
    double acc = 0.0;
    for (int k = 0; k < file_count; ++k) {
        acc += dist.pmf[k];
        dist.cdf[k] = acc;
    }
    dist.cdf.back() = 1.0;
    return dist;
}

int sample_file(const ZipfDist& dist, Rng& rng) {
    if (dist.cdf.empty()) throw std::invalid_argument("sample_file: empty distribution");
    double u = rng.uniform01();
    auto it = std::upper_bound(dist.cdf.begin(), dist.cdf.end(), u);
    if (it == dist.cdf.end()) --it;
    return static_cast<int>(it - dist.cdf.begin());
}

RequestTrace generate_trace(int request_count, int horizon_s, int user_count,
                            const ZipfDist& dist, Rng& rng) {
    if (request_count < 0) throw std::invalid_argument("generate_trace: negative request count");
    if (horizon_s < 1) throw std::invalid_argument("generate_trace: horizon must be >= 1");
    if (user_count < 1) throw std::invalid_argument("generate_trace: user_count must be >= 1");

    RequestTrace trace;
    trace.horizon_s = horizon_s;
    trace.entries.resize(request_count);
    for (auto& e : trace.entries) {
        e.arrival_time_s = rng.uniform01() * horizon_s;
        e.user_id = rng.uniform_int(user_count);
        e.file_id = sample_file(dist, rng);
    }
    // Stable sort keeps generation order on equal times.
    std::stable_sort(trace.entries.begin(), trace.entries.end(),
                     [](const RequestEntry& a, const RequestEntry& b) {
                         return a.arrival_time_s < b.arrival_time_s;
                     });
    return trace;
}

std::uint64_t trace_digest(const RequestTrace& trace) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(trace.horizon_s));
    for (const auto& e : trace.entries) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(e.arrival_time_s));
        std::memcpy(&bits, &e.arrival_time_s, sizeof(bits));
        mix(bits);
        mix(static_cast<std::uint64_t>(e.user_id));
        mix(static_cast<std::uint64_t>(e.file_id));
    }
    return h;
}

}  // namespace edgesim
