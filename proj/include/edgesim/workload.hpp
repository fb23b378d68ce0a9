#pragma once

#include <cstdint>
#include <vector>

#include "edgesim/rng.hpp"

namespace edgesim {

// Content library: F equally sized files, shared length L (Mbit) and
// playback bitrate B (Mbit/s).
struct Catalog {
    int file_count = 0;
    double file_length_mbit = 0.0;
    double bitrate_mbit_s = 0.0;
};

// Rank-based power-law popularity over file ids; file 0 is the most popular.
// pmf[k] = (k+1)^-exponent / sum_j j^-exponent. cdf is kept alongside for
// inverse-CDF sampling.
struct ZipfDist {
    double exponent = 0.0;
    std::vector<double> pmf;
    std::vector<double> cdf;
};

struct RequestEntry {
    double arrival_time_s = 0.0;
    int user_id = 0;
    int file_id = 0;
};

// Time-ordered request trace over a horizon of T whole seconds.
// Entries are sorted by arrival time; ties keep generation order.
struct RequestTrace {
    int horizon_s = 0;
    std::vector<RequestEntry> entries;
};

ZipfDist zipf_pmf(int file_count, double exponent);

// Draws one file id, consuming exactly one uniform variate.
int sample_file(const ZipfDist& dist, Rng& rng);

// r requests with arrival times uniform on [0, T), users uniform on [0, N),
// files from dist. Deterministic for a fixed rng seed.
RequestTrace generate_trace(int request_count, int horizon_s, int user_count,
                            const ZipfDist& dist, Rng& rng);

// FNV-1a over all entries; used to assert that two pipeline branches
// consumed the same trace.
std::uint64_t trace_digest(const RequestTrace& trace);

}  // namespace edgesim
