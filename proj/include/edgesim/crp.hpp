#pragma once

#include <vector>

#include "edgesim/rng.hpp"

namespace edgesim {

// Outcome of a Chinese Restaurant Process seating: which table each
// customer chose and the per-table occupancy, tables numbered in creation
// order.
struct CrpAssignment {
    double concentration = 1.0;
    std::vector<int> customer_table;  // table index per customer
    std::vector<int> table_counts;    // occupancy, every entry >= 1

    int customers() const { return static_cast<int>(customer_table.size()); }
    int history_tables() const { return static_cast<int>(table_counts.size()); }
};

// Sequential seating: customer t+1 joins occupied table f with probability
// m_f / (t + beta) and opens a new table with probability beta / (t + beta).
CrpAssignment crp_sample(int n_customers, double concentration, Rng& rng);

// log of  beta^{F_h} Gamma(beta) / Gamma(beta + n) * prod (m_f - 1)!
double crp_log_probability(const CrpAssignment& a);

// Table j maps to file id j (creation order to ascending id, or a seeded
// permutation). Occupancies become scores; files without history get a
// floor of 1/(n + beta) each; the result is normalized to sum to 1.
std::vector<double> community_popularity(const CrpAssignment& a, int catalog_size, Rng& rng,
                                         bool permute_files = false);

}  // namespace edgesim
