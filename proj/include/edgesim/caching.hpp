#pragma once

#include <vector>

#include "edgesim/popularity.hpp"
#include "edgesim/rng.hpp"

namespace edgesim {

// Set of file ids stored at one cache node (SBS or user device) under a
// byte-capacity constraint. With equal file lengths a cache holds exactly
// floor(capacity / file_length) files.
struct CachePlacement {
    int node_id = -1;
    double capacity_mbit = 0.0;
    std::vector<int> stored;  // sorted ascending

    bool contains(int file_id) const;
};

// score[i] = sum over `users` of p_hat(u, i).
std::vector<double> popularity_scores(const EstimatedPopularity& p_hat,
                                      const std::vector<int>& users);

// Stores filesids in decreasing score order (ties: lower file id) until the
// next file would exceed capacity.
CachePlacement greedy_place(const std::vector<double>& scores, double capacity_mbit,
                            double file_length_mbit, int node_id);

// floor(capacity / file_length) distinct files drawn uniformly without
// replacement.
CachePlacement random_place(int file_count, double capacity_mbit, double file_length_mbit,
                            int node_id, Rng& rng);

// Greedy placement of each community's ranking into its influencer's device
// cache; one influencer per community.
std::vector<CachePlacement> community_place(const std::vector<std::vector<double>>& community_scores,
                                            const std::vector<int>& influencers,
                                            double per_node_capacity_mbit,
                                            double file_length_mbit);

}  // namespace edgesim
