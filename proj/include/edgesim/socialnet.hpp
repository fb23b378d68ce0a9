#pragma once

#include <iosfwd>
#include <vector>

#include "edgesim/rng.hpp"

namespace edgesim {

// Undirected, unweighted social graph over user ids 0..N-1, no self loops.
struct SocialGraph {
    int user_count = 0;
    std::vector<std::vector<int>> neighbors;  // sorted adjacency lists

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    int degree(int u) const { return static_cast<int>(neighbors[u].size()); }
    int edge_count() const;
};

enum class CentralityMetric { degree, closeness, betweenness, eigenvector };

struct CentralityScores {
    CentralityMetric metric = CentralityMetric::degree;
    std::vector<double> scores;
    double leading_eigenvalue = 0.0;  // meaningful for eigenvector only
};

struct CommunityAssignment {
    std::vector<int> community_of;  // length N, values in [0, K)
    std::vector<int> influencer_of;  // length K, max-centrality member per community
};

// Seed clique on m+1 nodes, then each new node attaches m edges to distinct
// existing nodes with probability proportional to current degree.
SocialGraph generate_preferential_attachment(int n, int edges_per_node, Rng& rng);

CentralityScores degree_centrality(const SocialGraph& g);

// (N-1) / sum of BFS distances. Requires a connected graph.
CentralityScores closeness_centrality(const SocialGraph& g);

// Brandes accumulation, endpoints excluded, undirected pairs counted once.
CentralityScores betweenness_centrality(const SocialGraph& g);

// Power iteration from the all-ones vector; returns the unit-norm
// nonnegative leading eigenvector and the Rayleigh estimate of lambda_1.
CentralityScores eigenvector_centrality(const SocialGraph& g, double tol = 1e-10,
                                        int max_iter = 100000);

// K user ids in decreasing score order; ties broken by lower user id.
std::vector<int> top_k_influential(const CentralityScores& scores, int k);

// Spectral embedding into the K leading eigenvectors of the adjacency
// matrix, then seeded k-means. Every community is nonempty; each
// influencer is its community's max-centrality member.
CommunityAssignment form_communities(const SocialGraph& g, const CentralityScores& scores,
                                     int k, Rng& rng);

// Edge-list text format: one "u v" pair per line, 0-based, u < v.
void save_edge_list(const SocialGraph& g, std::ostream& out);
SocialGraph load_edge_list(std::istream& in);

}  // namespace edgesim
