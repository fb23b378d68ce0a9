#pragma once

#include <iosfwd>
#include <vector>

#include "edgesim/caching.hpp"
#include "edgesim/socialnet.hpp"
#include "edgesim/workload.hpp"

namespace edgesim {

// How the total backhaul capacity C_b is allocated to cache misses.
//   per_sbs: every SBS owns C_b / M, split equally among its active misses.
//   pooled:  one shared pool of C_b, split equally among all active misses.
enum class BackhaulSharing { per_sbs, pooled };

struct NetworkConfig {
    int sbs_count = 1;
    int user_count = 1;
    int horizon_s = 1;
    double wireless_capacity_mbit_s = 0.0;  // total across SBSs
    double backhaul_capacity_mbit_s = 0.0;  // total (case 1)
    double d2d_capacity_mbit_s = 0.0;       // total (case 2)
    std::vector<int> user_of_sbs;           // user id -> SBS id
    BackhaulSharing backhaul_sharing = BackhaulSharing::pooled;
};

struct ChannelTally {
    double sbs_wireless_mbit = 0.0;
    double backhaul_mbit = 0.0;
    double d2d_mbit = 0.0;
};

// Per-run audit numbers collected while scheduling; tests assert the
// capacity and conservation bounds on them.
struct SimAudit {
    double max_sbs_wireless_slot_mbit = 0.0;  // max over (slot, SBS)
    double max_backhaul_slot_mbit = 0.0;      // per SBS link or pooled, per sharing mode
    double max_d2d_slot_mbit = 0.0;           // max over slots of total D2D
    double max_completed_conservation_err = 0.0;
    double max_inflight_conservation_err = 0.0;
};

struct MetricsReport {
    double satisfied_fraction = 1.0;
    double backhaul_load = 0.0;    // case 1: backhaul Mbit / wireless Mbit
    double small_cell_load = 0.0;  // case 2: SBS Mbit / (SBS + D2D Mbit)
    ChannelTally totals;
    long total_requests = 0;
    long completed_requests = 0;
    long satisfied_requests = 0;
    SimAudit audit;
};

// Nominal playback duration L / B; the delivery deadline.
double satisfaction_threshold(const Catalog& catalog);

// Slot-based delivery for case study I. Wireless capacity C_w/M per SBS is
// split equally among the SBS's active requests each second; misses are
// additionally limited by their backhaul share and their megabits are
// tallied on both channels (cut-through). A request is satisfied when
// completion - arrival <= L/B. Optional event sink gets one line per
// completion: "time user file satisfied wireless backhaul d2d".
MetricsReport simulate_case1(const NetworkConfig& cfg, const RequestTrace& trace,
                             const std::vector<CachePlacement>& sbs_caches,
                             const Catalog& catalog, std::ostream* events = nullptr);

// Slot-based delivery for case study II. Every request is served by its SBS
// (C_w/M split among the SBS's active requests); if a social neighbor of
// the requester caches the file, the highest-degree such neighbor also
// serves it over D2D, with C_d divided among concurrent transfers
// proportionally to the serving user's degree.
MetricsReport simulate_case2(const NetworkConfig& cfg, const RequestTrace& trace,
                             const std::vector<CachePlacement>& influencer_caches,
                             const SocialGraph& graph, const CommunityAssignment& communities,
                             const Catalog& catalog, std::ostream* events = nullptr);

}  // namespace edgesim
