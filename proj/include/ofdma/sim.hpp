#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ofdma/channel.hpp"
#include "ofdma/domain.hpp"
#include "ofdma/policies.hpp"

namespace ofdma {

enum class PatternMode { single, multi };

std::string_view to_string(PatternMode mode);
std::optional<PatternMode> parse_pattern_mode(std::string_view name);

struct CampaignConfig {
    PolicyKind policy = PolicyKind::wmm;
    PatternMode pattern_mode = PatternMode::single;
    int k_count = 12;
    double r_min = 20000.0;  // bits per scheduling period
    int periods = 1000;      // fading realizations per drop
    int networks = 100;      // drops
    PolicyParams policy_params;
    SimParams sim;  // sim.patterns is replaced by the mode's pattern list
    std::vector<RuPattern> single_patterns{{9, 24}};
    std::vector<RuPattern> multi_patterns{{9, 24}, {4, 48}, {2, 102}};
    bool check_schedules = false;  // validate every emitted schedule

    /// sim with `patterns` set from pattern_mode.
    SimParams effective_params() const;
    void validate() const;
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<DropResult> drops;  // ordered by network_id
    std::vector<double> wall_clock_s;
};

/// Supplies the per-period fading for a K x N pattern.
using FadingSource = std::function<ChannelState(int k_count, int n_rus)>;

/// Runs `config.periods` scheduling periods over a fixed network with a fresh
/// policy. Throws std::logic_error if check_schedules is set and a policy
/// emits an infeasible schedule.
DropResult run_periods(const CampaignConfig& config, const NetworkRealization& net,
                       const FadingSource& fading, int network_id = 0);

/// One drop: station placement and fading from substreams keyed by network_id.
DropResult run_drop(const CampaignConfig& config, int network_id);

/// `workers` == 0 uses the hardware concurrency. Output does not depend on it.
CampaignResult run_campaign(const CampaignConfig& config, unsigned workers = 0);

struct CdfPoint {
    double x = 0.0;
    double f = 0.0;
};

/// Step points at each distinct value, F(x) = #{v <= x} / M.
std::vector<CdfPoint> empirical_cdf(std::span<const double> values);

/// #{v < threshold} / M.
double fraction_below(std::span<const double> values, double threshold);

double mean(std::span<const double> values);
double median(std::span<const double> values);

std::vector<double> min_throughputs(const CampaignResult& result);

struct SweepPoint {
    int k_count = 0;
    double mean_min_throughput = 0.0;
    CampaignResult campaign;
};

std::vector<SweepPoint> scaling_sweep(const CampaignConfig& config, std::span<const int> k_counts,
                                      unsigned workers = 0);

}  // namespace ofdma
