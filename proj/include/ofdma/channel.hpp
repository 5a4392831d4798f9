#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ofdma/domain.hpp"

namespace ofdma {

using Rng = std::mt19937_64;

/// Independent RNG substreams of one network realization.
enum class StreamPurpose : std::uint64_t { placement = 1, fading = 2 };

/// Deterministic generator for (master_seed, network_id, purpose). Streams for
/// different keys are statistically independent.
Rng make_substream(std::uint64_t master_seed, std::uint64_t network_id, StreamPurpose purpose);

struct NetworkRealization {
    std::vector<StationConfig> stations;

    std::size_t size() const { return stations.size(); }
    std::vector<double> r_min() const;
};

/// Indoor residential path loss in dB with a breakpoint at 5 m.
double path_loss(double d_m, double fc_ghz);

/// Stations uniform over the annulus area between d_min and d_max around the AP.
NetworkRealization place_stations(Rng& rng, int k_count, double d_min_m, double d_max_m,
                                  double r_min, double fc_ghz);

/// Builds a realization from explicit distances (fixed-geometry tests and scenarios).
NetworkRealization make_network(const std::vector<double>& distances_m, double r_min,
                                double fc_ghz);

/// K x N i.i.d. unit-mean exponential power gains (Rayleigh amplitudes).
ChannelState draw_fading(Rng& rng, int k_count, int n_rus);

/// Per-subcarrier received power in dBm. Returns -inf when g == 0.
double received_power_dbm(double p_ru_mw, int subcarriers, double pl_db, double g);

/// Largest MCS index whose sensitivity is met, or kNoMcs.
/// Throws InputError on an empty table.
int select_mcs(double rx_dbm, const std::vector<McsEntry>& table);

/// S * bits_per_symbol * code_rate * symbol_count, computed exactly.
double bits_per_period(int subcarriers, const McsEntry& mcs, int symbol_count);

/// Largest per-RU rate over the given patterns and MCS table.
double max_ru_rate(const SimParams& params);

RateMatrix rate_matrix(const SimParams& params, const NetworkRealization& net,
                       const ChannelState& ch, const RuPattern& pat);

}  // namespace ofdma
