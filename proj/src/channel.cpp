#include "ofdma/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ofdma {

Rng make_substream(std::uint64_t master_seed, std::uint64_t network_id, StreamPurpose purpose) {
    const auto p = static_cast<std::uint64_t>(purpose);
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(network_id),
                      static_cast<std::uint32_t>(network_id >> 32),
                      static_cast<std::uint32_t>(p)};
    return Rng(seq);
}

std::vector<double> NetworkRealization::r_min() const {
    std::vector<double> out;
    out.reserve(stations.size());
    for (const auto& s : stations) out.push_back(s.r_min);
    return out;
}

double path_loss(double d_m, double fc_ghz) {
    if (!(d_m > 0.0)) throw InputError("path_loss: distance must be positive");
    if (!(fc_ghz > 0.0)) throw InputError("path_loss: carrier frequency must be positive");
    constexpr double kBreakpointM = 5.0;
    double pl = 40.05 + 20.0 * std::log10(fc_ghz / 2.4) +
                20.0 * std::log10(std::min(d_m, kBreakpointM));
    if (d_m > kBreakpointM) pl += 35.0 * std::log10(d_m / kBreakpointM);
    return pl;
}

NetworkRealization place_stations(Rng& rng, int k_count, double d_min_m, double d_max_m,
                                  double r_min, double fc_ghz) {
    if (k_count < 1) throw InputError("place_stations: k_count must be >= 1");
    if (!(d_min_m > 0.0) || d_max_m < d_min_m) {
        throw InputError("place_stations: require 0 < d_min <= d_max");
    }
    if (!(r_min > 0.0)) throw InputError("place_stations: r_min must be positive");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lo = d_min_m * d_min_m;
    const double span = d_max_m * d_max_m - lo;
    NetworkRealization net;
    net.stations.reserve(static_cast<std::size_t>(k_count));
    for (int k = 0; k < k_count; ++k) {
        // inverse CDF of the area-uniform radius
        const double d = std::clamp(std::sqrt(lo + unit(rng) * span), d_min_m, d_max_m);
        net.stations.push_back({k, d, r_min, path_loss(d, fc_ghz)});
    }
    return net;
}

NetworkRealization make_network(const std::vector<double>& distances_m, double r_min,
                                double fc_ghz) {
    if (distances_m.empty()) throw InputError("make_network: no stations");
    if (!(r_min > 0.0)) throw InputError("make_network: r_min must be positive");
    NetworkRealization net;
    for (std::size_t k = 0; k < distances_m.size(); ++k) {
        const double d = distances_m[k];
        net.stations.push_back({static_cast<int>(k), d, r_min, path_loss(d, fc_ghz)});
    }
    return net;
}

ChannelState draw_fading(Rng& rng, int k_count, int n_rus) {
    if (k_count < 1 || n_rus < 1) throw InputError("draw_fading: dimensions must be positive");
    std::exponential_distribution<double> exp1(1.0);
    ChannelState ch{Matrix<double>(static_cast<std::size_t>(k_count), static_cast<std::size_t>(n_rus))};
    for (std::size_t k = 0; k < ch.gains.rows(); ++k) {
        for (auto& g : ch.gains.row(k)) {
            do {
                g = exp1(rng);
            } while (!(g > 0.0) || !std::isfinite(g));
        }
    }
    return ch;
}

double received_power_dbm(double p_ru_mw, int subcarriers, double pl_db, double g) {
    if (g <= 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(p_ru_mw / subcarriers) - pl_db + 10.0 * std::log10(g);
}

int select_mcs(double rx_dbm, const std::vector<McsEntry>& table) {
    if (table.empty()) throw InputError("select_mcs: empty MCS table");
    int best = kNoMcs;
    for (const auto& e : table) {
        if (e.min_rx_power_dbm <= rx_dbm) best = e.index;
        else break;
    }
    return best;
}

double bits_per_period(int subcarriers, const McsEntry& mcs, int symbol_count) {
    if (symbol_count < 1) throw InputError("bits_per_period: symbol_count must be positive");
    const std::int64_t numerator = static_cast<std::int64_t>(subcarriers) * mcs.bits_per_symbol *
                                   mcs.code_rate_num * symbol_count;
    // Exact whenever the product is divisible; otherwise a correctly rounded quotient.
    if (numerator % mcs.code_rate_den == 0) {
        return static_cast<double>(numerator / mcs.code_rate_den);
    }
    return static_cast<double>(numerator) / mcs.code_rate_den;
}

double max_ru_rate(const SimParams& params) {
    const int symbols = params.symbol_count();
    double best = 0.0;
    for (const auto& p : params.patterns) {
        for (const auto& e : params.mcs_table) {
            best = std::max(best, bits_per_period(p.data_subcarriers, e, symbols));
        }
    }
    return best;
}

RateMatrix rate_matrix(const SimParams& params, const NetworkRealization& net,
                       const ChannelState& ch, const RuPattern& pat) {
    const std::size_t k_count = net.size();
    const auto n_rus = static_cast<std::size_t>(pat.n_rus);
    if (ch.gains.rows() != k_count || ch.gains.cols() != n_rus) {
        throw InputError("rate_matrix: channel dimensions do not match stations x RUs");
    }
    const int symbols = params.symbol_count();
    const double p_ru_mw = params.p_total_mw() / pat.n_rus;

    std::vector<double> rate_of(params.mcs_table.size() + 1, 0.0);
    for (const auto& e : params.mcs_table) {
        rate_of[static_cast<std::size_t>(e.index)] = bits_per_period(pat.data_subcarriers, e, symbols);
    }

    RateMatrix r{Matrix<double>(k_count, n_rus), Matrix<int>(k_count, n_rus, kNoMcs)};
    for (std::size_t k = 0; k < k_count; ++k) {
        const double pl = net.stations[k].path_loss_db;
        for (std::size_t n = 0; n < n_rus; ++n) {
            const double rx = received_power_dbm(p_ru_mw, pat.data_subcarriers, pl, ch.gains(k, n));
            const int l = select_mcs(rx, params.mcs_table);
            r.mcs_idx(k, n) = l;
            r.bits(k, n) = rate_of[static_cast<std::size_t>(l)];
        }
    }
    return r;
}

}  // namespace ofdma
