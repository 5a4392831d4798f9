#include "ofdma/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ofdma {

std::string_view to_string(PatternMode mode) {
    return mode == PatternMode::single ? "single" : "multi";
}

std::optional<PatternMode> parse_pattern_mode(std::string_view name) {
    if (name == "single") return PatternMode::single;
    if (name == "multi") return PatternMode::multi;
    return std::nullopt;
}

SimParams CampaignConfig::effective_params() const {
    SimParams p = sim;
    p.patterns = pattern_mode == PatternMode::single ? single_patterns : multi_patterns;
    return p;
}

void CampaignConfig::validate() const {
    if (k_count < 1) throw InputError("stations must be >= 1");
    if (!(r_min > 0.0)) throw InputError("r_min must be positive");
    if (periods < 1) throw InputError("periods must be >= 1");
    if (networks < 1) throw InputError("networks must be >= 1");
    if (!(policy_params.v > 0.0)) throw InputError("v must be positive");
    if (!(policy_params.v_esr > 0.0)) throw InputError("v_esr must be positive");
    if (!(policy_params.beta > 0.0 && policy_params.beta <= 1.0)) {
        throw InputError("beta must lie in (0, 1]");
    }
    if (!(policy_params.pf_floor > 0.0)) throw InputError("pf_floor must be positive");
    effective_params().validate();
}

DropResult run_periods(const CampaignConfig& config, const NetworkRealization& net,
                       const FadingSource& fading, int network_id) {
    const SimParams params = config.effective_params();
    const int k_count = static_cast<int>(net.size());
    auto policy = make_policy(config.policy, config.policy_params, net.r_min(), max_ru_rate(params));

    std::vector<double> totals(net.size(), 0.0);
    std::vector<ChannelState> channels(params.patterns.size());
    for (int t = 0; t < config.periods; ++t) {
        for (std::size_t i = 0; i < params.patterns.size(); ++i) {
            channels[i] = fading(k_count, params.patterns[i].n_rus);
        }
        policy->begin_period();
        const Decision d = decide(*policy, params, net, channels);
        if (config.check_schedules) {
            const auto check = validate_schedule(d.schedule);
            if (!check.ok()) {
                throw std::logic_error("infeasible schedule in period " + std::to_string(t) + ": " +
                                       check.describe());
            }
        }
        for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += d.realized[k];
        policy->end_period(d.realized);
    }

    DropResult out;
    out.network_id = network_id;
    out.per_station_throughput.resize(totals.size());
    for (std::size_t k = 0; k < totals.size(); ++k) {
        out.per_station_throughput[k] = totals[k] / config.periods;
    }
    out.min_throughput =
        *std::min_element(out.per_station_throughput.begin(), out.per_station_throughput.end());
    out.final_queues = policy->queues();
    return out;
}

DropResult run_drop(const CampaignConfig& config, int network_id) {
    const auto id = static_cast<std::uint64_t>(network_id);
    const auto seed = config.sim.master_seed;
    Rng placement = make_substream(seed, id, StreamPurpose::placement);
    const NetworkRealization net = place_stations(placement, config.k_count, config.sim.d_min_m,
                                                  config.sim.d_max_m, config.r_min,
                                                  config.sim.carrier_freq_ghz);
    Rng fading_rng = make_substream(seed, id, StreamPurpose::fading);
    const FadingSource fading = [&fading_rng](int k, int n) { return draw_fading(fading_rng, k, n); };
    return run_periods(config, net, fading, network_id);
}

CampaignResult run_campaign(const CampaignConfig& config, unsigned workers) {
    config.validate();
    const auto m = static_cast<std::size_t>(config.networks);
    CampaignResult result{config, std::vector<DropResult>(m), std::vector<double>(m, 0.0)};

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(m));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t i = next++; i < m && !failed; i = next++) {
            try {
                const auto start = std::chrono::steady_clock::now();
                result.drops[i] = run_drop(config, static_cast<int>(i));
                result.wall_clock_s[i] =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return result;
}

std::vector<CdfPoint> empirical_cdf(std::span<const double> values) {
    if (values.empty()) throw InputError("empirical_cdf: empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double m = static_cast<double>(sorted.size());
    std::vector<CdfPoint> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        out.push_back({sorted[i], static_cast<double>(i + 1) / m});
    }
    return out;
}

double fraction_below(std::span<const double> values, double threshold) {
    if (values.empty()) throw InputError("fraction_below: empty sample");
    const auto below = std::count_if(values.begin(), values.end(),
                                     [threshold](double v) { return v < threshold; });
    return static_cast<double>(below) / static_cast<double>(values.size());
}

double mean(std::span<const double> values) {
    if (values.empty()) throw InputError("mean: empty sample");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double median(std::span<const double> values) {
    if (values.empty()) throw InputError("median: empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    return sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
}

std::vector<double> min_throughputs(const CampaignResult& result) {
    std::vector<double> out;
    out.reserve(result.drops.size());
    for (const auto& d : result.drops) out.push_back(d.min_throughput);
    return out;
}

std::vector<SweepPoint> scaling_sweep(const CampaignConfig& config, std::span<const int> k_counts,
                                      unsigned workers) {
    if (k_counts.empty()) throw InputError("scaling_sweep: no station counts");
    std::vector<SweepPoint> out;
    out.reserve(k_counts.size());
    for (int k : k_counts) {
        CampaignConfig c = config;
        c.k_count = k;
        CampaignResult r = run_campaign(c, workers);
        const double avg = mean(min_throughputs(r));
        out.push_back({k, avg, std::move(r)});
    }
    return out;
}

}  // namespace ofdma
