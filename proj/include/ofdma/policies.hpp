#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ofdma/assignment.hpp"
#include "ofdma/channel.hpp"
#include "ofdma/domain.hpp"

namespace ofdma {

enum class PolicyKind { wmm, pf, esrm };

std::string_view to_string(PolicyKind kind);
std::optional<PolicyKind> parse_policy_kind(std::string_view name);

/// How the auxiliary variables of the weighted max-min controller are scaled.
///  - rate_normalized: gamma lives in bits/period (0 or R_max) and is divided by
///    r_min inside the queue recursion.
///  - dimensionless: gamma is 0 or R_max / min_k r_min and enters the queue as is.
enum class GammaMode { rate_normalized, dimensionless };

std::string_view to_string(GammaMode mode);
std::optional<GammaMode> parse_gamma_mode(std::string_view name);

// ---------------------------------------------------------------------------
// Weighted max-min drift-plus-penalty

struct WmmState {
    std::vector<double> q;  // virtual queues, dimensionless
    double v = 900.0;
    double r_max = 0.0;  // largest per-RU rate, bits/period
    GammaMode gamma_mode = GammaMode::rate_normalized;
    double gamma_max = 0.0;  // nonzero auxiliary value in gamma_mode units
};

WmmState make_wmm_state(std::size_t k_count, double v, double r_max, GammaMode mode,
                        std::span<const double> r_min);

/// gamma_k = gamma_max for all k when V > sum(Q), zero otherwise.
std::vector<double> wmm_aux_step(const WmmState& state);

/// phi(k, n) = Q_k * r(k, n) / r_min_k. Throws InputError on r_min <= 0.
WeightMatrix wmm_weights(const WmmState& state, const RateMatrix& rates,
                         std::span<const double> r_min);

/// Q_k <- max(Q_k - r_k / r_min_k + gamma_k', 0) where gamma_k' is gamma_k / r_min_k
/// in rate_normalized mode and gamma_k otherwise.
WmmState wmm_queue_update(WmmState state, std::span<const double> realized,
                          std::span<const double> gamma, std::span<const double> r_min);

// ---------------------------------------------------------------------------
// Proportional fairness

struct PfState {
    std::vector<double> ema;  // bits/period, floored at epsilon_init
    double beta = 0.01;
    double epsilon_init = 1.0;
};

PfState make_pf_state(std::size_t k_count, double beta, double epsilon_init);

WeightMatrix pf_weights(const PfState& state, const RateMatrix& rates);

/// ema_k <- max((1 - beta) ema_k + beta r_k, epsilon_init), including stations
/// that were not served this period.
PfState pf_update(PfState state, std::span<const double> realized, double beta);

// ---------------------------------------------------------------------------
// Ergodic sum-rate maximization with minimum-throughput virtual queues

struct EsrmState {
    std::vector<double> z;  // bits/period
    double v_esr = 10.0;
};

EsrmState make_esrm_state(std::size_t k_count, double v_esr);

/// phi(k, n) = V_ESR r(k, n) + Z_k (r(k, n) - r_min_k). May be negative.
WeightMatrix esrm_weights(const EsrmState& state, const RateMatrix& rates,
                          std::span<const double> r_min);

EsrmState esrm_queue_update(EsrmState state, std::span<const double> realized,
                            std::span<const double> r_min);

// ---------------------------------------------------------------------------
// Uniform per-period controller interface

struct PolicyParams {
    double v = 900.0;
    double v_esr = 10.0;
    double beta = 0.01;
    double pf_floor = 1.0;
    GammaMode gamma_mode = GammaMode::rate_normalized;
};

/// Per period the simulator calls begin_period(), then weights() once per RU
/// pattern, then end_period() with the realized per-station rates.
class SchedulingPolicy {
public:
    virtual ~SchedulingPolicy() = default;

    virtual PolicyKind kind() const = 0;
    virtual void begin_period() {}
    virtual WeightMatrix weights(const RateMatrix& rates) const = 0;
    virtual void end_period(std::span<const double> realized) = 0;

    /// Q for WMM, the moving averages for PF, Z for ESRM.
    virtual std::vector<double> queues() const = 0;
};

/// r_max is the largest per-RU rate over the configured patterns.
std::unique_ptr<SchedulingPolicy> make_policy(PolicyKind kind, const PolicyParams& params,
                                              std::vector<double> r_min, double r_max);

struct Decision {
    std::size_t pattern_index = 0;
    ScheduleMatrix schedule;
    RateMatrix rates;
    std::vector<double> realized;
    double objective = 0.0;
};

/// Solves the assignment problem for every configured RU pattern with the
/// policy's own weights and keeps the one with the largest objective (ties go
/// to the lowest pattern index). `channels[i]` is the fading of params.patterns[i].
/// Does not touch policy state.
Decision decide(const SchedulingPolicy& policy, const SimParams& params,
                const NetworkRealization& net, std::span<const ChannelState> channels);

}  // namespace ofdma
