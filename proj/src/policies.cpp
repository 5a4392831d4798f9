#include "ofdma/policies.hpp"

#include <algorithm>
#include <numeric>

namespace ofdma {

std::string_view to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::wmm: return "wmm";
        case PolicyKind::pf: return "pf";
        case PolicyKind::esrm: return "esrm";
    }
    return "unknown";
}

std::optional<PolicyKind> parse_policy_kind(std::string_view name) {
    if (name == "wmm") return PolicyKind::wmm;
    if (name == "pf") return PolicyKind::pf;
    if (name == "esrm") return PolicyKind::esrm;
    return std::nullopt;
}

std::string_view to_string(GammaMode mode) {
    return mode == GammaMode::rate_normalized ? "rate_normalized" : "dimensionless";
}

std::optional<GammaMode> parse_gamma_mode(std::string_view name) {
    if (name == "rate_normalized") return GammaMode::rate_normalized;
    if (name == "dimensionless") return GammaMode::dimensionless;
    return std::nullopt;
}

namespace {

void require_sizes(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) throw InputError(std::string(what) + ": length does not match station count");
}

void require_positive(std::span<const double> r_min) {
    for (double r : r_min) {
        if (!(r > 0.0)) throw InputError("r_min must be positive for every station");
    }
}

}  // namespace

WmmState make_wmm_state(std::size_t k_count, double v, double r_max, GammaMode mode,
                        std::span<const double> r_min) {
    if (!(v > 0.0)) throw InputError("wmm: V must be positive");
    if (!(r_max > 0.0)) throw InputError("wmm: R_max must be positive");
    require_sizes(k_count, r_min.size(), "wmm r_min");
    require_positive(r_min);
    WmmState s{std::vector<double>(k_count, 0.0), v, r_max, mode, r_max};
    if (mode == GammaMode::dimensionless) {
        s.gamma_max = r_max / *std::min_element(r_min.begin(), r_min.end());
    }
    return s;
}

std::vector<double> wmm_aux_step(const WmmState& state) {
    const double backlog = std::accumulate(state.q.begin(), state.q.end(), 0.0);
    const double value = state.v > backlog ? state.gamma_max : 0.0;
    return std::vector<double>(state.q.size(), value);
}

WeightMatrix wmm_weights(const WmmState& state, const RateMatrix& rates,
                         std::span<const double> r_min) {
    const std::size_t k_count = state.q.size();
    require_sizes(k_count, rates.bits.rows(), "wmm rates");
    require_sizes(k_count, r_min.size(), "wmm r_min");
    require_positive(r_min);
    WeightMatrix w(k_count, rates.bits.cols());
    for (std::size_t k = 0; k < k_count; ++k) {
        const double scale = state.q[k] / r_min[k];
        const auto in = rates.bits.row(k);
        auto out = w.row(k);
        for (std::size_t n = 0; n < in.size(); ++n) out[n] = scale * in[n];
    }
    return w;
}

WmmState wmm_queue_update(WmmState state, std::span<const double> realized,
                          std::span<const double> gamma, std::span<const double> r_min) {
    const std::size_t k_count = state.q.size();
    require_sizes(k_count, realized.size(), "wmm realized");
    require_sizes(k_count, gamma.size(), "wmm gamma");
    require_sizes(k_count, r_min.size(), "wmm r_min");
    for (std::size_t k = 0; k < k_count; ++k) {
        const double arrival =
            state.gamma_mode == GammaMode::rate_normalized ? gamma[k] / r_min[k] : gamma[k];
        state.q[k] = std::max(state.q[k] - realized[k] / r_min[k] + arrival, 0.0);
    }
    return state;
}

PfState make_pf_state(std::size_t k_count, double beta, double epsilon_init) {
    if (!(beta > 0.0 && beta <= 1.0)) throw InputError("pf: beta must lie in (0, 1]");
    if (!(epsilon_init > 0.0)) throw InputError("pf: ema floor must be positive");
    return {std::vector<double>(k_count, epsilon_init), beta, epsilon_init};
}

WeightMatrix pf_weights(const PfState& state, const RateMatrix& rates) {
    const std::size_t k_count = state.ema.size();
    require_sizes(k_count, rates.bits.rows(), "pf rates");
    WeightMatrix w(k_count, rates.bits.cols());
    for (std::size_t k = 0; k < k_count; ++k) {
        const auto in = rates.bits.row(k);
        auto out = w.row(k);
        for (std::size_t n = 0; n < in.size(); ++n) out[n] = in[n] / state.ema[k];
    }
    return w;
}

PfState pf_update(PfState state, std::span<const double> realized, double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) throw InputError("pf: beta must lie in (0, 1]");
    require_sizes(state.ema.size(), realized.size(), "pf realized");
    for (std::size_t k = 0; k < state.ema.size(); ++k) {
        state.ema[k] = std::max((1.0 - beta) * state.ema[k] + beta * realized[k], state.epsilon_init);
    }
    return state;
}

EsrmState make_esrm_state(std::size_t k_count, double v_esr) {
    if (!(v_esr >= 0.0)) throw InputError("esrm: V_ESR must be non-negative");
    return {std::vector<double>(k_count, 0.0), v_esr};
}

WeightMatrix esrm_weights(const EsrmState& state, const RateMatrix& rates,
                          std::span<const double> r_min) {
    const std::size_t k_count = state.z.size();
    require_sizes(k_count, rates.bits.rows(), "esrm rates");
    require_sizes(k_count, r_min.size(), "esrm r_min");
    WeightMatrix w(k_count, rates.bits.cols());
    for (std::size_t k = 0; k < k_count; ++k) {
        const auto in = rates.bits.row(k);
        auto out = w.row(k);
        for (std::size_t n = 0; n < in.size(); ++n) {
            out[n] = state.v_esr * in[n] + state.z[k] * (in[n] - r_min[k]);
        }
    }
    return w;
}

EsrmState esrm_queue_update(EsrmState state, std::span<const double> realized,
                            std::span<const double> r_min) {
    require_sizes(state.z.size(), realized.size(), "esrm realized");
    require_sizes(state.z.size(), r_min.size(), "esrm r_min");
    for (std::size_t k = 0; k < state.z.size(); ++k) {
        state.z[k] = std::max(state.z[k] - realized[k] + r_min[k], 0.0);
    }
    return state;
}

namespace {

class WmmPolicy final : public SchedulingPolicy {
public:
    WmmPolicy(const PolicyParams& p, std::vector<double> r_min, double r_max)
        : r_min_(std::move(r_min)),
          state_(make_wmm_state(r_min_.size(), p.v, r_max, p.gamma_mode, r_min_)) {}

    PolicyKind kind() const override { return PolicyKind::wmm; }
    void begin_period() override { gamma_ = wmm_aux_step(state_); }
    WeightMatrix weights(const RateMatrix& rates) const override {
        return wmm_weights(state_, rates, r_min_);
    }
    void end_period(std::span<const double> realized) override {
        if (gamma_.empty()) gamma_ = wmm_aux_step(state_);
        state_ = wmm_queue_update(std::move(state_), realized, gamma_, r_min_);
        gamma_.clear();
    }
    std::vector<double> queues() const override { return state_.q; }

private:
    std::vector<double> r_min_;
    WmmState state_;
    std::vector<double> gamma_;
};

class PfPolicy final : public SchedulingPolicy {
public:
    PfPolicy(const PolicyParams& p, std::size_t k_count)
        : state_(make_pf_state(k_count, p.beta, p.pf_floor)) {}

    PolicyKind kind() const override { return PolicyKind::pf; }
    WeightMatrix weights(const RateMatrix& rates) const override { return pf_weights(state_, rates); }
    void end_period(std::span<const double> realized) override {
        const double beta = state_.beta;
        state_ = pf_update(std::move(state_), realized, beta);
    }
    std::vector<double> queues() const override { return state_.ema; }

private:
    PfState state_;
};

class EsrmPolicy final : public SchedulingPolicy {
public:
    EsrmPolicy(const PolicyParams& p, std::vector<double> r_min)
        : r_min_(std::move(r_min)), state_(make_esrm_state(r_min_.size(), p.v_esr)) {}

    PolicyKind kind() const override { return PolicyKind::esrm; }
    WeightMatrix weights(const RateMatrix& rates) const override {
        return esrm_weights(state_, rates, r_min_);
    }
    void end_period(std::span<const double> realized) override {
        state_ = esrm_queue_update(std::move(state_), realized, r_min_);
    }
    std::vector<double> queues() const override { return state_.z; }

private:
    std::vector<double> r_min_;
    EsrmState state_;
};

}  // namespace

std::unique_ptr<SchedulingPolicy> make_policy(PolicyKind kind, const PolicyParams& params,
                                              std::vector<double> r_min, double r_max) {
    if (r_min.empty()) throw InputError("make_policy: no stations");
    switch (kind) {
        case PolicyKind::wmm: return std::make_unique<WmmPolicy>(params, std::move(r_min), r_max);
        case PolicyKind::pf: return std::make_unique<PfPolicy>(params, r_min.size());
        case PolicyKind::esrm: return std::make_unique<EsrmPolicy>(params, std::move(r_min));
    }
    throw InputError("make_policy: unknown policy");
}

Decision decide(const SchedulingPolicy& policy, const SimParams& params,
                const NetworkRealization& net, std::span<const ChannelState> channels) {
    if (channels.size() != params.patterns.size()) {
        throw InputError("decide: need one channel state per RU pattern");
    }
    Decision best;
    bool have_best = false;
    for (std::size_t i = 0; i < params.patterns.size(); ++i) {
        RateMatrix rates = rate_matrix(params, net, channels[i], params.patterns[i]);
        Assignment a = max_weight_assignment(policy.weights(rates));
        if (!have_best || a.value > best.objective) {
            best.pattern_index = i;
            best.schedule = std::move(a.schedule);
            best.rates = std::move(rates);
            best.objective = a.value;
            have_best = true;
        }
    }
    best.realized = station_rates(best.schedule, best.rates);
    return best;
}

}  // namespace ofdma
