#include <doctest.h>

#include <numeric>
#include <random>

#include "ofdma/policies.hpp"

using namespace ofdma;

namespace {

RateMatrix rates_of(std::initializer_list<std::initializer_list<double>> rows) {
    RateMatrix r{Matrix<double>(rows), {}};
    r.mcs_idx = Matrix<int>(r.bits.rows(), r.bits.cols(), 1);
    return r;
}

WmmState wmm_with_queues(std::vector<double> q, double v, double r_max = 32000.0) {
    const std::vector<double> r_min(q.size(), 20000.0);
    auto s = make_wmm_state(q.size(), v, r_max, GammaMode::rate_normalized, r_min);
    s.q = std::move(q);
    return s;
}

}  // namespace

TEST_CASE("wmm_aux_step closed form") {
    SUBCASE("V above the backlog") {
        for (double g : wmm_aux_step(wmm_with_queues({40, 60}, 900))) CHECK(g == 32000.0);
    }
    SUBCASE("V equal to the backlog") {
        for (double g : wmm_aux_step(wmm_with_queues({450, 450}, 900))) CHECK(g == 0.0);
    }
    SUBCASE("V below the backlog") {
        for (double g : wmm_aux_step(wmm_with_queues({250, 250}, 10))) CHECK(g == 0.0);
    }
    SUBCASE("dimensionless mode caps at R_max / min r_min") {
        const std::vector<double> r_min{20000.0, 40000.0};
        const auto s = make_wmm_state(2, 900, 32000.0, GammaMode::dimensionless, r_min);
        for (double g : wmm_aux_step(s)) CHECK(g == doctest::Approx(1.6));
    }
}

TEST_CASE("wmm_weights") {
    const std::vector<double> r_min{20000.0, 20000.0};
    const auto w = wmm_weights(wmm_with_queues({2, 0}, 900), rates_of({{32000, 16000}, {32000, 8000}}), r_min);
    CHECK(w(0, 0) == doctest::Approx(3.2));
    CHECK(w(0, 1) == doctest::Approx(1.6));
    CHECK(w(1, 0) == 0.0);
    CHECK(w(1, 1) == 0.0);
    CHECK_THROWS_AS(wmm_weights(wmm_with_queues({2, 0}, 900), rates_of({{1, 1}, {1, 1}}),
                                std::vector<double>{20000.0, 0.0}),
                    InputError);
}

TEST_CASE("doubling Q doubles the WMM objective") {
    const std::vector<double> r_min{20000.0, 10000.0, 30000.0};
    const auto rates = rates_of({{32000, 16000}, {8000, 24000}, {4000, 28000}});
    const auto base = max_weight_assignment(wmm_weights(wmm_with_queues({1, 3, 2}, 900), rates, r_min));
    const auto doubled = max_weight_assignment(wmm_weights(wmm_with_queues({2, 6, 4}, 900), rates, r_min));
    CHECK(doubled.value == doctest::Approx(2.0 * base.value));
}

TEST_CASE("wmm_queue_update") {
    const std::vector<double> r_min{1000.0};
    SUBCASE("fixed point at zero") {
        CHECK(wmm_queue_update(wmm_with_queues({0}, 900), std::vector<double>{0.0}, std::vector<double>{0.0}, r_min)
                  .q[0] == 0.0);
    }
    SUBCASE("service and normalized arrival") {
        // r / r_min = 2, gamma / r_min = 1
        const auto s = wmm_queue_update(wmm_with_queues({5}, 900), std::vector<double>{2000.0},
                                        std::vector<double>{1000.0}, r_min);
        CHECK(s.q[0] == doctest::Approx(4.0));
    }
    SUBCASE("projection at zero") {
        const auto s = wmm_queue_update(wmm_with_queues({1}, 900), std::vector<double>{3000.0},
                                        std::vector<double>{0.0}, r_min);
        CHECK(s.q[0] == 0.0);
    }
}

TEST_CASE("pf_weights and pf_update") {
    auto s = make_pf_state(2, 0.1, 1.0);
    s.ema = {1.0, 1e12};
    const auto w = pf_weights(s, rates_of({{10, 20}, {10, 20}}));
    CHECK(w(0, 0) == 10.0);
    CHECK(w(1, 1) < 1e-10);

    s.ema = {100.0, 100.0};
    CHECK(pf_update(s, std::vector<double>{200.0, 100.0}, 0.1).ema[0] == doctest::Approx(110.0));
    CHECK(pf_update(s, std::vector<double>{200.0, 100.0}, 0.1).ema[1] == doctest::Approx(100.0));
    CHECK(pf_update(s, std::vector<double>{0.0, 55.0}, 1.0).ema == std::vector<double>{1.0, 55.0});
    CHECK_THROWS_AS(pf_update(s, std::vector<double>{1.0, 1.0}, 0.0), InputError);
}

TEST_CASE("equal PF averages give the unweighted sum-rate assignment") {
    auto s = make_pf_state(3, 0.01, 1.0);
    s.ema = {7.0, 7.0, 7.0};
    const auto rates = rates_of({{5, 1}, {4, 4}, {1, 5}});
    CHECK(max_weight_assignment(pf_weights(s, rates)).schedule.assign ==
          max_weight_assignment(rates.bits).schedule.assign);
}

TEST_CASE("esrm_weights") {
    auto s = make_esrm_state(1, 10.0);
    s.z = {2.0};
    const std::vector<double> r_min{20000.0};
    CHECK(esrm_weights(s, rates_of({{32000}}), r_min)(0, 0) == 344000.0);
    s.z = {0.0};
    CHECK(esrm_weights(s, rates_of({{32000}}), r_min)(0, 0) == 320000.0);
    auto zero_v = make_esrm_state(1, 0.0);
    zero_v.z = {1.0};
    CHECK(esrm_weights(zero_v, rates_of({{0}}), r_min)(0, 0) == -20000.0);
    CHECK(max_weight_assignment(esrm_weights(zero_v, rates_of({{0}}), r_min)).schedule.assigned_count() == 0);
}

TEST_CASE("esrm_queue_update") {
    const std::vector<double> r_min{20000.0};
    auto s = make_esrm_state(1, 10.0);
    CHECK(esrm_queue_update(s, std::vector<double>{20000.0}, r_min).z[0] == 0.0);
    CHECK(esrm_queue_update(s, std::vector<double>{0.0}, r_min).z[0] == 20000.0);
    s.z = {50000.0};
    CHECK(esrm_queue_update(s, std::vector<double>{32000.0}, r_min).z[0] == 38000.0);
}

TEST_CASE("ESRM with empty queues reduces to sum-rate maximization") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> mcs(0, 10);
    const auto table = default_mcs_table();
    const std::vector<double> r_min(4, 20000.0);
    const auto s = make_esrm_state(4, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        RateMatrix r{Matrix<double>(4, 3), Matrix<int>(4, 3)};
        for (std::size_t k = 0; k < 4; ++k) {
            for (std::size_t n = 0; n < 3; ++n) {
                const int l = mcs(rng);
                r.mcs_idx(k, n) = l;
                r.bits(k, n) = l == 0 ? 0.0 : bits_per_period(24, table[static_cast<std::size_t>(l - 1)], 200);
            }
        }
        const auto esrm = max_weight_assignment(esrm_weights(s, r, r_min));
        CHECK(assignment_value(esrm.schedule, r.bits) == brute_force_assignment(r.bits).value);
    }
}

TEST_CASE("queues stay non-negative under random updates") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> rate(0.0, 140000.0), rmin(1.0, 50000.0);
    const std::size_t k = 5;
    std::vector<double> r_min(k);
    for (auto& r : r_min) r = rmin(rng);
    auto wmm = make_wmm_state(k, 900.0, 136000.0, GammaMode::rate_normalized, r_min);
    auto esrm = make_esrm_state(k, 10.0);
    std::vector<double> realized(k);
    for (int t = 0; t < 5000; ++t) {
        for (auto& r : realized) r = rate(rng);
        const auto gamma = wmm_aux_step(wmm);
        wmm = wmm_queue_update(wmm, realized, gamma, r_min);
        esrm = esrm_queue_update(esrm, realized, r_min);
        for (std::size_t i = 0; i < k; ++i) {
            REQUIRE(wmm.q[i] >= 0.0);
            REQUIRE(esrm.z[i] >= 0.0);
        }
    }
}

TEST_CASE("decide picks the pattern with the largest optimal objective") {
    SimParams p;
    // pattern 0 has the narrower RUs, so pattern 1 should win for sum-rate-like weights
    p.patterns = {{2, 24}, {2, 102}};
    const auto net = make_network({3.0, 8.0, 14.0}, 20000.0, p.carrier_freq_ghz);
    const PolicyParams params;
    std::mt19937_64 rng(4);
    for (PolicyKind kind : {PolicyKind::pf, PolicyKind::esrm}) {
        auto policy = make_policy(kind, params, net.r_min(), max_ru_rate(p));
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<ChannelState> channels{draw_fading(rng, 3, 2), draw_fading(rng, 3, 2)};
            std::vector<double> oracle_value;
            for (std::size_t i = 0; i < 2; ++i) {
                const auto r = rate_matrix(p, net, channels[i], p.patterns[i]);
                oracle_value.push_back(brute_force_assignment(policy->weights(r)).value);
            }
            const auto d = decide(*policy, p, net, channels);
            const std::size_t expected = oracle_value[1] > oracle_value[0] ? 1 : 0;
            CHECK(d.pattern_index == expected);
            CHECK(d.objective == oracle_value[expected]);
            CHECK(validate_schedule(d.schedule).ok());
            policy->end_period(d.realized);
        }
    }
}

TEST_CASE("decide with a single pattern and all-zero weights") {
    SimParams p;
    const auto net = make_network({4.0, 9.0}, 20000.0, p.carrier_freq_ghz);
    auto wmm = make_policy(PolicyKind::wmm, PolicyParams{}, net.r_min(), max_ru_rate(p));
    Rng rng(8);
    std::vector<ChannelState> channels{draw_fading(rng, 2, 9)};
    // Q starts at zero, so every weight is zero.
    const auto d = decide(*wmm, p, net, channels);
    CHECK(d.pattern_index == 0);
    CHECK(d.objective == 0.0);
    CHECK(validate_schedule(d.schedule).ok());
}

TEST_CASE("policy factory and names") {
    CHECK(parse_policy_kind("wmm") == PolicyKind::wmm);
    CHECK(parse_policy_kind("esrm") == PolicyKind::esrm);
    CHECK_FALSE(parse_policy_kind("bogus").has_value());
    CHECK(to_string(PolicyKind::pf) == "pf");
    CHECK_THROWS_AS(make_policy(PolicyKind::wmm, PolicyParams{}, {}, 32000.0), InputError);
}
