#include <doctest.h>

#include <random>

#include "ofdma/domain.hpp"

using namespace ofdma;

namespace {

ScheduleMatrix schedule(std::initializer_list<std::initializer_list<std::uint8_t>> rows) {
    return ScheduleMatrix(Matrix<std::uint8_t>(rows));
}

RateMatrix rates(std::initializer_list<std::initializer_list<double>> rows) {
    RateMatrix r{Matrix<double>(rows), {}};
    r.mcs_idx = Matrix<int>(r.bits.rows(), r.bits.cols(), 1);
    return r;
}

}  // namespace

TEST_CASE("validate_schedule accepts the identity assignment") {
    CHECK(validate_schedule(schedule({{1, 0}, {0, 1}})).ok());
}

TEST_CASE("validate_schedule reports a shared RU as a column violation") {
    const auto check = validate_schedule(schedule({{1, 0}, {1, 0}}));
    CHECK(check.violation == ScheduleCheck::Violation::column);
    CHECK(check.index == 0);
}

TEST_CASE("validate_schedule reports a station on two RUs as a row violation") {
    const auto check = validate_schedule(schedule({{1, 1}}));
    CHECK(check.violation == ScheduleCheck::Violation::row);
    CHECK(check.index == 0);
}

TEST_CASE("validate_schedule rejects non-binary entries") {
    CHECK_THROWS_AS(validate_schedule(schedule({{2, 0}})), InputError);
}

TEST_CASE("station_rate") {
    SUBCASE("single assigned RU") {
        CHECK(station_rate(schedule({{0, 1}}), rates({{1000, 32000}}), 0) == 32000);
    }
    SUBCASE("unassigned station") {
        CHECK(station_rate(schedule({{0, 0}}), rates({{1000, 32000}}), 0) == 0);
    }
    SUBCASE("picks the assigned column") {
        CHECK(station_rate(schedule({{0, 1}, {1, 0}}), rates({{5, 7}, {11, 13}}), 0) == 7);
    }
}

TEST_CASE("sum of station rates equals the inner product of assign and bits") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> bit(0, 1), dim(1, 6);
    std::uniform_real_distribution<double> val(0.0, 1e5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t k = dim(rng), n = dim(rng);
        ScheduleMatrix s(k, n);
        RateMatrix r{Matrix<double>(k, n), Matrix<int>(k, n, 1)};
        double inner = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                s.assign(i, j) = static_cast<std::uint8_t>(bit(rng));
                r.bits(i, j) = std::floor(val(rng));
                inner += s.assign(i, j) * r.bits(i, j);
            }
        }
        double sum = 0.0;
        for (double v : station_rates(s, r)) sum += v;
        CHECK(sum == inner);
    }
}

TEST_CASE("SimParams defaults are valid with 200 symbols per period") {
    SimParams p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.symbol_count() == 200);
    CHECK(p.mcs_table.front().spectral_efficiency() == doctest::Approx(0.5));
    CHECK(p.mcs_table.back().spectral_efficiency() == doctest::Approx(20.0 / 3.0));
}

TEST_CASE("SimParams validation") {
    SimParams p;
    SUBCASE("fractional symbol count") {
        p.t_dl_ms = 3.21;
        CHECK_THROWS_AS(p.validate(), InputError);
    }
    SUBCASE("d_min below 1 m") {
        p.d_min_m = 0.5;
        CHECK_THROWS_AS(p.validate(), InputError);
    }
    SUBCASE("d_min not below d_max") {
        p.d_min_m = 15.0;
        CHECK_THROWS_AS(p.validate(), InputError);
    }
    SUBCASE("no patterns") {
        p.patterns.clear();
        CHECK_THROWS_AS(p.validate(), InputError);
    }
    SUBCASE("unsorted MCS thresholds") {
        std::swap(p.mcs_table[2].min_rx_power_dbm, p.mcs_table[3].min_rx_power_dbm);
        CHECK_THROWS_AS(p.validate(), InputError);
    }
}
