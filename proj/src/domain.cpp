#include "ofdma/domain.hpp"

#include <cmath>
#include <string>

namespace ofdma {

std::vector<McsEntry> default_mcs_table() {
    return {
        {1, 1, 1, 2, -82.0},   // BPSK 1/2
        {2, 2, 1, 2, -79.0},   // QPSK 1/2
        {3, 2, 3, 4, -77.0},   // QPSK 3/4
        {4, 4, 1, 2, -74.0},   // 16-QAM 1/2
        {5, 4, 3, 4, -70.0},   // 16-QAM 3/4
        {6, 6, 2, 3, -66.0},   // 64-QAM 2/3
        {7, 6, 3, 4, -65.0},   // 64-QAM 3/4
        {8, 6, 5, 6, -64.0},   // 64-QAM 5/6
        {9, 8, 3, 4, -59.0},   // 256-QAM 3/4
        {10, 8, 5, 6, -57.0},  // 256-QAM 5/6
    };
}

int SimParams::symbol_count() const {
    if (!(t_ofdm_us > 0.0) || !(t_dl_ms > 0.0)) {
        throw InputError("t_ofdm_us and t_dl_ms must be positive");
    }
    const double ratio = t_dl_ms * 1000.0 / t_ofdm_us;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded) {
        throw InputError("t_dl_ms must be an integer multiple of t_ofdm_us");
    }
    return static_cast<int>(rounded);
}

double SimParams::p_total_mw() const { return std::pow(10.0, p_total_dbm / 10.0); }

void SimParams::validate() const {
    if (!(carrier_freq_ghz > 0.0)) throw InputError("carrier_freq_ghz must be positive");
    if (!(d_min_m >= 1.0)) throw InputError("d_min_m must be at least 1 m");
    if (!(d_min_m < d_max_m)) throw InputError("d_min_m must be below d_max_m");
    symbol_count();
    if (patterns.empty()) throw InputError("patterns must be non-empty");
    for (const auto& p : patterns) {
        if (p.n_rus < 1 || p.data_subcarriers < 1) {
            throw InputError("patterns: n_rus and data_subcarriers must be >= 1");
        }
    }
    if (mcs_table.empty()) throw InputError("mcs_table must be non-empty");
    for (std::size_t i = 0; i < mcs_table.size(); ++i) {
        const auto& e = mcs_table[i];
        if (e.index != static_cast<int>(i) + 1 || e.bits_per_symbol < 1 || e.code_rate_num < 1 ||
            e.code_rate_den < 1) {
            throw InputError("mcs_table: malformed entry " + std::to_string(i + 1));
        }
        if (i > 0) {
            const auto& prev = mcs_table[i - 1];
            if (!(e.min_rx_power_dbm > prev.min_rx_power_dbm) ||
                !(e.spectral_efficiency() > prev.spectral_efficiency())) {
                throw InputError("mcs_table: thresholds and rates must strictly increase");
            }
        }
    }
}

std::size_t ScheduleMatrix::assigned_count() const {
    std::size_t count = 0;
    for (auto v : assign.values()) count += v;
    return count;
}

std::string ScheduleCheck::describe() const {
    switch (violation) {
        case Violation::none:
            return "ok";
        case Violation::column:
            return "RU " + std::to_string(index) + " assigned to more than one station";
        case Violation::row:
            return "station " + std::to_string(index) + " assigned more than one RU";
    }
    return "unknown";
}

ScheduleCheck validate_schedule(const ScheduleMatrix& m) {
    const auto& a = m.assign;
    for (auto v : a.values()) {
        if (v > 1) throw InputError("schedule entries must be 0 or 1");
    }
    for (std::size_t n = 0; n < a.cols(); ++n) {
        int sum = 0;
        for (std::size_t k = 0; k < a.rows(); ++k) sum += a(k, n);
        if (sum > 1) return {ScheduleCheck::Violation::column, n};
    }
    for (std::size_t k = 0; k < a.rows(); ++k) {
        int sum = 0;
        for (auto v : a.row(k)) sum += v;
        if (sum > 1) return {ScheduleCheck::Violation::row, k};
    }
    return {};
}

double station_rate(const ScheduleMatrix& m, const RateMatrix& r, std::size_t k) {
    const auto s = m.assign.row(k);
    const auto bits = r.bits.row(k);
    double total = 0.0;
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (s[n]) total += bits[n];
    }
    return total;
}

std::vector<double> station_rates(const ScheduleMatrix& m, const RateMatrix& r) {
    if (m.stations() != r.bits.rows() || m.rus() != r.bits.cols()) {
        throw InputError("schedule and rate matrix dimensions differ");
    }
    std::vector<double> out(m.stations());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = station_rate(m, r, k);
    return out;
}

}  // namespace ofdma
