#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofdma/matrix.hpp"

namespace ofdma {

/// Raised for malformed arguments: bad dimensions, non-binary schedules, etc.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A partition of the channel into `n_rus` equal RUs of `data_subcarriers` each.
struct RuPattern {
    int n_rus = 0;
    int data_subcarriers = 0;

    bool operator==(const RuPattern&) const = default;
};

/// One row of the MCS table. The code rate is kept as an exact fraction so
/// that per-period bit counts come out as exact integers.
struct McsEntry {
    int index = 0;
    int bits_per_symbol = 0;
    int code_rate_num = 0;
    int code_rate_den = 1;
    double min_rx_power_dbm = 0.0;

    double spectral_efficiency() const {
        return bits_per_symbol * static_cast<double>(code_rate_num) / code_rate_den;
    }
};

/// BPSK 1/2 through 256-QAM 5/6 with the 20 MHz sensitivity thresholds.
std::vector<McsEntry> default_mcs_table();

struct SimParams {
    double carrier_freq_ghz = 5.0;
    double d_max_m = 15.0;
    double d_min_m = 1.0;
    double p_total_dbm = 20.0;
    double t_ofdm_us = 16.0;
    double t_dl_ms = 3.2;
    std::vector<RuPattern> patterns{{9, 24}};
    std::vector<McsEntry> mcs_table = default_mcs_table();
    std::uint64_t master_seed = 1;

    /// T_DL / T_OFDM. Throws InputError if the ratio is not integral.
    int symbol_count() const;

    double p_total_mw() const;

    /// Checks every invariant; throws InputError naming the offending field.
    void validate() const;
};

struct StationConfig {
    int id = 0;
    double distance_m = 0.0;
    double r_min = 0.0;
    double path_loss_db = 0.0;
};

/// Linear small-scale power gains, K x N.
struct ChannelState {
    Matrix<double> gains;
};

inline constexpr int kNoMcs = 0;

/// Achievable bits per scheduling period for every (station, RU) pair.
struct RateMatrix {
    Matrix<double> bits;
    Matrix<int> mcs_idx;  // kNoMcs where the link cannot carry any MCS
};

/// Binary assignment, entry (k, n) = 1 iff RU n carries station k.
struct ScheduleMatrix {
    Matrix<std::uint8_t> assign;

    ScheduleMatrix() = default;
    ScheduleMatrix(std::size_t k, std::size_t n) : assign(k, n, 0) {}
    explicit ScheduleMatrix(Matrix<std::uint8_t> m) : assign(std::move(m)) {}

    std::size_t stations() const { return assign.rows(); }
    std::size_t rus() const { return assign.cols(); }
    std::size_t assigned_count() const;
};

struct DropResult {
    int network_id = 0;
    std::vector<double> per_station_throughput;
    double min_throughput = 0.0;
    std::vector<double> final_queues;
};

struct ScheduleCheck {
    enum class Violation { none, column, row };

    Violation violation = Violation::none;
    std::size_t index = 0;

    bool ok() const { return violation == Violation::none; }
    std::string describe() const;
};

/// Column sums are checked before row sums; the first violation found is
/// reported. Throws InputError on a non-binary entry.
ScheduleCheck validate_schedule(const ScheduleMatrix& m);

double station_rate(const ScheduleMatrix& m, const RateMatrix& r, std::size_t k);

/// r_k for every station.
std::vector<double> station_rates(const ScheduleMatrix& m, const RateMatrix& r);

}  // namespace ofdma
