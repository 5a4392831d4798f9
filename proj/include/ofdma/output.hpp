#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofdma/sim.hpp"

namespace ofdma {

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputBundle {
    std::filesystem::path drops_csv;
    std::filesystem::path summary_json;
    std::filesystem::path cdf_csv;
};

/// Writes drops.csv, summary.json and cdf.csv into `dir` (created if needed).
/// All throughputs are in bits per scheduling period. Throws OutputError.
OutputBundle write_results(const CampaignResult& result, const std::filesystem::path& dir);

/// Writes one bundle per station count under dir/k<K>/ plus dir/sweep.csv.
std::filesystem::path write_sweep(const std::vector<SweepPoint>& points,
                                  const std::filesystem::path& dir);

/// Text form of a campaign configuration, suitable for read_config_file.
std::string describe_config(const CampaignConfig& config);

}  // namespace ofdma
