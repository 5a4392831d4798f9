#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ofdma/sim.hpp"

namespace ofdma {

/// A bad configuration value. `field()` names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Everything a command-line run needs.
struct RunOptions {
    CampaignConfig campaign;
    std::vector<int> stations{12};  // more than one entry requests a sweep
    std::filesystem::path out_dir = "results";
    unsigned workers = 0;
};

using Setting = std::pair<std::string, std::string>;

/// Reads a flat `key = value` document. Blank lines and `#` comments are
/// ignored. Throws ConfigError on malformed lines or unreadable files.
std::vector<Setting> read_config_file(const std::filesystem::path& path);

/// Applies one setting. Keys mirror CampaignConfig field names; see README.
void apply_setting(RunOptions& options, std::string_view key, std::string_view value);

/// Defaults, then file settings, then overrides (later wins).
RunOptions parse_config(const std::optional<std::filesystem::path>& file,
                        const std::vector<Setting>& overrides);

/// "9x24,4x48" <-> patterns.
std::vector<RuPattern> parse_pattern_list(std::string_view text);
std::string format_pattern_list(const std::vector<RuPattern>& patterns);

}  // namespace ofdma
