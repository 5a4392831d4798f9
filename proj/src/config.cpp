#include "ofdma/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>

namespace ofdma {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    text = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError(std::string(key), "cannot parse '" + std::string(text) + "' as a number");
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value)) throw ConfigError(std::string(key), "must be finite");
    }
    return value;
}

double positive_double(std::string_view key, std::string_view text) {
    const auto v = parse_number<double>(key, text);
    if (!(v > 0.0)) throw ConfigError(std::string(key), "must be positive");
    return v;
}

int positive_int(std::string_view key, std::string_view text) {
    const auto v = parse_number<long long>(key, text);
    if (v <= 0 || v > 1'000'000'000) throw ConfigError(std::string(key), "must be a positive integer");
    return static_cast<int>(v);
}

bool parse_bool(std::string_view key, std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError(std::string(key), "expected true or false");
}

using Applier = std::function<void(RunOptions&, std::string_view key, std::string_view value)>;

const std::map<std::string, Applier, std::less<>>& appliers() {
    static const std::map<std::string, Applier, std::less<>> table = {
        {"policy",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             const auto kind = parse_policy_kind(trim(v));
             if (!kind) throw ConfigError(std::string(k), "unknown policy '" + std::string(v) + "'");
             o.campaign.policy = *kind;
         }},
        {"pattern_mode",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             const auto mode = parse_pattern_mode(trim(v));
             if (!mode) throw ConfigError(std::string(k), "expected single or multi");
             o.campaign.pattern_mode = *mode;
         }},
        {"stations",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             std::vector<int> counts;
             for (auto part : split(v, ',')) counts.push_back(positive_int(k, part));
             o.stations = counts;
             o.campaign.k_count = counts.front();
         }},
        {"r_min",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.r_min = positive_double(k, v); }},
        {"periods",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.periods = positive_int(k, v); }},
        {"networks",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.networks = positive_int(k, v); }},
        {"seed",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             o.campaign.sim.master_seed = parse_number<std::uint64_t>(k, v);
         }},
        {"v",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.policy_params.v = positive_double(k, v); }},
        {"v_esr",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             o.campaign.policy_params.v_esr = positive_double(k, v);
         }},
        {"beta",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             const double b = positive_double(k, v);
             if (b > 1.0) throw ConfigError(std::string(k), "must lie in (0, 1]");
             o.campaign.policy_params.beta = b;
         }},
        {"pf_floor",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             o.campaign.policy_params.pf_floor = positive_double(k, v);
         }},
        {"gamma_mode",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             const auto mode = parse_gamma_mode(trim(v));
             if (!mode) throw ConfigError(std::string(k), "expected rate_normalized or dimensionless");
             o.campaign.policy_params.gamma_mode = *mode;
         }},
        {"carrier_freq_ghz",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             o.campaign.sim.carrier_freq_ghz = positive_double(k, v);
         }},
        {"d_max_m",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.sim.d_max_m = positive_double(k, v); }},
        {"d_min_m",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.sim.d_min_m = positive_double(k, v); }},
        {"p_total_dbm",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             o.campaign.sim.p_total_dbm = parse_number<double>(k, v);
         }},
        {"t_ofdm_us",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.sim.t_ofdm_us = positive_double(k, v); }},
        {"t_dl_ms",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.sim.t_dl_ms = positive_double(k, v); }},
        {"single_patterns",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             try {
                 o.campaign.single_patterns = parse_pattern_list(v);
             } catch (const InputError& e) {
                 throw ConfigError(std::string(k), e.what());
             }
         }},
        {"multi_patterns",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             try {
                 o.campaign.multi_patterns = parse_pattern_list(v);
             } catch (const InputError& e) {
                 throw ConfigError(std::string(k), e.what());
             }
         }},
        {"check_schedules",
         [](RunOptions& o, std::string_view k, std::string_view v) { o.campaign.check_schedules = parse_bool(k, v); }},
        {"workers",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             const auto w = parse_number<long long>(k, v);
             if (w < 0 || w > 4096) throw ConfigError(std::string(k), "must be between 0 and 4096");
             o.workers = static_cast<unsigned>(w);
         }},
        {"out",
         [](RunOptions& o, std::string_view k, std::string_view v) {
             if (trim(v).empty()) throw ConfigError(std::string(k), "must not be empty");
             o.out_dir = std::string(trim(v));
         }},
    };
    return table;
}

}  // namespace

std::vector<RuPattern> parse_pattern_list(std::string_view text) {
    std::vector<RuPattern> out;
    for (auto item : split(text, ',')) {
        const auto x = item.find('x');
        if (x == std::string_view::npos) throw InputError("pattern '" + std::string(item) + "' is not NxS");
        RuPattern p;
        const auto n = trim(item.substr(0, x));
        const auto s = trim(item.substr(x + 1));
        const auto r1 = std::from_chars(n.data(), n.data() + n.size(), p.n_rus);
        const auto r2 = std::from_chars(s.data(), s.data() + s.size(), p.data_subcarriers);
        if (r1.ec != std::errc{} || r1.ptr != n.data() + n.size() || r2.ec != std::errc{} ||
            r2.ptr != s.data() + s.size() || p.n_rus < 1 || p.data_subcarriers < 1) {
            throw InputError("pattern '" + std::string(item) + "' is not NxS with positive N, S");
        }
        out.push_back(p);
    }
    return out;
}

std::string format_pattern_list(const std::vector<RuPattern>& patterns) {
    std::string out;
    for (const auto& p : patterns) {
        if (!out.empty()) out += ',';
        out += std::to_string(p.n_rus) + 'x' + std::to_string(p.data_subcarriers);
    }
    return out;
}

std::vector<Setting> read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open " + path.string());
    std::vector<Setting> settings;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos || trim(view.substr(0, eq)).empty()) {
            throw ConfigError("config", path.string() + ":" + std::to_string(lineno) +
                                            ": expected key = value");
        }
        settings.emplace_back(std::string(trim(view.substr(0, eq))), std::string(trim(view.substr(eq + 1))));
    }
    return settings;
}

void apply_setting(RunOptions& options, std::string_view key, std::string_view value) {
    const auto& table = appliers();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError(std::string(key), "unknown configuration key");
    it->second(options, key, value);
}

RunOptions parse_config(const std::optional<std::filesystem::path>& file,
                        const std::vector<Setting>& overrides) {
    RunOptions options;
    if (file) {
        for (const auto& [k, v] : read_config_file(*file)) apply_setting(options, k, v);
    }
    for (const auto& [k, v] : overrides) apply_setting(options, k, v);
    try {
        options.campaign.validate();
    } catch (const InputError& e) {
        throw ConfigError("config", e.what());
    }
    return options;
}

}  // namespace ofdma
