#include "ofdma/output.hpp"

#include <fmt/format.h>

#include <fstream>
#include <json.hpp>

#include "ofdma/config.hpp"

namespace ofdma {

namespace {

constexpr const char* kSummarySchema = "ofdma-campaign-summary/1";

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError("cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw OutputError("write failed for " + path.string());
}

void make_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw OutputError("cannot create " + dir.string() + ": " + ec.message());
}

nlohmann::ordered_json config_json(const CampaignConfig& c) {
    nlohmann::ordered_json j;
    j["policy"] = std::string(to_string(c.policy));
    j["pattern_mode"] = std::string(to_string(c.pattern_mode));
    j["stations"] = c.k_count;
    j["r_min"] = c.r_min;
    j["periods"] = c.periods;
    j["networks"] = c.networks;
    j["seed"] = c.sim.master_seed;
    j["v"] = c.policy_params.v;
    j["v_esr"] = c.policy_params.v_esr;
    j["beta"] = c.policy_params.beta;
    j["pf_floor"] = c.policy_params.pf_floor;
    j["gamma_mode"] = std::string(to_string(c.policy_params.gamma_mode));
    j["carrier_freq_ghz"] = c.sim.carrier_freq_ghz;
    j["d_max_m"] = c.sim.d_max_m;
    j["d_min_m"] = c.sim.d_min_m;
    j["p_total_dbm"] = c.sim.p_total_dbm;
    j["t_ofdm_us"] = c.sim.t_ofdm_us;
    j["t_dl_ms"] = c.sim.t_dl_ms;
    j["single_patterns"] = format_pattern_list(c.single_patterns);
    j["multi_patterns"] = format_pattern_list(c.multi_patterns);
    return j;
}

}  // namespace

std::string describe_config(const CampaignConfig& config) {
    const auto j = config_json(config);
    std::string out;
    for (const auto& [key, value] : j.items()) {
        out += key + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return out;
}

OutputBundle write_results(const CampaignResult& result, const std::filesystem::path& dir) {
    make_dir(dir);
    OutputBundle bundle{dir / "drops.csv", dir / "summary.json", dir / "cdf.csv"};

    {
        auto out = open_for_write(bundle.drops_csv);
        out << "network_id,station_id,throughput_bits_per_period\n";
        for (const auto& d : result.drops) {
            for (std::size_t k = 0; k < d.per_station_throughput.size(); ++k) {
                out << fmt::format("{},{},{}\n", d.network_id, k, d.per_station_throughput[k]);
            }
        }
        finish(out, bundle.drops_csv);
    }

    const auto mins = min_throughputs(result);
    const double r_min = result.config.r_min;
    {
        nlohmann::ordered_json j;
        j["schema"] = kSummarySchema;
        j["unit"] = "bits_per_period";
        j["config"] = config_json(result.config);
        j["min_throughputs"] = mins;
        j["mean_min_throughput"] = mean(mins);
        j["median_min_throughput"] = median(mins);
        j["r_min"] = r_min;
        j["fraction_below_r_min"] = fraction_below(mins, r_min);
        auto out = open_for_write(bundle.summary_json);
        out << j.dump(2) << '\n';
        finish(out, bundle.summary_json);
    }

    {
        auto out = open_for_write(bundle.cdf_csv);
        out << "x_bits_per_period,cdf\n";
        for (const auto& p : empirical_cdf(mins)) out << fmt::format("{},{}\n", p.x, p.f);
        finish(out, bundle.cdf_csv);
    }
    return bundle;
}

std::filesystem::path write_sweep(const std::vector<SweepPoint>& points,
                                  const std::filesystem::path& dir) {
    make_dir(dir);
    const auto path = dir / "sweep.csv";
    auto out = open_for_write(path);
    out << "stations,mean_min_throughput_bits_per_period\n";
    for (const auto& p : points) {
        write_results(p.campaign, dir / fmt::format("k{}", p.k_count));
        out << fmt::format("{},{}\n", p.k_count, p.mean_min_throughput);
    }
    finish(out, path);
    return path;
}

}  // namespace ofdma
