// Command-line driver: runs a campaign (or a station-count sweep) and writes
// the CSV/JSON result bundle.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "ofdma/config.hpp"
#include "ofdma/output.hpp"
#include "ofdma/sim.hpp"

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ',';
        out += p;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Downlink OFDMA scheduling simulator (WMM, PF, ESRM)"};

    std::string config_path;
    std::string policy, pattern_mode, rmin, periods, networks, seed, v, v_esr, beta, out, workers;
    std::vector<std::string> stations;
    bool print_config = false;

    app.add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
    app.add_option("--policy", policy, "wmm | pf | esrm");
    app.add_option("--pattern-mode", pattern_mode, "single | multi");
    app.add_option("--stations", stations, "station count; repeat for a sweep")->take_all();
    app.add_option("--rmin", rmin, "minimum throughput, bits per scheduling period");
    app.add_option("--periods", periods, "fading realizations per network");
    app.add_option("--networks", networks, "network realizations");
    app.add_option("--seed", seed, "master RNG seed");
    app.add_option("--v", v, "WMM control parameter V");
    app.add_option("--v-esr", v_esr, "ESRM control parameter V_ESR");
    app.add_option("--beta", beta, "PF moving-average factor");
    app.add_option("--workers", workers, "worker threads (0 = all cores)");
    app.add_option("--out", out, "output directory");
    app.add_flag("--print-config", print_config, "print the resolved configuration and exit");

    CLI11_PARSE(app, argc, argv);

    std::vector<ofdma::Setting> overrides;
    auto flag = [&overrides](const char* key, const std::string& value) {
        if (!value.empty()) overrides.emplace_back(key, value);
    };
    flag("policy", policy);
    flag("pattern_mode", pattern_mode);
    flag("stations", join(stations));
    flag("r_min", rmin);
    flag("periods", periods);
    flag("networks", networks);
    flag("seed", seed);
    flag("v", v);
    flag("v_esr", v_esr);
    flag("beta", beta);
    flag("workers", workers);
    flag("out", out);

    try {
        std::optional<std::filesystem::path> file;
        if (!config_path.empty()) file = config_path;
        const ofdma::RunOptions options = ofdma::parse_config(file, overrides);

        if (print_config) {
            fmt::print("{}", ofdma::describe_config(options.campaign));
            return 0;
        }

        if (options.stations.size() > 1) {
            const auto points = ofdma::scaling_sweep(options.campaign, options.stations, options.workers);
            const auto path = ofdma::write_sweep(points, options.out_dir);
            for (const auto& p : points) {
                fmt::print("K={:<3} mean min throughput {:.1f} bits/period\n", p.k_count,
                           p.mean_min_throughput);
            }
            fmt::print("wrote {}\n", path.string());
        } else {
            const auto result = ofdma::run_campaign(options.campaign, options.workers);
            const auto bundle = ofdma::write_results(result, options.out_dir);
            const auto mins = ofdma::min_throughputs(result);
            fmt::print("{} ({}): median min throughput {:.1f} bits/period, {:.0f}% of networks below r_min\n",
                       ofdma::to_string(options.campaign.policy), ofdma::to_string(options.campaign.pattern_mode),
                       ofdma::median(mins), 100.0 * ofdma::fraction_below(mins, options.campaign.r_min));
            fmt::print("wrote {}\n", bundle.summary_json.parent_path().string());
        }
    } catch (const ofdma::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
