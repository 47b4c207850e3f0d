#include "relaysim/errors.hpp"
#include "relaysim/experiments.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace relaysim;

struct CommonOpts {
    std::string config;
    std::uint64_t seed = 0;
    long trials = 0;
    std::string out;
    int threads = 0;
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--config", o.config, "config file (key = value, # comments)");
    sub->add_option("--seed", o.seed, "rng seed (overrides config)");
    sub->add_option("--trials", o.trials, "monte carlo trials per sweep point (overrides config)");
    sub->add_option("--out", o.out, "output csv path (overrides config)");
    sub->add_option("--threads", o.threads, "worker threads, 1-64 (overrides config)");
}

void run_experiment(const std::string& name, CLI::App* sub, const CommonOpts& o) {
    ExperimentConfig cfg = ExperimentConfig::defaults(name);
    if (!o.config.empty()) cfg = load_config_file(o.config, cfg);
    if (sub->count("--seed") > 0) cfg.seed = o.seed;
    if (sub->count("--trials") > 0) cfg.trials = o.trials;
    if (sub->count("--out") > 0) cfg.out = o.out;
    if (sub->count("--threads") > 0) cfg.threads = o.threads;
    cfg.validate();

    std::string csv;
    std::size_t rows = 0;
    if (name == "fig2") {
        auto data = run_fig2(cfg);
        csv = fig2_csv(data);
        rows = data.size();
    } else {
        auto data = run_fig4(cfg);
        csv = fig4_csv(data);
        rows = data.size();
    }
    write_text_file(cfg.out, csv);
    std::cout << "wrote " << cfg.out << " (" << rows << " sweep rows, " << cfg.trials
              << " trials each, seed " << cfg.seed << ")\n";
}

std::string sniff_experiment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (std::size_t hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        if (key == "experiment") {
            std::string value = line.substr(eq + 1);
            value.erase(0, value.find_first_not_of(" \t"));
            value.erase(value.find_last_not_of(" \t\r") + 1);
            return value;
        }
    }
    return "fig2";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"opportunistic multiuser relay scheduling: simulation and closed forms"};
    app.require_subcommand(1);

    CommonOpts fig2_opts, fig4_opts;
    CLI::App* fig2 = app.add_subcommand(
        "fig2", "routing-selection probability vs user count (csv sweep)");
    add_common(fig2, fig2_opts);
    fig2->callback([&] { run_experiment("fig2", fig2, fig2_opts); });

    CLI::App* fig4 = app.add_subcommand(
        "fig4", "broadcast average spectral efficiency vs user count (csv sweep)");
    add_common(fig4, fig4_opts);
    fig4->callback([&] { run_experiment("fig4", fig4, fig4_opts); });

    std::string law_text = "rayleigh";
    double snr = 10.0;
    double snr_db = 0.0;
    long M = 100;
    CLI::App* constants = app.add_subcommand(
        "constants", "extreme-value normalization constants for one law");
    constants->add_option("--law", law_text, "rayleigh | rician(k) | lognormal(db)");
    constants->add_option("--snr", snr, "link snr, linear scale (default 10)");
    CLI::Option* snr_db_opt =
        constants->add_option("--snr-db", snr_db, "link snr in dB (overrides --snr)");
    constants->add_option("--M", M, "number of contenders (default 100)");
    constants->callback([&] {
        double s = snr_db_opt->count() > 0 ? std::pow(10.0, snr_db / 10.0) : snr;
        std::cout << constants_report(parse_fading_law(law_text), s, M);
    });

    std::string validate_config;
    CLI::App* validate = app.add_subcommand(
        "validate", "parse a config and run the light-tail diagnostics");
    validate->add_option("--config", validate_config, "config file to check")->required();
    validate->callback([&] {
        ExperimentConfig cfg = load_config_file(
            validate_config, ExperimentConfig::defaults(sniff_experiment(validate_config)));
        std::cout << validate_report(cfg);
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are config errors
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
