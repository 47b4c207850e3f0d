#pragma once

#include "relaysim/channel.hpp"
#include "relaysim/fading.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relaysim {

// one flat bag of experiment settings. defaults depend on the experiment
// preset; a config file overrides defaults, CLI flags override the file.
struct ExperimentConfig {
    std::string experiment; // "fig2" (routing) or "fig4" (broadcast)
    FadingLaw law_h = FadingLaw::make_rayleigh(); // base-station links
    FadingLaw law_g = FadingLaw::make_rayleigh(); // relay links
    // routing preset
    double snr_b = 1.0;
    double snr_r = 10.0;
    // broadcast preset
    double snr_F_b = 1.0;
    double snr_F_r = 100.0;
    double snr_N_b = 100.0;
    double snr_N_r = 1.0;
    double beta_B = 0.25;
    double beta_F = 0.25;
    double beta_N = 0.5;
    // shared
    double snr_B = 100.0;
    std::vector<long> sweep;
    long trials = 100000;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string out;

    static ExperimentConfig defaults(const std::string& experiment);

    RelayScenario relay_scenario(long K) const;
    BroadcastScenario broadcast_scenario(long users) const;
    void validate() const; // throws ConfigError
};

// key = value lines, # comments, values for snr_* keys may carry a dB
// suffix. unknown keys and malformed values throw ConfigError naming the
// offending line.
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base);
// same parser fed from a string (exposed for tests)
ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base);

FadingLaw parse_fading_law(const std::string& text); // rayleigh | rician(k) | lognormal(db)
std::vector<long> parse_sweep(const std::string& text);

} // namespace relaysim
