#include "relaysim/config.hpp"

#include "relaysim/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace relaysim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(int line, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        bad(line, "invalid number for '" + key + "': '" + v + "'");
    }
}

long parse_long(const std::string& v, const std::string& key, int line) {
    long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) {
        bad(line, "invalid integer for '" + key + "': '" + v + "'");
    }
    return x;
}

// snr values may be written in dB: "10dB" -> 10.0 in linear scale
double parse_snr(const std::string& v, const std::string& key, int line) {
    std::string t = v;
    bool db = false;
    if (t.size() > 2) {
        std::string tail = t.substr(t.size() - 2);
        if ((tail[0] == 'd' || tail[0] == 'D') && (tail[1] == 'b' || tail[1] == 'B')) {
            db = true;
            t = trim(t.substr(0, t.size() - 2));
        }
    }
    double x = parse_double(t, key, line);
    double lin = db ? std::pow(10.0, x / 10.0) : x;
    if (!(lin > 0.0)) bad(line, "'" + key + "' must be positive");
    return lin;
}

} // namespace

FadingLaw parse_fading_law(const std::string& text) {
    std::string t = trim(text);
    auto param_of = [&t](std::size_t name_len) {
        std::string rest = t.substr(name_len);
        if (!rest.empty() && rest.front() == ':') {
            rest = rest.substr(1);
        } else if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
            rest = rest.substr(1, rest.size() - 2);
        } else if (!rest.empty()) {
            throw ConfigError("unrecognized fading law: '" + t + "'");
        }
        if (rest.empty()) throw ConfigError("fading law '" + t + "' needs a parameter");
        try {
            std::size_t used = 0;
            double x = std::stod(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("trailing");
            return x;
        } catch (const std::exception&) {
            throw ConfigError("invalid fading parameter in '" + t + "'");
        }
    };
    if (t == "rayleigh") return FadingLaw::make_rayleigh();
    if (t.rfind("rician", 0) == 0) {
        try {
            return FadingLaw::make_rician(param_of(6));
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
    }
    if (t.rfind("lognormal", 0) == 0) {
        try {
            return FadingLaw::make_lognormal(param_of(9));
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
    }
    throw ConfigError("unrecognized fading law: '" + t + "'");
}

std::vector<long> parse_sweep(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("sweep: empty entry in '" + text + "'");
        long x = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (ec != std::errc() || p != item.data() + item.size() || x < 1) {
            throw ConfigError("sweep: invalid entry '" + item + "'");
        }
        out.push_back(x);
    }
    if (out.empty()) throw ConfigError("sweep: no entries");
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i] <= out[i - 1]) throw ConfigError("sweep: entries must be increasing");
    }
    return out;
}

ExperimentConfig ExperimentConfig::defaults(const std::string& experiment) {
    ExperimentConfig c;
    c.experiment = experiment;
    if (experiment == "fig2") {
        c.snr_B = 100.0;
        c.sweep = {2, 4, 8, 16, 32, 64, 128, 256, 512};
        c.out = "fig2.csv";
    } else if (experiment == "fig4") {
        c.snr_B = 1000.0;
        c.sweep = {4, 8, 16, 32, 64, 128, 256};
        c.out = "fig4.csv";
    } else {
        throw ConfigError("unknown experiment preset: '" + experiment + "'");
    }
    return c;
}

RelayScenario ExperimentConfig::relay_scenario(long K) const {
    return {snr_b, snr_r, snr_B, K};
}

BroadcastScenario ExperimentConfig::broadcast_scenario(long users) const {
    return {snr_F_b, snr_F_r, snr_N_b, snr_N_r, snr_B,
            beta_B,  beta_F,  beta_N,  users,   users};
}

void ExperimentConfig::validate() const {
    if (experiment != "fig2" && experiment != "fig4") {
        throw ConfigError("experiment must be fig2 or fig4");
    }
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (threads < 1 || threads > 64) throw ConfigError("threads must be in [1, 64]");
    if (sweep.empty()) throw ConfigError("sweep must not be empty");
    for (double s : {snr_b, snr_r, snr_B, snr_F_b, snr_F_r, snr_N_b, snr_N_r}) {
        if (!(s > 0.0)) throw ConfigError("snr values must be positive");
    }
    if (experiment == "fig4") {
        if (!(beta_B > 0.0) || !(beta_F > 0.0) || !(beta_N > 0.0)) {
            throw ConfigError("bandwidth fractions must be positive");
        }
        if (std::fabs(beta_B + beta_F + beta_N - 1.0) > 1e-12) {
            throw ConfigError("bandwidth fractions must sum to 1");
        }
        for (long u : sweep) {
            if (u < 2) throw ConfigError("fig4 sweep entries must be >= 2");
        }
    }
    if (experiment == "fig2") {
        for (long k : sweep) {
            if (k < 2) throw ConfigError("fig2 sweep entries must be >= 2");
        }
    }
}

ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base) {
    std::stringstream ss(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        std::string line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) bad(lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) bad(lineno, "empty key");
        if (value.empty()) bad(lineno, "empty value for '" + key + "'");

        if (key == "experiment") {
            if (value != base.experiment) {
                bad(lineno, "config is for experiment '" + value + "' but '" +
                                base.experiment + "' was requested");
            }
        } else if (key == "law_h") {
            try {
                base.law_h = parse_fading_law(value);
            } catch (const ConfigError& e) {
                bad(lineno, e.what());
            }
        } else if (key == "law_g") {
            try {
                base.law_g = parse_fading_law(value);
            } catch (const ConfigError& e) {
                bad(lineno, e.what());
            }
        } else if (key == "snr_b") {
            base.snr_b = parse_snr(value, key, lineno);
        } else if (key == "snr_r") {
            base.snr_r = parse_snr(value, key, lineno);
        } else if (key == "snr_B") {
            base.snr_B = parse_snr(value, key, lineno);
        } else if (key == "snr_F_b") {
            base.snr_F_b = parse_snr(value, key, lineno);
        } else if (key == "snr_F_r") {
            base.snr_F_r = parse_snr(value, key, lineno);
        } else if (key == "snr_N_b") {
            base.snr_N_b = parse_snr(value, key, lineno);
        } else if (key == "snr_N_r") {
            base.snr_N_r = parse_snr(value, key, lineno);
        } else if (key == "beta_B") {
            base.beta_B = parse_double(value, key, lineno);
        } else if (key == "beta_F") {
            base.beta_F = parse_double(value, key, lineno);
        } else if (key == "beta_N") {
            base.beta_N = parse_double(value, key, lineno);
        } else if (key == "sweep") {
            try {
                base.sweep = parse_sweep(value);
            } catch (const ConfigError& e) {
                bad(lineno, e.what());
            }
        } else if (key == "trials") {
            base.trials = parse_long(value, key, lineno);
        } else if (key == "seed") {
            long long s = 0;
            auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
            if (ec != std::errc() || p != value.data() + value.size() || s < 0) {
                bad(lineno, "invalid seed '" + value + "'");
            }
            base.seed = static_cast<std::uint64_t>(s);
        } else if (key == "threads") {
            base.threads = static_cast<int>(parse_long(value, key, lineno));
        } else if (key == "out") {
            base.out = value;
        } else {
            bad(lineno, "unknown key '" + key + "'");
        }
    }
    return base;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), std::move(base));
}

} // namespace relaysim
