// Acceptance gate: nine numbered criteria, one PASS/FAIL line each.
// Run all with no arguments, or a single one with --criterion N.
// Exit code is nonzero when any executed criterion fails.

#include "relaysim/analytic.hpp"
#include "relaysim/experiments.hpp"
#include "relaysim/kernels.hpp"
#include "relaysim/montecarlo.hpp"
#include "relaysim/quadrature.hpp"
#include "relaysim/special_functions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <string>
#include <vector>

using namespace relaysim;

namespace {

// every stochastic criterion keys off this one seed; it is pinned so the
// gate is a deterministic regression check rather than a coin flip
constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

const FadingLaw kRayleigh = FadingLaw::make_rayleigh();

RelayScenario fig2_sc(long K) {
    RelayScenario sc;
    sc.snr_b = 1.0;
    sc.snr_r = 10.0;
    sc.snr_B = 100.0;
    sc.K = K;
    return sc;
}

// --- criterion 1: closed-form constants for the exponential law ------------

Outcome criterion1() {
    auto p = kRayleigh.parent();
    double worst_b = 0.0, worst_a = 0.0;
    for (long M : {2L, 10L, 100L, 10000L, 1000000L}) {
        auto nc = normalizing_constants(p, M);
        worst_b = std::max(worst_b, std::abs(nc.b - std::log(double(M))));
        worst_a = std::max(worst_a, std::abs(nc.a - 1.0));
    }
    Outcome o;
    o.pass = worst_b <= 1e-10 && worst_a <= 1e-10;
    o.detail = fmt("max|b-lnM|=%.3g max|a-1|=%.3g (tol 1e-10)", worst_b, worst_a);
    return o;
}

// --- criterion 2: hazard-ratio limit across fading laws --------------------

Outcome criterion2() {
    auto exp_parent = kRayleigh.parent();
    std::vector<double> grid;
    for (double sf : {1e-2, 1e-4, 1e-6, 1e-8}) grid.push_back(upper_quantile(exp_parent, sf));
    double exp_dev = 0.0;
    for (double r : check_type1(exp_parent, grid).ratios) {
        exp_dev = std::max(exp_dev, std::abs(r + 1.0));
    }

    auto dev_at_1e8 = [](const ParentDistribution& p) {
        std::vector<double> g = {upper_quantile(p, 1e-8)};
        return std::abs(check_type1(p, g).ratios.front() + 1.0);
    };
    double rice_dev = dev_at_1e8(FadingLaw::make_rician(3.0).parent());
    double logn_dev = dev_at_1e8(FadingLaw::make_lognormal(1.0).parent());

    Outcome o;
    o.pass = exp_dev <= 1e-12 && rice_dev <= 1e-3 && logn_dev <= 1e-3;
    o.detail = fmt("exponential dev=%.3g (tol 1e-12); rician(3) dev=%.3g, "
                   "lognormal(1dB) dev=%.3g (tol 1e-3 at the 1-1e-8 quantile)",
                   exp_dev, rice_dev, logn_dev);
    return o;
}

// --- criterion 3: empirical maxima converge to the double exponential ------

double ks_distance(long M, std::uint32_t tag) {
    const long reps = 100000;
    auto nc = normalizing_constants(kRayleigh.parent(), M);
    UniformStream stream(kSeed, 0, tag);
    std::vector<double> buf(static_cast<std::size_t>(M));
    std::vector<double> stats;
    stats.reserve(reps);
    for (long r = 0; r < reps; ++r) {
        kRayleigh.sample_powers(buf, stream);
        stats.push_back((kernels::max_value(buf) - nc.b) / nc.a);
    }
    std::sort(stats.begin(), stats.end());
    double sup = 0.0;
    const double n = double(reps);
    for (long i = 0; i < reps; ++i) {
        double F = gumbel_cdf(stats[static_cast<std::size_t>(i)]);
        sup = std::max(sup, std::max(std::abs(F - i / n), std::abs((i + 1) / n - F)));
    }
    return sup;
}

Outcome criterion3() {
    double ks1000 = ks_distance(1000, row_tag(stream_tag::test_a, 0));
    double ks100 = ks_distance(100, row_tag(stream_tag::test_a, 1));
    Outcome o;
    o.pass = ks1000 <= 0.015 && ks1000 < ks100;
    o.detail = fmt("KS(M=1000)=%.5f (tol 0.015), KS(M=100)=%.5f, improvement=%s", ks1000,
                   ks100, ks1000 < ks100 ? "yes" : "no");
    return o;
}

// --- criterion 4: large-K prediction vs simulation on the routing sweep ----

Outcome criterion4() {
    const long trials = 100000;
    const std::vector<long> ks = {64, 128, 256, 512};
    std::vector<double> gaps;
    std::string per_k;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        auto sc = fig2_sc(ks[i]);
        double pred = direct_wins_asymptotic(sc, kRayleigh, kRayleigh).p_direct_wins;
        auto est = estimate_direct_wins(sc, kRayleigh, kRayleigh, trials, kSeed, 1,
                                        row_tag(stream_tag::test_b, std::uint32_t(i)));
        gaps.push_back(std::abs(pred - est.mean));
        per_k += fmt(" K=%ld:%.4f", ks[i], gaps.back());
    }
    bool all_small = std::all_of(gaps.begin(), gaps.end(), [](double g) { return g <= 0.05; });
    double lo_pair = std::max(gaps[0], gaps[1]);
    double hi_pair = std::max(gaps[2], gaps[3]);
    bool improves = hi_pair <= lo_pair;
    Outcome o;
    o.pass = all_small && improves;
    o.detail = fmt("|prediction-simulation| gaps%s (tol 0.05); max gap K in {256,512} = %.4f "
                   "vs K in {64,128} = %.4f (must not exceed)",
                   per_k.c_str(), hi_pair, lo_pair);
    return o;
}

// --- criterion 5: sharpness against the finite-K quadrature oracle ---------

Outcome criterion5() {
    auto sc256 = fig2_sc(256);
    double exact256 = exact_direct_wins(sc256, kRayleigh, kRayleigh);
    double pred256 = direct_wins_asymptotic(sc256, kRayleigh, kRayleigh).p_direct_wins;
    double gap = std::abs(pred256 - exact256);

    auto sc8 = fig2_sc(8);
    double exact8 = exact_direct_wins(sc8, kRayleigh, kRayleigh);
    auto est = estimate_direct_wins(sc8, kRayleigh, kRayleigh, 1000000, kSeed, 1,
                                    row_tag(stream_tag::test_b, 100));
    double sigma = est.halfwidth95 / 1.96;
    double mc_gap = std::abs(est.mean - exact8);

    Outcome o;
    o.pass = gap <= 0.02 && mc_gap <= 3.0 * sigma;
    o.detail = fmt("|prediction-exact|@K=256 = %.4f (tol 0.02); "
                   "|simulation-exact|@K=8 = %.3g vs 3*sigma = %.3g",
                   gap, mc_gap, 3.0 * sigma);
    return o;
}

// --- criterion 6: broadcast sweep reproduction ------------------------------

Outcome criterion6() {
    auto cfg = ExperimentConfig::defaults("fig4");
    cfg.trials = 100000;
    cfg.seed = kSeed;
    auto rows = run_fig4(cfg);

    double worst_rel = 0.0;
    for (const auto& r : rows) {
        if (r.users != 64 && r.users != 256) continue;
        worst_rel = std::max(worst_rel, std::abs(r.orthogonal_asymptotic - r.orthogonal.mean) /
                                            r.orthogonal.mean);
        worst_rel = std::max(worst_rel, std::abs(r.simultaneous_asymptotic - r.simultaneous.mean) /
                                            r.simultaneous.mean);
    }
    bool increasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        increasing = increasing && rows[i].orthogonal.mean > rows[i - 1].orthogonal.mean &&
                     rows[i].simultaneous.mean > rows[i - 1].simultaneous.mean;
    }
    bool disjoint = true;
    for (const auto& r : rows) {
        disjoint = disjoint && (r.orthogonal.mean + r.orthogonal.halfwidth95 <
                                r.simultaneous.mean - r.simultaneous.halfwidth95);
    }
    Outcome o;
    o.pass = worst_rel <= 0.03 && increasing && disjoint;
    o.detail = fmt("max rel gap @UV in {64,256} = %.4f (tol 0.03); empirical curves "
                   "strictly increasing: %s; reuse beats orthogonal with disjoint CIs: %s",
                   worst_rel, increasing ? "yes" : "no", disjoint ? "yes" : "no");
    return o;
}

// --- criterion 7: special-function identities --------------------------------

Outcome criterion7() {
    bool q0 = q_function(0.0) == 0.5;
    std::mt19937_64 gen(12345);
    std::uniform_real_distribution<double> dist(-8.0, 8.0);
    double worst_sym = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double x = dist(gen);
        worst_sym = std::max(worst_sym, std::abs(q_function(x) + q_function(-x) - 1.0));
    }
    double worst_e1 = 0.0;
    for (double x = 1e-6; x <= 30.0; x *= 2.1544346900318837) { // ~3 points per decade
        auto q = integrate_to_inf([](double t) { return std::exp(-t) / t; }, x, 1e-11);
        worst_e1 = std::max(worst_e1, std::abs(exp_integral(x) - q.value) / q.value);
    }
    Outcome o;
    o.pass = q0 && worst_sym <= 1e-12 && worst_e1 <= 1e-9;
    o.detail = fmt("Q(0)==0.5: %s; max|Q(x)+Q(-x)-1|=%.3g (tol 1e-12); "
                   "max E1 rel err vs quadrature=%.3g (tol 1e-9)",
                   q0 ? "yes" : "no", worst_sym, worst_e1);
    return o;
}

// --- criterion 8: interference-limited law vs its sampled counterpart -------

Outcome criterion8() {
    const std::size_t n = 10000000;
    const double s = 100.0, b = 1.0;
    auto law = sinr_parent_exponential(s, b);

    std::vector<double> sinr(n);
    UniformStream gs(kSeed, 0, row_tag(stream_tag::test_a, 2));
    UniformStream hs(kSeed, 0, row_tag(stream_tag::test_a, 3));
    const std::size_t block = 1 << 20;
    std::vector<double> g(block), h(block);
    for (std::size_t off = 0; off < n; off += block) {
        std::size_t m = std::min(block, n - off);
        std::span<double> gsp(g.data(), m), hsp(h.data(), m);
        kRayleigh.sample_powers(gsp, gs);
        kRayleigh.sample_powers(hsp, hs);
        for (std::size_t i = 0; i < m; ++i) sinr[off + i] = s * g[i] / (1.0 + b * h[i]);
    }
    std::sort(sinr.begin(), sinr.end());
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double F = law.cdf(sinr[i]);
        sup = std::max(sup, std::max(std::abs(F - double(i) / double(n)),
                                     std::abs(double(i + 1) / double(n) - F)));
    }

    std::vector<double> grid;
    for (double sf = 1e-2; sf >= 0.9e-15; sf *= 1e-1) grid.push_back(upper_quantile(law, sf));
    auto rep = check_type1(law, grid);
    double tail_dev = std::abs(rep.ratios.back() + 1.0);

    Outcome o;
    o.pass = sup <= 0.003 && rep.converged && tail_dev <= 1e-3;
    o.detail = fmt("sup|F_closed - F_empirical| over 1e7 draws = %.5f (tol 0.003); "
                   "hazard ratio at deepest grid point = %.6f (dev %.3g, tol 1e-3, "
                   "converged=%s)",
                   sup, rep.ratios.back(), tail_dev, rep.converged ? "yes" : "no");
    return o;
}

// --- criterion 9: byte-identical sweep outputs -------------------------------

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

Outcome criterion9() {
#ifndef RELAYSIM_CLI_PATH
    return {false, "cli path not compiled in"};
#else
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "relaysim_acceptance";
    std::error_code ec;
    fs::remove_all(dir, ec);
    fs::create_directories(dir);

    auto run = [&](const std::string& name, int threads) {
        fs::path out = dir / name;
        std::string cmd = std::string(RELAYSIM_CLI_PATH) + " fig2 --trials 20000 --seed 7" +
                          " --threads " + std::to_string(threads) + " --out " + out.string() +
                          " > /dev/null";
        return std::system(cmd.c_str()) == 0;
    };
    bool ok = run("a.csv", 1) && run("b.csv", 1) && run("c.csv", 8);
    Outcome o;
    if (!ok) {
        o.pass = false;
        o.detail = "cli invocation failed";
        fs::remove_all(dir, ec);
        return o;
    }
    std::string a = read_file(dir / "a.csv");
    std::string b = read_file(dir / "b.csv");
    std::string c = read_file(dir / "c.csv");
    bool rerun_same = !a.empty() && a == b;
    bool threads_same = a == c;
    o.pass = rerun_same && threads_same;
    o.detail = fmt("rerun byte-identical: %s; --threads 1 vs --threads 8 byte-identical: %s "
                   "(%zu-byte csv)",
                   rerun_same ? "yes" : "no", threads_same ? "yes" : "no", a.size());
    fs::remove_all(dir, ec);
    return o;
#endif
}

struct Criterion {
    int id;
    double time_limit; // seconds; 0 = no limit
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, 1.0, criterion1},  {2, 5.0, criterion2},   {3, 30.0, criterion3},
    {4, 60.0, criterion4}, {5, 60.0, criterion5},  {6, 120.0, criterion6},
    {7, 5.0, criterion7},  {8, 30.0, criterion8},  {9, 0.0, criterion9},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > 9) {
        std::fprintf(stderr, "criterion must be 1..9\n");
        return 2;
    }

    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit > 0.0 && secs > c.time_limit) {
            o.pass = false;
            o.detail += fmt("; exceeded %.0fs budget", c.time_limit);
        }
        std::printf("criterion %d: %s — %s (%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
