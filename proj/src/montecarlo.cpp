#include "relaysim/montecarlo.hpp"

#include "relaysim/errors.hpp"
#include "relaysim/kernels.hpp"
#include "relaysim/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace relaysim {

namespace {

struct Partial {
    double sum = 0.0;
    double sumsq = 0.0;
};

// chunk_fn(chunk_index, trials_in_chunk) -> Partial
Estimate run_chunked(long trials, std::uint64_t seed, int threads,
                     const std::function<Partial(long, long)>& chunk_fn) {
    if (trials < 1) throw DomainError("monte carlo: requires trials >= 1");
    long nchunks = (trials + kChunkTrials - 1) / kChunkTrials;
    auto count_of = [trials](long ci) {
        long begin = ci * kChunkTrials;
        return std::min(kChunkTrials, trials - begin);
    };

    std::vector<Partial> parts(static_cast<std::size_t>(nchunks));
    int nt = std::clamp(threads, 1, 64);
    nt = static_cast<int>(std::min<long>(nt, nchunks));
    if (nt <= 1) {
        for (long ci = 0; ci < nchunks; ++ci) parts[ci] = chunk_fn(ci, count_of(ci));
    } else {
        std::atomic<long> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            try {
                for (long ci = next.fetch_add(1); ci < nchunks; ci = next.fetch_add(1)) {
                    parts[ci] = chunk_fn(ci, count_of(ci));
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nt));
        for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    // deterministic reduction: chunk order, independent of thread schedule
    double sum = 0.0, sumsq = 0.0;
    for (const Partial& p : parts) {
        sum += p.sum;
        sumsq += p.sumsq;
    }
    double n = static_cast<double>(trials);
    double mean = sum / n;
    double var = trials > 1 ? (sumsq - n * mean * mean) / (n - 1.0) : 0.0;
    if (var < 0.0) var = 0.0;
    double hw = 1.96 * std::sqrt(var / n);
    return {mean, hw, trials, seed};
}

} // namespace

Estimate estimate_direct_wins(const RelayScenario& sc, const FadingLaw& law_h,
                              const FadingLaw& law_g, long trials, std::uint64_t seed,
                              int threads, std::uint32_t tag) {
    sc.validate();
    double cap = spectral_efficiency(sc.snr_B);
    auto fn = [&, cap](long ci, long count) {
        UniformStream stream(seed, static_cast<std::uint32_t>(ci), tag);
        std::vector<double> h(static_cast<std::size_t>(sc.K));
        std::vector<double> g(static_cast<std::size_t>(sc.K));
        double hits = 0.0;
        for (long t = 0; t < count; ++t) {
            // draw order contract: direct links first, then relay links
            law_h.sample_powers(h, stream);
            law_g.sample_powers(g, stream);
            double direct = spectral_efficiency(sc.snr_b * kernels::max_value(h));
            double relay_hop = spectral_efficiency(sc.snr_r * kernels::max_value(g));
            double two_hop = 0.5 * std::min(cap, relay_hop);
            if (direct > two_hop) hits += 1.0; // strict: ties favor the relay
        }
        return Partial{hits, hits}; // bernoulli: x^2 = x
    };
    return run_chunked(trials, seed, threads, fn);
}

Estimate estimate_route_avg_se(const RelayScenario& sc, const FadingLaw& law_h,
                               const FadingLaw& law_g, long trials, std::uint64_t seed,
                               int threads, std::uint32_t tag) {
    sc.validate();
    auto fn = [&](long ci, long count) {
        UniformStream stream(seed, static_cast<std::uint32_t>(ci), tag);
        std::vector<double> h(static_cast<std::size_t>(sc.K));
        std::vector<double> g(static_cast<std::size_t>(sc.K));
        Partial p;
        for (long t = 0; t < count; ++t) {
            law_h.sample_powers(h, stream);
            law_g.sample_powers(g, stream);
            double r = max_route_se(h, g, sc).rate;
            p.sum += r;
            p.sumsq += r * r;
        }
        return p;
    };
    return run_chunked(trials, seed, threads, fn);
}

Estimate estimate_broadcast_avg_se(BroadcastProtocol protocol, const BroadcastScenario& sc,
                                   const FadingLaw& law_h, const FadingLaw& law_g, long trials,
                                   std::uint64_t seed, int threads, std::uint32_t tag) {
    sc.validate();
    if (tag == 0) {
        tag = protocol == BroadcastProtocol::orthogonal ? stream_tag::orthogonal
                                                        : stream_tag::simultaneous;
    }
    bool ortho = protocol == BroadcastProtocol::orthogonal;
    auto fn = [&, ortho](long ci, long count) {
        UniformStream stream(seed, static_cast<std::uint32_t>(ci), tag);
        std::vector<double> h_near(static_cast<std::size_t>(sc.V));
        std::vector<double> g_near(static_cast<std::size_t>(sc.V));
        std::vector<double> h_far(static_cast<std::size_t>(sc.U));
        std::vector<double> g_far(static_cast<std::size_t>(sc.U));
        Partial p;
        for (long t = 0; t < count; ++t) {
            double r;
            if (ortho) {
                // draw order: near base-station links, then far relay links
                law_h.sample_powers(h_near, stream);
                law_g.sample_powers(g_far, stream);
                r = orthogonal_se(h_near, g_far, sc).rate;
            } else {
                // draw order: near signal, near interferer, far interferer,
                // far signal — i.e. all base-station links h first per side
                law_h.sample_powers(h_near, stream);
                law_g.sample_powers(g_near, stream);
                law_h.sample_powers(h_far, stream);
                law_g.sample_powers(g_far, stream);
                r = simultaneous_se(h_near, g_near, h_far, g_far, sc).rate;
            }
            p.sum += r;
            p.sumsq += r * r;
        }
        return p;
    };
    return run_chunked(trials, seed, threads, fn);
}

double expected_max_se(const FadingLaw& law, double snr, long K) {
    if (!(snr > 0.0)) throw DomainError("expected_max_se: requires snr > 0");
    if (K < 1) throw DomainError("expected_max_se: requires K >= 1");
    ParentDistribution p = law.parent();
    double dk = static_cast<double>(K);
    // truncate where the max's survival K*sf is below 1e-14; the omitted
    // mass contributes O(1e-14 * log tail) which is far below rel_tol
    double hi = upper_quantile(p, std::min(1e-14 / dk, 1e-14));
    std::vector<double> splits;
    for (double sf : {0.5, 1e-1, 1e-2, 1e-4, 1e-6, 1e-9, 1e-12}) {
        splits.push_back(upper_quantile(p, sf));
    }
    if (K > 1) {
        splits.push_back(upper_quantile(p, 1.0 / dk));
        splits.push_back(upper_quantile(p, std::min(0.9, 4.0 / dk)));
        splits.push_back(upper_quantile(p, 0.25 / dk));
    }
    auto integrand = [&p, snr, K, dk](double x) {
        double fx = p.pdf(x);
        if (fx == 0.0) return 0.0;
        double w = 1.0;
        if (K > 1) {
            double sfx = p.sf(x);
            w = sfx >= 1.0 ? 0.0 : std::exp((dk - 1.0) * std::log1p(-sfx));
        }
        return spectral_efficiency(snr * x) * dk * w * fx;
    };
    return integrate(integrand, 0.0, hi, 1e-8, 1e-300, splits).value;
}

double exact_direct_wins(const RelayScenario& sc, const FadingLaw& law_h,
                         const FadingLaw& law_g) {
    sc.validate();
    ParentDistribution ph = law_h.parent();
    ParentDistribution pg = law_g.parent();
    double dk = static_cast<double>(sc.K);
    double cap = spectral_efficiency(sc.snr_B);
    // thresholds where the backhaul cap binds
    double g_star = sc.snr_B / sc.snr_r;
    double x_star = (std::exp2(0.5 * cap) - 1.0) / sc.snr_b;

    // P(best direct rate > r) with r expressed through the relay power u
    auto p_direct_beats = [&](double u) {
        double thr = (std::sqrt(1.0 + sc.snr_r * u) - 1.0) / sc.snr_b;
        return -std::expm1(dk * std::log1p(-ph.sf(thr)));
    };

    // atom: relay power above g_star pins the two-hop rate at cap/2
    double p_above = -std::expm1(dk * std::log1p(-pg.sf(g_star)));
    double p_h_above = -std::expm1(dk * std::log1p(-ph.sf(x_star)));
    double total = p_above * p_h_above;

    // lower truncation where F_g^K <= 1e-16
    double c_lo = std::pow(1e-16, 1.0 / dk);
    double lo = upper_quantile(pg, std::min(1.0 - c_lo, 1.0 - 1e-16));
    double hi = std::min(g_star, upper_quantile(pg, std::min(1e-16 / dk, 1e-16)));
    if (lo < hi) {
        std::vector<double> splits;
        if (sc.K > 1) {
            for (double sf : {4.0 / dk, 1.0 / dk, 0.25 / dk}) {
                if (sf < 1.0) splits.push_back(upper_quantile(pg, sf));
            }
        }
        auto integrand = [&](double u) {
            double fu = pg.pdf(u);
            if (fu == 0.0) return 0.0;
            double sfu = pg.sf(u);
            double w = sfu >= 1.0 ? (sc.K == 1 ? 1.0 : 0.0)
                                  : std::exp((dk - 1.0) * std::log1p(-sfu));
            return p_direct_beats(u) * dk * w * fu;
        };
        total += integrate(integrand, lo, hi, 1e-8, 1e-300, splits).value;
    }
    return total;
}

} // namespace relaysim
