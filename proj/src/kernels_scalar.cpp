#include "relaysim/kernels.hpp"

#include <bit>
#include <cassert>
#include <cstdint>

// Scalar reference kernels. The AVX2 variants mirror these expression trees
// op for op; any change here must be reflected there or the bit-equivalence
// tests will catch the drift.

namespace relaysim::kernels {

// ---------------------------------------------------------------------------
// counter-based generator (philox 4x32, 10 rounds)
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kM0 = 0xD2511F53ull;
constexpr std::uint64_t kM1 = 0xCD9E8D57ull;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

} // namespace

namespace scalar {

void philox4x32_raw(const std::uint32_t ctr[4], const std::uint32_t key[2],
                    std::uint32_t out[4]) {
    std::uint32_t c0 = ctr[0], c1 = ctr[1], c2 = ctr[2], c3 = ctr[3];
    std::uint32_t k0 = key[0], k1 = key[1];
    for (int r = 0; r < 10; ++r) {
        std::uint64_t p0 = kM0 * static_cast<std::uint64_t>(c0);
        std::uint64_t p1 = kM1 * static_cast<std::uint64_t>(c2);
        std::uint32_t n0 = static_cast<std::uint32_t>(p1 >> 32) ^ c1 ^ k0;
        std::uint32_t n1 = static_cast<std::uint32_t>(p1);
        std::uint32_t n2 = static_cast<std::uint32_t>(p0 >> 32) ^ c3 ^ k1;
        std::uint32_t n3 = static_cast<std::uint32_t>(p0);
        c0 = n0;
        c1 = n1;
        c2 = n2;
        c3 = n3;
        k0 += kW0;
        k1 += kW1;
    }
    out[0] = c0;
    out[1] = c1;
    out[2] = c2;
    out[3] = c3;
}

void philox_block(const StreamKey& key, std::uint64_t block, std::uint64_t out[2]) {
    const std::uint32_t ctr[4] = {
        static_cast<std::uint32_t>(block),
        static_cast<std::uint32_t>(block >> 32),
        key.chunk,
        key.tag,
    };
    const std::uint32_t k[2] = {
        static_cast<std::uint32_t>(key.seed),
        static_cast<std::uint32_t>(key.seed >> 32),
    };
    std::uint32_t r[4];
    philox4x32_raw(ctr, k, r);
    out[0] = (static_cast<std::uint64_t>(r[1]) << 32) | r[0];
    out[1] = (static_cast<std::uint64_t>(r[3]) << 32) | r[2];
}

void fill_uniform(const StreamKey& key, std::uint64_t block0, std::span<double> out) {
    std::size_t n = out.size();
    std::size_t i = 0;
    std::uint64_t blk = block0;
    std::uint64_t w[2];
    while (i + 2 <= n) {
        philox_block(key, blk++, w);
        out[i] = detail::u64_to_unit(w[0]);
        out[i + 1] = detail::u64_to_unit(w[1]);
        i += 2;
    }
    if (i < n) {
        // odd tail: consume a whole block, discard the second word
        philox_block(key, blk, w);
        out[i] = detail::u64_to_unit(w[0]);
    }
}

} // namespace scalar

// ---------------------------------------------------------------------------
// table-free log on (0,1] (fdlibm-style argument reduction + polynomial)
// ---------------------------------------------------------------------------

namespace {

constexpr double kLn2Hi = 0x1.62e42feep-1;
constexpr double kLn2Lo = 0x1.a39ef35793c76p-33;
constexpr double kLg1 = 0x1.5555555555593p-1;
constexpr double kLg2 = 0x1.999999997fa04p-2;
constexpr double kLg3 = 0x1.2492494229359p-2;
constexpr double kLg4 = 0x1.c71c51d8e78afp-3;
constexpr double kLg5 = 0x1.7466496cb03dep-3;
constexpr double kLg6 = 0x1.39a09d078c69fp-3;
constexpr double kLg7 = 0x1.2f112df3e5244p-3;

} // namespace

namespace detail {

double log_core(double v) {
    // positive normal inputs only; the uniform map never produces
    // zero/subnormal values so no special-case branches are needed
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    // shift the mantissa split point to sqrt(2): after this add, the exponent
    // field holds k such that v = x * 2^k with x in [sqrt(2)/2, sqrt(2))
    bits += 0x95F62ull << 32;
    std::int64_t k = static_cast<std::int64_t>(bits >> 52) - 1023;
    bits = (bits & 0x000FFFFFFFFFFFFFull) + 0x3FE6A09E00000000ull;
    double x = std::bit_cast<double>(bits);
    double f = x - 1.0;
    double s = f / (2.0 + f);
    double z = s * s;
    double w = z * z;
    double t1 = w * (kLg2 + w * (kLg4 + w * kLg6));
    double t2 = z * (kLg1 + w * (kLg3 + w * (kLg5 + w * kLg7)));
    double r = t2 + t1;
    double hfsq = 0.5 * f * f;
    double dk = static_cast<double>(k);
    return dk * kLn2Hi - ((hfsq - (s * (hfsq + r) + dk * kLn2Lo)) - f);
}

} // namespace detail

// ---------------------------------------------------------------------------
// elementwise transforms and reductions
// ---------------------------------------------------------------------------

namespace scalar {

void neg_log(std::span<double> x) {
    for (double& v : x) v = -detail::log_core(v);
}

double min_value(std::span<const double> x) {
    assert(!x.empty());
    double m = x[0];
    for (std::size_t i = 1; i < x.size(); ++i) m = x[i] < m ? x[i] : m;
    return m;
}

double max_value(std::span<const double> x) {
    assert(!x.empty());
    double m = x[0];
    for (std::size_t i = 1; i < x.size(); ++i) m = x[i] > m ? x[i] : m;
    return m;
}

IndexedMax argmax(std::span<const double> x) {
    assert(!x.empty());
    IndexedMax best{x[0], 0};
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] > best.value) best = {x[i], i};
    }
    return best;
}

IndexedMax ratio_argmax(std::span<const double> num, std::span<const double> den,
                        double s, double b) {
    assert(!num.empty() && num.size() == den.size());
    auto ratio = [s, b](double nu, double de) {
        double t = b * de;
        t = t + 1.0;
        return (s * nu) / t;
    };
    IndexedMax best{ratio(num[0], den[0]), 0};
    for (std::size_t i = 1; i < num.size(); ++i) {
        double r = ratio(num[i], den[i]);
        if (r > best.value) best = {r, i};
    }
    return best;
}

} // namespace scalar

} // namespace relaysim::kernels
