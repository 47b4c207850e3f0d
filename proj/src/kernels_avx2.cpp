#include "relaysim/kernels.hpp"

#include <cassert>
#include <cstdint>
#include <immintrin.h>

// AVX2 kernel variants. Bit-identical to the scalar reference by
// construction: same expression trees, no FMA, explicit tail handling via
// the scalar code. Division and the conversion tricks below are exact, so
// equality holds per element, not just statistically.

namespace relaysim::kernels::avx2 {

namespace {

// ---------------------------------------------------------------------------
// philox 4x32-10, four blocks per call
// ---------------------------------------------------------------------------

inline __m256i mask32() { return _mm256_set1_epi64x(0xFFFFFFFFll); }

// computes blocks blk..blk+3; out[2j], out[2j+1] are block j's two words
inline void philox_block4(const StreamKey& key, std::uint64_t blk, __m256i& outA,
                          __m256i& outB) {
    const __m256i m0 = _mm256_set1_epi64x(0xD2511F53ll);
    const __m256i m1 = _mm256_set1_epi64x(0xCD9E8D57ll);
    const __m256i w0 = _mm256_set1_epi64x(0x9E3779B9ll);
    const __m256i w1 = _mm256_set1_epi64x(0xBB67AE85ll);

    __m256i blocks = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(blk)),
                                      _mm256_set_epi64x(3, 2, 1, 0));
    __m256i c0 = _mm256_and_si256(blocks, mask32());
    __m256i c1 = _mm256_srli_epi64(blocks, 32);
    __m256i c2 = _mm256_set1_epi64x(static_cast<long long>(key.chunk));
    __m256i c3 = _mm256_set1_epi64x(static_cast<long long>(key.tag));
    __m256i k0 = _mm256_set1_epi64x(static_cast<long long>(key.seed & 0xFFFFFFFFull));
    __m256i k1 = _mm256_set1_epi64x(static_cast<long long>(key.seed >> 32));

    for (int r = 0; r < 10; ++r) {
        // mul_epu32 reads only the low 32 bits of each lane, so stray high
        // bits accumulated by the key adds and xors are harmless until the
        // final masking below
        __m256i p0 = _mm256_mul_epu32(c0, m0);
        __m256i p1 = _mm256_mul_epu32(c2, m1);
        __m256i hi0 = _mm256_srli_epi64(p0, 32);
        __m256i lo0 = _mm256_and_si256(p0, mask32());
        __m256i hi1 = _mm256_srli_epi64(p1, 32);
        __m256i lo1 = _mm256_and_si256(p1, mask32());
        __m256i n0 = _mm256_xor_si256(_mm256_xor_si256(hi1, c1), k0);
        __m256i n2 = _mm256_xor_si256(_mm256_xor_si256(hi0, c3), k1);
        c0 = n0;
        c1 = lo1;
        c2 = n2;
        c3 = lo0;
        k0 = _mm256_add_epi64(k0, w0);
        k1 = _mm256_add_epi64(k1, w1);
    }

    __m256i r01 = _mm256_or_si256(_mm256_slli_epi64(c1, 32), _mm256_and_si256(c0, mask32()));
    __m256i r23 = _mm256_or_si256(_mm256_slli_epi64(c3, 32), _mm256_and_si256(c2, mask32()));
    // interleave to memory order: block j's word pair lands contiguously
    __m256i lo = _mm256_unpacklo_epi64(r01, r23);
    __m256i hi = _mm256_unpackhi_epi64(r01, r23);
    outA = _mm256_permute2x128_si256(lo, hi, 0x20);
    outB = _mm256_permute2x128_si256(lo, hi, 0x31);
}

// exact u64 -> double for values <= 2^53 (matches scalar (double)v)
inline __m256d u64_to_double53(__m256i v) {
    __m256i lo = _mm256_and_si256(v, mask32());
    __m256i hi = _mm256_srli_epi64(v, 32);
    __m256d dlo = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(lo, _mm256_set1_epi64x(0x4330000000000000ll))),
        _mm256_set1_pd(0x1.0p52));
    __m256d dhi = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(hi, _mm256_set1_epi64x(0x4530000000000000ll))),
        _mm256_set1_pd(0x1.0p84));
    return _mm256_add_pd(dhi, dlo);
}

inline __m256d words_to_unit(__m256i w) {
    __m256i v = _mm256_add_epi64(_mm256_srli_epi64(w, 11), _mm256_set1_epi64x(1));
    return _mm256_mul_pd(u64_to_double53(v), _mm256_set1_pd(detail::kTwoPow53Inv));
}

// ---------------------------------------------------------------------------
// log on (0,1], vector mirror of detail::log_core
// ---------------------------------------------------------------------------

inline __m256d log_core_vec(__m256d v) {
    __m256i bits = _mm256_castpd_si256(v);
    bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(0x95F62ll << 32));
    __m256i kbits = _mm256_sub_epi64(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(1023));
    bits = _mm256_add_epi64(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
                            _mm256_set1_epi64x(0x3FE6A09E00000000ll));
    __m256d x = _mm256_castsi256_pd(bits);
    __m256d one = _mm256_set1_pd(1.0);
    __m256d f = _mm256_sub_pd(x, one);
    __m256d s = _mm256_div_pd(f, _mm256_add_pd(_mm256_set1_pd(2.0), f));
    __m256d z = _mm256_mul_pd(s, s);
    __m256d w = _mm256_mul_pd(z, z);
    __m256d t1 = _mm256_mul_pd(
        w, _mm256_add_pd(_mm256_set1_pd(0x1.999999997fa04p-2),
                         _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(0x1.c71c51d8e78afp-3),
                                                        _mm256_mul_pd(w, _mm256_set1_pd(0x1.39a09d078c69fp-3))))));
    __m256d t2 = _mm256_mul_pd(
        z, _mm256_add_pd(_mm256_set1_pd(0x1.5555555555593p-1),
                         _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(0x1.2492494229359p-2),
                                                        _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(0x1.7466496cb03dep-3),
                                                                                       _mm256_mul_pd(w, _mm256_set1_pd(0x1.2f112df3e5244p-3))))))));
    __m256d r = _mm256_add_pd(t2, t1);
    __m256d hfsq = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(0.5), f), f);
    // exact small-int conversion via the signed 1.5*2^52 bias trick; the
    // unsigned 2^52 variant breaks for the negative exponents that inputs
    // below sqrt(2)/2 produce
    __m256d dk = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_add_epi64(kbits, _mm256_set1_epi64x(0x4338000000000000ll))),
        _mm256_set1_pd(0x1.8p52));
    __m256d inner = _mm256_add_pd(_mm256_mul_pd(s, _mm256_add_pd(hfsq, r)),
                                  _mm256_mul_pd(dk, _mm256_set1_pd(0x1.a39ef35793c76p-33)));
    __m256d g = _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f);
    return _mm256_sub_pd(_mm256_mul_pd(dk, _mm256_set1_pd(0x1.62e42feep-1)), g);
}

// fold four (value, lane-index) candidates left to right; lower original
// index wins value ties, matching the scalar first-occurrence rule
inline IndexedMax fold_lanes(__m256d vals, __m256i idxs) {
    alignas(32) double v[4];
    alignas(32) std::uint64_t ix[4];
    _mm256_store_pd(v, vals);
    _mm256_store_si256(reinterpret_cast<__m256i*>(ix), idxs);
    IndexedMax best{v[0], static_cast<std::size_t>(ix[0])};
    for (int l = 1; l < 4; ++l) {
        if (v[l] > best.value || (v[l] == best.value && ix[l] < best.index)) {
            best = {v[l], static_cast<std::size_t>(ix[l])};
        }
    }
    return best;
}

} // namespace

void fill_uniform(const StreamKey& key, std::uint64_t block0, std::span<double> out) {
    std::size_t n = out.size();
    std::size_t i = 0;
    while (i + 8 <= n) {
        __m256i wa, wb;
        philox_block4(key, block0 + i / 2, wa, wb);
        _mm256_storeu_pd(out.data() + i, words_to_unit(wa));
        _mm256_storeu_pd(out.data() + i + 4, words_to_unit(wb));
        i += 8;
    }
    if (i < n) scalar::fill_uniform(key, block0 + i / 2, out.subspan(i));
}

void neg_log(std::span<double> x) {
    std::size_t n = x.size();
    std::size_t i = 0;
    const __m256d signmask = _mm256_set1_pd(-0.0);
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x.data() + i);
        _mm256_storeu_pd(x.data() + i, _mm256_xor_pd(log_core_vec(v), signmask));
    }
    for (; i < n; ++i) x[i] = -detail::log_core(x[i]);
}

double min_value(std::span<const double> x) {
    assert(!x.empty());
    std::size_t n = x.size();
    if (n < 8) return scalar::min_value(x);
    __m256d acc = _mm256_loadu_pd(x.data());
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(x.data() + i));
    alignas(32) double v[4];
    _mm256_store_pd(v, acc);
    double m = v[0];
    for (int l = 1; l < 4; ++l) m = v[l] < m ? v[l] : m;
    for (; i < n; ++i) m = x[i] < m ? x[i] : m;
    return m;
}

double max_value(std::span<const double> x) {
    assert(!x.empty());
    std::size_t n = x.size();
    if (n < 8) return scalar::max_value(x);
    __m256d acc = _mm256_loadu_pd(x.data());
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(x.data() + i));
    alignas(32) double v[4];
    _mm256_store_pd(v, acc);
    double m = v[0];
    for (int l = 1; l < 4; ++l) m = v[l] > m ? v[l] : m;
    for (; i < n; ++i) m = x[i] > m ? x[i] : m;
    return m;
}

IndexedMax argmax(std::span<const double> x) {
    assert(!x.empty());
    std::size_t n = x.size();
    if (n < 8) return scalar::argmax(x);
    __m256d best = _mm256_loadu_pd(x.data());
    __m256i bestIdx = _mm256_set_epi64x(3, 2, 1, 0);
    __m256i curIdx = bestIdx;
    const __m256i four = _mm256_set1_epi64x(4);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) {
        curIdx = _mm256_add_epi64(curIdx, four);
        __m256d v = _mm256_loadu_pd(x.data() + i);
        __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
        best = _mm256_blendv_pd(best, v, gt);
        bestIdx = _mm256_castpd_si256(
            _mm256_blendv_pd(_mm256_castsi256_pd(bestIdx), _mm256_castsi256_pd(curIdx), gt));
    }
    IndexedMax m = fold_lanes(best, bestIdx);
    for (; i < n; ++i) {
        if (x[i] > m.value) m = {x[i], i};
    }
    return m;
}

IndexedMax ratio_argmax(std::span<const double> num, std::span<const double> den,
                        double s, double b) {
    assert(!num.empty() && num.size() == den.size());
    std::size_t n = num.size();
    if (n < 8) return scalar::ratio_argmax(num, den, s, b);
    const __m256d sv = _mm256_set1_pd(s);
    const __m256d bv = _mm256_set1_pd(b);
    const __m256d one = _mm256_set1_pd(1.0);
    auto ratio4 = [&](std::size_t at) {
        __m256d t = _mm256_mul_pd(bv, _mm256_loadu_pd(den.data() + at));
        t = _mm256_add_pd(t, one);
        return _mm256_div_pd(_mm256_mul_pd(sv, _mm256_loadu_pd(num.data() + at)), t);
    };
    __m256d best = ratio4(0);
    __m256i bestIdx = _mm256_set_epi64x(3, 2, 1, 0);
    __m256i curIdx = bestIdx;
    const __m256i four = _mm256_set1_epi64x(4);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) {
        curIdx = _mm256_add_epi64(curIdx, four);
        __m256d v = ratio4(i);
        __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
        best = _mm256_blendv_pd(best, v, gt);
        bestIdx = _mm256_castpd_si256(
            _mm256_blendv_pd(_mm256_castsi256_pd(bestIdx), _mm256_castsi256_pd(curIdx), gt));
    }
    IndexedMax m = fold_lanes(best, bestIdx);
    auto ratio1 = [s, b](double nu, double de) {
        double t = b * de;
        t = t + 1.0;
        return (s * nu) / t;
    };
    for (; i < n; ++i) {
        double r = ratio1(num[i], den[i]);
        if (r > m.value) m = {r, i};
    }
    return m;
}

} // namespace relaysim::kernels::avx2
