#include "relaysim/kernels.hpp"

#include "relaysim/errors.hpp"

namespace relaysim::kernels {

namespace {

Backend pick_default() {
    return avx2_available() ? Backend::avx2 : Backend::scalar;
}

Backend& current() {
    static Backend b = pick_default();
    return b;
}

} // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend active_backend() { return current(); }

Backend force_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_available()) {
        throw DomainError("force_backend: avx2 not available on this host");
    }
    Backend prev = current();
    current() = b;
    return prev;
}

void fill_uniform(const StreamKey& key, std::uint64_t block0, std::span<double> out) {
    if (current() == Backend::avx2) {
        avx2::fill_uniform(key, block0, out);
    } else {
        scalar::fill_uniform(key, block0, out);
    }
}

void neg_log(std::span<double> x) {
    if (current() == Backend::avx2) {
        avx2::neg_log(x);
    } else {
        scalar::neg_log(x);
    }
}

double min_value(std::span<const double> x) {
    return current() == Backend::avx2 ? avx2::min_value(x) : scalar::min_value(x);
}

double max_value(std::span<const double> x) {
    return current() == Backend::avx2 ? avx2::max_value(x) : scalar::max_value(x);
}

IndexedMax argmax(std::span<const double> x) {
    return current() == Backend::avx2 ? avx2::argmax(x) : scalar::argmax(x);
}

IndexedMax ratio_argmax(std::span<const double> num, std::span<const double> den,
                        double s, double b) {
    return current() == Backend::avx2 ? avx2::ratio_argmax(num, den, s, b)
                                      : scalar::ratio_argmax(num, den, s, b);
}

} // namespace relaysim::kernels
