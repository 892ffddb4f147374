#include "coopnet/rng.hpp"

#include "coopnet/errors.hpp"

#include <cmath>

namespace coopnet {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

rng_stream::rng_stream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_)
        w = splitmix64(sm);
}

rng_stream rng_stream::derive(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t sm = master_seed;
    std::uint64_t base = splitmix64(sm);
    return rng_stream(base ^ (kGolden * (stream_index + 1)));
}

std::uint64_t rng_stream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double rng_stream::uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double rng_stream::uniform_pos() {
    return double((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::complex<double> rng_stream::complex_gaussian() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

long rng_stream::poisson(double mean) {
    if (!(mean >= 0.0))
        throw param_error("poisson: mean must be nonnegative");
    if (mean == 0.0)
        return 0;
    if (mean < 30.0) {
        // Knuth, in log space to avoid underflow of exp(-mean)
        const double limit = -mean;
        long k = 0;
        double acc = 0.0;
        for (;;) {
            acc += std::log(uniform_pos());
            if (acc < limit)
                return k;
            ++k;
        }
    }
    // PTRS transformed rejection (Hormann), exact for mean >= 10
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
        double u = uniform() - 0.5;
        double v = uniform_pos();
        double us = 0.5 - std::fabs(u);
        double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r)
            return long(k);
        if (k < 0.0 || (us < 0.013 && v > us))
            continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0))
            return long(k);
    }
}

} // namespace coopnet
