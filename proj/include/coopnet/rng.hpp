#pragma once

#include <complex>
#include <cstdint>

namespace coopnet {

// xoshiro256++ seeded through splitmix64. Every Monte Carlo realization gets
// its own stream via derive(master_seed, index), so results do not depend on
// execution order or thread count.
class rng_stream {
public:
    explicit rng_stream(std::uint64_t seed);

    static rng_stream derive(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    // uniform on [0, 1), 53-bit resolution
    double uniform();

    // uniform on (0, 1]
    double uniform_pos();

    // CN(0,1): independent real/imag parts, variance 1/2 each.
    // Box-Muller on inverse-CDF uniforms: consumes exactly two uniforms.
    std::complex<double> complex_gaussian();

    // exact Poisson sample; Knuth product method below mean 30, PTRS above
    long poisson(double mean);

private:
    std::uint64_t s_[4];
};

} // namespace coopnet
