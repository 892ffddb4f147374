#pragma once

#include "coopnet/geometry.hpp"
#include "coopnet/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace coopnet {

struct channel_realization {
    Eigen::VectorXcd h0; // test-mobile channel, length K*L
    Eigen::MatrixXcd H;  // interferer channels, (K*L) x n_mobiles, column i = h_i
};

struct sir_sample {
    double sir_mmse = 0.0;
    double sir_mf = 0.0;
    double p_k = 0.0; // L * sum r0_k^(-alpha)
    double eta = 0.0; // log2(1 + sir_mmse)
    int realization_index = -1;
    std::uint64_t seed = 0;
};

struct eig_diagnostic {
    double min_eigenvalue = 0.0; // of L^(alpha/2-1) * H * H^dagger
    double lower_bound = 0.0;    // (pi*lambda)^(alpha/2) * (3/2 - sqrt(2)) * (2K)^(1-alpha/2)
    bool below_bound = false;    // flagged, never fatal: the bound is asymptotic in L
};

inline constexpr double kMfSirCap = 1e12;

// Rayleigh-faded channel vectors: per BS block k, L i.i.d. CN(0,1) fades
// scaled by r_{i,k}^(-alpha/2). Draw order: h0 first, then column 0, 1, ...
channel_realization build_channel(const topology& topo, int L, rng_stream& rng);

// h0^H (H H^H)^{-1} h0 via a positive-definite solve, never an explicit inverse
double mmse_sir(const Eigen::VectorXcd& h0, const Eigen::MatrixXcd& H);

// |h0^H h0|^2 / sum_i |h0^H h_i|^2, capped when interference leakage vanishes
double mf_sir(const Eigen::VectorXcd& h0, const Eigen::MatrixXcd& H, double cap = kMfSirCap);

double gamma_lower_bound(int K, double alpha, double lambda);

eig_diagnostic min_eigenvalue_diagnostic(const Eigen::MatrixXcd& H, int L, double alpha,
                                         double lambda, int K);

// One full realization: topology + channel + both receivers. Stream index i
// of master_seed; identical output no matter where or when it runs.
sir_sample run_one_realization(const network_params& p, int index, std::uint64_t master_seed);

// Reference loop, single thread.
std::vector<sir_sample> run_realizations_serial(const network_params& p, int n_realizations,
                                                std::uint64_t master_seed);

// OpenMP loop; bit-identical to the serial reference for any thread count.
std::vector<sir_sample> run_realizations_parallel(const network_params& p, int n_realizations,
                                                  std::uint64_t master_seed, int jobs = 0);

// Dispatcher: parallel when OpenMP is available, serial otherwise.
std::vector<sir_sample> run_realizations(const network_params& p, int n_realizations,
                                         std::uint64_t master_seed, int jobs = 0);

} // namespace coopnet
