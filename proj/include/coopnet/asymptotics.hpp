#pragma once

#include <vector>

namespace coopnet {

struct asymptotic_constants {
    double c_limit = 0.0;
    double sigma2 = 0.0;
    double alpha = 0.0;
    double lambda = 0.0;
    int K = 0;
    int L = 0;
};

// [alpha*sin(2*pi/alpha) / (2*pi^2*lambda)]^(alpha/2)
double limit_constant(double alpha, double lambda);

// large-antenna SIR: p_k * limit_constant * (K*L)^(alpha/2 - 1)
double sir_asym(double p_k, int K, int L, double alpha, double lambda);

// log2(1 + sir_asym)
double eta_asym(double p_k, int K, int L, double alpha, double lambda);

// asymptotic interference power; sir_asym = p_k / sigma2
double sigma2_asym(int K, int L, double alpha, double lambda);

// received power of the K nearest BSs rescaled to a unit-density network:
// (1/K) * sum (r0_k * sqrt(lambda_b))^(-alpha)
double s_hat_k(const std::vector<double>& r0, double lambda_b, int K, int L, double alpha);

// high-SIR expansion: (alpha/2 - 1)*log2(K*L) + log2(p_k) + log2(c_limit)
double eta_asym_linearized(double p_k, int K, int L, double alpha, double lambda);

asymptotic_constants make_constants(int K, int L, double alpha, double lambda);

} // namespace coopnet
