#pragma once

#include <tuple>
#include <utility>
#include <vector>

namespace coopnet {

struct split_report_row {
    int K = 0;
    int L = 0;
    double lambda_b = 0.0;
    double median_pk = 0.0;  // analytic median of P_K
    double median_eta = 0.0; // asymptotic spectral efficiency at that median
    double sigma2 = 0.0;
};

// rows ranked by median_eta, best first
struct split_report {
    std::vector<split_report_row> rows;
};

// rho(lambda) = lambda * log2(1 + pk_out * c_limit(alpha, lambda) * (KL)^(alpha/2-1))
double rate_density(double lambda, double pk_out, int K, int L, double alpha);

// active-mobile density maximizing rate_density, via the principal Lambert-W
// branch at -(alpha/2)e^(-alpha/2)
double optimal_density(double pk_out, int K, int L, double alpha);

// SIR value at the optimal density: -(2W + alpha) / (2W); depends on alpha only
double optimal_sir(double alpha);

// rank (K, L) splits with K*L = N at a common BS density
split_report compare_fixed_coop_antennas(int N, double lambda_b, double alpha, double lambda,
                                         const std::vector<std::pair<int, int>>& splits);

// rank (K, L, lambda_b) splits with K*L = N and lambda_b*L = lambda_a
split_report compare_fixed_antenna_density(
    int N, double lambda_a, double alpha, double lambda,
    const std::vector<std::tuple<int, int, double>>& splits);

} // namespace coopnet
