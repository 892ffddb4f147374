#pragma once

namespace coopnet {

// series coefficients A_{i,j}; A_{i,0} = 1, higher j by recursion in j.
// memoized per (alpha) in thread-local storage
double coeff_a(int i, int j, double alpha);

// CDF of a sum of K iid unit-scale Pareto power terms, truncated after the
// m = 0..m_terms series layer; identically 0 for x < K
double pareto_sum_cdf(double x, int K, double alpha, int m_terms = 10);

// CDF of the cooperative received power P_K = L * sum_{k<=K} r_k^{-alpha}
// over the nearest-K BSs of a density-lambda_b Poisson field
double pk_cdf(double x, int K, int L, double lambda_b, double alpha, int m_terms = 10);

// CDF of the asymptotic spectral efficiency log2(1 + SIR) induced by P_K
double eta_cdf(double tau, int K, int L, double lambda_b, double lambda, double alpha,
               int m_terms = 10);

// p_o-quantile of P_K (inverse of pk_cdf), p_o in (0, 1)
double outage_pk(double p_o, int K, int L, double lambda_b, double alpha, int m_terms = 10);

} // namespace coopnet
