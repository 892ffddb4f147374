#include "coopnet/design_opt.hpp"
#include "coopnet/asymptotics.hpp"
#include "coopnet/errors.hpp"
#include "coopnet/pk_dist.hpp"
#include "coopnet/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace coopnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_opt_args(double pk_out, int K, int L, double alpha) {
    if (!(pk_out > 0.0))
        throw param_error("pk_out must be positive");
    if (K < 1 || L < 1)
        throw param_error("K and L must be positive");
    if (!(alpha > 2.0))
        throw domain_error("path-loss exponent must exceed 2");
    if (alpha > 8.0)
        diag::emit_warning("path-loss exponent " + std::to_string(alpha) +
                           " is outside the validated range (2, 8]");
}

double lambert_bracket(double alpha) {
    const double w = specfun::lambert_w0(-0.5 * alpha * std::exp(-0.5 * alpha));
    return -2.0 * w / (2.0 * w + alpha);
}

} // namespace

double rate_density(double lambda, double pk_out, int K, int L, double alpha) {
    if (!(lambda > 0.0))
        throw param_error("lambda must be positive");
    check_opt_args(pk_out, K, L, alpha);
    return lambda * eta_asym(pk_out, K, L, alpha, lambda);
}

double optimal_density(double pk_out, int K, int L, double alpha) {
    check_opt_args(pk_out, K, L, alpha);
    const double lam = std::pow(lambert_bracket(alpha), 2.0 / alpha) *
                       (alpha * std::sin(2.0 * kPi / alpha) / (2.0 * kPi * kPi)) *
                       std::pow(pk_out * std::pow(double(K) * double(L), 0.5 * alpha - 1.0),
                                2.0 / alpha);
    if (!(lam > 0.0) || !std::isfinite(lam))
        throw numerical_error("optimal density is not finite and positive");
    return lam;
}

double optimal_sir(double alpha) {
    if (!(alpha > 2.0))
        throw domain_error("path-loss exponent must exceed 2");
    return 1.0 / lambert_bracket(alpha);
}

split_report compare_fixed_coop_antennas(int N, double lambda_b, double alpha, double lambda,
                                         const std::vector<std::pair<int, int>>& splits) {
    if (N < 1)
        throw param_error("total antenna count must be positive");
    if (!(lambda_b > 0.0))
        throw param_error("lambda_b must be positive");
    split_report rep;
    for (const auto& [K, L] : splits) {
        if (K < 1 || L < 1 || K * L != N)
            throw param_error("split " + std::to_string(K) + "x" + std::to_string(L) +
                              " does not satisfy K*L = " + std::to_string(N));
        split_report_row row;
        row.K = K;
        row.L = L;
        row.lambda_b = lambda_b;
        row.median_pk = outage_pk(0.5, K, L, lambda_b, alpha);
        row.median_eta = eta_asym(row.median_pk, K, L, alpha, lambda);
        row.sigma2 = sigma2_asym(K, L, alpha, lambda);
        rep.rows.push_back(row);
    }
    for (const auto& row : rep.rows) {
        // same K*L, so the interference power must coincide across splits
        if (std::fabs(row.sigma2 - rep.rows.front().sigma2) >
            1e-12 * rep.rows.front().sigma2)
            throw numerical_error("interference power differs across equal-antenna splits");
    }
    std::stable_sort(rep.rows.begin(), rep.rows.end(),
                     [](const split_report_row& a, const split_report_row& b) {
                         return a.median_eta > b.median_eta;
                     });
    return rep;
}

split_report compare_fixed_antenna_density(
    int N, double lambda_a, double alpha, double lambda,
    const std::vector<std::tuple<int, int, double>>& splits) {
    if (N < 1)
        throw param_error("total antenna count must be positive");
    if (!(lambda_a > 0.0))
        throw param_error("antenna density must be positive");
    split_report rep;
    for (const auto& [K, L, lambda_b] : splits) {
        if (K < 1 || L < 1 || K * L != N)
            throw param_error("split " + std::to_string(K) + "x" + std::to_string(L) +
                              " does not satisfy K*L = " + std::to_string(N));
        if (std::fabs(lambda_b * L - lambda_a) > 1e-9 * lambda_a)
            throw param_error("split " + std::to_string(K) + "x" + std::to_string(L) +
                              " violates the antenna-density constraint");
        split_report_row row;
        row.K = K;
        row.L = L;
        row.lambda_b = lambda_b;
        row.median_pk = outage_pk(0.5, K, L, lambda_b, alpha);
        row.median_eta = eta_asym(row.median_pk, K, L, alpha, lambda);
        row.sigma2 = sigma2_asym(K, L, alpha, lambda);
        rep.rows.push_back(row);
    }
    std::stable_sort(rep.rows.begin(), rep.rows.end(),
                     [](const split_report_row& a, const split_report_row& b) {
                         return a.median_eta > b.median_eta;
                     });
    return rep;
}

} // namespace coopnet
