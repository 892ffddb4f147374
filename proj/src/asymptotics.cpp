#include "coopnet/asymptotics.hpp"
#include "coopnet/errors.hpp"

#include <cmath>
#include <string>

namespace coopnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_alpha(double alpha) {
    if (!(alpha > 2.0))
        throw domain_error("path-loss exponent must exceed 2, got " + std::to_string(alpha));
    if (alpha > 8.0)
        diag::emit_warning("path-loss exponent " + std::to_string(alpha) +
                           " is outside the validated range (2, 8]");
}

void check_kl(int K, int L) {
    if (K < 1 || L < 1)
        throw param_error("K and L must be positive");
}

double constant_base(double alpha, double lambda) {
    check_alpha(alpha);
    if (!(lambda > 0.0))
        throw param_error("mobile density must be positive");
    return alpha * std::sin(2.0 * kPi / alpha) / (2.0 * kPi * kPi * lambda);
}

double log_limit_constant(double alpha, double lambda) {
    return 0.5 * alpha * std::log(constant_base(alpha, lambda));
}

} // namespace

double limit_constant(double alpha, double lambda) {
    // pow keeps density rescaling by powers of two bit-exact
    return std::pow(constant_base(alpha, lambda), 0.5 * alpha);
}

double sir_asym(double p_k, int K, int L, double alpha, double lambda) {
    check_kl(K, L);
    if (!(p_k > 0.0))
        throw param_error("cooperative received power must be positive");
    const double log_sir = std::log(p_k) + log_limit_constant(alpha, lambda) +
                           (0.5 * alpha - 1.0) * std::log(double(K) * double(L));
    return std::exp(log_sir);
}

double eta_asym(double p_k, int K, int L, double alpha, double lambda) {
    return std::log1p(sir_asym(p_k, K, L, alpha, lambda)) / std::log(2.0);
}

double sigma2_asym(int K, int L, double alpha, double lambda) {
    check_kl(K, L);
    const double log_s = -log_limit_constant(alpha, lambda) +
                         (1.0 - 0.5 * alpha) * std::log(double(K) * double(L));
    return std::exp(log_s);
}

double s_hat_k(const std::vector<double>& r0, double lambda_b, int K, int L, double alpha) {
    check_alpha(alpha);
    check_kl(K, L);
    if (!(lambda_b > 0.0))
        throw param_error("BS density must be positive");
    if (int(r0.size()) < K)
        throw param_error("need at least K cooperative distances");
    const double s = std::sqrt(lambda_b);
    double acc = 0.0;
    for (int k = 0; k < K; ++k) {
        if (!(r0[k] > 0.0))
            throw singularity_error("cooperative BS at zero distance");
        acc += std::pow(r0[k] * s, -alpha);
    }
    return acc / double(K);
}

double eta_asym_linearized(double p_k, int K, int L, double alpha, double lambda) {
    check_kl(K, L);
    if (!(p_k > 0.0))
        throw param_error("cooperative received power must be positive");
    const double ln2 = std::log(2.0);
    return (0.5 * alpha - 1.0) * std::log2(double(K) * double(L)) + std::log(p_k) / ln2 +
           log_limit_constant(alpha, lambda) / ln2;
}

asymptotic_constants make_constants(int K, int L, double alpha, double lambda) {
    asymptotic_constants c;
    c.c_limit = limit_constant(alpha, lambda);
    c.sigma2 = sigma2_asym(K, L, alpha, lambda);
    c.alpha = alpha;
    c.lambda = lambda;
    c.K = K;
    c.L = L;
    return c;
}

} // namespace coopnet
