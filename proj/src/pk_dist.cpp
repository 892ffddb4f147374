#include "coopnet/pk_dist.hpp"
#include "coopnet/asymptotics.hpp"
#include "coopnet/errors.hpp"
#include "coopnet/specfun.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace coopnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void check_common(int K, double alpha, int m_terms) {
    if (K < 1)
        throw param_error("K must be positive");
    if (!(alpha > 2.0))
        throw domain_error("path-loss exponent must exceed 2, got " + std::to_string(alpha));
    if (alpha > 8.0)
        diag::emit_warning("path-loss exponent " + std::to_string(alpha) +
                           " is outside the validated range (2, 8]");
    if (m_terms < 0)
        throw param_error("m_terms must be nonnegative");
}

double clamp_unit(double f, const char* what) {
    if (f >= 0.0 && f <= 1.0)
        return f;
    const double resid = std::max(-f, f - 1.0);
    if (!(resid <= 1e-6))
        throw numerical_error(std::string(what) + " left [0,1] by " + std::to_string(resid));
    diag::emit_warning(std::string(what) + " clamped to [0,1], excursion " +
                       std::to_string(resid));
    return f < 0.0 ? 0.0 : 1.0;
}

// CDF of Z = sum_{k<=K} r_k^{-alpha} in unscaled distance units
double inner_cdf(double z, int K, double lambda_b, double alpha, int m_terms) {
    if (std::isnan(z))
        throw param_error("CDF argument is NaN");
    if (!(z > 0.0))
        return 0.0;
    if (std::isinf(z))
        return 1.0;

    const double y = lambda_b * kPi * std::pow(double(K) / z, 2.0 / alpha);
    if (y > 700.0)
        return 0.0;

    const double lny = std::log(y);

    kahan t1;
    for (int l = 0; l <= K; ++l)
        t1.add(std::exp(double(l) * lny - std::lgamma(double(l) + 1.0) - y));

    const double lg1 = std::lgamma(1.0 - 2.0 / alpha);
    const double lnK = std::log(double(K));
    const double lgK1 = std::lgamma(double(K) + 1.0);

    kahan t2;
    double tail_mag = 0.0;
    for (int l = 1; l <= K; ++l) {
        const double s = std::sin(2.0 * kPi * double(l) / alpha);
        if (s == 0.0)
            continue;
        const double lchoose =
            lgK1 - std::lgamma(double(l) + 1.0) - std::lgamma(double(K - l) + 1.0);
        for (int m = 0; m <= m_terms; ++m) {
            const double a = coeff_a(K - l, m, alpha);
            if (a == 0.0)
                continue;
            const double p = double(m) + 2.0 * double(l) / alpha; // power of 1/z
            const double q = double(m) * alpha / 2.0 + double(l); // power of y
            const double sgn = ((l & 1) ? -1.0 : 1.0) * (s < 0.0 ? -1.0 : 1.0) *
                               (a < 0.0 ? -1.0 : 1.0);
            const double lt = lchoose + double(l) * lg1 + std::log(std::fabs(s)) +
                              std::log(std::fabs(a)) + std::lgamma(p) + q * lny - p * lnK -
                              lgK1 + specfun::log_upper_inc_gamma(double(K) - q + 1.0, y);
            const double term = sgn * std::exp(lt);
            t2.add(term);
            if (m == m_terms)
                tail_mag += std::fabs(term);
        }
    }
    if (tail_mag > 1e-6)
        diag::emit_warning("power-sum CDF series tail " + std::to_string(tail_mag) +
                           " exceeds 1e-6; increase m_terms");
    return t1.sum + t2.sum / kPi;
}

} // namespace

double coeff_a(int i, int j, double alpha) {
    if (i < 0 || j < 0)
        throw param_error("coefficient indices must be nonnegative");
    if (!(alpha > 2.0))
        throw domain_error("path-loss exponent must exceed 2");
    thread_local std::map<double, std::vector<std::vector<double>>> cache;
    auto& tab = cache[alpha];
    if (int(tab.size()) <= i)
        tab.resize(size_t(i) + 1);
    auto& row = tab[size_t(i)];
    if (row.empty())
        row.push_back(1.0);
    for (int jj = int(row.size()); jj <= j; ++jj) {
        double acc = 0.0;
        double lfac = 1.0;
        for (int l = 1; l <= jj; ++l) {
            lfac *= double(l);
            acc += (double(l) * (double(i) + 1.0) - double(jj)) *
                   (2.0 / (lfac * (2.0 - double(l) * alpha))) * row[size_t(jj - l)];
        }
        row.push_back(acc / double(jj));
    }
    return row[size_t(j)];
}

double pareto_sum_cdf(double x, int K, double alpha, int m_terms) {
    check_common(K, alpha, m_terms);
    if (std::isnan(x))
        throw param_error("CDF argument is NaN");
    if (x < double(K))
        return 0.0;
    if (std::isinf(x))
        return 1.0;

    const double lg1 = std::lgamma(1.0 - 2.0 / alpha);
    const double lgK1 = std::lgamma(double(K) + 1.0);
    const double lnx = std::log(x);

    kahan t;
    double tail_mag = 0.0;
    for (int l = 1; l <= K; ++l) {
        const double s = std::sin(2.0 * kPi * double(l) / alpha);
        if (s == 0.0)
            continue;
        const double lchoose =
            lgK1 - std::lgamma(double(l) + 1.0) - std::lgamma(double(K - l) + 1.0);
        for (int m = 0; m <= m_terms; ++m) {
            const double a = coeff_a(K - l, m, alpha);
            if (a == 0.0)
                continue;
            const double p = double(m) + 2.0 * double(l) / alpha;
            const double sgn = ((l & 1) ? -1.0 : 1.0) * (s < 0.0 ? -1.0 : 1.0) *
                               (a < 0.0 ? -1.0 : 1.0);
            const double lt = lchoose + double(l) * lg1 + std::log(std::fabs(s)) +
                              std::log(std::fabs(a)) + std::lgamma(p) - p * lnx;
            const double term = sgn * std::exp(lt);
            t.add(term);
            if (m == m_terms)
                tail_mag += std::fabs(term);
        }
    }
    if (tail_mag > 1e-6)
        diag::emit_warning("Pareto-sum CDF series tail " + std::to_string(tail_mag) +
                           " exceeds 1e-6; increase m_terms");
    return clamp_unit(1.0 + t.sum / kPi, "Pareto-sum CDF");
}

double pk_cdf(double x, int K, int L, double lambda_b, double alpha, int m_terms) {
    check_common(K, alpha, m_terms);
    if (L < 1)
        throw param_error("L must be positive");
    if (!(lambda_b > 0.0))
        throw param_error("BS density must be positive");
    return clamp_unit(inner_cdf(x / double(L), K, lambda_b, alpha, m_terms),
                      "received-power CDF");
}

double eta_cdf(double tau, int K, int L, double lambda_b, double lambda, double alpha,
               int m_terms) {
    check_common(K, alpha, m_terms);
    if (L < 1)
        throw param_error("L must be positive");
    if (!(lambda > 0.0))
        throw param_error("mobile density must be positive");
    if (std::isnan(tau))
        throw param_error("rate threshold is NaN");
    if (!(tau > 0.0))
        return 0.0;
    const double c0 = limit_constant(alpha, 1.0);
    const double arg = std::expm1(tau * std::log(2.0)) *
                       std::pow(double(K), 1.0 - 0.5 * alpha) *
                       std::pow(double(L), -0.5 * alpha) * std::pow(lambda, 0.5 * alpha) / c0;
    return pk_cdf(double(L) * arg, K, L, lambda_b, alpha, m_terms);
}

double outage_pk(double p_o, int K, int L, double lambda_b, double alpha, int m_terms) {
    if (!(p_o > 0.0 && p_o < 1.0))
        throw param_error("outage probability must lie in (0, 1)");
    check_common(K, alpha, m_terms);

    double lo = double(L);
    double hi = double(L);
    double f = pk_cdf(lo, K, L, lambda_b, alpha, m_terms);
    int steps = 0;
    if (f < p_o) {
        while (f < p_o) {
            lo = hi;
            hi *= 2.0;
            if (++steps > 60)
                throw numerical_error("quantile bracket expansion failed");
            f = pk_cdf(hi, K, L, lambda_b, alpha, m_terms);
        }
    } else {
        while (f > p_o) {
            hi = lo;
            lo *= 0.5;
            if (++steps > 60)
                throw numerical_error("quantile bracket expansion failed");
            f = pk_cdf(lo, K, L, lambda_b, alpha, m_terms);
        }
    }

    double mid = lo;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double fm = pk_cdf(mid, K, L, lambda_b, alpha, m_terms);
        if (std::fabs(fm - p_o) <= 1e-8)
            return mid;
        if (fm < p_o)
            lo = mid;
        else
            hi = mid;
    }
    throw numerical_error("quantile bisection did not converge");
}

} // namespace coopnet
