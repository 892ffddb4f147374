#include "coopnet/specfun.hpp"

#include "coopnet/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace coopnet::specfun {

namespace {

spec_fun_config g_cfg;

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

bool is_nonpositive_integer(double s) {
    return s <= 0.0 && s == std::floor(s);
}

// regularized lower incomplete gamma P(s,x) by power series; s > 0, x < s + 1
double lower_reg_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n <= g_cfg.max_iter; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * g_cfg.rel_tol)
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw numerical_error("incomplete gamma series failed to converge");
}

// continued fraction (modified Lentz) for Gamma(s,x) = exp(-x + s ln x) * h;
// returns log(h). Valid for x >= s + 1 and also for s <= 0 with x >= 1.
double upper_cf_log(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= g_cfg.max_iter; ++i) {
        const double an = -double(i) * (double(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        // drive well past the requested tolerance; the last-delta residual of
        // a Lentz iteration understates the true error near x = s + 1
        if (std::fabs(delta - 1.0) < std::max(0.01 * g_cfg.rel_tol, 4e-15))
            return std::log(h);
    }
    throw numerical_error("incomplete gamma continued fraction failed to converge");
}

// scaled value G(s) = Gamma(s,x) * x^(-s) * e^x, order O(1/x) for all s <= 0
double scaled_recurrence(double s, double x) {
    const double frac = s - std::floor(s);
    double s_cur;
    double g;
    if (frac == 0.0) {
        // integer chain: anchor at order zero, the exponential integral
        s_cur = 0.0;
        g = exp1_scaled(x);
    } else {
        s_cur = frac; // in (0,1)
        g = std::exp(log_upper_inc_gamma(s_cur, x) - s_cur * std::log(x) + x);
    }
    double largest = std::fabs(x * g);
    while (s_cur > s + 0.5) {
        const double prod = x * g;
        largest = std::max(largest, std::fabs(prod));
        const double num = prod - 1.0;
        if (std::fabs(num) < 1e-13 * std::max(1.0, largest))
            diag::emit_warning("incomplete gamma recurrence: severe cancellation at order " +
                               std::to_string(s_cur - 1.0));
        s_cur -= 1.0;
        g = num / s_cur;
        if (!(g > 0.0)) {
            diag::emit_warning("incomplete gamma recurrence: underflowed to zero at order " +
                               std::to_string(s_cur));
            g = std::numeric_limits<double>::min();
        }
    }
    return g;
}

} // namespace

void set_config(const spec_fun_config& cfg) {
    if (!(cfg.rel_tol > 0.0) || cfg.rel_tol > 1e-6)
        throw param_error("spec_fun_config: rel_tol must lie in (0, 1e-6]");
    if (cfg.max_iter < 50)
        throw param_error("spec_fun_config: max_iter must be at least 50");
    g_cfg = cfg;
}

spec_fun_config get_config() {
    return g_cfg;
}

double gamma_fn(double s) {
    if (is_nonpositive_integer(s))
        throw domain_error("gamma_fn: pole at nonpositive integer");
    return std::tgamma(s);
}

double exp1_scaled(double x) {
    if (!(x > 0.0))
        throw domain_error("exp1_scaled: argument must be positive");
    if (x >= 1.0)
        return std::exp(upper_cf_log(0.0, x)); // e^x * Gamma(0,x) * x^0
    // series for E1 below 1, then scale
    double sum = -kEulerGamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k <= g_cfg.max_iter; ++k) {
        term *= -x / k;
        const double add = -term / k;
        sum += add;
        if (std::fabs(add) < std::fabs(sum) * g_cfg.rel_tol)
            return std::exp(x) * sum;
    }
    throw numerical_error("exp1_scaled series failed to converge");
}

double log_upper_inc_gamma(double s, double x) {
    if (!(x > 0.0))
        throw domain_error("upper_inc_gamma: x must be positive");
    if (s > 0.0) {
        if (x < s + 1.0) {
            const double p = lower_reg_series(s, x);
            return std::lgamma(s) + std::log1p(-p);
        }
        return -x + s * std::log(x) + upper_cf_log(s, x);
    }
    if (s == 0.0)
        return std::log(exp1_scaled(x)) - x;
    const double g = scaled_recurrence(s, x);
    return std::log(g) + s * std::log(x) - x;
}

double upper_inc_gamma(double s, double x) {
    return std::exp(log_upper_inc_gamma(s, x));
}

double lambert_w0(double z) {
    constexpr double kInvE = 0.36787944117144232159552377016146;
    if (z < -kInvE - 1e-12)
        throw domain_error("lambert_w0: argument below -1/e");
    if (z < -kInvE)
        z = -kInvE;
    if (z == 0.0)
        return 0.0;

    double w;
    if (z < -0.25) {
        // branch-point expansion
        const double p = std::sqrt(2.0 * (1.0 + std::exp(1.0) * z));
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
    } else if (z < 3.0) {
        w = (z > 0.0) ? std::log1p(z) : z * (1.0 - z);
    } else {
        const double l1 = std::log(z);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int it = 0; it < 60; ++it) {
        const double e = std::exp(w);
        const double f = w * e - z;
        const double wp1 = w + 1.0;
        double dw;
        if (std::fabs(wp1) < 1e-8) {
            dw = f / (e * wp1 + 1e-300); // fall back to Newton near the branch point
        } else {
            dw = f / (e * wp1 - (w + 2.0) * f / (2.0 * wp1));
        }
        w -= dw;
        if (std::fabs(dw) <= 2e-16 * (1.0 + std::fabs(w)))
            break;
    }
    return w;
}

} // namespace coopnet::specfun
