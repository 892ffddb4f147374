#pragma once

namespace coopnet::specfun {

struct spec_fun_config {
    double rel_tol = 1e-12;
    int max_iter = 500;
};

void set_config(const spec_fun_config& cfg);
spec_fun_config get_config();

// complete gamma function; throws domain_error at nonpositive integers
double gamma_fn(double s);

// upper incomplete gamma, any real order s, x > 0.
// s > 0: series / continued fraction; s <= 0: scaled downward recurrence
// anchored at a fractional order, or at the exponential integral when s
// runs through the integers. Always positive.
double upper_inc_gamma(double s, double x);

// log of upper_inc_gamma; safe where the value itself under/overflows
double log_upper_inc_gamma(double s, double x);

// exp(x) * E1(x), the scaled exponential integral; x > 0
double exp1_scaled(double x);

// principal-branch Lambert W on [-1/e, inf); Halley iteration
double lambert_w0(double z);

} // namespace coopnet::specfun
