#include "coopnet/asymptotics.hpp"

#include "coopnet/errors.hpp"
#include "coopnet/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <tuple>
#include <vector>

using namespace coopnet;

TEST_CASE("limit constant reference values") {
    // reference values from a 50-digit arbitrary-precision evaluation;
    // at alpha = 4, lambda = 1 the constant is 4/pi^4
    CHECK(limit_constant(4.0, 1.0) == doctest::Approx(0.041063929018737341).epsilon(1e-14));
    CHECK(limit_constant(4.0, 0.1) == doctest::Approx(4.1063929018737341).epsilon(1e-14));
    CHECK(limit_constant(3.0, 1.0) == doctest::Approx(0.047751082138548384).epsilon(1e-14));
    CHECK(limit_constant(5.0, 0.5) == doctest::Approx(0.16113558541541926).epsilon(1e-14));
}

TEST_CASE("limit constant scales exactly as a power of the density") {
    // lambda -> lambda/4 multiplies the constant by 4^(alpha/2); for alpha = 4
    // and power-of-two densities the scaling is exact in floating point
    CHECK(limit_constant(4.0, 0.25) == 16.0 * limit_constant(4.0, 1.0));
    CHECK(limit_constant(4.0, 0.0625) == 256.0 * limit_constant(4.0, 1.0));
    CHECK(limit_constant(4.0, 2.0) == 0.25 * limit_constant(4.0, 1.0));
    // non-power-of-two ratio: exact to roundoff
    CHECK(limit_constant(3.6, 0.3) / limit_constant(3.6, 1.2) ==
          doctest::Approx(std::pow(4.0, 1.8)).epsilon(1e-12));
}

TEST_CASE("alpha domain handling") {
    CHECK_THROWS_AS(limit_constant(2.0, 1.0), domain_error);
    CHECK_THROWS_AS(limit_constant(1.5, 1.0), domain_error);
    CHECK_THROWS_AS(limit_constant(4.0, 0.0), param_error);
    (void)diag::drain_warnings();
    (void)limit_constant(8.5, 1.0);
    CHECK(diag::drain_warnings().size() == 1);
}

TEST_CASE("asymptotic SIR, efficiency and interference power reference values") {
    CHECK(sir_asym(20.25, 3, 100, 4.0, 1.0) ==
          doctest::Approx(249.46336878882935).epsilon(1e-12));
    CHECK(eta_asym(20.25, 3, 100, 4.0, 1.0) ==
          doctest::Approx(7.9684558090391428).epsilon(1e-12));
    CHECK(sigma2_asym(1, 1, 4.0, 1.0) == doctest::Approx(24.352272758500609).epsilon(1e-12));
    CHECK(sigma2_asym(3, 100, 4.0, 1.0) ==
          doctest::Approx(0.081174242528335364).epsilon(1e-12));
}

TEST_CASE("SIR equals received power over interference power") {
    const std::vector<std::tuple<double, int, int, double, double>> cases = {
        {20.25, 3, 100, 4.0, 1.0},  {1.7, 2, 8, 3.3, 0.7},   {300.0, 8, 25, 5.0, 2.0},
        {0.004, 1, 1, 2.5, 0.04},   {55.0, 16, 50, 6.5, 1.3}};
    for (const auto& [p, K, L, a, lam] : cases) {
        const double lhs = sir_asym(p, K, L, a, lam);
        const double rhs = p / sigma2_asym(K, L, a, lam);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("interference power depends on K and L only through their product") {
    for (double a : {2.7, 4.0, 5.5}) {
        const double ref = sigma2_asym(1, 128, a, 1.0);
        CHECK(sigma2_asym(2, 64, a, 1.0) == ref);
        CHECK(sigma2_asym(4, 32, a, 1.0) == ref);
        CHECK(sigma2_asym(8, 16, a, 1.0) == ref);
        CHECK(sigma2_asym(128, 1, a, 1.0) == ref);
    }
}

TEST_CASE("the two algebraic forms of the limit SIR agree") {
    // form 1: received power P_K with the density-lambda constant;
    // form 2: unit-density rescaled power with the constant at lambda/lambda_b
    const std::vector<double> r0 = {0.8, 1.7, 2.2};
    const double lambda_b = 0.37, lambda = 1.3, alpha = 3.6;
    const int K = 3, L = 20;

    const double p_k = received_power_sum(r0, L, alpha);
    const double form1 = sir_asym(p_k, K, L, alpha, lambda);

    const double s_hat = s_hat_k(r0, lambda_b, K, L, alpha);
    const double form2 =
        limit_constant(alpha, lambda / lambda_b) * std::pow(double(K) * L, 0.5 * alpha) * s_hat;

    CHECK(form1 == doctest::Approx(form2).epsilon(1e-12));

    // the rescaled power itself relates back to P_K
    CHECK(s_hat == doctest::Approx(p_k * std::pow(lambda_b, -0.5 * alpha) / (double(K) * L))
                       .epsilon(1e-13));
}

TEST_CASE("unit-density rescaled power on a hand-checked layout") {
    CHECK(s_hat_k({1.0, 2.0}, 0.25, 2, 8, 4.0) == 8.5);
    CHECK_THROWS_AS(s_hat_k({1.0}, 0.25, 2, 8, 4.0), param_error);
    CHECK_THROWS_AS(s_hat_k({0.0, 1.0}, 0.25, 2, 8, 4.0), singularity_error);
    CHECK_THROWS_AS(s_hat_k({1.0, 2.0}, 0.0, 2, 8, 4.0), param_error);
}

TEST_CASE("constant-SIR provisioning holds when the density grows") {
    // lambda_b * L * K^(1 - 2/alpha) / lambda fixed at 12.8, K fixed,
    // rescaled power held at 0.37: the limit SIR must not move
    const double alpha = 4.0, s_hat = 0.37;
    const int K = 4;
    struct tuple_t {
        double lambda_b, lambda;
        int L;
    };
    const std::vector<tuple_t> tuples = {
        {0.1, 1.0, 64}, {0.2, 2.0, 64}, {0.2, 1.0, 32}, {0.05, 0.5, 64}, {0.4, 4.0, 64}};
    std::vector<double> sirs;
    for (const auto& t : tuples) {
        const double p_k = s_hat * std::pow(t.lambda_b, 0.5 * alpha) * double(K) * t.L;
        sirs.push_back(sir_asym(p_k, K, t.L, alpha, t.lambda));
    }
    for (std::size_t i = 1; i < sirs.size(); ++i)
        CHECK(sirs[i] == doctest::Approx(sirs[0]).epsilon(1e-12));
}

TEST_CASE("linearized efficiency matches the exact one at high SIR") {
    const double p_k = 20.25;
    const int K = 3, L = 500;
    const double exact = eta_asym(p_k, K, L, 4.0, 1.0);
    const double lin = eta_asym_linearized(p_k, K, L, 4.0, 1.0);
    const double sir = sir_asym(p_k, K, L, 4.0, 1.0);
    CHECK(std::fabs(exact - lin) < 0.0015);
    // the gap is exactly log2(1 + 1/SIR)
    CHECK(exact - lin == doctest::Approx(std::log1p(1.0 / sir) / std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("constants bundle is self-consistent") {
    const auto c = make_constants(3, 100, 4.0, 1.0);
    CHECK(c.c_limit == limit_constant(4.0, 1.0));
    CHECK(c.sigma2 == sigma2_asym(3, 100, 4.0, 1.0));
    CHECK(c.K == 3);
    CHECK(c.L == 100);
    CHECK(sir_asym(20.25, 3, 100, 4.0, 1.0) ==
          doctest::Approx(20.25 / c.sigma2).epsilon(1e-12));
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(sir_asym(0.0, 2, 8, 4.0, 1.0), param_error);
    CHECK_THROWS_AS(sir_asym(-1.0, 2, 8, 4.0, 1.0), param_error);
    CHECK_THROWS_AS(sir_asym(1.0, 0, 8, 4.0, 1.0), param_error);
    CHECK_THROWS_AS(sigma2_asym(2, 0, 4.0, 1.0), param_error);
    CHECK_THROWS_AS(eta_asym(1.0, 2, 8, 2.0, 1.0), domain_error);
}
