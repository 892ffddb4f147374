#include "coopnet/experiments.hpp"
#include "coopnet/asymptotics.hpp"
#include "coopnet/channel_mc.hpp"
#include "coopnet/design_opt.hpp"
#include "coopnet/errors.hpp"
#include "coopnet/hex_model.hpp"
#include "coopnet/pk_dist.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace coopnet {

namespace {

struct mean_sd {
    double mean = 0.0;
    double sd = 0.0;
};

mean_sd stats_of(const std::vector<double>& v) {
    mean_sd out;
    if (v.empty())
        return out;
    double acc = 0.0;
    for (double x : v)
        acc += x;
    out.mean = acc / double(v.size());
    if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) {
            const double d = x - out.mean;
            ss += d * d;
        }
        out.sd = std::sqrt(ss / double(v.size() - 1));
    }
    return out;
}

double median_of(std::vector<double> v) {
    if (v.empty())
        throw numerical_error("median of an empty sample");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// fraction of (sorted) samples <= t
double ecdf_at(const std::vector<double>& sorted, double t) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), t);
    return double(it - sorted.begin()) / double(sorted.size());
}

std::string fmt_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string tuple_label(int K, int L, double lambda_b) {
    return "K" + std::to_string(K) + "_L" + std::to_string(L) + "_lb" + fmt_g(lambda_b);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * double(i) / double(n - 1));
    return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> out;
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(std::exp(llo + (lhi - llo) * double(i) / double(n - 1)));
    return out;
}

// per-sweep-point master seed so sweep points draw independent streams
std::uint64_t sub_seed(std::uint64_t master, int point_index) {
    return rng_stream::derive(master, std::uint64_t(point_index)).next_u64();
}

void push(std::vector<result_row>& rows, const std::string& sweep_param, double sweep_value,
          const std::string& statistic, double value, double stddev, long n) {
    rows.push_back({sweep_param, sweep_value, statistic, value, stddev, n});
}

void check_sim_size(const experiment_config& cfg) {
    if (cfg.n_realizations < 1)
        throw config_error("n_realizations must be at least 1 for simulation experiments");
}

std::vector<result_row> run_fig2(const experiment_config& cfg) {
    if (cfg.k_list.empty())
        throw config_error("fig2_normalized_sir needs a nonempty k_list");
    if (cfg.l_list.empty())
        throw config_error("fig2_normalized_sir needs a nonempty l_list");
    check_sim_size(cfg);

    std::vector<result_row> rows;
    int point = 0;
    for (int K : cfg.k_list) {
        for (int L : cfg.l_list) {
            network_params p = cfg.params;
            p.K = K;
            p.L = L;
            const auto samples =
                run_realizations(p, cfg.n_realizations, sub_seed(cfg.master_seed, point++),
                                 cfg.jobs);
            std::vector<double> norm;
            norm.reserve(samples.size());
            const double lpow = std::pow(double(L), 0.5 * p.alpha - 1.0);
            for (const auto& s : samples)
                norm.push_back(s.sir_mmse / (lpow * s.p_k));
            const auto st = stats_of(norm);
            const std::string suffix = "_L" + std::to_string(L);
            push(rows, "K", K, "norm_sir_mean" + suffix, st.mean, st.sd,
                 long(norm.size()));
            push(rows, "K", K, "norm_sir_relstd" + suffix,
                 st.mean != 0.0 ? st.sd / st.mean : 0.0, 0.0, long(norm.size()));
        }
        const double ref = std::pow(double(K), 0.5 * cfg.params.alpha - 1.0) *
                           limit_constant(cfg.params.alpha, cfg.params.lambda);
        push(rows, "K", K, "norm_sir_ref", ref, 0.0, 1);
    }
    return rows;
}

std::vector<result_row> run_fig3(const experiment_config& cfg) {
    std::vector<int> ks = cfg.k_list;
    std::vector<int> ls = cfg.l_list;
    std::vector<double> lbs = cfg.lambda_b_list;
    if (ks.empty() && ls.empty() && lbs.empty()) {
        ks = {8, 16, 32};
        ls = {100, 50, 25};
        lbs = {0.1, 0.2, 0.4};
    }
    if (ks.size() != ls.size() || ks.size() != lbs.size() || ks.empty())
        throw config_error("fig3_eta_cdf needs k_list, l_list, lambda_b_list of equal size");
    check_sim_size(cfg);

    const auto taus = cfg.tau_points > 0 ? linspace(cfg.tau_min, cfg.tau_max, cfg.tau_points)
                                         : linspace(0.0, 16.0, 65);

    std::vector<result_row> rows;
    for (std::size_t t = 0; t < ks.size(); ++t) {
        network_params p = cfg.params;
        p.K = ks[t];
        p.L = ls[t];
        p.lambda_b = lbs[t];
        const std::string label = tuple_label(p.K, p.L, p.lambda_b);
        const auto samples =
            run_realizations(p, cfg.n_realizations, sub_seed(cfg.master_seed, int(t)),
                             cfg.jobs);

        std::vector<double> eta_sim, eta_asym_sim;
        eta_sim.reserve(samples.size());
        eta_asym_sim.reserve(samples.size());
        for (const auto& s : samples) {
            eta_sim.push_back(s.eta);
            eta_asym_sim.push_back(eta_asym(s.p_k, p.K, p.L, p.alpha, p.lambda));
        }
        std::sort(eta_sim.begin(), eta_sim.end());
        std::sort(eta_asym_sim.begin(), eta_asym_sim.end());

        for (double tau : taus) {
            push(rows, "tau", tau, "eta_cdf_sim/" + label, ecdf_at(eta_sim, tau), 0.0,
                 long(eta_sim.size()));
            push(rows, "tau", tau, "eta_cdf_asym_sim/" + label, ecdf_at(eta_asym_sim, tau),
                 0.0, long(eta_asym_sim.size()));
            push(rows, "tau", tau, "eta_cdf_analytic/" + label,
                 eta_cdf(tau, p.K, p.L, p.lambda_b, p.lambda, p.alpha, cfg.m_terms), 0.0, 1);
        }
        const double analytic_median =
            eta_asym(outage_pk(0.5, p.K, p.L, p.lambda_b, p.alpha, cfg.m_terms), p.K, p.L,
                     p.alpha, p.lambda);
        push(rows, "tuple", double(t), "eta_median_abs_dev/" + label,
             std::fabs(median_of(eta_sim) - analytic_median), 0.0, long(eta_sim.size()));
    }

    // matched-filter reference tuple
    network_params p = cfg.params;
    p.K = 32;
    p.L = 25;
    p.lambda_b = 0.4;
    const auto samples =
        run_realizations(p, cfg.n_realizations, sub_seed(cfg.master_seed, int(ks.size())),
                         cfg.jobs);
    std::vector<double> eta_mf;
    eta_mf.reserve(samples.size());
    for (const auto& s : samples)
        eta_mf.push_back(std::log2(1.0 + s.sir_mf));
    std::sort(eta_mf.begin(), eta_mf.end());
    const std::string label = tuple_label(p.K, p.L, p.lambda_b);
    for (double tau : taus)
        push(rows, "tau", tau, "eta_cdf_mf/" + label, ecdf_at(eta_mf, tau), 0.0,
             long(eta_mf.size()));
    return rows;
}

std::vector<result_row> run_fig4(const experiment_config& cfg) {
    std::vector<int> ks = cfg.k_list.empty() ? std::vector<int>{3} : cfg.k_list;
    for (int K : ks)
        if (K < 1 || K > 6)
            throw config_error("fig4_hex_alpha needs K in [1, 6], got " + std::to_string(K));
    if (cfg.alpha_points < 1)
        throw config_error("alpha_points must be at least 1");
    if (!(cfg.alpha_min > 2.0) || cfg.alpha_max < cfg.alpha_min)
        throw config_error("fig4_hex_alpha needs 2 < alpha_min <= alpha_max");
    check_sim_size(cfg);

    const auto alphas = linspace(cfg.alpha_min, cfg.alpha_max, cfg.alpha_points);
    std::vector<result_row> rows;
    int point = 0;
    for (double alpha : alphas) {
        for (int K : ks) {
            network_params p = cfg.params;
            p.alpha = alpha;
            p.K = K;
            p.bs_model = bs_model_t::hex_grid_cell_edge;
            const std::string suffix = "/K" + std::to_string(K);
            push(rows, "alpha", alpha, "cell_edge_eta" + suffix,
                 cell_edge_eta(K, p.L, p.lambda_b, p.lambda, alpha), 0.0, 1);
            const auto samples =
                run_realizations(p, cfg.n_realizations, sub_seed(cfg.master_seed, point++),
                                 cfg.jobs);
            std::vector<double> etas;
            etas.reserve(samples.size());
            for (const auto& s : samples)
                etas.push_back(s.eta);
            const auto st = stats_of(etas);
            push(rows, "alpha", alpha, "cell_edge_eta_sim_median" + suffix, median_of(etas),
                 st.sd, long(etas.size()));
        }
    }
    return rows;
}

std::vector<result_row> run_pk_cdf_table(const experiment_config& cfg) {
    const std::vector<int> ks = cfg.k_list.empty() ? std::vector<int>{1, 2, 3} : cfg.k_list;
    if (!(cfg.x_min > 0.0) || !(cfg.x_max > cfg.x_min) || cfg.x_points < 2)
        throw config_error("pk_cdf_table needs 0 < x_min < x_max and x_points >= 2");
    std::vector<result_row> rows;
    for (double x : logspace(cfg.x_min, cfg.x_max, cfg.x_points))
        for (int K : ks)
            push(rows, "x", x, "pk_cdf/K" + std::to_string(K),
                 pk_cdf(x, K, cfg.params.L, cfg.params.lambda_b, cfg.params.alpha,
                        cfg.m_terms),
                 0.0, 1);
    return rows;
}

std::vector<result_row> run_optimize_density(const experiment_config& cfg) {
    const std::vector<double> pks =
        cfg.pk_out_list.empty() ? std::vector<double>{0.5, 1.0, 5.0} : cfg.pk_out_list;
    std::vector<result_row> rows;
    for (double pk_out : pks) {
        const double lam =
            optimal_density(pk_out, cfg.params.K, cfg.params.L, cfg.params.alpha);
        push(rows, "pk_out", pk_out, "lambda_star", lam, 0.0, 1);
        push(rows, "pk_out", pk_out, "rate_density_at_star",
             rate_density(lam, pk_out, cfg.params.K, cfg.params.L, cfg.params.alpha), 0.0, 1);
        push(rows, "pk_out", pk_out, "sir_at_star", optimal_sir(cfg.params.alpha), 0.0, 1);
    }
    return rows;
}

std::vector<result_row> run_custom(const experiment_config& cfg) {
    static const char* kValid = "K, L, lambda, lambda_b, alpha, n_mobiles";
    if (cfg.sweep_param.empty())
        throw config_error(std::string("custom experiment needs sweep_param (one of ") +
                           kValid + ")");
    if (cfg.sweep_values.empty())
        throw config_error("custom experiment needs nonempty sweep_values");
    check_sim_size(cfg);

    auto as_int = [](double v, const std::string& what) {
        const long r = std::lround(v);
        if (std::fabs(v - double(r)) > 1e-9)
            throw config_error("sweep value for " + what + " must be an integer");
        return int(r);
    };

    std::vector<result_row> rows;
    int point = 0;
    for (double v : cfg.sweep_values) {
        network_params p = cfg.params;
        if (cfg.sweep_param == "K")
            p.K = as_int(v, "K");
        else if (cfg.sweep_param == "L")
            p.L = as_int(v, "L");
        else if (cfg.sweep_param == "lambda")
            p.lambda = v;
        else if (cfg.sweep_param == "lambda_b")
            p.lambda_b = v;
        else if (cfg.sweep_param == "alpha")
            p.alpha = v;
        else if (cfg.sweep_param == "n_mobiles")
            p.n_mobiles = as_int(v, "n_mobiles");
        else
            throw config_error("unknown sweep parameter '" + cfg.sweep_param +
                               "'; valid names: " + kValid);
        validate_params(p);

        const auto samples =
            run_realizations(p, cfg.n_realizations, sub_seed(cfg.master_seed, point++),
                             cfg.jobs);
        std::vector<double> sir_mmse, sir_mf, eta_mmse, eta_mf, pk;
        for (const auto& s : samples) {
            sir_mmse.push_back(s.sir_mmse);
            sir_mf.push_back(s.sir_mf);
            eta_mmse.push_back(s.eta);
            eta_mf.push_back(std::log2(1.0 + s.sir_mf));
            pk.push_back(s.p_k);
        }
        const long n = long(samples.size());
        const auto st_sir = stats_of(sir_mmse);
        const auto st_pk = stats_of(pk);
        const std::string& sp = cfg.sweep_param;
        push(rows, sp, v, "sir_mmse_mean", st_sir.mean, st_sir.sd, n);
        push(rows, sp, v, "sir_mmse_median", median_of(sir_mmse), 0.0, n);
        push(rows, sp, v, "sir_mf_median", median_of(sir_mf), 0.0, n);
        push(rows, sp, v, "eta_mmse_median", median_of(eta_mmse), 0.0, n);
        push(rows, sp, v, "eta_mf_median", median_of(eta_mf), 0.0, n);
        push(rows, sp, v, "pk_mean", st_pk.mean, st_pk.sd, n);
        push(rows, sp, v, "eta_asym_median_analytic",
             eta_asym(outage_pk(0.5, p.K, p.L, p.lambda_b, p.alpha, cfg.m_terms), p.K, p.L,
                      p.alpha, p.lambda),
             0.0, 1);
        if (cfg.tau_points > 0) {
            std::vector<double> eta_sorted = eta_mmse;
            std::sort(eta_sorted.begin(), eta_sorted.end());
            for (double tau : linspace(cfg.tau_min, cfg.tau_max, cfg.tau_points)) {
                push(rows, sp, v, "eta_cdf_sim/tau" + fmt_g(tau), ecdf_at(eta_sorted, tau),
                     0.0, n);
                push(rows, sp, v, "eta_cdf_analytic/tau" + fmt_g(tau),
                     eta_cdf(tau, p.K, p.L, p.lambda_b, p.lambda, p.alpha, cfg.m_terms), 0.0,
                     1);
            }
        }
    }
    return rows;
}

} // namespace

experiment_result run_experiment(const experiment_config& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    experiment_result result;
    result.provenance.experiment = experiment_name(cfg.experiment);
    result.provenance.config_echo = config_echo(cfg);
    result.provenance.master_seed = cfg.master_seed;

    switch (cfg.experiment) {
    case experiment_kind::fig2_normalized_sir:
        result.rows = run_fig2(cfg);
        break;
    case experiment_kind::fig3_eta_cdf:
        result.rows = run_fig3(cfg);
        break;
    case experiment_kind::fig4_hex_alpha:
        result.rows = run_fig4(cfg);
        break;
    case experiment_kind::pk_cdf_table:
        result.rows = run_pk_cdf_table(cfg);
        break;
    case experiment_kind::optimize_density:
        result.rows = run_optimize_density(cfg);
        break;
    case experiment_kind::custom:
        result.rows = run_custom(cfg);
        break;
    }

    result.provenance.walltime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace coopnet
