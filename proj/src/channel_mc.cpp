#include "coopnet/channel_mc.hpp"
#include "coopnet/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

#ifdef COOPNET_HAVE_OPENMP
#include <omp.h>
#endif

namespace coopnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

void fill_column(Eigen::Ref<Eigen::VectorXcd> col, const double* dist, int K, int L,
                 double alpha, rng_stream& rng) {
    for (int k = 0; k < K; ++k) {
        const double r = dist[k];
        if (!(r > 0.0))
            throw singularity_error("channel distance must be positive");
        const double f = std::pow(r, -0.5 * alpha);
        for (int l = 0; l < L; ++l)
            col[k * L + l] = f * rng.complex_gaussian();
    }
}

} // namespace

channel_realization build_channel(const topology& topo, int L, rng_stream& rng) {
    if (L < 1)
        throw param_error("L must be positive");
    if (topo.K < 1 || int(topo.r0.size()) < topo.K)
        throw topology_error("topology has no cooperating BSs");
    if (int(topo.r_matrix.size()) != topo.n_mobiles * topo.K)
        throw topology_error("topology distance matrix is inconsistent");

    const int K = topo.K;
    const int N = K * L;
    channel_realization chan;
    chan.h0.resize(N);
    chan.H.resize(N, topo.n_mobiles);

    fill_column(chan.h0, topo.r0.data(), K, L, topo.alpha, rng);
    for (int i = 0; i < topo.n_mobiles; ++i)
        fill_column(chan.H.col(i), &topo.r_matrix[std::size_t(i) * K], K, L, topo.alpha, rng);
    return chan;
}

double mmse_sir(const Eigen::VectorXcd& h0, const Eigen::MatrixXcd& H) {
    const Eigen::Index N = h0.size();
    if (N < 1 || H.rows() != N)
        throw param_error("mmse_sir: shape mismatch between h0 and H");
    const Eigen::Index n = H.cols();
    if (n < N)
        throw singularity_error("Gram matrix is rank deficient: " + std::to_string(n) +
                                " interferers for dimension " + std::to_string(N));

    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(N, N);
    G.selfadjointView<Eigen::Lower>().rankUpdate(H);

    Eigen::LLT<Eigen::MatrixXcd> llt(G);
    if (llt.info() != Eigen::Success)
        throw singularity_error("Gram factorization failed: " + std::to_string(n) +
                                " interferers for dimension " + std::to_string(N));
    const Eigen::VectorXd d = llt.matrixLLT().diagonal().real();
    const double dmin = d.minCoeff();
    const double dmax = d.maxCoeff();
    if (!(dmin > 0.0) || (dmin / dmax) * (dmin / dmax) < 1e-14)
        throw singularity_error("Gram matrix numerically singular: " + std::to_string(n) +
                                " interferers for dimension " + std::to_string(N));

    const std::complex<double> q = h0.dot(llt.solve(h0));
    const double re = q.real();
    if (std::fabs(q.imag()) > 1e-10 * std::max(std::fabs(re), 1e-300))
        throw numerical_error("quadratic form has a significant imaginary part");
    if (re < 0.0)
        throw numerical_error("quadratic form is negative");
    return re;
}

double mf_sir(const Eigen::VectorXcd& h0, const Eigen::MatrixXcd& H, double cap) {
    if (h0.size() < 1 || H.rows() != h0.size())
        throw param_error("mf_sir: shape mismatch between h0 and H");
    if (!(cap > 0.0))
        throw param_error("mf_sir: cap must be positive");
    const double p = h0.squaredNorm();
    if (p == 0.0)
        throw param_error("mf_sir: h0 is zero");
    const double num = p * p;
    const double den = (H.adjoint() * h0).squaredNorm();
    if (den <= num / cap)
        return cap;
    return num / den;
}

double gamma_lower_bound(int K, double alpha, double lambda) {
    if (K < 1)
        throw param_error("K must be positive");
    if (!(alpha > 2.0))
        throw domain_error("path-loss exponent must exceed 2");
    if (!(lambda > 0.0))
        throw param_error("mobile density must be positive");
    return std::pow(kPi * lambda, 0.5 * alpha) * (1.5 - std::sqrt(2.0)) *
           std::pow(2.0 * double(K), 1.0 - 0.5 * alpha);
}

eig_diagnostic min_eigenvalue_diagnostic(const Eigen::MatrixXcd& H, int L, double alpha,
                                         double lambda, int K) {
    if (K < 1 || L < 1)
        throw param_error("K and L must be positive");
    const Eigen::Index N = Eigen::Index(K) * L;
    if (H.rows() != N)
        throw param_error("diagnostic: H has " + std::to_string(H.rows()) +
                          " rows, expected " + std::to_string(N));
    if (H.cols() < 2 * N)
        throw param_error("diagnostic needs at least 2*K*L interferers");

    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(N, N);
    G.selfadjointView<Eigen::Lower>().rankUpdate(H);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);

    eig_diagnostic out;
    out.min_eigenvalue = std::pow(double(L), 0.5 * alpha - 1.0) * es.eigenvalues()(0);
    out.lower_bound = gamma_lower_bound(K, alpha, lambda);
    out.below_bound = out.min_eigenvalue < out.lower_bound;
    if (out.below_bound)
        diag::emit_warning("smallest scaled Gram eigenvalue " +
                           std::to_string(out.min_eigenvalue) + " fell below the bound " +
                           std::to_string(out.lower_bound));
    return out;
}

sir_sample run_one_realization(const network_params& p, int index, std::uint64_t master_seed) {
    rng_stream rng = rng_stream::derive(master_seed, std::uint64_t(index));
    const topology topo = build_topology(p, rng);
    const channel_realization chan = build_channel(topo, p.L, rng);

    sir_sample s;
    s.sir_mmse = mmse_sir(chan.h0, chan.H);
    s.sir_mf = mf_sir(chan.h0, chan.H, p.mf_cap);
    s.p_k = received_power_sum(topo.r0, p.L, p.alpha);
    s.eta = std::log2(1.0 + s.sir_mmse);
    s.realization_index = index;
    s.seed = master_seed;
    return s;
}

namespace {

std::vector<sir_sample> finalize_run(std::vector<sir_sample>&& slots,
                                     const std::vector<char>& ok,
                                     const std::vector<std::string>& why, int n_realizations) {
    std::vector<sir_sample> samples;
    samples.reserve(slots.size());
    int failures = 0;
    for (int r = 0; r < n_realizations; ++r) {
        if (ok[r]) {
            samples.push_back(std::move(slots[r]));
        } else {
            ++failures;
            diag::emit_warning("realization " + std::to_string(r) + " failed: " + why[r]);
        }
    }
    if (failures > 0.01 * n_realizations)
        throw sim_failure_error(std::to_string(failures) + " of " +
                                std::to_string(n_realizations) +
                                " realizations failed (threshold 1%)");
    return samples;
}

} // namespace

std::vector<sir_sample> run_realizations_serial(const network_params& p, int n_realizations,
                                                std::uint64_t master_seed) {
    if (n_realizations < 0)
        throw param_error("n_realizations must be nonnegative");
    validate_params(p);
    std::vector<sir_sample> slots(static_cast<std::size_t>(n_realizations));
    std::vector<char> ok(std::size_t(n_realizations), 0);
    std::vector<std::string> why(static_cast<std::size_t>(n_realizations));
    for (int r = 0; r < n_realizations; ++r) {
        try {
            slots[r] = run_one_realization(p, r, master_seed);
            ok[r] = 1;
        } catch (const error& e) {
            why[r] = e.what();
        }
    }
    return finalize_run(std::move(slots), ok, why, n_realizations);
}

std::vector<sir_sample> run_realizations_parallel(const network_params& p, int n_realizations,
                                                  std::uint64_t master_seed, int jobs) {
    if (n_realizations < 0)
        throw param_error("n_realizations must be nonnegative");
    validate_params(p);
#ifndef COOPNET_HAVE_OPENMP
    (void)jobs;
    return run_realizations_serial(p, n_realizations, master_seed);
#else
    std::vector<sir_sample> slots(static_cast<std::size_t>(n_realizations));
    std::vector<char> ok(std::size_t(n_realizations), 0);
    std::vector<std::string> why(static_cast<std::size_t>(n_realizations));
    const int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int r = 0; r < n_realizations; ++r) {
        try {
            slots[r] = run_one_realization(p, r, master_seed);
            ok[r] = 1;
        } catch (const error& e) {
            why[r] = e.what();
        }
    }
    return finalize_run(std::move(slots), ok, why, n_realizations);
#endif
}

std::vector<sir_sample> run_realizations(const network_params& p, int n_realizations,
                                         std::uint64_t master_seed, int jobs) {
#ifdef COOPNET_HAVE_OPENMP
    if (jobs != 1)
        return run_realizations_parallel(p, n_realizations, master_seed, jobs);
#endif
    (void)jobs;
    return run_realizations_serial(p, n_realizations, master_seed);
}

} // namespace coopnet
