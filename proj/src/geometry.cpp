#include "coopnet/geometry.hpp"

#include "coopnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coopnet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kTwoPi = 2.0 * kPi;

double dist2(const point& a, const point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

} // namespace

void validate_params(const network_params& p) {
    if (!(p.lambda > 0.0))
        throw param_error("lambda must be positive");
    if (!(p.lambda_b > 0.0))
        throw param_error("lambda_b must be positive");
    if (!(p.alpha > 2.0))
        throw param_error("alpha must exceed 2");
    if (p.alpha > 8.0)
        diag::emit_warning("alpha > 8 is outside the validated range");
    if (p.K < 1)
        throw param_error("K must be a positive integer");
    if (p.L < 1)
        throw param_error("L must be a positive integer");
    if (p.n_mobiles <= p.K * p.L)
        throw param_error("n_mobiles must exceed K*L");
    if (p.region_radius > 0.0) {
        const double expected = p.lambda * kPi * p.region_radius * p.region_radius;
        if (expected + 0.5 < double(p.n_mobiles))
            throw param_error("region_radius too small for the requested n_mobiles");
    }
    if (!(p.mf_cap > 0.0))
        throw param_error("mf_cap must be positive");
}

double default_region_radius(const network_params& p) {
    return std::sqrt(double(p.n_mobiles) / (p.lambda * kPi));
}

std::vector<point> sample_poisson_disk(double density, double radius, count_mode mode,
                                       rng_stream& rng) {
    if (!(density > 0.0))
        throw param_error("sample_poisson_disk: density must be positive");
    if (!(radius > 0.0))
        throw param_error("sample_poisson_disk: radius must be positive");

    const double mean = density * kPi * radius * radius;
    const long n = (mode == count_mode::fixed) ? std::lround(mean) : rng.poisson(mean);

    std::vector<point> pts(static_cast<std::size_t>(n));
    for (auto& pt : pts) {
        const double r = radius * std::sqrt(rng.uniform());
        const double th = kTwoPi * rng.uniform();
        pt = {r * std::cos(th), r * std::sin(th)};
    }
    return pts;
}

std::vector<point> hex_grid_cell_edge(double lambda_b, double extent) {
    if (!(lambda_b > 0.0))
        throw param_error("hex_grid_cell_edge: lambda_b must be positive");
    const double a = std::sqrt(2.0 / (std::sqrt(3.0) * lambda_b)); // lattice spacing
    const double d_h = a / std::sqrt(3.0);                         // cell-edge length
    if (!(extent >= 2.0 * d_h))
        throw param_error("hex_grid_cell_edge: extent must span at least 2 cell-edge lengths");

    // triangular lattice, one axis along x, shifted so a vertex lands at the origin
    const double off_x = -0.5 * a;
    const double off_y = -a * std::sqrt(3.0) / 6.0;
    const int nmax = int(std::ceil(extent / a)) + 2;

    std::vector<point> pts;
    for (int i = -nmax; i <= nmax; ++i) {
        for (int j = -nmax; j <= nmax; ++j) {
            const double x = a * (i + 0.5 * j) + off_x;
            const double y = a * (std::sqrt(3.0) / 2.0) * j + off_y;
            if (x * x + y * y <= extent * extent)
                pts.push_back({x, y});
        }
    }
    return pts;
}

topology finalize_topology(std::vector<point> bs, std::vector<point> mobiles, int K,
                           int n_mobiles) {
    if (int(bs.size()) < K)
        throw topology_error("fewer base stations generated than the cluster size K");
    if (int(mobiles.size()) < n_mobiles)
        throw topology_error("fewer mobiles generated than n_mobiles; enlarge the region");

    topology topo;
    topo.K = K;
    topo.n_mobiles = n_mobiles;

    // mobiles sorted by distance from the origin, nearest n_mobiles kept
    std::vector<int> morder(mobiles.size());
    std::iota(morder.begin(), morder.end(), 0);
    std::sort(morder.begin(), morder.end(), [&](int ia, int ib) {
        const double ra = mobiles[ia].x * mobiles[ia].x + mobiles[ia].y * mobiles[ia].y;
        const double rb = mobiles[ib].x * mobiles[ib].x + mobiles[ib].y * mobiles[ib].y;
        if (ra != rb)
            return ra < rb;
        return ia < ib;
    });
    topo.mobile_positions.reserve(n_mobiles);
    for (int i = 0; i < n_mobiles; ++i)
        topo.mobile_positions.push_back(mobiles[morder[i]]);

    // cooperating set: K nearest BSs, exact ties broken by angle then index
    std::vector<int> border(bs.size());
    std::iota(border.begin(), border.end(), 0);
    std::sort(border.begin(), border.end(), [&](int ia, int ib) {
        const double ra = bs[ia].x * bs[ia].x + bs[ia].y * bs[ia].y;
        const double rb = bs[ib].x * bs[ib].x + bs[ib].y * bs[ib].y;
        if (ra != rb)
            return ra < rb;
        const double ta = std::atan2(bs[ia].y, bs[ia].x);
        const double tb = std::atan2(bs[ib].y, bs[ib].x);
        if (ta != tb)
            return ta < tb;
        return ia < ib;
    });
    topo.coop_bs_indices.assign(border.begin(), border.begin() + K);

    topo.r0.resize(K);
    for (int j = 0; j < K; ++j) {
        const point& b = bs[topo.coop_bs_indices[j]];
        topo.r0[j] = std::sqrt(b.x * b.x + b.y * b.y);
    }
    if (!(topo.r0[0] > 0.0))
        throw topology_error("a base station coincides with the test mobile at the origin");

    topo.r_matrix.resize(std::size_t(n_mobiles) * K);
    for (int i = 0; i < n_mobiles; ++i) {
        const point& m = topo.mobile_positions[i];
        for (int j = 0; j < K; ++j) {
            const point& b = bs[topo.coop_bs_indices[j]];
            topo.r_matrix[std::size_t(i) * K + j] = std::sqrt(dist2(m, b));
        }
    }

    topo.bs_positions = std::move(bs);
    return topo;
}

topology build_topology(const network_params& p, rng_stream& rng) {
    validate_params(p);
    const double R = p.region_radius > 0.0 ? p.region_radius : default_region_radius(p);

    const count_mode mobile_mode = (p.bs_model == bs_model_t::poisson_random_count)
                                       ? count_mode::random
                                       : count_mode::fixed;
    std::vector<point> mobiles = sample_poisson_disk(p.lambda, R, mobile_mode, rng);

    std::vector<point> bs;
    switch (p.bs_model) {
    case bs_model_t::poisson_fixed_count:
        bs = sample_poisson_disk(p.lambda_b, R, count_mode::fixed, rng);
        break;
    case bs_model_t::poisson_random_count:
        bs = sample_poisson_disk(p.lambda_b, R, count_mode::random, rng);
        break;
    case bs_model_t::hex_grid_cell_edge:
        bs = hex_grid_cell_edge(p.lambda_b, R);
        break;
    }

    topology topo = finalize_topology(std::move(bs), std::move(mobiles), p.K, p.n_mobiles);
    topo.alpha = p.alpha;
    return topo;
}

double received_power_sum(const std::vector<double>& r0, int L, double alpha) {
    if (L < 1)
        throw param_error("received_power_sum: L must be positive");
    double sum = 0.0;
    for (double r : r0) {
        if (!(r > 0.0))
            throw singularity_error("received_power_sum: zero distance");
        sum += std::pow(r, -alpha);
    }
    return double(L) * sum;
}

} // namespace coopnet
