#pragma once

#include "coopnet/rng.hpp"

#include <vector>

namespace coopnet {

enum class bs_model_t {
    poisson_fixed_count,  // binomial point process, count = round(density * area)
    poisson_random_count, // true Poisson count
    hex_grid_cell_edge,   // hexagonal lattice, origin on a cell vertex
};

enum class count_mode { fixed, random };

struct point {
    double x = 0.0;
    double y = 0.0;
};

struct network_params {
    double lambda = 1.0;   // mobile density
    double lambda_b = 0.1; // base-station density
    double alpha = 4.0;    // path-loss exponent, > 2
    int K = 2;             // cooperating BS count
    int L = 8;             // antennas per BS
    double region_radius = 0.0; // 0: derived from n_mobiles and lambda
    int n_mobiles = 3000;  // interferers used per realization, > K*L
    bs_model_t bs_model = bs_model_t::poisson_fixed_count;
    double mf_cap = 1e12;  // SIR ceiling when matched-filter leakage vanishes
};

void validate_params(const network_params& p);

// radius such that the expected mobile count in the disk equals n_mobiles
double default_region_radius(const network_params& p);

struct topology {
    std::vector<point> bs_positions;
    std::vector<point> mobile_positions; // sorted by distance from origin
    std::vector<int> coop_bs_indices;    // the K BSs nearest the origin
    std::vector<double> r0;              // test-mobile-to-coop-BS distances, nondecreasing
    std::vector<double> r_matrix;        // n_mobiles x K distances, row-major
    int K = 0;
    int n_mobiles = 0;
    double alpha = 4.0; // path-loss exponent carried along for channel builders

    double rij(int i, int j) const { return r_matrix[std::size_t(i) * K + j]; }
};

// i.i.d. uniform points on a disk; radial coordinate via inverse CDF
// (radius * sqrt(u)) so coordinate scaling is exact under seed reuse
std::vector<point> sample_poisson_disk(double density, double radius, count_mode mode,
                                       rng_stream& rng);

// hexagonal lattice of BS positions with the origin exactly on a cell vertex;
// the three nearest BSs sit at the cell-edge length, the next three at twice it
std::vector<point> hex_grid_cell_edge(double lambda_b, double extent);

// distance/selection plumbing shared by build_topology; exposed for tests
topology finalize_topology(std::vector<point> bs, std::vector<point> mobiles, int K,
                           int n_mobiles);

topology build_topology(const network_params& p, rng_stream& rng);

// L * sum r0_k^(-alpha)
double received_power_sum(const std::vector<double>& r0, int L, double alpha);

} // namespace coopnet
