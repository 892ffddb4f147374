#pragma once

#include "coopnet/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coopnet {

enum class experiment_kind {
    fig2_normalized_sir,
    fig3_eta_cdf,
    fig4_hex_alpha,
    pk_cdf_table,
    optimize_density,
    custom,
};

enum class output_format_t { csv, json };

struct experiment_config {
    experiment_kind experiment = experiment_kind::custom;
    network_params params;

    std::string sweep_param; // custom experiment: which field to sweep
    std::vector<double> sweep_values;

    int n_realizations = 500;
    std::uint64_t master_seed = 12345;
    std::string output_path; // empty: stdout
    output_format_t output_format = output_format_t::csv;
    int m_terms = 10;
    int jobs = 0; // 0: all available cores

    std::vector<int> k_list;
    std::vector<int> l_list;
    std::vector<double> lambda_b_list;
    std::vector<double> pk_out_list;

    double tau_min = 0.0, tau_max = 16.0;
    int tau_points = 0; // 0: no spectral-efficiency CDF rows in custom mode
    double x_min = 0.1, x_max = 100.0;
    int x_points = 50;
    double alpha_min = 3.0, alpha_max = 5.0;
    int alpha_points = 9;
};

experiment_kind parse_experiment_name(const std::string& name);
const char* experiment_name(experiment_kind kind);

// flat "key = value" file, '#' comments; unknown keys are config errors
experiment_config load_config(const std::string& path, experiment_kind kind);

// publication scale: 30,000 mobiles (3,000 BSs implied), 10,000 realizations
void apply_paper_scale(experiment_config& cfg);

// canonical echo of every effective setting, itself valid config syntax
std::vector<std::string> config_echo(const experiment_config& cfg);

} // namespace coopnet
