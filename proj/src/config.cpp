#include "coopnet/config.hpp"
#include "coopnet/errors.hpp"

#include <cstdio>
#include <fstream>
#include <string>

namespace coopnet {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t idx = 0;
        const double x = std::stod(v, &idx);
        if (idx != v.size())
            throw config_error("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw config_error("bad numeric value for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t idx = 0;
        const int x = std::stoi(v, &idx);
        if (idx != v.size())
            throw config_error("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw config_error("bad integer value for '" + key + "': " + v);
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t idx = 0;
        const unsigned long long x = std::stoull(v, &idx);
        if (idx != v.size())
            throw config_error("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw config_error("bad seed value for '" + key + "': " + v);
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= v.size()) {
        const auto comma = v.find(',', start);
        const auto piece = trim(v.substr(start, comma - start));
        if (!piece.empty())
            parts.push_back(piece);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return parts;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& piece : split_list(v))
        out.push_back(parse_double(key, piece));
    return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& v) {
    std::vector<int> out;
    for (const auto& piece : split_list(v))
        out.push_back(parse_int(key, piece));
    return out;
}

bs_model_t parse_bs_model(const std::string& v) {
    if (v == "poisson_fixed_count")
        return bs_model_t::poisson_fixed_count;
    if (v == "poisson_random_count")
        return bs_model_t::poisson_random_count;
    if (v == "hex_grid_cell_edge")
        return bs_model_t::hex_grid_cell_edge;
    throw config_error("unknown bs_model: " + v);
}

const char* bs_model_name(bs_model_t m) {
    switch (m) {
    case bs_model_t::poisson_fixed_count: return "poisson_fixed_count";
    case bs_model_t::poisson_random_count: return "poisson_random_count";
    case bs_model_t::hex_grid_cell_edge: return "hex_grid_cell_edge";
    }
    return "poisson_fixed_count";
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <typename T, typename F>
std::string join(const std::vector<T>& xs, F f) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ",";
        out += f(xs[i]);
    }
    return out;
}

void apply_key(experiment_config& cfg, const std::string& key, const std::string& value) {
    if (key == "experiment")
        cfg.experiment = parse_experiment_name(value);
    else if (key == "lambda")
        cfg.params.lambda = parse_double(key, value);
    else if (key == "lambda_b")
        cfg.params.lambda_b = parse_double(key, value);
    else if (key == "alpha")
        cfg.params.alpha = parse_double(key, value);
    else if (key == "K")
        cfg.params.K = parse_int(key, value);
    else if (key == "L")
        cfg.params.L = parse_int(key, value);
    else if (key == "n_mobiles")
        cfg.params.n_mobiles = parse_int(key, value);
    else if (key == "region_radius")
        cfg.params.region_radius = parse_double(key, value);
    else if (key == "bs_model")
        cfg.params.bs_model = parse_bs_model(value);
    else if (key == "n_realizations")
        cfg.n_realizations = parse_int(key, value);
    else if (key == "master_seed")
        cfg.master_seed = parse_u64(key, value);
    else if (key == "out")
        cfg.output_path = value;
    else if (key == "format") {
        if (value == "csv")
            cfg.output_format = output_format_t::csv;
        else if (value == "json")
            cfg.output_format = output_format_t::json;
        else
            throw config_error("unknown output format: " + value);
    } else if (key == "m_terms")
        cfg.m_terms = parse_int(key, value);
    else if (key == "jobs")
        cfg.jobs = parse_int(key, value);
    else if (key == "mf_cap")
        cfg.params.mf_cap = parse_double(key, value);
    else if (key == "sweep_param")
        cfg.sweep_param = value;
    else if (key == "sweep_values")
        cfg.sweep_values = parse_double_list(key, value);
    else if (key == "k_list")
        cfg.k_list = parse_int_list(key, value);
    else if (key == "l_list")
        cfg.l_list = parse_int_list(key, value);
    else if (key == "lambda_b_list")
        cfg.lambda_b_list = parse_double_list(key, value);
    else if (key == "pk_out_list")
        cfg.pk_out_list = parse_double_list(key, value);
    else if (key == "tau_min")
        cfg.tau_min = parse_double(key, value);
    else if (key == "tau_max")
        cfg.tau_max = parse_double(key, value);
    else if (key == "tau_points")
        cfg.tau_points = parse_int(key, value);
    else if (key == "x_min")
        cfg.x_min = parse_double(key, value);
    else if (key == "x_max")
        cfg.x_max = parse_double(key, value);
    else if (key == "x_points")
        cfg.x_points = parse_int(key, value);
    else if (key == "alpha_min")
        cfg.alpha_min = parse_double(key, value);
    else if (key == "alpha_max")
        cfg.alpha_max = parse_double(key, value);
    else if (key == "alpha_points")
        cfg.alpha_points = parse_int(key, value);
    else
        throw config_error("unknown config key '" + key + "'");
}

} // namespace

experiment_kind parse_experiment_name(const std::string& name) {
    if (name == "fig2_normalized_sir")
        return experiment_kind::fig2_normalized_sir;
    if (name == "fig3_eta_cdf")
        return experiment_kind::fig3_eta_cdf;
    if (name == "fig4_hex_alpha")
        return experiment_kind::fig4_hex_alpha;
    if (name == "pk_cdf_table")
        return experiment_kind::pk_cdf_table;
    if (name == "optimize_density")
        return experiment_kind::optimize_density;
    if (name == "custom")
        return experiment_kind::custom;
    throw config_error(
        "unknown experiment '" + name +
        "'; expected one of fig2_normalized_sir, fig3_eta_cdf, fig4_hex_alpha, "
        "pk_cdf_table, optimize_density, custom");
}

const char* experiment_name(experiment_kind kind) {
    switch (kind) {
    case experiment_kind::fig2_normalized_sir: return "fig2_normalized_sir";
    case experiment_kind::fig3_eta_cdf: return "fig3_eta_cdf";
    case experiment_kind::fig4_hex_alpha: return "fig4_hex_alpha";
    case experiment_kind::pk_cdf_table: return "pk_cdf_table";
    case experiment_kind::optimize_density: return "optimize_density";
    case experiment_kind::custom: return "custom";
    }
    return "custom";
}

experiment_config load_config(const std::string& path, experiment_kind kind) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open config file: " + path);
    experiment_config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("malformed config line " + std::to_string(lineno) + ": " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("empty key on config line " + std::to_string(lineno));
        apply_key(cfg, key, value);
    }
    cfg.experiment = kind;
    return cfg;
}

void apply_paper_scale(experiment_config& cfg) {
    cfg.params.n_mobiles = 30000;
    cfg.n_realizations = 10000;
}

std::vector<std::string> config_echo(const experiment_config& cfg) {
    std::vector<std::string> out;
    auto add = [&out](const std::string& k, const std::string& v) {
        out.push_back(k + " = " + v);
    };
    add("experiment", experiment_name(cfg.experiment));
    add("lambda", fmt_double(cfg.params.lambda));
    add("lambda_b", fmt_double(cfg.params.lambda_b));
    add("alpha", fmt_double(cfg.params.alpha));
    add("K", std::to_string(cfg.params.K));
    add("L", std::to_string(cfg.params.L));
    add("n_mobiles", std::to_string(cfg.params.n_mobiles));
    add("region_radius", fmt_double(cfg.params.region_radius));
    add("bs_model", bs_model_name(cfg.params.bs_model));
    add("n_realizations", std::to_string(cfg.n_realizations));
    add("master_seed", std::to_string(cfg.master_seed));
    add("m_terms", std::to_string(cfg.m_terms));
    add("jobs", std::to_string(cfg.jobs));
    add("mf_cap", fmt_double(cfg.params.mf_cap));
    if (!cfg.sweep_param.empty())
        add("sweep_param", cfg.sweep_param);
    if (!cfg.sweep_values.empty())
        add("sweep_values", join(cfg.sweep_values, fmt_double));
    if (!cfg.k_list.empty())
        add("k_list", join(cfg.k_list, [](int v) { return std::to_string(v); }));
    if (!cfg.l_list.empty())
        add("l_list", join(cfg.l_list, [](int v) { return std::to_string(v); }));
    if (!cfg.lambda_b_list.empty())
        add("lambda_b_list", join(cfg.lambda_b_list, fmt_double));
    if (!cfg.pk_out_list.empty())
        add("pk_out_list", join(cfg.pk_out_list, fmt_double));
    if (cfg.tau_points > 0) {
        add("tau_min", fmt_double(cfg.tau_min));
        add("tau_max", fmt_double(cfg.tau_max));
        add("tau_points", std::to_string(cfg.tau_points));
    }
    add("x_min", fmt_double(cfg.x_min));
    add("x_max", fmt_double(cfg.x_max));
    add("x_points", std::to_string(cfg.x_points));
    add("alpha_min", fmt_double(cfg.alpha_min));
    add("alpha_max", fmt_double(cfg.alpha_max));
    add("alpha_points", std::to_string(cfg.alpha_points));
    return out;
}

} // namespace coopnet
