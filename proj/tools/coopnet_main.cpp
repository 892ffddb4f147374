#include "coopnet/config.hpp"
#include "coopnet/errors.hpp"
#include "coopnet/experiments.hpp"
#include "coopnet/output.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"uplink simulator and analytic toolkit for user-centric BS cooperation"};
    app.set_version_flag("--version", std::string(coopnet::kVersion));

    std::string experiment;
    std::string config_path;
    std::string out_path;
    std::string format;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool paper_scale = false;
    int jobs = -1;

    app.add_option("experiment", experiment,
                   "one of fig2_normalized_sir, fig3_eta_cdf, fig4_hex_alpha, "
                   "pk_cdf_table, optimize_density, custom")
        ->required();
    app.add_option("--config", config_path, "flat key = value config file")->required();
    app.add_option("--seed", seed, "override master_seed")->each([&](const std::string&) {
        seed_given = true;
    });
    app.add_option("--out", out_path, "output path (default: config's 'out', else stdout)");
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--paper-scale", paper_scale,
                 "full-scale run: 30,000 mobiles, 10,000 realizations");
    app.add_option("--jobs", jobs, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    coopnet::diag::set_warnings_to_stderr(true);

    coopnet::experiment_config cfg;
    try {
        cfg = coopnet::load_config(config_path, coopnet::parse_experiment_name(experiment));
        if (seed_given)
            cfg.master_seed = seed;
        if (!out_path.empty())
            cfg.output_path = out_path;
        if (format == "csv")
            cfg.output_format = coopnet::output_format_t::csv;
        else if (format == "json")
            cfg.output_format = coopnet::output_format_t::json;
        if (paper_scale)
            coopnet::apply_paper_scale(cfg);
        if (jobs >= 0)
            cfg.jobs = jobs;
        coopnet::validate_params(cfg.params);
    } catch (const coopnet::error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        const coopnet::experiment_result result = coopnet::run_experiment(cfg);
        coopnet::write_result(result, cfg.output_path, cfg.output_format);
    } catch (const coopnet::sim_failure_error& e) {
        std::cerr << "simulation failure: " << e.what() << "\n";
        return 4;
    } catch (const coopnet::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const coopnet::error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
