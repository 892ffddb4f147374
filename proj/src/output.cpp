#include "coopnet/output.hpp"
#include "coopnet/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace coopnet {

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string format_csv(const experiment_result& result) {
    std::string out;
    out += "# ";
    out += result.provenance.version;
    out += "\n# experiment: " + result.provenance.experiment;
    out += "\n# master_seed: " + std::to_string(result.provenance.master_seed);
    out += "\n";
    for (const auto& line : result.provenance.config_echo)
        out += "# config: " + line + "\n";
    out += "# walltime_s: " + fmt_double(result.provenance.walltime_s) + "\n";
    out += "sweep_param,sweep_value,statistic,value,stddev,n_samples\n";
    for (const auto& r : result.rows) {
        out += r.sweep_param;
        out += ',';
        out += fmt_double(r.sweep_value);
        out += ',';
        out += r.statistic;
        out += ',';
        out += fmt_double(r.value);
        out += ',';
        out += fmt_double(r.stddev);
        out += ',';
        out += std::to_string(r.n_samples);
        out += '\n';
    }
    return out;
}

std::string format_json(const experiment_result& result) {
    nlohmann::ordered_json j;
    j["provenance"] = {
        {"version", result.provenance.version},
        {"experiment", result.provenance.experiment},
        {"master_seed", result.provenance.master_seed},
        {"config_echo", result.provenance.config_echo},
        {"walltime_s", result.provenance.walltime_s},
    };
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : result.rows) {
        rows.push_back({
            {"sweep_param", r.sweep_param},
            {"sweep_value", r.sweep_value},
            {"statistic", r.statistic},
            {"value", r.value},
            {"stddev", r.stddev},
            {"n_samples", r.n_samples},
        });
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_result(const experiment_result& result, const std::string& path,
                  output_format_t format) {
    const std::string text =
        format == output_format_t::csv ? format_csv(result) : format_json(result);
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot open output file: " + path);
    out << text;
    out.flush();
    if (!out)
        throw error("failed writing output file: " + path);
}

} // namespace coopnet
