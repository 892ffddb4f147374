#pragma once

#include "coopnet/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coopnet {

inline constexpr const char* kVersion = "coopnet/0.3.1";

struct result_row {
    std::string sweep_param;
    double sweep_value = 0.0;
    std::string statistic;
    double value = 0.0;
    double stddev = 0.0;
    long n_samples = 0;
};

struct provenance_info {
    std::string experiment;
    std::vector<std::string> config_echo;
    std::uint64_t master_seed = 0;
    std::string version = kVersion;
    double walltime_s = 0.0;
};

struct experiment_result {
    provenance_info provenance;
    std::vector<result_row> rows;
};

std::string format_csv(const experiment_result& result);
std::string format_json(const experiment_result& result);

// path empty: stdout
void write_result(const experiment_result& result, const std::string& path,
                  output_format_t format);

} // namespace coopnet
