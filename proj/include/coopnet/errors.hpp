#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace coopnet {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invalid scalar argument or precondition violation
struct param_error : error {
    using error::error;
};

// argument outside the mathematical domain of a formula
struct domain_error : error {
    using error::error;
};

// a generated topology cannot satisfy the requested structure
struct topology_error : error {
    using error::error;
};

// numerically singular linear system
struct singularity_error : error {
    using error::error;
};

// iteration failed to converge, or an instability was detected
struct numerical_error : error {
    using error::error;
};

// bad configuration file or unknown experiment/sweep key
struct config_error : error {
    using error::error;
};

// too many Monte Carlo realizations failed
struct sim_failure_error : error {
    using error::error;
};

namespace diag {

// thread-local warning sink; warnings never abort a computation
void emit_warning(const std::string& msg);
std::vector<std::string> drain_warnings();
std::size_t warning_count();
void set_warnings_to_stderr(bool enabled);

} // namespace diag

} // namespace coopnet
