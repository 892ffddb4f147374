#pragma once

#include "coopnet/config.hpp"
#include "coopnet/output.hpp"

namespace coopnet {

// dispatch on cfg.experiment; rows are deterministic for a fixed config + seed
experiment_result run_experiment(const experiment_config& cfg);

} // namespace coopnet
