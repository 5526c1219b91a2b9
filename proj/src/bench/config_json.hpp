#pragma once

#include <json.hpp>

#include "deduction/bench/config.hpp"

namespace deduction::bench {

// Config echo with every default resolved, for the run manifest.
nlohmann::json config_to_json(const BenchmarkConfig& config);

}  // namespace deduction::bench
