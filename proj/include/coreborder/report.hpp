#pragma once

#include <string>

#include "json.hpp"

#include "coreborder/evaluation.hpp"
#include "coreborder/geometry.hpp"

namespace coreborder {

using Json = nlohmann::ordered_json;

/// Rounds to 6 decimal places for reporting.
double report_value(double v);

/// Effective settings, always in the same key order.
Json config_json(const ExperimentConfig& config, const std::string& dataset_name);

/// {"experiment": "partition", "config", "rows": [{label, size, threshold, core, border}]}
/// with row ids taken from `data`.
Json partition_report(const Partition& partition, const Dataset& data, const ExperimentConfig& config,
                      const std::string& dataset_name);

/// {"experiment": "borderline", "config", "rows": per seed, "summary"}
Json experiment_report(const ExperimentRecord& record);

/// {"experiment": "sweep", "config", "rows": per level, "compressed_classes"}
Json sweep_report(const SweepResult& result);

/// CSV renderings: "# key=value" config lines, a header, one line per row.
std::string experiment_csv(const ExperimentRecord& record);
std::string sweep_csv(const SweepResult& result);
std::string partition_csv(const Partition& partition, const Dataset& data,
                          const ExperimentConfig& config, const std::string& dataset_name);

/// Checks the top-level shape shared by all reports. Returns an empty string
/// when valid, otherwise a description of the first problem.
std::string validate_report(const Json& report);

}  // namespace coreborder
