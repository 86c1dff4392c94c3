#pragma once

// Entry points over flat row-major arrays, for wrappers in other languages.
// Each call validates shapes once and forwards to the library operation.

#include <cstddef>
#include <span>
#include <vector>

#include "coreborder/evaluation.hpp"
#include "coreborder/geometry.hpp"
#include "coreborder/resampling.hpp"

namespace coreborder::array_api {

inline constexpr const char* kVersion = "1.0.0";

/// Copies a row-major n x d array and its labels into a Dataset. Throws
/// DataError when features.size() != n * d, labels.size() != n, n == 0 or d == 0.
Dataset to_dataset(std::span<const double> features, std::size_t n, std::size_t d,
                   std::span<const Label> labels);

struct ArrayPartition {
    std::vector<Label> labels;                    ///< ascending
    std::vector<std::vector<std::size_t>> core;   ///< row indices per label
    std::vector<std::vector<std::size_t>> border; ///< row indices per label
    std::vector<double> thresholds;               ///< per label
};

ArrayPartition bind_partition(std::span<const double> features, std::size_t n, std::size_t d,
                              std::span<const Label> labels, std::size_t k, NormOrder p,
                              double alpha);

ResampleResult bind_oversample_border(std::span<const double> features, std::size_t n, std::size_t d,
                                      std::span<const Label> labels, const ResampleConfig& config,
                                      const Label& class_label);

ResampleResult bind_downsample_core(std::span<const double> features, std::size_t n, std::size_t d,
                                    std::span<const Label> labels, const ResampleConfig& config,
                                    const Label& class_label);

ResampleResult bind_hybrid(std::span<const double> features, std::size_t n, std::size_t d,
                           std::span<const Label> labels, const ResampleConfig& config);

SweepResult bind_sweep(std::span<const double> features, std::size_t n, std::size_t d,
                       std::span<const Label> labels, std::span<const double> levels,
                       const ExperimentConfig& config);

}  // namespace coreborder::array_api
