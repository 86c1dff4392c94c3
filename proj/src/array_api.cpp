#include "coreborder/array_api.hpp"

#include "coreborder/error.hpp"

namespace coreborder::array_api {

Dataset to_dataset(std::span<const double> features, std::size_t n, std::size_t d,
                   std::span<const Label> labels) {
    if (n == 0 || d == 0) throw DataError("array shape must be non-empty");
    if (features.size() != n * d) {
        throw DataError("feature array holds " + std::to_string(features.size()) + " values, shape is " +
                        std::to_string(n) + " x " + std::to_string(d));
    }
    if (labels.size() != n) {
        throw DataError("label array length " + std::to_string(labels.size()) + " differs from row count " +
                        std::to_string(n));
    }
    return Dataset({features.begin(), features.end()}, d, {labels.begin(), labels.end()});
}

ArrayPartition bind_partition(std::span<const double> features, std::size_t n, std::size_t d,
                              std::span<const Label> labels, std::size_t k, NormOrder p,
                              double alpha) {
    const auto partition = partition_dataset(to_dataset(features, n, d, labels), PartitionOptions{k, p, alpha, false});
    ArrayPartition out;
    for (const auto& cls : partition.classes) {
        out.labels.push_back(cls.label);
        out.core.push_back(cls.core);
        out.border.push_back(cls.border);
        out.thresholds.push_back(cls.threshold);
    }
    return out;
}

ResampleResult bind_oversample_border(std::span<const double> features, std::size_t n, std::size_t d,
                                      std::span<const Label> labels, const ResampleConfig& config,
                                      const Label& class_label) {
    const auto data = to_dataset(features, n, d, labels);
    return oversample_border(data, partition_dataset(data, config), config, class_label);
}

ResampleResult bind_downsample_core(std::span<const double> features, std::size_t n, std::size_t d,
                                    std::span<const Label> labels, const ResampleConfig& config,
                                    const Label& class_label) {
    const auto data = to_dataset(features, n, d, labels);
    return downsample_core(data, partition_dataset(data, config), config, class_label);
}

ResampleResult bind_hybrid(std::span<const double> features, std::size_t n, std::size_t d,
                           std::span<const Label> labels, const ResampleConfig& config) {
    return hybrid_resample(to_dataset(features, n, d, labels), config);
}

SweepResult bind_sweep(std::span<const double> features, std::size_t n, std::size_t d,
                       std::span<const Label> labels, std::span<const double> levels,
                       const ExperimentConfig& config) {
    return compression_sweep(to_dataset(features, n, d, labels), levels, config);
}

}  // namespace coreborder::array_api
