#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coreborder/dataset.hpp"
#include "coreborder/geometry.hpp"
#include "coreborder/resampling.hpp"
#include "coreborder/standardize.hpp"

namespace coreborder {

struct MetricsReport {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;
    double accuracy = 0.0;  ///< fraction of exact label matches
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    Label positive_label;
};

/// Binary confusion counts against `positive_label`. Precision, recall and
/// F1 are 0 whenever their denominator is 0. Throws DataError on a length
/// mismatch or empty input.
MetricsReport classification_metrics(std::span<const Label> predicted, std::span<const Label> truth,
                                     const Label& positive_label);

struct Split {
    Dataset train;
    Dataset test;
};

/// Per-class proportional split: each class of m rows sends
/// round(test_fraction * m) rows (clamped to [1, m - 1]) to the test side.
/// Both sides keep the original row order and ids.
Split stratified_split(const Dataset& data, double test_fraction, std::uint64_t seed);

/// Majority vote among the k nearest training rows. Distance ties go to the
/// lower training position; vote ties go to the tied label whose closest
/// neighbor ranks first.
std::vector<Label> knn_predict(const Dataset& train, const Dataset& queries, std::size_t k,
                               NormOrder p);
std::vector<Label> knn_predict(const Dataset& train, std::span<const double> query_rows,
                               std::size_t k, NormOrder p);

/// Smallest class; on equal counts the later label in ascending order, which
/// makes it the complement of majority_minority() on binary data.
Label minority_label(const Dataset& data);

struct ExperimentConfig {
    ResampleConfig resample;
    Normalization normalize = Normalization::zscore;
    double test_fraction = 0.2;
    std::size_t classifier_k = 5;
};

struct SeedOutcome {
    std::uint64_t seed = 0;
    MetricsReport baseline;
    MetricsReport borderline;
    std::size_t baseline_train_size = 0;
    std::size_t borderline_train_size = 0;
};

struct ExperimentRecord {
    std::string dataset_name;
    ExperimentConfig config;
    std::vector<SeedOutcome> per_seed;
    double baseline_f1 = 0.0;    ///< mean over seeds
    double borderline_f1 = 0.0;  ///< mean over seeds
    double improvement = 0.0;    ///< borderline_f1 - baseline_f1

    /// Seeds where the borderline arm's F1 is strictly higher.
    std::size_t wins() const;
};

/// Whole-minority oversampling against border-only oversampling.
///
/// For each seed: stratified split, standardization fitted on the training
/// side, then two arms trained on resampled copies of the training side and
/// scored on the same untouched test side with the k-NN classifier.
///  - baseline: oversample_class over every minority training row, to balance.
///  - borderline: partition, downsample the majority core by
///    config.resample.compression, oversample the minority border up to the
///    majority count. An empty minority border falls back to the whole
///    class with a warning.
/// Both arms use the same strategy and seed, so the candidate pool is the
/// only difference when compression is 0.
ExperimentRecord borderline_experiment(const Dataset& data, const ExperimentConfig& config,
                                       std::span<const std::uint64_t> seeds,
                                       std::string dataset_name = "dataset");

/// Runs seeds config.resample.seed, config.resample.seed + 1, ...
ExperimentRecord borderline_experiment(const Dataset& data, const ExperimentConfig& config,
                                       std::size_t n_seeds, std::string dataset_name = "dataset");

struct SweepRow {
    double compression = 0.0;
    std::size_t n_train_after = 0;
    MetricsReport metrics;
};

struct SweepResult {
    std::string dataset_name;
    ExperimentConfig config;
    std::vector<Label> compressed_classes;
    std::vector<SweepRow> rows;
};

/// Imbalance ratio (largest / smallest class) above which only the majority
/// class is compressed.
inline constexpr double kMajorityOnlyRatio = 1.5;

/// Accuracy against compression. One split (seeded by config.resample.seed)
/// and one partition of the training side; at each level the compressed
/// classes lose removal_count(c, m) rows via downsample_core, the classifier
/// is retrained and scored on the untouched test side.
///
/// `levels` must be strictly ascending within [0, 1] and start at 0.
SweepResult compression_sweep(const Dataset& data, std::span<const double> levels,
                              const ExperimentConfig& config, std::string dataset_name = "dataset");

}  // namespace coreborder
