#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coreborder/dataset.hpp"
#include "coreborder/geometry.hpp"

namespace coreborder {

enum class Strategy { interpolate, duplicate };
enum class RemovalPolicy { random, densest_first };

std::string_view to_string(Strategy s);
std::string_view to_string(RemovalPolicy r);
Strategy parse_strategy(std::string_view text);
RemovalPolicy parse_removal_policy(std::string_view text);

/// Oversample the class up to the size of the largest class.
struct BalanceToMajority {
    friend bool operator==(BalanceToMajority, BalanceToMajority) = default;
};

/// Oversample the class up to an explicit row count.
struct TargetCount {
    std::size_t count = 0;
    friend bool operator==(TargetCount, TargetCount) = default;
};

using OversampleTarget = std::variant<BalanceToMajority, TargetCount>;

struct ResampleConfig {
    std::size_t k = 5;
    NormOrder p{2.0};
    double alpha = 80.0;
    double compression = 0.0;  ///< fraction of a class's rows to remove
    OversampleTarget oversample_target = BalanceToMajority{};
    Strategy strategy = Strategy::interpolate;
    RemovalPolicy removal_policy = RemovalPolicy::random;
    std::uint64_t seed = 0;
    bool lenient = false;

    PartitionOptions partition_options() const { return {k, p, alpha, lenient}; }

    /// Throws DataError for compression outside [0, 1], alpha outside
    /// [0, 100], or k == 0.
    void validate() const;
};

/// Partition using the neighbor/percentile settings of a resampling config.
Partition partition_dataset(const Dataset& data, const ResampleConfig& config);

enum class Provenance { original, synthetic };
std::string_view to_string(Provenance p);

/// Source of a synthetic row: parent_a + u * (parent_b - parent_a).
/// Duplicates record parent_a == parent_b and u == 0.
struct SyntheticParents {
    std::size_t parent_a = 0;  ///< row id
    std::size_t parent_b = 0;  ///< row id
    double u = 0.0;
};

struct ResampleResult {
    Dataset dataset;
    std::vector<Provenance> provenance;     ///< one per output row
    std::vector<SyntheticParents> parents;  ///< one per synthetic row, in output order
    std::vector<std::size_t> removed_ids;   ///< row ids in removal order

    std::size_t synthetic_count() const { return parents.size(); }
};

/// Wraps a dataset as an unmodified result (every row original).
ResampleResult unchanged(Dataset data);

/// a + u * (b - a), componentwise.
std::vector<double> interpolate(std::span<const double> a, std::span<const double> b, double u);

/// Row count to remove from a class of m rows at the given compression:
/// floor(compression * m), computed with a 1e-9 guard so that decimal levels
/// such as 0.29 * 100 give 29.
std::size_t removal_count(double compression, std::size_t m);

/// Appends synthetic rows to `class_label` until it reaches the target count,
/// drawing parents only from the class's border rows. Original rows are kept
/// in place and unmodified; synthetic rows follow them with fresh row ids.
///
/// Throws DataError when the border is empty or the target is below the
/// current class size. A single border row under the interpolate strategy
/// falls back to duplication with a warning.
ResampleResult oversample_border(const Dataset& data, const Partition& partition,
                                 const ResampleConfig& config, const Label& class_label);

/// Same as oversample_border with every row of the class as a candidate
/// parent: the whole-class oversampler the border variant is compared against.
ResampleResult oversample_class(const Dataset& data, const ResampleConfig& config,
                                const Label& class_label);

/// Removes removal_count(compression, m) rows from `class_label`, taking core
/// rows before any border row. Survivors keep their order, values and ids.
ResampleResult downsample_core(const Dataset& data, const Partition& partition,
                               const ResampleConfig& config, const Label& class_label);

/// downsample_core applied to several classes at the same compression. Each
/// class draws from its own stream seeded with config.seed, so the result
/// equals applying downsample_core class by class.
ResampleResult downsample_classes(const Dataset& data, const Partition& partition,
                                  const ResampleConfig& config, std::span<const Label> labels);

/// Binary hybrid: partition, downsample the majority core by
/// config.compression, then oversample the minority border up to the
/// post-downsampling majority count (or the explicit target).
/// The majority is the larger class; on equal counts the first label in
/// ascending order. Throws DataError unless exactly two classes are present.
ResampleResult hybrid_resample(const Dataset& data, const ResampleConfig& config);

/// Hybrid resampling with a precomputed partition of `data`.
ResampleResult hybrid_resample(const Dataset& data, const Partition& partition,
                               const ResampleConfig& config);

/// Rebuilds `result` from the features of `source`, the dataset it was
/// resampled from (possibly in a different affine scaling): original rows are
/// looked up by row id and synthetic rows are recomputed from their recorded
/// parents. Labels, ids, provenance and parents are kept.
ResampleResult replay_on(const ResampleResult& result, const Dataset& source);

/// Majority and minority labels of a binary dataset (see hybrid_resample).
std::pair<Label, Label> majority_minority(const Dataset& data);

}  // namespace coreborder
