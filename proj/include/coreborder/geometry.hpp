#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "coreborder/dataset.hpp"

namespace coreborder {

/// Order of a Minkowski norm: any finite p > 0, or infinity for the max-norm.
class NormOrder {
public:
    /// Throws DataError unless p > 0 (NaN rejected, +inf accepted).
    explicit NormOrder(double p = 2.0);

    static NormOrder infinity() { return NormOrder(std::numeric_limits<double>::infinity()); }

    double value() const { return p_; }
    bool is_infinite() const { return p_ == std::numeric_limits<double>::infinity(); }

    /// "inf" for the max-norm, otherwise the shortest decimal form of p.
    std::string to_string() const;

    /// Accepts a positive decimal or "inf"/"infinity" (case-insensitive).
    static NormOrder parse(std::string_view text);

    friend bool operator==(const NormOrder&, const NormOrder&) = default;

private:
    double p_;
};

/// Minkowski distance (sum |a_k - b_k|^p)^(1/p); max |a_k - b_k| for p = inf.
/// Throws DataError on dimension mismatch, empty vectors, or non-finite entries.
double minkowski_distance(std::span<const double> a, std::span<const double> b, NormOrder p);

/// Per-point mean distance to the k nearest same-class neighbors.
struct DistanceProfile {
    Label class_label;
    std::vector<std::size_t> members;  ///< dataset positions, ascending
    std::vector<double> avg_distance;  ///< aligned with members
    std::size_t k = 0;
    NormOrder p;
};

/// Average k-NN distance of every row in `members` to the other rows in
/// `members`. A point is never its own neighbor; candidates at equal distance
/// are ranked by ascending position, and the k distances are summed nearest
/// first. `members` must be ascending dataset positions.
///
/// Throws DataError when fewer than two members are given or k is not in
/// [1, members.size() - 1].
DistanceProfile knn_average_profile(const Dataset& data, std::span<const std::size_t> members,
                                    std::size_t k, NormOrder p);

/// Profile of every row carrying `label`.
DistanceProfile knn_average_profile(const Dataset& data, const Label& label, std::size_t k,
                                    NormOrder p);

/// Percentile by sorted linear interpolation: rank r = (m-1)*alpha/100,
/// result v[floor r] + frac(r) * (v[floor r + 1] - v[floor r]).
double percentile(std::span<const double> values, double alpha);

/// Threshold of a profile, i.e. percentile(profile.avg_distance, alpha).
double percentile_threshold(const DistanceProfile& profile, double alpha);

/// Core/border split of one class.
struct ClassPartition {
    Label label;
    std::vector<std::size_t> members;  ///< dataset positions, ascending
    std::vector<double> avg_distance;  ///< aligned with members
    double threshold = 0.0;
    std::vector<std::size_t> core;    ///< avg_distance <= threshold, ascending positions
    std::vector<std::size_t> border;  ///< avg_distance > threshold, ascending positions
    /// Class too small for k under lenient mode: every row is core, the
    /// distances and threshold are zero.
    bool degenerate = false;

    /// Average distance of the member at dataset position `pos`.
    double distance_of(std::size_t pos) const;
};

/// Partition of every class of a dataset, classes in ascending label order.
struct Partition {
    std::size_t k = 0;
    NormOrder p;
    double alpha = 0.0;
    std::vector<ClassPartition> classes;

    /// Throws DataError if `label` has no entry.
    const ClassPartition& at(const Label& label) const;
};

/// Splits a profile at its alpha-th percentile: border iff d > d_t.
ClassPartition partition_profile(const DistanceProfile& profile, double alpha);

/// Profiles and splits the rows in `members` as one class.
ClassPartition partition_class(const Dataset& data, std::span<const std::size_t> members,
                               std::size_t k, NormOrder p, double alpha);

struct PartitionOptions {
    std::size_t k = 5;
    NormOrder p{2.0};
    double alpha = 80.0;
    /// When false, any class with at most k rows is an error. When true such
    /// classes are marked all-core with a warning.
    bool lenient = false;
};

/// Applies partition_class to every class independently.
Partition partition_dataset(const Dataset& data, const PartitionOptions& options);

}  // namespace coreborder
