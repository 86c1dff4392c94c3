#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace coreborder {

using Label = std::string;

/// Immutable labeled feature matrix, stored row-major.
///
/// Rows are addressed two ways: by position (0..size()-1 in the current
/// dataset) and by row id, a stable identifier carried through subsetting
/// and resampling. A dataset built without explicit ids gets ids equal to
/// positions.
class Dataset {
public:
    Dataset() = default;

    /// Throws DataError when dims == 0, features.size() != labels.size() * dims,
    /// any feature is non-finite, or row ids are missing/duplicated.
    Dataset(std::vector<double> features, std::size_t dims, std::vector<Label> labels,
            std::vector<std::size_t> row_ids = {}, std::vector<std::string> feature_names = {},
            std::string label_name = "label");

    std::size_t size() const { return labels_.size(); }
    std::size_t dims() const { return dims_; }
    bool empty() const { return labels_.empty(); }

    std::span<const double> row(std::size_t pos) const {
        return {features_.data() + pos * dims_, dims_};
    }
    double at(std::size_t pos, std::size_t col) const { return features_[pos * dims_ + col]; }
    const Label& label(std::size_t pos) const { return labels_[pos]; }
    std::size_t row_id(std::size_t pos) const { return row_ids_[pos]; }

    std::span<const double> features() const { return features_; }
    const std::vector<Label>& labels() const { return labels_; }
    const std::vector<std::size_t>& row_ids() const { return row_ids_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const std::string& label_name() const { return label_name_; }

    /// Distinct labels in ascending lexicographic order.
    std::vector<Label> class_labels() const;

    /// Positions of the rows carrying `label`, ascending.
    std::vector<std::size_t> class_rows(const Label& label) const;

    std::size_t class_count(const Label& label) const;

    /// Largest row id plus one (0 for an empty dataset).
    std::size_t next_row_id() const;

    /// Rows at `positions` (distinct), in the given order, keeping their row ids.
    Dataset select(std::span<const std::size_t> positions) const;

    /// Same rows with a new feature matrix of identical shape.
    Dataset with_features(std::vector<double> features) const;

    /// Same features and labels with row ids reset to 0..n-1.
    Dataset renumbered() const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<double> features_;
    std::size_t dims_ = 0;
    std::vector<Label> labels_;
    std::vector<std::size_t> row_ids_;
    std::vector<std::string> feature_names_;
    std::string label_name_ = "label";
};

}  // namespace coreborder
