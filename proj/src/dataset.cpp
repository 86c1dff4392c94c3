#include "coreborder/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "coreborder/error.hpp"

namespace coreborder {

Dataset::Dataset(std::vector<double> features, std::size_t dims, std::vector<Label> labels,
                 std::vector<std::size_t> row_ids, std::vector<std::string> feature_names,
                 std::string label_name)
    : features_(std::move(features)),
      dims_(dims),
      labels_(std::move(labels)),
      row_ids_(std::move(row_ids)),
      feature_names_(std::move(feature_names)),
      label_name_(std::move(label_name)) {
    if (dims_ == 0) throw DataError("dataset needs at least one feature column");
    if (features_.size() != labels_.size() * dims_) {
        throw DataError("feature matrix has " + std::to_string(features_.size()) +
                        " values, expected " + std::to_string(labels_.size()) + " rows x " +
                        std::to_string(dims_) + " columns");
    }
    for (std::size_t i = 0; i < features_.size(); ++i) {
        if (!std::isfinite(features_[i])) {
            throw DataError("non-finite feature value at row " + std::to_string(i / dims_) +
                            ", column " + std::to_string(i % dims_));
        }
    }
    if (row_ids_.empty()) {
        row_ids_.resize(labels_.size());
        std::iota(row_ids_.begin(), row_ids_.end(), std::size_t{0});
    } else if (row_ids_.size() != labels_.size()) {
        throw DataError("row id count does not match row count");
    } else {
        std::unordered_set<std::size_t> seen(row_ids_.begin(), row_ids_.end());
        if (seen.size() != row_ids_.size()) throw DataError("duplicate row ids");
    }
    if (feature_names_.empty()) {
        feature_names_.reserve(dims_);
        for (std::size_t c = 0; c < dims_; ++c) feature_names_.push_back("f" + std::to_string(c));
    } else if (feature_names_.size() != dims_) {
        throw DataError("feature name count does not match column count");
    }
}

std::vector<Label> Dataset::class_labels() const {
    std::vector<Label> out(labels_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> Dataset::class_rows(const Label& label) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) out.push_back(i);
    }
    return out;
}

std::size_t Dataset::class_count(const Label& label) const {
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

std::size_t Dataset::next_row_id() const {
    if (row_ids_.empty()) return 0;
    return *std::max_element(row_ids_.begin(), row_ids_.end()) + 1;
}

Dataset Dataset::select(std::span<const std::size_t> positions) const {
    Dataset out;
    out.dims_ = dims_;
    out.feature_names_ = feature_names_;
    out.label_name_ = label_name_;
    out.features_.reserve(positions.size() * dims_);
    out.labels_.reserve(positions.size());
    out.row_ids_.reserve(positions.size());
    for (std::size_t pos : positions) {
        if (pos >= size()) throw DataError("row position out of range");
        auto r = row(pos);
        out.features_.insert(out.features_.end(), r.begin(), r.end());
        out.labels_.push_back(labels_[pos]);
        out.row_ids_.push_back(row_ids_[pos]);
    }
    return out;
}

Dataset Dataset::with_features(std::vector<double> features) const {
    return Dataset(std::move(features), dims_, labels_, row_ids_, feature_names_, label_name_);
}

Dataset Dataset::renumbered() const {
    return Dataset(features_, dims_, labels_, {}, feature_names_, label_name_);
}

}  // namespace coreborder
