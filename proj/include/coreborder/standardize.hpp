#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "coreborder/dataset.hpp"

namespace coreborder {

enum class Normalization { off, zscore };

std::string_view to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

/// Per-feature statistics fitted on one dataset, reusable on another.
struct Standardization {
    Normalization mode = Normalization::off;
    std::vector<double> mean;    ///< per feature
    std::vector<double> stddev;  ///< population (divisor n)
    std::vector<bool> constant;  ///< zero spread: the column passes through unscaled

    /// (x - mean) / stddev per non-constant column; identity when mode is off.
    Dataset apply(const Dataset& data) const;

    /// Inverse of apply.
    Dataset invert(const Dataset& data) const;
};

/// Fits statistics on `data` and returns the transformed dataset alongside
/// them. Constant columns are left as-is with a warning.
std::pair<Dataset, Standardization> standardize(const Dataset& data, Normalization mode);

}  // namespace coreborder
