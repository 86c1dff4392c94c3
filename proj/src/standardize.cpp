#include "coreborder/standardize.hpp"

#include <cmath>

#include "coreborder/diagnostics.hpp"
#include "coreborder/error.hpp"

namespace coreborder {

std::string_view to_string(Normalization n) {
    return n == Normalization::zscore ? "zscore" : "off";
}

Normalization parse_normalization(std::string_view text) {
    if (text == "zscore") return Normalization::zscore;
    if (text == "off") return Normalization::off;
    throw DataError("unknown normalization '" + std::string(text) + "' (zscore, off)");
}

Dataset Standardization::apply(const Dataset& data) const {
    if (mode == Normalization::off) return data;
    if (data.dims() != mean.size()) throw DataError("standardization fitted on a different column count");
    const std::size_t d = data.dims();
    std::vector<double> out(data.features().begin(), data.features().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t c = i % d;
        if (!constant[c]) out[i] = (out[i] - mean[c]) / stddev[c];
    }
    return data.with_features(std::move(out));
}

Dataset Standardization::invert(const Dataset& data) const {
    if (mode == Normalization::off) return data;
    if (data.dims() != mean.size()) throw DataError("standardization fitted on a different column count");
    const std::size_t d = data.dims();
    std::vector<double> out(data.features().begin(), data.features().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t c = i % d;
        if (!constant[c]) out[i] = out[i] * stddev[c] + mean[c];
    }
    return data.with_features(std::move(out));
}

std::pair<Dataset, Standardization> standardize(const Dataset& data, Normalization mode) {
    Standardization stats;
    stats.mode = mode;
    if (mode == Normalization::off) return {data, stats};
    if (data.empty()) throw DataError("cannot standardize an empty dataset");

    const std::size_t n = data.size();
    const std::size_t d = data.dims();
    stats.mean.assign(d, 0.0);
    stats.stddev.assign(d, 0.0);
    stats.constant.assign(d, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < d; ++c) stats.mean[c] += data.at(i, c);
    }
    for (auto& m : stats.mean) m /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            const double t = data.at(i, c) - stats.mean[c];
            stats.stddev[c] += t * t;
        }
    }
    for (std::size_t c = 0; c < d; ++c) {
        stats.stddev[c] = std::sqrt(stats.stddev[c] / static_cast<double>(n));
        if (!(stats.stddev[c] > 0.0)) {
            stats.constant[c] = true;
            warn("feature '" + data.feature_names()[c] + "' is constant; left unscaled");
        }
    }
    return {stats.apply(data), stats};
}

}  // namespace coreborder
