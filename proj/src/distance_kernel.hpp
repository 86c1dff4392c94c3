#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "coreborder/geometry.hpp"

namespace coreborder::detail {

/// Minkowski distance without argument validation. Callers guarantee equal
/// lengths and finite entries.
inline double distance(const double* a, const double* b, std::size_t d, const NormOrder& norm) {
    const double p = norm.value();
    if (p == 2.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double t = a[i] - b[i];
            s += t * t;
        }
        return std::sqrt(s);
    }
    if (p == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) s += std::abs(a[i] - b[i]);
        return s;
    }
    double largest = 0.0;
    for (std::size_t i = 0; i < d; ++i) largest = std::max(largest, std::abs(a[i] - b[i]));
    if (norm.is_infinite() || largest == 0.0) return largest;
    // scaled by the largest term so |x|^p cannot overflow for large p
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += std::pow(std::abs(a[i] - b[i]) / largest, p);
    return largest * std::pow(s, 1.0 / p);
}

struct Neighbor {
    double distance;
    std::size_t pos;

    friend bool operator<(const Neighbor& x, const Neighbor& y) {
        return x.distance < y.distance || (x.distance == y.distance && x.pos < y.pos);
    }
};

/// Moves the k smallest neighbors (by distance, then position) to the front of
/// `candidates` in ascending order. k <= candidates.size().
inline void select_nearest(std::vector<Neighbor>& candidates, std::size_t k) {
    if (k < candidates.size()) {
        std::nth_element(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                         candidates.end());
    }
    std::sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k));
}

}  // namespace coreborder::detail
