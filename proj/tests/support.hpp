#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check, apart from minkowski_distance for pairwise distances.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coreborder/dataset.hpp"
#include "coreborder/geometry.hpp"

namespace oracle {

using coreborder::Dataset;
using coreborder::Label;
using coreborder::NormOrder;

/// Sorted-rank percentile, written from the definition.
inline double percentile(std::vector<double> v, double alpha) {
    std::sort(v.begin(), v.end());
    const double rank = (static_cast<double>(v.size()) - 1.0) * alpha / 100.0;
    const double lo = std::floor(rank);
    const auto i = static_cast<std::size_t>(lo);
    if (i + 1 >= v.size()) return v.back();
    return v[i] + (rank - lo) * (v[i + 1] - v[i]);
}

struct NaiveClass {
    Label label;
    std::vector<std::size_t> members;
    std::vector<double> avg;
    double threshold = 0.0;
    std::vector<std::size_t> core;
    std::vector<std::size_t> border;
};

/// O(n^2) reference: full same-class distance lists, fully sorted by
/// (distance, position), first k averaged nearest-first.
inline std::vector<NaiveClass> naive_partition(const Dataset& data, std::size_t k, NormOrder p, double alpha) {
    std::vector<Label> labels(data.labels());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::vector<NaiveClass> out;
    for (const auto& label : labels) {
        NaiveClass c;
        c.label = label;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (data.label(i) == label) c.members.push_back(i);
        }
        for (std::size_t i : c.members) {
            std::vector<std::pair<double, std::size_t>> all;
            for (std::size_t j : c.members) {
                if (j != i) all.emplace_back(coreborder::minkowski_distance(data.row(i), data.row(j), p), j);
            }
            std::sort(all.begin(), all.end());
            double s = 0.0;
            for (std::size_t t = 0; t < k; ++t) s += all[t].first;
            c.avg.push_back(s / static_cast<double>(k));
        }
        c.threshold = percentile(c.avg, alpha);
        for (std::size_t t = 0; t < c.members.size(); ++t) {
            (c.avg[t] > c.threshold ? c.border : c.core).push_back(c.members[t]);
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// Convex hull (Andrew's monotone chain), counter-clockwise, collinear points dropped.
inline std::vector<std::pair<double, double>> convex_hull(std::vector<std::pair<double, double>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](auto o, auto a, auto b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<double, double>> hull(2 * pts.size());
    std::size_t h = 0;
    for (const auto& pt : pts) {
        while (h >= 2 && cross(hull[h - 2], hull[h - 1], pt) <= 0) --h;
        hull[h++] = pt;
    }
    for (std::size_t i = pts.size() - 1, t = h + 1; i-- > 0;) {
        while (h >= t && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);
    return hull;
}

/// True when q lies inside or on a counter-clockwise convex polygon.
inline bool in_convex_polygon(const std::vector<std::pair<double, double>>& hull, std::pair<double, double> q,
                              double eps = 1e-12) {
    if (hull.size() < 3) return false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        const double c = (b.first - a.first) * (q.second - a.second) - (b.second - a.second) * (q.first - a.first);
        if (c < -eps) return false;
    }
    return true;
}

/// Feasibility of q as a convex combination of `points` (any dimension),
/// by Frank-Wolfe minimization of the distance to the hull. Returns the
/// final squared distance.
inline double hull_distance_sq(const std::vector<std::vector<double>>& points, const std::vector<double>& q,
                               int iterations = 4000) {
    const std::size_t d = q.size();
    std::vector<double> x = points.front();
    auto dist_sq = [&](const std::vector<double>& a) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) s += (a[i] - q[i]) * (a[i] - q[i]);
        return s;
    };
    for (int it = 0; it < iterations; ++it) {
        // gradient of |x - q|^2 is 2 (x - q); pick the vertex minimizing <grad, v>
        std::size_t best = 0;
        double best_val = INFINITY;
        for (std::size_t v = 0; v < points.size(); ++v) {
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) s += (x[i] - q[i]) * points[v][i];
            if (s < best_val) {
                best_val = s;
                best = v;
            }
        }
        // exact line search on the segment x -> vertex
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double dir = points[best][i] - x[i];
            num += (q[i] - x[i]) * dir;
            den += dir * dir;
        }
        if (den == 0.0) break;
        const double step = std::clamp(num / den, 0.0, 1.0);
        if (step == 0.0) break;
        for (std::size_t i = 0; i < d; ++i) x[i] += step * (points[best][i] - x[i]);
    }
    return dist_sq(x);
}

}  // namespace oracle

namespace fuzz {

using coreborder::Dataset;
using coreborder::Label;

/// Random labeled dataset: n rows, d dims, `classes` labels, each class with
/// at least `min_per_class` rows. Values are either continuous or, with
/// `grid`, multiples of 1/8 in [-4, 4] so translations and power-of-two
/// scalings stay exact.
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t d, std::size_t classes,
                              std::size_t min_per_class, bool grid = false) {
    std::vector<Label> labels;
    for (std::size_t c = 0; c < classes; ++c) {
        for (std::size_t i = 0; i < min_per_class; ++i) labels.push_back("c" + std::to_string(c));
    }
    std::uniform_int_distribution<std::size_t> pick(0, classes - 1);
    while (labels.size() < n) labels.push_back("c" + std::to_string(pick(rng)));
    std::shuffle(labels.begin(), labels.end(), rng);

    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<int> cell(-32, 32);
    std::vector<double> features;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double shift = static_cast<double>(labels[i].back() - '0');
        for (std::size_t c = 0; c < d; ++c) {
            features.push_back(grid ? cell(rng) / 8.0 : normal(rng) + (c == 0 ? shift : 0.0));
        }
    }
    return Dataset(std::move(features), d, std::move(labels));
}

}  // namespace fuzz
