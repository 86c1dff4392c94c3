#include "coreborder/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "coreborder/diagnostics.hpp"
#include "coreborder/error.hpp"
#include "distance_kernel.hpp"

namespace coreborder {

NormOrder::NormOrder(double p) : p_(p) {
    if (!(p > 0.0)) throw DataError("norm order p must be positive, got " + std::to_string(p));
}

std::string NormOrder::to_string() const {
    if (is_infinite()) return "inf";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p_);
    return std::string(buf, end);
}

NormOrder NormOrder::parse(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "inf" || lower == "infinity") return infinity();
    double p = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw DataError("invalid norm order '" + std::string(text) + "'");
    }
    return NormOrder(p);
}

double minkowski_distance(std::span<const double> a, std::span<const double> b, NormOrder p) {
    if (a.size() != b.size()) {
        throw DataError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
    }
    if (a.empty()) throw DataError("distance needs at least one dimension");
    auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(a.begin(), a.end(), finite) || !std::all_of(b.begin(), b.end(), finite)) {
        throw DataError("non-finite coordinate in distance input");
    }
    return detail::distance(a.data(), b.data(), a.size(), p);
}

DistanceProfile knn_average_profile(const Dataset& data, std::span<const std::size_t> members,
                                    std::size_t k, NormOrder p) {
    const std::size_t m = members.size();
    if (m < 2) throw DataError("a class needs at least 2 rows to profile, got " + std::to_string(m));
    if (k == 0) throw DataError("k must be at least 1");
    if (k >= m) {
        throw DataError("k exceeds class size: k=" + std::to_string(k) + ", class has " +
                        std::to_string(m) + " rows");
    }

    DistanceProfile profile{data.label(members.front()), {members.begin(), members.end()}, {}, k, p};
    profile.avg_distance.resize(m);

    const std::size_t d = data.dims();
    const double* base = data.features().data();
    std::vector<detail::Neighbor> candidates;
    candidates.reserve(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        const double* xi = base + members[i] * d;
        candidates.clear();
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            candidates.push_back({detail::distance(xi, base + members[j] * d, d, p), members[j]});
        }
        detail::select_nearest(candidates, k);
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) sum += candidates[j].distance;
        profile.avg_distance[i] = sum / static_cast<double>(k);
    }
    return profile;
}

DistanceProfile knn_average_profile(const Dataset& data, const Label& label, std::size_t k,
                                    NormOrder p) {
    const auto rows = data.class_rows(label);
    if (rows.empty()) throw DataError("no rows with label '" + label + "'");
    return knn_average_profile(data, rows, k, p);
}

double percentile(std::span<const double> values, double alpha) {
    if (values.empty()) throw DataError("percentile of an empty set");
    if (!(alpha >= 0.0 && alpha <= 100.0)) {
        throw DataError("alpha must lie in [0, 100], got " + std::to_string(alpha));
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double rank = static_cast<double>(sorted.size() - 1) * alpha / 100.0;
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = rank - static_cast<double>(lo);
    if (frac == 0.0) return sorted[lo];
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double percentile_threshold(const DistanceProfile& profile, double alpha) {
    return percentile(profile.avg_distance, alpha);
}

double ClassPartition::distance_of(std::size_t pos) const {
    auto it = std::lower_bound(members.begin(), members.end(), pos);
    if (it == members.end() || *it != pos) {
        throw DataError("row " + std::to_string(pos) + " is not a member of class '" + label + "'");
    }
    return avg_distance[static_cast<std::size_t>(it - members.begin())];
}

const ClassPartition& Partition::at(const Label& label) const {
    for (const auto& c : classes) {
        if (c.label == label) return c;
    }
    throw DataError("partition has no class '" + label + "'");
}

ClassPartition partition_profile(const DistanceProfile& profile, double alpha) {
    ClassPartition out;
    out.label = profile.class_label;
    out.members = profile.members;
    out.avg_distance = profile.avg_distance;
    out.threshold = percentile_threshold(profile, alpha);
    for (std::size_t i = 0; i < out.members.size(); ++i) {
        if (out.avg_distance[i] > out.threshold) {
            out.border.push_back(out.members[i]);
        } else {
            out.core.push_back(out.members[i]);
        }
    }
    return out;
}

ClassPartition partition_class(const Dataset& data, std::span<const std::size_t> members,
                               std::size_t k, NormOrder p, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 100.0)) {
        throw DataError("alpha must lie in [0, 100], got " + std::to_string(alpha));
    }
    return partition_profile(knn_average_profile(data, members, k, p), alpha);
}

Partition partition_dataset(const Dataset& data, const PartitionOptions& options) {
    if (data.empty()) throw DataError("cannot partition an empty dataset");
    if (options.k == 0) throw DataError("k must be at least 1");
    if (!(options.alpha >= 0.0 && options.alpha <= 100.0)) {
        throw DataError("alpha must lie in [0, 100], got " + std::to_string(options.alpha));
    }

    std::unordered_map<Label, std::vector<std::size_t>> rows_by_label;
    for (std::size_t i = 0; i < data.size(); ++i) rows_by_label[data.label(i)].push_back(i);

    const auto labels = data.class_labels();
    std::vector<Label> too_small;
    for (const auto& label : labels) {
        if (rows_by_label[label].size() <= options.k) too_small.push_back(label);
    }
    if (!too_small.empty() && !options.lenient) {
        std::string msg = "classes with at most k=" + std::to_string(options.k) + " rows:";
        for (const auto& label : too_small) {
            msg += " '" + label + "' (" + std::to_string(rows_by_label[label].size()) + ")";
        }
        throw DataError(msg);
    }

    Partition out{options.k, options.p, options.alpha, {}};
    out.classes.reserve(labels.size());
    for (const auto& label : labels) {
        const auto& rows = rows_by_label[label];
        if (rows.size() <= options.k) {
            warn("class '" + label + "' has " + std::to_string(rows.size()) +
                 " rows, not more than k=" + std::to_string(options.k) + "; all rows marked core");
            ClassPartition degenerate;
            degenerate.label = label;
            degenerate.members = rows;
            degenerate.avg_distance.assign(rows.size(), 0.0);
            degenerate.core = rows;
            degenerate.degenerate = true;
            out.classes.push_back(std::move(degenerate));
        } else {
            out.classes.push_back(partition_class(data, rows, options.k, options.p, options.alpha));
        }
    }
    return out;
}

}  // namespace coreborder
