#include "coreborder/resampling.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>

#include "coreborder/diagnostics.hpp"
#include "coreborder/error.hpp"
#include "coreborder/random.hpp"
#include "distance_kernel.hpp"

namespace coreborder {

std::string_view to_string(Strategy s) {
    return s == Strategy::interpolate ? "interpolate" : "duplicate";
}

std::string_view to_string(RemovalPolicy r) {
    return r == RemovalPolicy::random ? "random" : "densest-first";
}

std::string_view to_string(Provenance p) {
    return p == Provenance::original ? "original" : "synthetic";
}

Strategy parse_strategy(std::string_view text) {
    if (text == "interpolate") return Strategy::interpolate;
    if (text == "duplicate") return Strategy::duplicate;
    throw DataError("unknown strategy '" + std::string(text) + "' (interpolate, duplicate)");
}

RemovalPolicy parse_removal_policy(std::string_view text) {
    if (text == "random") return RemovalPolicy::random;
    if (text == "densest-first") return RemovalPolicy::densest_first;
    throw DataError("unknown removal policy '" + std::string(text) + "' (random, densest-first)");
}

void ResampleConfig::validate() const {
    if (k == 0) throw DataError("k must be at least 1");
    if (!(alpha >= 0.0 && alpha <= 100.0)) {
        throw DataError("alpha must lie in [0, 100], got " + std::to_string(alpha));
    }
    if (!(compression >= 0.0 && compression <= 1.0)) {
        throw DataError("compression must lie in [0, 1], got " + std::to_string(compression));
    }
}

Partition partition_dataset(const Dataset& data, const ResampleConfig& config) {
    config.validate();
    return partition_dataset(data, config.partition_options());
}

ResampleResult unchanged(Dataset data) {
    ResampleResult out;
    out.provenance.assign(data.size(), Provenance::original);
    out.dataset = std::move(data);
    return out;
}

std::vector<double> interpolate(std::span<const double> a, std::span<const double> b, double u) {
    if (a.size() != b.size()) throw DataError("interpolation endpoints differ in dimension");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + u * (b[i] - a[i]);
    return out;
}

std::size_t removal_count(double compression, std::size_t m) {
    if (!(compression >= 0.0 && compression <= 1.0)) {
        throw DataError("compression must lie in [0, 1], got " + std::to_string(compression));
    }
    const auto r = static_cast<std::size_t>(std::floor(compression * static_cast<double>(m) + 1e-9));
    return std::min(r, m);
}

namespace {

struct Synthesis {
    std::vector<double> features;
    std::vector<SyntheticParents> parents;
};

const ClassPartition& checked_class(const Dataset& data, const Partition& partition,
                                    const Label& label) {
    const auto& cls = partition.at(label);
    if (cls.members != data.class_rows(label)) {
        throw DataError("partition of class '" + label + "' does not match the dataset rows");
    }
    return cls;
}

std::size_t largest_class(const Dataset& data) {
    std::size_t best = 0;
    for (const auto& label : data.class_labels()) best = std::max(best, data.class_count(label));
    return best;
}

std::size_t resolve_target(const Dataset& data, const OversampleTarget& target) {
    if (const auto* explicit_count = std::get_if<TargetCount>(&target)) return explicit_count->count;
    return largest_class(data);
}

// Draw order per synthetic row: parent index, neighbor index, u.
Synthesis synthesize(const Dataset& data, std::span<const std::size_t> pool, std::size_t count,
                     const ResampleConfig& config, Strategy strategy) {
    Synthesis out;
    const std::size_t d = data.dims();
    out.features.reserve(count * d);
    out.parents.reserve(count);

    if (strategy == Strategy::duplicate) {
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t pos = pool[i % pool.size()];
            auto r = data.row(pos);
            out.features.insert(out.features.end(), r.begin(), r.end());
            out.parents.push_back({data.row_id(pos), data.row_id(pos), 0.0});
        }
        return out;
    }

    const std::size_t fan = std::min(config.k, pool.size() - 1);
    std::vector<std::optional<std::vector<std::size_t>>> neighbors(pool.size());
    auto neighbors_of = [&](std::size_t idx) -> const std::vector<std::size_t>& {
        auto& slot = neighbors[idx];
        if (!slot) {
            std::vector<detail::Neighbor> candidates;
            candidates.reserve(pool.size() - 1);
            const double* x = data.row(pool[idx]).data();
            for (std::size_t j = 0; j < pool.size(); ++j) {
                if (j == idx) continue;
                candidates.push_back({detail::distance(x, data.row(pool[j]).data(), d, config.p), pool[j]});
            }
            detail::select_nearest(candidates, fan);
            slot.emplace();
            for (std::size_t j = 0; j < fan; ++j) slot->push_back(candidates[j].pos);
        }
        return *slot;
    };

    Rng rng(config.seed);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t idx = rng.index(pool.size());
        const auto& near = neighbors_of(idx);
        const std::size_t other = near[rng.index(near.size())];
        const double u = rng.unit_closed();
        const std::size_t base = pool[idx];
        auto row = interpolate(data.row(base), data.row(other), u);
        out.features.insert(out.features.end(), row.begin(), row.end());
        out.parents.push_back({data.row_id(base), data.row_id(other), u});
    }
    return out;
}

std::vector<std::size_t> plan_removal(const ClassPartition& cls, double compression,
                                      RemovalPolicy policy, std::uint64_t seed) {
    const std::size_t r = removal_count(compression, cls.members.size());
    std::vector<std::size_t> core = cls.core;
    std::vector<std::size_t> border = cls.border;
    if (policy == RemovalPolicy::random) {
        Rng rng(seed);
        rng.shuffle(core.begin(), core.end());
        if (r > core.size()) rng.shuffle(border.begin(), border.end());
    } else {
        auto densest = [&cls](std::size_t a, std::size_t b) {
            const double da = cls.distance_of(a);
            const double db = cls.distance_of(b);
            return da < db || (da == db && a < b);
        };
        std::sort(core.begin(), core.end(), densest);
        std::sort(border.begin(), border.end(), densest);
    }
    std::vector<std::size_t> removed;
    removed.reserve(r);
    for (std::size_t i = 0; i < core.size() && removed.size() < r; ++i) removed.push_back(core[i]);
    for (std::size_t i = 0; i < border.size() && removed.size() < r; ++i) removed.push_back(border[i]);
    return removed;
}

ResampleResult assemble(const Dataset& data, std::span<const std::size_t> removed_positions,
                        const Synthesis& synthesis, const Label& synthetic_label) {
    std::vector<char> drop(data.size(), 0);
    for (std::size_t pos : removed_positions) drop[pos] = 1;

    const std::size_t d = data.dims();
    const std::size_t kept = data.size() - removed_positions.size();
    const std::size_t n_synth = synthesis.parents.size();

    std::vector<double> features;
    std::vector<Label> labels;
    std::vector<std::size_t> ids;
    features.reserve((kept + n_synth) * d);
    labels.reserve(kept + n_synth);
    ids.reserve(kept + n_synth);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (drop[i]) continue;
        auto r = data.row(i);
        features.insert(features.end(), r.begin(), r.end());
        labels.push_back(data.label(i));
        ids.push_back(data.row_id(i));
    }
    features.insert(features.end(), synthesis.features.begin(), synthesis.features.end());
    std::size_t next_id = data.next_row_id();
    for (std::size_t i = 0; i < n_synth; ++i) {
        labels.push_back(synthetic_label);
        ids.push_back(next_id++);
    }

    ResampleResult out;
    out.dataset = Dataset(std::move(features), d, std::move(labels), std::move(ids),
                          data.feature_names(), data.label_name());
    out.provenance.assign(kept, Provenance::original);
    out.provenance.resize(kept + n_synth, Provenance::synthetic);
    out.parents = synthesis.parents;
    out.removed_ids.reserve(removed_positions.size());
    for (std::size_t pos : removed_positions) out.removed_ids.push_back(data.row_id(pos));
    return out;
}

Synthesis oversample_pool(const Dataset& data, std::span<const std::size_t> pool,
                          std::size_t target, const ResampleConfig& config, const Label& label,
                          std::string_view pool_name) {
    const std::size_t current = data.class_count(label);
    if (current == 0) throw DataError("no rows with label '" + label + "'");
    if (target < current) {
        throw DataError("oversample target " + std::to_string(target) + " is below the current size " +
                        std::to_string(current) + " of class '" + label + "'");
    }
    const std::size_t needed = target - current;
    if (needed == 0) return {};
    if (pool.empty()) {
        throw DataError("no " + std::string(pool_name) + " points in class '" + label +
                        "'; lower alpha or use duplicate-on-core fallback");
    }
    Strategy strategy = config.strategy;
    if (strategy == Strategy::interpolate && pool.size() == 1) {
        warn("class '" + label + "' has a single " + std::string(pool_name) +
             " point; duplicating it instead of interpolating");
        strategy = Strategy::duplicate;
    }
    return synthesize(data, pool, needed, config, strategy);
}

}  // namespace

ResampleResult oversample_border(const Dataset& data, const Partition& partition,
                                 const ResampleConfig& config, const Label& class_label) {
    config.validate();
    const auto& cls = checked_class(data, partition, class_label);
    const std::size_t target = resolve_target(data, config.oversample_target);
    auto synthesis = oversample_pool(data, cls.border, target, config, class_label, "border");
    return assemble(data, {}, synthesis, class_label);
}

ResampleResult oversample_class(const Dataset& data, const ResampleConfig& config,
                                const Label& class_label) {
    config.validate();
    const auto rows = data.class_rows(class_label);
    const std::size_t target = resolve_target(data, config.oversample_target);
    auto synthesis = oversample_pool(data, rows, target, config, class_label, "class");
    return assemble(data, {}, synthesis, class_label);
}

ResampleResult downsample_core(const Dataset& data, const Partition& partition,
                               const ResampleConfig& config, const Label& class_label) {
    const Label labels[] = {class_label};
    return downsample_classes(data, partition, config, labels);
}

ResampleResult downsample_classes(const Dataset& data, const Partition& partition,
                                  const ResampleConfig& config, std::span<const Label> labels) {
    config.validate();
    std::vector<std::size_t> removed;
    for (const auto& label : labels) {
        const auto& cls = checked_class(data, partition, label);
        auto part = plan_removal(cls, config.compression, config.removal_policy, config.seed);
        removed.insert(removed.end(), part.begin(), part.end());
    }
    return assemble(data, removed, {}, {});
}

ResampleResult replay_on(const ResampleResult& result, const Dataset& source) {
    const Dataset& out = result.dataset;
    if (out.dims() != source.dims()) throw DataError("replay source has a different column count");
    std::unordered_map<std::size_t, std::size_t> position_of;
    for (std::size_t i = 0; i < source.size(); ++i) position_of.emplace(source.row_id(i), i);
    auto source_row = [&](std::size_t id) {
        auto it = position_of.find(id);
        if (it == position_of.end()) throw DataError("row id " + std::to_string(id) + " missing from replay source");
        return source.row(it->second);
    };

    std::vector<double> features;
    features.reserve(out.size() * out.dims());
    std::size_t synthetic = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (result.provenance[i] == Provenance::original) {
            auto r = source_row(out.row_id(i));
            features.insert(features.end(), r.begin(), r.end());
        } else {
            const auto& parents = result.parents.at(synthetic++);
            auto r = interpolate(source_row(parents.parent_a), source_row(parents.parent_b), parents.u);
            features.insert(features.end(), r.begin(), r.end());
        }
    }
    ResampleResult replayed = result;
    replayed.dataset = Dataset(std::move(features), out.dims(), out.labels(), out.row_ids(),
                               source.feature_names(), source.label_name());
    return replayed;
}

std::pair<Label, Label> majority_minority(const Dataset& data) {
    const auto labels = data.class_labels();
    if (labels.size() != 2) {
        throw DataError("expected exactly two classes, found " + std::to_string(labels.size()));
    }
    const std::size_t first = data.class_count(labels[0]);
    const std::size_t second = data.class_count(labels[1]);
    if (second > first) return {labels[1], labels[0]};
    return {labels[0], labels[1]};
}

ResampleResult hybrid_resample(const Dataset& data, const ResampleConfig& config) {
    return hybrid_resample(data, partition_dataset(data, config), config);
}

ResampleResult hybrid_resample(const Dataset& data, const Partition& partition,
                               const ResampleConfig& config) {
    config.validate();
    const auto [majority, minority] = majority_minority(data);
    const auto& major = checked_class(data, partition, majority);
    const auto& minor = checked_class(data, partition, minority);
    const auto removed = plan_removal(major, config.compression, config.removal_policy, config.seed);

    const std::size_t majority_after = major.members.size() - removed.size();
    std::size_t target = majority_after;
    if (const auto* explicit_count = std::get_if<TargetCount>(&config.oversample_target)) {
        target = explicit_count->count;
    }
    Synthesis synthesis;
    if (target < minor.members.size()) {
        warn("minority class '" + minority + "' (" + std::to_string(minor.members.size()) +
             " rows) already exceeds the target of " + std::to_string(target) +
             " rows; no synthetic rows generated");
    } else {
        synthesis = oversample_pool(data, minor.border, target, config, minority, "border");
    }
    return assemble(data, removed, synthesis, minority);
}

}  // namespace coreborder
