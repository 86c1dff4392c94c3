#include "coreborder/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "coreborder/diagnostics.hpp"
#include "coreborder/error.hpp"
#include "coreborder/random.hpp"
#include "distance_kernel.hpp"

namespace coreborder {

MetricsReport classification_metrics(std::span<const Label> predicted, std::span<const Label> truth,
                                     const Label& positive_label) {
    if (predicted.size() != truth.size()) {
        throw DataError("prediction count " + std::to_string(predicted.size()) +
                        " differs from truth count " + std::to_string(truth.size()));
    }
    if (truth.empty()) throw DataError("metrics need at least one prediction");

    MetricsReport m;
    m.positive_label = positive_label;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool pred_pos = predicted[i] == positive_label;
        const bool true_pos = truth[i] == positive_label;
        if (pred_pos && true_pos) ++m.tp;
        else if (pred_pos) ++m.fp;
        else if (true_pos) ++m.fn;
        else ++m.tn;
        if (predicted[i] == truth[i]) ++correct;
    }
    auto ratio = [](std::size_t num, std::size_t den) {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    m.accuracy = ratio(correct, truth.size());
    m.precision = ratio(m.tp, m.tp + m.fp);
    m.recall = ratio(m.tp, m.tp + m.fn);
    const double denom = m.precision + m.recall;
    m.f1 = denom > 0.0 ? 2.0 * m.precision * m.recall / denom : 0.0;
    return m;
}

Split stratified_split(const Dataset& data, double test_fraction, std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw DataError("test fraction must lie strictly between 0 and 1");
    }
    Rng rng(seed);
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
    for (const auto& label : data.class_labels()) {
        auto rows = data.class_rows(label);
        const std::size_t m = rows.size();
        if (m < 2) throw DataError("class '" + label + "' has a single row and cannot be split");
        const auto wanted = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(m)));
        const std::size_t n_test = std::clamp<std::size_t>(wanted, 1, m - 1);
        rng.shuffle(rows.begin(), rows.end());
        test_rows.insert(test_rows.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n_test));
        train_rows.insert(train_rows.end(), rows.begin() + static_cast<std::ptrdiff_t>(n_test), rows.end());
    }
    std::sort(train_rows.begin(), train_rows.end());
    std::sort(test_rows.begin(), test_rows.end());
    return {data.select(train_rows), data.select(test_rows)};
}

std::vector<Label> knn_predict(const Dataset& train, std::span<const double> query_rows,
                               std::size_t k, NormOrder p) {
    if (train.empty()) throw DataError("cannot predict from an empty training set");
    if (k == 0) throw DataError("k must be at least 1");
    if (k > train.size()) {
        throw DataError("k=" + std::to_string(k) + " exceeds training size " + std::to_string(train.size()));
    }
    const std::size_t d = train.dims();
    if (query_rows.size() % d != 0) throw DataError("query rows do not match the training dimension");
    auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(query_rows.begin(), query_rows.end(), finite)) {
        throw DataError("non-finite query value");
    }

    const std::size_t n_query = query_rows.size() / d;
    const double* base = train.features().data();
    std::vector<Label> out;
    out.reserve(n_query);
    std::vector<detail::Neighbor> candidates(train.size());
    std::vector<std::pair<const Label*, std::size_t>> votes;
    for (std::size_t q = 0; q < n_query; ++q) {
        const double* x = query_rows.data() + q * d;
        for (std::size_t j = 0; j < train.size(); ++j) {
            candidates[j] = {detail::distance(x, base + j * d, d, p), j};
        }
        detail::select_nearest(candidates, k);
        // first-seen order doubles as the vote tie-break
        votes.clear();
        for (std::size_t j = 0; j < k; ++j) {
            const Label& label = train.label(candidates[j].pos);
            auto it = std::find_if(votes.begin(), votes.end(),
                                   [&](const auto& v) { return *v.first == label; });
            if (it == votes.end()) votes.emplace_back(&label, 1);
            else ++it->second;
        }
        auto best = votes.begin();
        for (auto it = votes.begin(); it != votes.end(); ++it) {
            if (it->second > best->second) best = it;
        }
        out.push_back(*best->first);
    }
    return out;
}

std::vector<Label> knn_predict(const Dataset& train, const Dataset& queries, std::size_t k,
                               NormOrder p) {
    if (!queries.empty() && queries.dims() != train.dims()) {
        throw DataError("query dimension differs from training dimension");
    }
    return knn_predict(train, queries.features(), k, p);
}

Label minority_label(const Dataset& data) {
    const auto labels = data.class_labels();
    if (labels.empty()) throw DataError("dataset has no classes");
    Label best = labels.front();
    std::size_t best_count = data.class_count(best);
    for (const auto& label : labels) {
        const std::size_t c = data.class_count(label);
        if (c <= best_count) {
            best = label;
            best_count = c;
        }
    }
    return best;
}

namespace {

struct PreparedSplit {
    Dataset train;
    Dataset test;
};

// Splits, then fits the scaler on the training side only.
PreparedSplit prepare(const Dataset& data, const ExperimentConfig& config, std::uint64_t seed) {
    auto [train, test] = stratified_split(data, config.test_fraction, seed);
    auto [train_scaled, stats] = standardize(train, config.normalize);
    Dataset test_scaled = stats.apply(test);

    std::unordered_set<std::size_t> train_ids(train_scaled.row_ids().begin(), train_scaled.row_ids().end());
    for (std::size_t id : test_scaled.row_ids()) {
        if (train_ids.contains(id)) throw std::logic_error("test row leaked into the training split");
    }
    return {std::move(train_scaled), std::move(test_scaled)};
}

MetricsReport score(const Dataset& train, const Dataset& test, const ExperimentConfig& config,
                    const Label& positive) {
    const std::size_t k = std::min(config.classifier_k, train.size());
    const auto predicted = knn_predict(train, test, k, config.resample.p);
    return classification_metrics(predicted, test.labels(), positive);
}

}  // namespace

std::size_t ExperimentRecord::wins() const {
    return static_cast<std::size_t>(std::count_if(per_seed.begin(), per_seed.end(), [](const SeedOutcome& s) {
        return s.borderline.f1 > s.baseline.f1;
    }));
}

ExperimentRecord borderline_experiment(const Dataset& data, const ExperimentConfig& config,
                                       std::span<const std::uint64_t> seeds, std::string dataset_name) {
    config.resample.validate();
    if (seeds.empty()) throw DataError("experiment needs at least one seed");
    const auto [majority, minority] = majority_minority(data);

    ExperimentRecord record;
    record.dataset_name = std::move(dataset_name);
    record.config = config;
    for (std::uint64_t seed : seeds) {
        const auto split = prepare(data, config, seed);
        ResampleConfig arm = config.resample;
        arm.seed = seed;
        arm.oversample_target = BalanceToMajority{};

        const auto baseline = oversample_class(split.train, arm, minority);

        Partition partition = partition_dataset(split.train, arm);
        for (auto& cls : partition.classes) {
            if (cls.label == minority && cls.border.empty()) {
                warn("seed " + std::to_string(seed) +
                     ": minority class has no border points; oversampling the whole class");
                cls.border = cls.members;
                cls.core.clear();
            }
        }
        const auto borderline = hybrid_resample(split.train, partition, arm);

        SeedOutcome outcome;
        outcome.seed = seed;
        outcome.baseline = score(baseline.dataset, split.test, config, minority);
        outcome.borderline = score(borderline.dataset, split.test, config, minority);
        outcome.baseline_train_size = baseline.dataset.size();
        outcome.borderline_train_size = borderline.dataset.size();
        record.per_seed.push_back(std::move(outcome));
    }

    double base_sum = 0.0;
    double border_sum = 0.0;
    for (const auto& s : record.per_seed) {
        base_sum += s.baseline.f1;
        border_sum += s.borderline.f1;
    }
    const auto n = static_cast<double>(record.per_seed.size());
    record.baseline_f1 = base_sum / n;
    record.borderline_f1 = border_sum / n;
    record.improvement = record.borderline_f1 - record.baseline_f1;
    return record;
}

ExperimentRecord borderline_experiment(const Dataset& data, const ExperimentConfig& config,
                                       std::size_t n_seeds, std::string dataset_name) {
    std::vector<std::uint64_t> seeds(n_seeds);
    std::iota(seeds.begin(), seeds.end(), config.resample.seed);
    return borderline_experiment(data, config, seeds, std::move(dataset_name));
}

SweepResult compression_sweep(const Dataset& data, std::span<const double> levels,
                              const ExperimentConfig& config, std::string dataset_name) {
    config.resample.validate();
    if (levels.empty() || levels.front() != 0.0) throw DataError("sweep levels must start at 0");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i] >= 0.0 && levels[i] <= 1.0)) throw DataError("sweep levels must lie in [0, 1]");
        if (i > 0 && !(levels[i] > levels[i - 1])) {
            throw DataError("sweep levels must be strictly ascending");
        }
    }

    SweepResult result;
    result.dataset_name = std::move(dataset_name);
    result.config = config;

    const auto split = prepare(data, config, config.resample.seed);
    const Label positive = minority_label(data);
    const Partition partition = partition_dataset(split.train, config.resample);

    const auto labels = split.train.class_labels();
    std::size_t largest = 0;
    std::size_t smallest = split.train.size();
    Label largest_label;
    for (const auto& label : labels) {
        const std::size_t c = split.train.class_count(label);
        if (c > largest) {
            largest = c;
            largest_label = label;
        }
        smallest = std::min(smallest, c);
    }
    const double ratio = static_cast<double>(largest) / static_cast<double>(smallest);
    if (ratio > kMajorityOnlyRatio) {
        result.compressed_classes = {largest_label};
    } else {
        result.compressed_classes = labels;
    }

    for (double level : levels) {
        ResampleConfig cfg = config.resample;
        cfg.compression = level;
        const auto reduced = downsample_classes(split.train, partition, cfg, result.compressed_classes);
        SweepRow row;
        row.compression = level;
        row.n_train_after = reduced.dataset.size();
        row.metrics = score(reduced.dataset, split.test, config, positive);
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace coreborder
