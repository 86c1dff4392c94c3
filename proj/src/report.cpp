#include "coreborder/report.hpp"

#include <cmath>
#include <sstream>

#include "coreborder/csv.hpp"

namespace coreborder {

double report_value(double v) {
    const double r = std::round(v * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;  // no "-0.0" in reports
}

Json config_json(const ExperimentConfig& config, const std::string& dataset_name) {
    const auto& r = config.resample;
    Json j;
    j["dataset"] = dataset_name;
    j["k"] = r.k;
    if (r.p.is_infinite()) j["p"] = "inf";
    else j["p"] = r.p.value();
    j["alpha"] = r.alpha;
    j["compression"] = r.compression;
    if (const auto* t = std::get_if<TargetCount>(&r.oversample_target)) j["oversample_target"] = t->count;
    else j["oversample_target"] = "balance-to-majority";
    j["strategy"] = to_string(r.strategy);
    j["removal_policy"] = to_string(r.removal_policy);
    j["seed"] = r.seed;
    j["lenient"] = r.lenient;
    j["normalize"] = to_string(config.normalize);
    j["test_fraction"] = config.test_fraction;
    j["classifier_k"] = config.classifier_k;
    return j;
}

namespace {

Json metrics_json(const MetricsReport& m) {
    Json j;
    j["tp"] = m.tp;
    j["fp"] = m.fp;
    j["fn"] = m.fn;
    j["tn"] = m.tn;
    j["accuracy"] = report_value(m.accuracy);
    j["precision"] = report_value(m.precision);
    j["recall"] = report_value(m.recall);
    j["f1"] = report_value(m.f1);
    return j;
}

std::vector<std::size_t> ids_of(const Dataset& data, const std::vector<std::size_t>& positions) {
    std::vector<std::size_t> ids;
    ids.reserve(positions.size());
    for (std::size_t pos : positions) ids.push_back(data.row_id(pos));
    return ids;
}

std::string config_lines(const Json& config) {
    std::string out;
    for (const auto& [key, value] : config.items()) {
        out += "# " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return out;
}

std::string fixed(double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(6);
    s << report_value(v);
    return s.str();
}

}  // namespace

Json partition_report(const Partition& partition, const Dataset& data, const ExperimentConfig& config,
                      const std::string& dataset_name) {
    Json j;
    j["experiment"] = "partition";
    j["config"] = config_json(config, dataset_name);
    Json rows = Json::array();
    for (const auto& cls : partition.classes) {
        Json row;
        row["label"] = cls.label;
        row["size"] = cls.members.size();
        row["threshold"] = report_value(cls.threshold);
        row["degenerate"] = cls.degenerate;
        row["core"] = ids_of(data, cls.core);
        row["border"] = ids_of(data, cls.border);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json experiment_report(const ExperimentRecord& record) {
    Json j;
    j["experiment"] = "borderline";
    j["config"] = config_json(record.config, record.dataset_name);
    Json rows = Json::array();
    for (const auto& s : record.per_seed) {
        Json row;
        row["seed"] = s.seed;
        row["baseline_f1"] = report_value(s.baseline.f1);
        row["borderline_f1"] = report_value(s.borderline.f1);
        row["improvement"] = report_value(s.borderline.f1 - s.baseline.f1);
        row["baseline_train_size"] = s.baseline_train_size;
        row["borderline_train_size"] = s.borderline_train_size;
        row["baseline"] = metrics_json(s.baseline);
        row["borderline"] = metrics_json(s.borderline);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    Json summary;
    summary["positive_label"] = record.per_seed.empty() ? "" : record.per_seed.front().baseline.positive_label;
    summary["baseline_f1"] = report_value(record.baseline_f1);
    summary["borderline_f1"] = report_value(record.borderline_f1);
    summary["improvement"] = report_value(record.improvement);
    summary["wins"] = record.wins();
    summary["seeds"] = record.per_seed.size();
    j["summary"] = std::move(summary);
    return j;
}

Json sweep_report(const SweepResult& result) {
    Json j;
    j["experiment"] = "sweep";
    j["config"] = config_json(result.config, result.dataset_name);
    Json rows = Json::array();
    for (const auto& r : result.rows) {
        Json row;
        row["compression"] = report_value(r.compression);
        row["n_train_after"] = r.n_train_after;
        row["accuracy"] = report_value(r.metrics.accuracy);
        row["precision"] = report_value(r.metrics.precision);
        row["recall"] = report_value(r.metrics.recall);
        row["f1"] = report_value(r.metrics.f1);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["compressed_classes"] = result.compressed_classes;
    return j;
}

std::string experiment_csv(const ExperimentRecord& record) {
    std::string out = config_lines(config_json(record.config, record.dataset_name));
    out += "seed,baseline_f1,borderline_f1,improvement,baseline_train_size,borderline_train_size\n";
    for (const auto& s : record.per_seed) {
        out += std::to_string(s.seed) + "," + fixed(s.baseline.f1) + "," + fixed(s.borderline.f1) + "," +
               fixed(s.borderline.f1 - s.baseline.f1) + "," + std::to_string(s.baseline_train_size) + "," +
               std::to_string(s.borderline_train_size) + "\n";
    }
    return out;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = config_lines(config_json(result.config, result.dataset_name));
    out += "compression,n_train_after,accuracy,precision,recall,f1\n";
    for (const auto& r : result.rows) {
        out += fixed(r.compression) + "," + std::to_string(r.n_train_after) + "," + fixed(r.metrics.accuracy) +
               "," + fixed(r.metrics.precision) + "," + fixed(r.metrics.recall) + "," + fixed(r.metrics.f1) + "\n";
    }
    return out;
}

std::string partition_csv(const Partition& partition, const Dataset& data,
                          const ExperimentConfig& config, const std::string& dataset_name) {
    std::string out = config_lines(config_json(config, dataset_name));
    out += "row_id,label,avg_distance,threshold,role\n";
    for (const auto& cls : partition.classes) {
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            const double d = cls.avg_distance[i];
            out += std::to_string(data.row_id(cls.members[i])) + "," + cls.label + "," + format_double(d) + "," +
                   format_double(cls.threshold) + "," + (d > cls.threshold ? "border" : "core") + "\n";
        }
    }
    return out;
}

std::string validate_report(const Json& report) {
    if (!report.is_object()) return "report is not an object";
    auto it = report.begin();
    const char* expected[] = {"experiment", "config", "rows"};
    for (const char* key : expected) {
        if (it == report.end() || it.key() != key) return std::string("expected key '") + key + "' in order";
        ++it;
    }
    const auto& kind = report["experiment"];
    if (!kind.is_string()) return "'experiment' is not a string";
    const std::string name = kind.get<std::string>();
    if (name != "partition" && name != "borderline" && name != "sweep") return "unknown experiment '" + name + "'";
    if (!report["config"].is_object()) return "'config' is not an object";
    for (const char* key : {"k", "p", "alpha", "compression", "strategy", "removal_policy", "seed", "normalize"}) {
        if (!report["config"].contains(key)) return std::string("config lacks '") + key + "'";
    }
    if (!report["rows"].is_array()) return "'rows' is not an array";
    for (const auto& row : report["rows"]) {
        if (!row.is_object()) return "row is not an object";
        if (name == "sweep") {
            for (const char* key : {"compression", "n_train_after", "accuracy", "f1"}) {
                if (!row.contains(key) || !row[key].is_number()) return std::string("sweep row lacks numeric '") + key + "'";
            }
        } else if (name == "borderline") {
            for (const char* key : {"seed", "baseline_f1", "borderline_f1", "improvement"}) {
                if (!row.contains(key) || !row[key].is_number()) return std::string("borderline row lacks numeric '") + key + "'";
            }
        } else {
            if (!row.contains("label") || !row["label"].is_string()) return "partition row lacks 'label'";
            if (!row.contains("threshold") || !row["threshold"].is_number()) return "partition row lacks 'threshold'";
            if (!row.contains("core") || !row["core"].is_array()) return "partition row lacks 'core'";
            if (!row.contains("border") || !row["border"].is_array()) return "partition row lacks 'border'";
        }
    }
    return {};
}

}  // namespace coreborder
