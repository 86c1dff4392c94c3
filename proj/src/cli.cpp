#include "coreborder/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "coreborder/csv.hpp"
#include "coreborder/diagnostics.hpp"
#include "coreborder/error.hpp"
#include "coreborder/evaluation.hpp"
#include "coreborder/report.hpp"
#include "coreborder/resampling.hpp"
#include "coreborder/standardize.hpp"
#include "coreborder/synthetic.hpp"

namespace coreborder::cli {
namespace {

// Raw flag values, converted to library types after parsing.
struct Flags {
    std::string input;
    std::string output;
    std::string label = "label";
    std::optional<std::size_t> label_index;
    std::string delimiter = ",";
    bool no_header = false;
    std::string na_policy = "error";

    std::size_t k = 5;
    std::string p = "2";
    double alpha = 80.0;
    double compression = 0.0;
    std::string target = "balance";
    std::string strategy = "interpolate";
    std::string removal_policy = "random";
    std::uint64_t seed = 0;
    std::string normalize = "zscore";
    bool lenient = false;

    std::string class_label;
    bool provenance = false;
    std::string format = "json";
    std::size_t seeds = 20;
    double test_fraction = 0.2;
    std::size_t classifier_k = 5;
    std::string levels = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
    std::string name;

    std::string generator = "two-gaussians";
    std::size_t n_majority = 900;
    std::size_t n_minority = 100;
    double separation = 4.0;
    double sigma = 0.5;
    std::size_t dims = 2;
    std::size_t n = 500;
    double inner_radius = 1.0;
    double outer_radius = 2.0;
};

// Thrown for flag values that parse but fail semantic checks.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_input(CLI::App* cmd, Flags& f) {
    cmd->add_option("--input", f.input, "Input CSV file")->required();
    auto* name = cmd->add_option("--label", f.label, "Label column name");
    auto* index = cmd->add_option("--label-index", f.label_index, "Label column zero-based index");
    name->excludes(index);
    cmd->add_option("--delimiter", f.delimiter, "Field delimiter (single character)");
    cmd->add_flag("--no-header", f.no_header, "Input has no header row");
    cmd->add_option("--na-policy", f.na_policy, "Unparsable cells: error or drop-row")
        ->check(CLI::IsMember({"error", "drop-row"}));
}

void add_partition_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--k", f.k, "Neighbors per point")->check(CLI::PositiveNumber);
    cmd->add_option("--p", f.p, "Minkowski norm order (positive number or inf)");
    cmd->add_option("--alpha", f.alpha, "Percentile threshold in [0, 100]")->check(CLI::Range(0.0, 100.0));
    cmd->add_option("--normalize", f.normalize, "Feature scaling: zscore or off")
        ->check(CLI::IsMember({"zscore", "off"}));
    cmd->add_flag("--lenient", f.lenient, "Mark classes with at most k rows as all-core instead of failing");
    cmd->add_option("--seed", f.seed, "Random seed");
}

void add_resample_flags(CLI::App* cmd, Flags& f) {
    add_partition_flags(cmd, f);
    cmd->add_option("--compression", f.compression, "Fraction of a class's rows to remove")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--target", f.target, "Oversample target: balance or a row count");
    cmd->add_option("--strategy", f.strategy, "interpolate or duplicate")
        ->check(CLI::IsMember({"interpolate", "duplicate"}));
    cmd->add_option("--removal-policy", f.removal_policy, "random or densest-first")
        ->check(CLI::IsMember({"random", "densest-first"}));
}

void add_eval_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--test-fraction", f.test_fraction, "Held-out fraction per class")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--classifier-k", f.classifier_k, "Neighbors of the k-NN classifier")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", f.format, "Report format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--name", f.name, "Dataset name recorded in the report");
}

ExperimentConfig make_config(const Flags& f) {
    ExperimentConfig c;
    c.resample.k = f.k;
    try {
        c.resample.p = NormOrder::parse(f.p);
    } catch (const DataError& e) {
        throw UsageError(std::string("--p: ") + e.what());
    }
    c.resample.alpha = f.alpha;
    c.resample.compression = f.compression;
    if (f.target == "balance") {
        c.resample.oversample_target = BalanceToMajority{};
    } else {
        std::size_t count = 0;
        auto [end, ec] = std::from_chars(f.target.data(), f.target.data() + f.target.size(), count);
        if (ec != std::errc{} || end != f.target.data() + f.target.size()) {
            throw UsageError("--target must be 'balance' or a row count, got '" + f.target + "'");
        }
        c.resample.oversample_target = TargetCount{count};
    }
    c.resample.strategy = parse_strategy(f.strategy);
    c.resample.removal_policy = parse_removal_policy(f.removal_policy);
    c.resample.seed = f.seed;
    c.resample.lenient = f.lenient;
    c.normalize = parse_normalization(f.normalize);
    if (!(f.test_fraction > 0.0 && f.test_fraction < 1.0)) {
        throw UsageError("--test-fraction must lie strictly between 0 and 1");
    }
    c.test_fraction = f.test_fraction;
    c.classifier_k = f.classifier_k;
    if (f.delimiter.size() != 1) throw UsageError("--delimiter must be a single character");
    return c;
}

std::vector<double> parse_levels(const std::string& text) {
    std::vector<double> levels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || end != item.data() + item.size()) {
            throw UsageError("--levels: cannot parse '" + item + "'");
        }
        levels.push_back(v);
    }
    if (levels.empty()) throw UsageError("--levels is empty");
    return levels;
}

CsvSchema make_schema(const Flags& f) {
    CsvSchema s;
    if (f.label_index) s.label_column = *f.label_index;
    else s.label_column = f.label;
    s.delimiter = f.delimiter.front();
    s.has_header = !f.no_header;
    s.na_policy = f.na_policy == "drop-row" ? NaPolicy::drop_row : NaPolicy::error;
    return s;
}

std::string dataset_name(const Flags& f) {
    if (!f.name.empty()) return f.name;
    return std::filesystem::path(f.input).stem().string();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("failed writing '" + path + "'");
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

void describe(const ExperimentConfig& config, const std::string& name, std::ostream& err) {
    err << "config: " << config_json(config, name).dump() << '\n';
}

// Partition and resampling run on the scaled features; outputs are replayed
// onto the loaded values.
struct Loaded {
    Dataset raw;
    Dataset scaled;
};

Loaded load(const Flags& f, const ExperimentConfig& config) {
    Dataset raw = load_csv(f.input, make_schema(f));
    auto [scaled, stats] = standardize(raw, config.normalize);
    return {std::move(raw), std::move(scaled)};
}

void write_result(const ResampleResult& scaled, const Loaded& data, const Flags& f, std::ostream& out) {
    const auto result = replay_on(scaled, data.raw);
    std::ostringstream text;
    write_csv(text, result, f.provenance);
    emit(text.str(), f.output, out);
}

int dispatch(const std::string& command, const Flags& f, std::ostream& out, std::ostream& err) {
    if (command == "synth") {
        GeneratorSpec spec;
        if (f.generator == "two-gaussians") {
            spec = TwoGaussians{f.n_majority, f.n_minority, f.separation, f.sigma, f.dims};
        } else {
            spec = Donut{f.n, f.inner_radius, f.outer_radius};
        }
        const auto data = make_synthetic(spec, f.seed);
        std::ostringstream text;
        write_csv(text, data);
        emit(text.str(), f.output, out);
        return kSuccess;
    }

    const ExperimentConfig config = make_config(f);
    std::vector<double> levels;
    if (command == "sweep") levels = parse_levels(f.levels);
    describe(config, dataset_name(f), err);

    const Loaded data = load(f, config);
    if (command == "partition") {
        const auto partition = partition_dataset(data.scaled, config.resample);
        const std::string name = dataset_name(f);
        emit(f.format == "csv" ? partition_csv(partition, data.scaled, config, name)
                               : dump(partition_report(partition, data.scaled, config, name)),
             f.output, out);
    } else if (command == "oversample") {
        const Label label = f.class_label.empty() ? minority_label(data.scaled) : f.class_label;
        const auto partition = partition_dataset(data.scaled, config.resample);
        write_result(oversample_border(data.scaled, partition, config.resample, label), data, f, out);
    } else if (command == "downsample") {
        const auto partition = partition_dataset(data.scaled, config.resample);
        std::vector<Label> labels;
        if (f.class_label.empty()) labels = data.scaled.class_labels();
        else labels.push_back(f.class_label);
        write_result(downsample_classes(data.scaled, partition, config.resample, labels), data, f, out);
    } else if (command == "hybrid") {
        write_result(hybrid_resample(data.scaled, config.resample), data, f, out);
    } else if (command == "experiment") {
        // the runner standardizes per split, so it gets the loaded values
        const auto record = borderline_experiment(data.raw, config, f.seeds, dataset_name(f));
        emit(f.format == "csv" ? experiment_csv(record) : dump(experiment_report(record)), f.output, out);
    } else if (command == "sweep") {
        const auto result = compression_sweep(data.raw, levels, config, dataset_name(f));
        emit(f.format == "csv" ? sweep_csv(result) : dump(sweep_report(result)), f.output, out);
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"Core/border-aware resampling of labeled tabular data", "coreborder"};
    app.require_subcommand(1);

    auto* partition = app.add_subcommand("partition", "Split every class into core and border rows");
    add_input(partition, f);
    add_partition_flags(partition, f);
    partition->add_option("--output", f.output, "Report path (default: standard output)");
    partition->add_option("--format", f.format, "Report format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    partition->add_option("--name", f.name, "Dataset name recorded in the report");

    auto* oversample = app.add_subcommand("oversample", "Synthesize rows from one class's border");
    auto* downsample = app.add_subcommand("downsample", "Remove core rows, border rows last");
    auto* hybrid = app.add_subcommand("hybrid", "Downsample the majority core and oversample the minority border");
    for (auto* cmd : {oversample, downsample, hybrid}) {
        add_input(cmd, f);
        add_resample_flags(cmd, f);
        cmd->add_option("--output", f.output, "Output CSV path")->required();
        cmd->add_flag("--provenance", f.provenance, "Append a provenance column");
    }
    oversample->add_option("--class", f.class_label, "Class to oversample (default: smallest class)");
    downsample->add_option("--class", f.class_label, "Class to downsample (default: every class)");

    auto* experiment = app.add_subcommand("experiment", "Compare whole-minority and border-only oversampling");
    add_input(experiment, f);
    add_resample_flags(experiment, f);
    add_eval_flags(experiment, f);
    experiment->add_option("--seeds", f.seeds, "Number of seeds, starting at --seed")->check(CLI::PositiveNumber);
    experiment->add_option("--output", f.output, "Report path (default: standard output)");

    auto* sweep = app.add_subcommand("sweep", "Accuracy against core-first compression level");
    add_input(sweep, f);
    add_resample_flags(sweep, f);
    add_eval_flags(sweep, f);
    sweep->add_option("--levels", f.levels, "Comma-separated compression levels, ascending, starting at 0");
    sweep->add_option("--output", f.output, "Report path (default: standard output)");

    auto* synth = app.add_subcommand("synth", "Write a synthetic dataset");
    synth->add_option("--generator", f.generator, "two-gaussians or donut")
        ->check(CLI::IsMember({"two-gaussians", "donut"}));
    synth->add_option("--n-majority", f.n_majority, "two-gaussians: majority rows")->check(CLI::PositiveNumber);
    synth->add_option("--n-minority", f.n_minority, "two-gaussians: minority rows")->check(CLI::PositiveNumber);
    synth->add_option("--separation", f.separation, "two-gaussians: distance between centers")
        ->check(CLI::NonNegativeNumber);
    synth->add_option("--sigma", f.sigma, "two-gaussians: per-axis standard deviation")->check(CLI::PositiveNumber);
    synth->add_option("--dims", f.dims, "two-gaussians: feature count")->check(CLI::PositiveNumber);
    synth->add_option("--n", f.n, "donut: rows")->check(CLI::PositiveNumber);
    synth->add_option("--inner-radius", f.inner_radius, "donut: inner radius")->check(CLI::PositiveNumber);
    synth->add_option("--outer-radius", f.outer_radius, "donut: outer radius")->check(CLI::PositiveNumber);
    synth->add_option("--seed", f.seed, "Random seed");
    synth->add_option("--output", f.output, "Output CSV path (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = &app;
        for (auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        CLI::App* target = &app;
        for (auto* sub : app.get_subcommands()) target = sub;
        err << target->help();
        return kUsageError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    auto sink = set_warning_sink([&err](std::string_view m) { err << "warning: " << m << '\n'; });
    int code = kSuccess;
    try {
        code = dispatch(command, f, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        code = kUsageError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        code = kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        code = kDataError;
    }
    set_warning_sink(std::move(sink));
    return code;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace coreborder::cli
