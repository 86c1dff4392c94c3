// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--only NAME] [--cli PATH]
//
// --cli names the coreborder executable used by the end-to-end check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "support.hpp"

#include "coreborder/csv.hpp"
#include "coreborder/diagnostics.hpp"
#include "coreborder/evaluation.hpp"
#include "coreborder/report.hpp"
#include "coreborder/resampling.hpp"
#include "coreborder/synthetic.hpp"

namespace fs = std::filesystem;
using namespace coreborder;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure only; later ones add no information.
void expect(Outcome& o, bool ok, const std::string& what) {
    if (!ok && o.pass) {
        o.pass = false;
        o.detail = what;
    }
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

NormOrder random_norm(std::mt19937_64& rng) {
    static const double orders[] = {1.0, 2.0, 3.0, 0.5};
    const auto pick = rng() % 5;
    return pick == 4 ? NormOrder::infinity() : NormOrder(orders[pick]);
}

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 200 && o.pass; ++t) {
        const std::size_t classes = 2 + rng() % 3;
        const std::size_t n = 10 * classes + rng() % (201 - 10 * classes);
        const std::size_t d = 1 + rng() % 8;
        const auto data = fuzz::random_dataset(rng, n, d, classes, 8, rng() % 4 == 0);
        PartitionOptions opts;
        opts.k = 1 + rng() % 7;
        opts.p = random_norm(rng);
        opts.alpha = static_cast<double>(rng() % 10001) / 100.0;

        const auto got = partition_dataset(data, opts);
        const auto want = oracle::naive_partition(data, opts.k, opts.p, opts.alpha);
        expect(o, got.classes.size() == want.size(), "class count differs on dataset " + std::to_string(t));
        for (std::size_t c = 0; c < want.size() && o.pass; ++c) {
            const auto& g = got.classes[c];
            const auto& w = want[c];
            const std::string where = "dataset " + std::to_string(t) + " class " + w.label;
            expect(o, g.label == w.label, where + ": label");
            expect(o, g.core == w.core, where + ": core set");
            expect(o, g.border == w.border, where + ": border set");
            const double scale = std::max(std::abs(w.threshold), 1e-300);
            expect(o, std::abs(g.threshold - w.threshold) <= 1e-12 * scale, where + ": threshold");
        }
    }
    if (o.pass) o.detail = "200 datasets match the brute-force oracle";
    return o;
}

// ---------------------------------------------------------------------------

Dataset transformed(const Dataset& data, double scale, const std::vector<double>& shift) {
    std::vector<double> f(data.features().begin(), data.features().end());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = f[i] * scale + shift[i % data.dims()];
    return data.with_features(std::move(f));
}

// Sets must agree except for rows whose distance lies within 1e-9 of the threshold.
bool near_equal(const ClassPartition& a, const ClassPartition& b) {
    const auto ba = as_set(a.border), bb = as_set(b.border);
    for (std::size_t pos : a.members) {
        if (ba.contains(pos) == bb.contains(pos)) continue;
        const double d = a.distance_of(pos);
        if (std::abs(d - a.threshold) > 1e-9 * std::max(a.threshold, 1e-300)) return false;
    }
    return true;
}

Outcome partition_invariants() {
    Outcome o;
    std::mt19937_64 rng(77001);
    std::size_t exact_checks = 0, tolerant_checks = 0;
    for (int t = 0; t < 200 && o.pass; ++t) {
        const bool grid = t % 2 == 0;
        const std::size_t classes = 2 + rng() % 3;
        const std::size_t n = 10 * classes + rng() % (201 - 10 * classes);
        const std::size_t d = 1 + rng() % 8;
        const auto data = fuzz::random_dataset(rng, n, d, classes, 8, grid);
        PartitionOptions opts;
        opts.k = 1 + rng() % 7;
        opts.p = random_norm(rng);
        opts.alpha = static_cast<double>(rng() % 101);
        const std::string where = "dataset " + std::to_string(t);

        const auto base = partition_dataset(data, opts);
        std::vector<bool> seen(data.size(), false);
        for (const auto& cls : base.classes) {
            std::vector<std::size_t> joined(cls.core);
            joined.insert(joined.end(), cls.border.begin(), cls.border.end());
            std::sort(joined.begin(), joined.end());
            expect(o, joined == cls.members, where + ": core and border do not cover the class");
            expect(o, std::adjacent_find(joined.begin(), joined.end()) == joined.end(),
                   where + ": core and border overlap");
            for (std::size_t pos : cls.members) {
                expect(o, !seen[pos] && data.label(pos) == cls.label, where + ": row in two classes");
                seen[pos] = true;
            }
        }
        expect(o, std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }), where + ": row unassigned");

        std::map<Label, std::set<std::size_t>> previous;
        for (int a = 0; a <= 100; a += 5) {
            auto step = opts;
            step.alpha = a;
            const auto part = partition_dataset(data, step);
            for (const auto& cls : part.classes) {
                const auto border = as_set(cls.border);
                if (a > 0) {
                    const auto& wider = previous[cls.label];
                    expect(o, std::includes(wider.begin(), wider.end(), border.begin(), border.end()),
                           where + ": border grew with alpha");
                }
                previous[cls.label] = border;
            }
        }

        std::vector<double> shift(d);
        double scale;
        if (grid) {
            for (auto& s : shift) s = static_cast<double>(static_cast<int>(rng() % 65) - 32) / 8.0;
            scale = std::ldexp(1.0, static_cast<int>(rng() % 7) - 3);
        } else {
            std::normal_distribution<double> normal(0.0, 10.0);
            for (auto& s : shift) s = normal(rng);
            scale = std::exp(std::uniform_real_distribution<double>(std::log(0.1), std::log(10.0))(rng));
        }
        const auto moved = partition_dataset(transformed(data, 1.0, shift), opts);
        const auto scaled = partition_dataset(transformed(data, scale, std::vector<double>(d, 0.0)), opts);
        for (std::size_t c = 0; c < base.classes.size(); ++c) {
            const auto& b = base.classes[c];
            if (grid) {
                expect(o, moved.classes[c].border == b.border && moved.classes[c].core == b.core,
                       where + ": translation changed the partition");
                expect(o, scaled.classes[c].border == b.border && scaled.classes[c].core == b.core,
                       where + ": scaling changed the partition");
                ++exact_checks;
            } else {
                expect(o, near_equal(b, moved.classes[c]), where + ": translation changed the partition");
                expect(o, near_equal(b, scaled.classes[c]), where + ": scaling changed the partition");
                ++tolerant_checks;
            }
        }
    }
    if (o.pass) {
        o.detail = "200 datasets; " + std::to_string(exact_checks) + " exact and " +
                   std::to_string(tolerant_checks) + " tolerance-1e-9 invariance checks";
    }
    return o;
}

// ---------------------------------------------------------------------------

void check_reconstruction(Outcome& o, const Dataset& input, const ResampleResult& r, const std::string& where) {
    std::map<std::size_t, std::size_t> pos_of;
    for (std::size_t i = 0; i < input.size(); ++i) pos_of[input.row_id(i)] = i;
    std::size_t s = 0;
    for (std::size_t i = 0; i < r.dataset.size(); ++i) {
        if (r.provenance[i] == Provenance::original) {
            const auto src = input.row(pos_of.at(r.dataset.row_id(i)));
            expect(o, std::equal(src.begin(), src.end(), r.dataset.row(i).begin()), where + ": original row altered");
            continue;
        }
        const auto& par = r.parents.at(s++);
        expect(o, par.u >= 0.0 && par.u <= 1.0, where + ": weight outside [0, 1]");
        const auto a = input.row(pos_of.at(par.parent_a));
        const auto b = input.row(pos_of.at(par.parent_b));
        for (std::size_t c = 0; c < input.dims(); ++c) {
            const double want = (1.0 - par.u) * a[c] + par.u * b[c];
            const double tol = 1e-9 * std::max({1.0, std::abs(a[c]), std::abs(b[c])});
            expect(o, std::abs(r.dataset.at(i, c) - want) <= tol, where + ": synthetic row not reconstructible");
        }
    }
}

std::string csv_text(const ResampleResult& r) {
    std::ostringstream out;
    write_csv(out, r, true);
    return out.str();
}

Outcome resampling_contracts() {
    Outcome o;
    ScopedWarningCapture quiet;
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 150 && o.pass; ++t) {
        const auto data = fuzz::random_dataset(rng, 30 + rng() % 170, 1 + rng() % 6, 2, 12);
        ResampleConfig cfg;
        cfg.k = 1 + rng() % 5;
        cfg.alpha = static_cast<double>(20 + rng() % 80);
        cfg.seed = rng();
        cfg.removal_policy = rng() % 2 ? RemovalPolicy::random : RemovalPolicy::densest_first;
        const std::size_t twentieths = rng() % 21;
        cfg.compression = static_cast<double>(twentieths) / 20.0;
        const std::string where = "dataset " + std::to_string(t);
        const auto part = partition_dataset(data, cfg);

        for (const auto& cls : part.classes) {
            const std::size_t m = cls.members.size();
            const auto down = downsample_core(data, part, cfg, cls.label);
            expect(o, down.removed_ids.size() == twentieths * m / 20, where + ": removed count");
            expect(o, down.dataset.class_count(cls.label) == m - twentieths * m / 20, where + ": survivors");
            if (twentieths * m / 20 <= cls.core.size()) {
                const std::set<std::size_t> kept(down.dataset.row_ids().begin(), down.dataset.row_ids().end());
                for (std::size_t pos : cls.border) {
                    expect(o, kept.contains(data.row_id(pos)), where + ": border row removed before core exhausted");
                }
            }
            check_reconstruction(o, data, down, where);
            expect(o, csv_text(down) == csv_text(downsample_core(data, part, cfg, cls.label)),
                   where + ": downsampling not deterministic");

            if (cls.border.empty()) continue;
            auto up_cfg = cfg;
            const std::size_t extra = rng() % 60;
            up_cfg.oversample_target = TargetCount{m + extra};
            up_cfg.strategy = rng() % 4 ? Strategy::interpolate : Strategy::duplicate;
            const auto up = oversample_border(data, part, up_cfg, cls.label);
            expect(o, up.synthetic_count() == extra, where + ": synthesized count");
            expect(o, up.dataset.class_count(cls.label) == m + extra, where + ": class size after oversampling");
            const auto border = as_set(cls.border);
            for (const auto& par : up.parents) {
                expect(o, border.contains(par.parent_a) && border.contains(par.parent_b),
                       where + ": parent outside the border");
            }
            check_reconstruction(o, data, up, where);
            expect(o, csv_text(up) == csv_text(oversample_border(data, part, up_cfg, cls.label)),
                   where + ": oversampling not deterministic");
        }

        if (std::all_of(part.classes.begin(), part.classes.end(), [](const auto& c) { return !c.border.empty(); })) {
            const auto h = hybrid_resample(data, cfg);
            check_reconstruction(o, data, h, where + " hybrid");
            expect(o, csv_text(h) == csv_text(hybrid_resample(data, cfg)), where + ": hybrid not deterministic");
        }
    }
    if (o.pass) o.detail = "150 datasets; counts, border preservation, reconstruction, determinism";
    return o;
}

// ---------------------------------------------------------------------------

Outcome experiment_one() {
    Outcome o;
    const auto data = make_synthetic(TwoGaussians{900, 100, 2.0, 1.0, 2}, 1);
    ScopedWarningCapture quiet;
    const auto rec = borderline_experiment(data, ExperimentConfig{}, 20, "two-gaussians-900-100");
    const std::size_t wins = rec.wins();
    expect(o, wins >= 14, "");
    o.detail = std::to_string(wins) + "/20 seed wins (need 14), mean F1 baseline " +
               fmt("%.4f, borderline %.4f, improvement %+.4f", rec.baseline_f1, rec.borderline_f1, rec.improvement);
    return o;
}

// ---------------------------------------------------------------------------

Dataset ten_thousand() { return make_synthetic(TwoGaussians{5000, 5000, 4.0, 1.0, 2}, 7); }

Outcome compression_stability() {
    Outcome o;
    ExperimentConfig cfg;
    cfg.resample.removal_policy = RemovalPolicy::random;
    const std::vector<double> levels{0.0, 0.25};
    const auto sweep = compression_sweep(ten_thousand(), levels, cfg, "two-gaussians-10k");
    const double a0 = sweep.rows[0].metrics.accuracy, a25 = sweep.rows[1].metrics.accuracy;
    expect(o, std::abs(a25 - a0) <= 0.02, "");
    o.detail = fmt("accuracy %.4f at c=0, %.4f at c=0.25 (|diff| %.4f, limit 0.02)", a0, a25, std::abs(a25 - a0));
    return o;
}

Outcome deep_compression() {
    Outcome o;
    ExperimentConfig cfg;
    cfg.resample.removal_policy = RemovalPolicy::densest_first;
    const std::vector<double> levels{0.0, 0.1, 0.25, 0.5, 0.7};
    const auto sweep = compression_sweep(ten_thousand(), levels, cfg, "two-gaussians-10k");
    const double a0 = sweep.rows.front().metrics.accuracy, a70 = sweep.rows.back().metrics.accuracy;
    expect(o, a0 - a70 < 0.05, "");
    o.detail = fmt("accuracy %.4f at c=0, %.4f at c=0.70 (drop %.4f, limit 0.05)", a0, a70, a0 - a70);
    return o;
}

// ---------------------------------------------------------------------------

Outcome metrics_oracle() {
    Outcome o;
    std::mt19937_64 rng(4242);
    std::size_t degenerate = 0;
    for (int t = 0; t < 1000 && o.pass; ++t) {
        const std::size_t n = 1 + rng() % 60;
        const int shape = t % 5;  // 0: none predicted positive, 1: no positive truth, 2: neither
        std::vector<Label> pred(n), truth(n);
        for (std::size_t i = 0; i < n; ++i) {
            pred[i] = (shape == 0 || shape == 2) ? "neg" : (rng() % 3 == 0 ? "pos" : (rng() % 2 ? "neg" : "other"));
            truth[i] = (shape == 1 || shape == 2) ? "neg" : (rng() % 3 == 0 ? "pos" : (rng() % 2 ? "neg" : "other"));
        }
        std::size_t tp = 0, fp = 0, fn = 0, tn = 0, same = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool p = pred[i] == "pos", y = truth[i] == "pos";
            tp += p && y;
            fp += p && !y;
            fn += !p && y;
            tn += !p && !y;
            same += pred[i] == truth[i];
        }
        const double precision = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
        const double recall = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
        const double f1 = precision + recall > 0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
        if (tp + fp == 0 || tp + fn == 0 || precision + recall == 0) ++degenerate;

        const auto m = classification_metrics(pred, truth, "pos");
        const std::string where = "pair " + std::to_string(t);
        expect(o, m.tp == tp && m.fp == fp && m.fn == fn && m.tn == tn, where + ": confusion counts");
        expect(o, m.precision == precision, where + ": precision");
        expect(o, m.recall == recall, where + ": recall");
        expect(o, std::abs(m.f1 - f1) <= 1e-12, where + ": f1");
        expect(o, m.accuracy == static_cast<double>(same) / static_cast<double>(n), where + ": accuracy");
    }
    if (o.pass) o.detail = "1000 pairs (" + std::to_string(degenerate) + " with a zero denominator)";
    return o;
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string g_cli;

Outcome end_to_end_cli() {
    Outcome o;
    if (g_cli.empty()) {
        expect(o, false, "no --cli executable given");
        return o;
    }
    const fs::path root = fs::temp_directory_path() / ("coreborder_acceptance_" + std::to_string(::getpid()));
    std::vector<std::map<std::string, std::string>> runs;
    for (int run = 0; run < 2 && o.pass; ++run) {
        const fs::path dir = root / std::to_string(run);
        fs::create_directories(dir);
        const auto at = [&](const char* name) { return (dir / name).string(); };
        const std::vector<std::pair<std::string, std::string>> steps{
            {"synth", "synth --generator two-gaussians --n-majority 400 --n-minority 80 --separation 2.5 "
                      "--seed 5 --output " + at("data.csv")},
            {"partition", "partition --input " + at("data.csv") + " --output " + at("partition.json")},
            {"hybrid", "hybrid --input " + at("data.csv") + " --compression 0.3 --seed 5 --output " +
                           at("hybrid.csv")},
            {"sweep", "sweep --input " + at("hybrid.csv") + " --seed 5 --levels 0,0.2,0.4 --output " +
                          at("sweep.json")},
        };
        std::map<std::string, std::string> outputs;
        for (const auto& [name, args] : steps) {
            const std::string command = "\"" + g_cli + "\" " + args + " 2>" + at("stderr.txt");
            const int status = std::system(command.c_str());
            expect(o, status == 0, name + " exited with status " + std::to_string(status));
            if (!o.pass) break;
        }
        if (!o.pass) break;
        for (const char* file : {"data.csv", "partition.json", "hybrid.csv", "sweep.json"}) outputs[file] = slurp(at(file));
        for (const char* file : {"partition.json", "sweep.json"}) {
            const auto json = Json::parse(outputs[file], nullptr, false);
            expect(o, !json.is_discarded(), std::string(file) + " is not JSON");
            if (o.pass) {
                const auto problem = validate_report(json);
                expect(o, problem.empty(), std::string(file) + ": " + problem);
            }
        }
        runs.push_back(std::move(outputs));
    }
    if (o.pass) {
        for (const auto& [file, text] : runs[0]) expect(o, runs[1].at(file) == text, file + " differs between runs");
    }
    std::error_code ignored;
    fs::remove_all(root, ignored);
    if (o.pass) o.detail = "synth, partition, hybrid, sweep exit 0; reports valid; outputs byte-identical";
    return o;
}

struct Criterion {
    const char* name;
    double limit_seconds;  // 0 when the criterion has no runtime bound
    std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            only = argv[++i];
        } else if (arg == "--cli" && i + 1 < argc) {
            g_cli = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--only NAME] [--cli PATH]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {"oracle-equivalence", 60, oracle_equivalence},
        {"partition-invariants", 0, partition_invariants},
        {"resampling-contracts", 0, resampling_contracts},
        {"experiment-one", 120, experiment_one},
        {"compression-stability", 300, compression_stability},
        {"deep-compression", 300, deep_compression},
        {"metrics-oracle", 0, metrics_oracle},
        {"end-to-end-cli", 0, end_to_end_cli},
    };

    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && only != c.name) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            o.pass = false;
            o.detail += fmt(" (over the %.0f s limit)", c.limit_seconds);
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << fmt(" [%.2f s]", seconds)
                  << std::endl;
        failed += !o.pass;
    }
    if (ran == 0) {
        std::cerr << "unknown criterion: " << only << '\n';
        return 2;
    }
    return failed == 0 ? 0 : 1;
}
