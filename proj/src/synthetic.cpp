#include "coreborder/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coreborder/error.hpp"
#include "coreborder/random.hpp"

namespace coreborder {
namespace {

std::vector<std::string> coordinate_names(std::size_t d) {
    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c) names.push_back("x" + std::to_string(c));
    return names;
}

Dataset generate(const TwoGaussians& g, Rng& rng) {
    if (g.n_majority == 0 || g.n_minority == 0) throw DataError("class counts must be positive");
    if (!(g.sigma > 0.0)) throw DataError("sigma must be positive");
    if (!(g.separation >= 0.0) || !std::isfinite(g.separation)) {
        throw DataError("separation must be finite and non-negative");
    }
    if (g.dims == 0) throw DataError("dims must be positive");

    std::vector<double> features;
    std::vector<Label> labels;
    features.reserve((g.n_majority + g.n_minority) * g.dims);
    auto blob = [&](std::size_t count, double offset, const char* label) {
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t c = 0; c < g.dims; ++c) {
                features.push_back((c == 0 ? offset : 0.0) + g.sigma * rng.normal());
            }
            labels.emplace_back(label);
        }
    };
    blob(g.n_majority, 0.0, "0");
    blob(g.n_minority, g.separation, "1");
    return Dataset(std::move(features), g.dims, std::move(labels), {}, coordinate_names(g.dims));
}

Dataset generate(const Donut& g, Rng& rng) {
    if (g.n == 0) throw DataError("point count must be positive");
    if (!(g.inner_radius > 0.0) || !(g.outer_radius > 0.0)) throw DataError("radii must be positive");
    if (g.inner_radius > g.outer_radius) throw DataError("inner radius exceeds outer radius");

    const double r2_lo = g.inner_radius * g.inner_radius;
    const double r2_hi = g.outer_radius * g.outer_radius;
    std::vector<double> features;
    features.reserve(2 * g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double r = std::clamp(std::sqrt(r2_lo + rng.unit_closed() * (r2_hi - r2_lo)),
                                    g.inner_radius, g.outer_radius);
        const double theta = 2.0 * std::numbers::pi * rng.unit();
        features.push_back(r * std::cos(theta));
        features.push_back(r * std::sin(theta));
    }
    return Dataset(std::move(features), 2, std::vector<Label>(g.n, "0"), {}, coordinate_names(2));
}

}  // namespace

Dataset make_synthetic(const GeneratorSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    return std::visit([&rng](const auto& g) { return generate(g, rng); }, spec);
}

}  // namespace coreborder
