#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "coreborder/dataset.hpp"

namespace coreborder {

/// Two isotropic Gaussian blobs. The majority ("0") is centered at the
/// origin, the minority ("1") at `separation` along the first axis.
struct TwoGaussians {
    std::size_t n_majority = 900;
    std::size_t n_minority = 100;
    double separation = 4.0;
    double sigma = 0.5;
    std::size_t dims = 2;
};

/// Single-class ("0") 2-D annulus with uniform area density.
struct Donut {
    std::size_t n = 500;
    double inner_radius = 1.0;
    double outer_radius = 2.0;
};

using GeneratorSpec = std::variant<TwoGaussians, Donut>;

/// Deterministic sample for a given seed. Throws DataError on nonpositive
/// counts, sigma or radii, or inner_radius > outer_radius.
Dataset make_synthetic(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace coreborder
