#pragma once

#include <stdexcept>

namespace curved_landau {

/// Uniform open grid strictly inside a (possibly singular) interval.
/// Nodes sit at lower + (i+1)*spacing for i in [0, points), so the offset
/// from each endpoint equals the spacing.
struct GridSpec {
    double lower = 0.0;
    double upper = 1.0;
    int points = 256;
    int levels = 2;  // dyadic refinement levels for Richardson / ladders

    double spacing() const { return (upper - lower) / (points + 1); }
    double node(int i) const { return lower + spacing() * (i + 1); }
};

inline void validate(const GridSpec& g) {
    if (!(g.upper > g.lower)) throw std::invalid_argument("GridSpec: upper must exceed lower");
    if (g.points < 64) throw std::invalid_argument("GridSpec: points must be >= 64");
    if (g.levels < 1) throw std::invalid_argument("GridSpec: levels must be >= 1");
}

}  // namespace curved_landau
