#include "curved_landau/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace curved_landau::field {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate(const FieldParams& p) {
    if (!(p.B > 0.0)) throw std::domain_error("FieldParams: B must be > 0");
    if (!(p.M > 0.0)) throw std::domain_error("FieldParams: M must be > 0 (massless case unsupported)");
}

double half_integer_m(int twice_m) {
    if (twice_m % 2 == 0)
        throw std::domain_error("m must be half-integer: twice_m = " + std::to_string(twice_m) +
                                " is even");
    return 0.5 * twice_m;
}

Gauge gauge_at(double r, double B) {
    if (!(r >= 0.0 && r <= kPi)) throw std::domain_error("gauge_at: r must lie in [0, pi]");
    if (!(B > 0.0)) throw std::domain_error("gauge_at: B must be > 0");
    return {B * (std::cos(r) - 1.0), -B * std::sin(r)};
}

double mu(double r, int twice_m, double B) {
    const double m = half_integer_m(twice_m);
    const double sr = std::sin(r);
    if (!(r > 0.0 && r < kPi) || sr == 0.0)
        throw singularity_error("mu: sin(r) vanishes at r = " + std::to_string(r));
    return (m + B * (std::cos(r) - 1.0)) / sr;
}

}  // namespace curved_landau::field
