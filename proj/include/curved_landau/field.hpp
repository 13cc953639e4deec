#pragma once

#include "curved_landau/errors.hpp"

// Dimensionless magnetic coupling on the 3-sphere.  B absorbs the charge and,
// in physical units, equals e*B*rho^2/hbar; M = M*c*rho/hbar.  The azimuthal
// quantum number m is half-integer and carried as twice_m (an odd int), so
// half-integrality is a property of the type, not a runtime tolerance.

namespace curved_landau::field {

struct FieldParams {
    double B;  // > 0
    double M;  // > 0
};

void validate(const FieldParams& p);

/// twice_m must be odd; returns m = twice_m / 2.
double half_integer_m(int twice_m);

struct Gauge {
    double A_phi;    // B (cos r - 1) = -2B sin^2(r/2)
    double F_r_phi;  // -B sin r
};

Gauge gauge_at(double r, double B);

/// Effective azimuthal coupling mu(r) = [m + B(cos r - 1)] / sin r, the
/// coefficient produced by i d_phi - e A_phi acting on e^{i m phi}.
double mu(double r, int twice_m, double B);

}  // namespace curved_landau::field
