#pragma once

#include <array>

#include "curved_landau/errors.hpp"

// Cylindric coordinates (r, z, phi) on the unit 3-sphere, the static metric
//
//   dS^2 = dt^2 - cos^2(z) (dr^2 + sin^2(r) dphi^2) - dz^2,
//
// its embedding into R^4, the diagonal orthonormal tetrad, and the nonzero
// connection coefficients.  Coordinate index order everywhere is
// (t, r, phi, z) = (0, 1, 2, 3).  The curvature radius is the unit of length.

namespace curved_landau::geometry {

struct Point {
    double r;    // [0, pi]
    double z;    // [-pi/2, pi/2]
    double phi;  // [0, 2*pi)
};

/// Range check only; boundary points are allowed here.
void validate(const Point& p);

/// True when sin(r) or cos(z) vanishes (coordinate-singular locus).
bool is_boundary(const Point& p);

/// Embedding (u0, u1, u2, u3) on the unit sphere in R^4:
///   u1 = cos z sin r cos phi,  u2 = cos z sin r sin phi,
///   u3 = sin z,                u0 = cos z cos r.
std::array<double, 4> embed(const Point& p);

/// Full diagonal of g_{alpha beta}, signature (+,-,-,-).
std::array<double, 4> metric_diag(const Point& p);

/// Nonzero second-kind Christoffel symbols (spatial; every component with a
/// t index vanishes for this static metric).  Symmetric partners implied.
struct Christoffel {
    double r_rz;      // Gamma^r_{rz} = -tan z
    double r_phiphi;  // Gamma^r_{phi phi} = -sin r cos r
    double phi_rphi;  // Gamma^phi_{r phi} = cot r
    double phi_phiz;  // Gamma^phi_{phi z} = -tan z
    double z_rr;      // Gamma^z_{rr} = sin z cos z
    double z_phiphi;  // Gamma^z_{phi phi} = sin z cos z sin^2 r
};

/// Nonzero Ricci rotation coefficients of the diagonal tetrad.
struct RicciRotation {
    double g122;  // 1 / (cos z tan r)
    double g311;  // -tan z
    double g322;  // -tan z
};

struct FrameData {
    std::array<double, 4> metric;                 // diag g_{alpha alpha}
    std::array<std::array<double, 4>, 4> tetrad;  // e_(a)^alpha, rows a
    Christoffel christoffel;
    RicciRotation ricci_rot;
};

/// Frame quantities at a strictly interior point.  Throws singularity_error
/// naming the vanishing factor on the boundary locus.
FrameData frame_at(const Point& p);

/// Gamma[a][b][c] = Gamma^a_{bc} over all four coordinates.
using Gamma = std::array<std::array<std::array<double, 4>, 4>, 4>;

/// Closed forms (zeros included) for comparison against the FD computation.
Gamma christoffel_closed(const Point& p);

/// Centered finite differences of the metric; the metric is static and
/// axially symmetric, so t- and phi-derivatives are exact zeros.
Gamma christoffel_fd(const Point& p, double step = 1e-5);

}  // namespace curved_landau::geometry
