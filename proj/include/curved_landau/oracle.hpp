#pragma once

#include <string>
#include <vector>

#include "curved_landau/grid.hpp"
#include "curved_landau/spectra.hpp"

// Finite-difference eigen-solvers that recover the spectra without touching
// any closed form, plus the grid residual scan.  Both solvers clamp the
// profile to zero one spacing inside the singular endpoints and Richardson-
// extrapolate across dyadic refinements (grid.levels of them).

namespace curved_landau::oracle {

/// Lowest k eigenvalues lambda^2 of -R'' + V(r) R = lambda^2 R on (0, pi),
/// 3-point symmetric discretization, extrapolated.  grid.points is the base
/// resolution; levels >= 2.
std::vector<double> radial_fd_eigen(int twice_m, double B, const GridSpec& grid, int k);

/// Single-grid (no extrapolation) variant, for convergence-order studies.
std::vector<double> radial_fd_raw(int twice_m, double B, int npts, int k);

/// Real eigenvalues p of the quadratic pencil
///   p^2 Z + p (-i tan z) Z + (Z'' - tan z Z' - lambda^2/cos^2 z Z) = 0
/// on (-pi/2, pi/2), companion-linearized to a doubled complex problem.
/// Eigenvalues with |Im p| >= 1e-8 are discretization artifacts and dropped.
/// Returns the k smallest-|p| values after extrapolation.
std::vector<double> z_fd_eigen(double lambda, const GridSpec& grid, int k);

/// Single-grid variant.  `reversed` assembles the operator on the mirrored
/// node ordering (z -> -z), a diagnostic for orientation invariance.
std::vector<double> z_fd_raw(double lambda, int npts, int k, bool reversed = false);

/// Max first-order-system residual of the assembled exact state over the
/// interior grid.  The sampled state is normalized to unit max component
/// first (states are defined up to scale; non-normalizable z-variant-3
/// states reach ~1e8 near the z boundary, where a raw absolute residual
/// would measure nothing but that magnitude).
double residual_scan(const spectra::SpectrumRecord& rec, const GridSpec& grid_r,
                     const GridSpec& grid_z, unsigned threads = 0);

/// Endpoint classification of a radial tower under Dirichlet clamping.
/// R1 ~ r^{2C} at 0 and ~ (pi - r)^{2A} at pi; an exponent below 1/2 is the
/// non-principal branch of a limit-circle endpoint and the FD operator will
/// not see the tower; exponents in [1/2, 3/2) converge slowly; 1/2 exactly
/// (double indicial root) converges only logarithmically.
struct TowerEndpointNote {
    bool expected_under_dirichlet;
    std::string caveat;  // empty when both endpoints are cleanly limit-point
};

TowerEndpointNote radial_tower_note(int r_variant, int twice_m, double B);

}  // namespace curved_landau::oracle
