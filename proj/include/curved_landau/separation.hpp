#pragma once

#include <array>
#include <complex>

#include "curved_landau/errors.hpp"
#include "curved_landau/field.hpp"

// Residual evaluators for the reduced Dirac operator and its separated
// pieces.  All evaluators take sampled values and derivatives, so exact
// analytic derivatives and finite-difference ones can both be fed in.
//
// The four-component system, with mu = mu(r) and all fields functions of
// (r, z), reads
//
//   (d_r + mu) f4 + cos z d_z f3 + i cos z (eps f3 - M f1) = 0
//   (d_r - mu) f3 - cos z d_z f4 + i cos z (eps f4 - M f2) = 0
//   (d_r + mu) f2 + cos z d_z f1 - i cos z (eps f1 - M f3) = 0
//   (d_r - mu) f1 - cos z d_z f2 - i cos z (eps f2 - M f4) = 0
//
// and is what the spinor-basis matrix operator expands to (see
// matrix_dirac_residual, which enforces that convention numerically).

namespace curved_landau::separation {

using complexd = std::complex<double>;

/// Which root of M A^2 - 2 eps A + M = 0 ties the lower spinor components to
/// the upper ones (f3 = A f1, f4 = A f2); p_flip selects the mirrored
/// two-channel system obtained by p -> -p.
struct BranchChoice {
    int sign = +1;
    bool p_flip = false;
};

/// Profile value and derivatives at a point.
struct OdeSample {
    complexd value;
    complexd d1;
    complexd d2;
};

/// A = (eps + sign*p)/M with p = +sqrt(eps^2 - M^2).
double branch_coefficient(double eps, double M, int sign);

/// Z1'' - tan z Z1' + (p^2 - i p tan z - lambda^2/cos^2 z) Z1.
complexd z_ode_residual(const OdeSample& s, double z, double p, double lambda);

/// V(r) = [(m + B(cos r - 1))^2 - m cos r + B(cos r - 1)] / sin^2 r, so the
/// radial equation reads -R1'' + V R1 = lambda^2 R1.
double radial_potential(double r, int twice_m, double B);

/// R1'' + (lambda^2 - V(r)) R1.
complexd radial_ode_residual(const OdeSample& s, double r, int twice_m, double B, double lambda);

/// Four profiles with their partial derivatives at one (r, z) point.
struct SpinorDerivs {
    std::array<complexd, 4> f;
    std::array<complexd, 4> df_dr;
    std::array<complexd, 4> df_dz;
};

/// The four component equations above, evaluated as printed.
std::array<complexd, 4> first_order_residual(const SpinorDerivs& s, double r, double z, double eps,
                                             int twice_m, double B, double M);

/// Applies the spinor-basis matrix operator
///   [ i g1 d_r + g2 (i d_phi - e A_phi)/sin r
///     + cos z (i g0 d_t + i g3 d_z - M) ]  e^{-i eps t} e^{i m phi} f(r, z)
/// directly, with g0 = offdiag(I, I) and gk = offdiag(-sigma_k, sigma_k).
/// The assembled phase is divided back out and the rows are rescaled by the
/// constant unimodular factors (i, i, -i, -i) that align the matrix rows with
/// the component equations, so the result is comparable entry by entry with
/// first_order_residual.
std::array<complexd, 4> matrix_dirac_residual(const SpinorDerivs& s, double r, double z, double t,
                                              double phi, double eps, int twice_m, double B,
                                              double M);

}  // namespace curved_landau::separation
