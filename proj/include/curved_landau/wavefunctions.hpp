#pragma once

#include <array>
#include <complex>
#include <vector>

#include "curved_landau/grid.hpp"
#include "curved_landau/hyp2f1.hpp"
#include "curved_landau/separation.hpp"
#include "curved_landau/spectra.hpp"

// Exact profiles.  The z-profiles are
//   Z1 = e^{i(A-C)z} (cos z)^{-(A+C)} F(lambda+A+C, -lambda+A+C, 2A+1/2; y),
//   y  = e^{iz}/(2 cos z) = (1 + i tan z)/2,
// with (A, C) per variant, and Z2 = cos z (Z1' + i p Z1)/lambda.  The radial
// profiles are R1 = (1+cos r)^A (1-cos r)^C F(A+C -/+ sqrt(B^2+lambda^2),
// 2A+1/2; (1+cos r)/2) and R2 = (R1' - mu R1)/lambda.  A full state is
//   f1 = Z1 R1,  f2 = Z2 R2,  f3 = A f1,  f4 = A f2,
//   Psi_a = e^{-i eps t} e^{i m phi} f_a / (sqrt(sin r) cos z).

namespace curved_landau::wavefunctions {

using complexd = std::complex<double>;

struct ZVariant {
    int index;      // 1..4
    double A, C;    // exponents for the given p
    bool rejected;  // true for variants 1 and 2
};

/// Exponent bookkeeping for a z-variant at momentum parameter p.
ZVariant z_variant(int index, double p);

struct RVariant {
    int index;    // 1..4
    double A, C;  // both > 0 when admissible
};

/// Exponents of an admissible radial variant; throws admissibility_error
/// listing the violated inequality otherwise.
RVariant r_variant(int index, int twice_m, double B);

struct ZProfile {
    complexd Z1, Z2, dZ1, dZ2;
    complexd d2Z1;  // term-by-term second derivative
};

/// Exact z-profile.  (p, lambda, N) must satisfy the variant's spectrum rule
/// (variants 3/4 quantize p; variants 1/2 quantize lambda), or the series
/// would not terminate at degree N.
ZProfile z_profile(int variant, double lambda, double p, int N, double z);

struct RProfile {
    double R1, R2, dR1, dR2;
    double d2R1;  // term-by-term second derivative
};

/// Exact radial profile of an admissible variant on its tower.
RProfile radial_profile(int variant, int twice_m, double B, double lambda, int n, double r);

struct SpinorSample {
    std::array<complexd, 4> f;    // f1..f4
    std::array<complexd, 4> psi;  // assembled components at (t, r, z, phi)
};

/// Full state of a resolved record at a spacetime point.
SpinorSample assemble_spinor(const spectra::SpectrumRecord& rec, double t, double r, double z,
                             double phi);

/// f1..f4 with analytic partial derivatives, ready for the residual
/// evaluators.
separation::SpinorDerivs spinor_derivs(const spectra::SpectrumRecord& rec, double r, double z);

struct NormResult {
    double value;                // last ladder entry
    bool finite;                 // ladder converged to within 1%
    std::vector<double> ladder;  // midpoint-rule values per refinement
};

/// Quadrature of |f1|^2+...+|f4|^2 over the open (r, z) box on a dyadic
/// refinement ladder (quad.points base resolution, quad.levels >= 3 entries).
/// The substitution factor cancels the volume element exactly, so this is the
/// physical norm up to the 2*pi azimuthal factor.  Divergence is a reported
/// outcome, not an error.
NormResult norm_integral(const spectra::SpectrumRecord& rec, const GridSpec& quad,
                         double amplitude = 1.0);

}  // namespace curved_landau::wavefunctions
