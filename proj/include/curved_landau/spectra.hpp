#pragma once

#include <span>
#include <string>
#include <vector>

#include "curved_landau/field.hpp"
#include "curved_landau/grid.hpp"
#include "curved_landau/separation.hpp"

// Closed-form quantization rules and state enumeration.
//
// Radial variants fix the exponents (A, C) of R1 = (1+cos r)^A (1-cos r)^C F
// and quantize the separation constant:
//   1:  0 < m < 2B                      lambda^2 = 2Bn + n^2
//   2:  m > 0, m > 2B - 1               lambda^2 = (n+m+1/2)^2 - 2B(n+m+1/2)
//   3:  m < 1, m > 2B - 1, 0 < B < 1    lambda^2 = (n+1)^2 - 2B(n+1)
//   4:  m < 1, m < 2B, m < B + 1/2      lambda^2 = (n-m+1/2)^2 + 2B(n-m+1/2)
// z-variants 3 and 4 quantize p = +sqrt(eps^2 - M^2):
//   3:  p = lambda - (N + 1/2)  (> 0 bounds N)
//   4:  p = lambda + (N + 1/2)
// z-variants 1 and 2 quantize lambda instead and are rejected.

namespace curved_landau::spectra {

struct QuantumNumbers {
    int twice_m;  // odd
    int n;        // radial index >= 0
    int N;        // z index >= 0
    separation::BranchChoice branch;
};

struct SpectrumRecord {
    int r_variant;
    int z_variant;
    QuantumNumbers qn;
    double B;
    double M;
    double lambda;  // > 0
    double p;       // > 0
    double eps;     // +sqrt(M^2 + p^2); the - root carries the same |eps|
    bool admissible;
    bool normalizable;
    bool rejected_variant;
};

struct AdmissibilityReport {
    bool ok;
    std::string violated;  // the inequality that failed, empty when ok
};

/// Checks the printed inequalities of the given radial variant.
AdmissibilityReport admissible(int r_variant, int twice_m, double B);

/// Positive separation constant of the variant's tower.  Throws
/// degenerate_separation_error when the formula gives lambda = 0 and a
/// domain error citing the violated positivity inequality when lambda^2 < 0.
double lambda_of(int r_variant, int twice_m, double B, int n);

/// Raw tower value lambda^2 (may be zero or negative); used by the oracle
/// comparison, whose finite-difference operator sees the lambda = 0 ground
/// mode that enumeration excludes.
double lambda_squared_of(int r_variant, int twice_m, double B, int n);

/// p for z-variants 3 and 4.  Variant 3 throws out_of_tower_error when
/// p <= 0; variants 1 and 2 throw rejected_variant_error.
double p_of(int z_variant, double lambda, int N);

struct RejectedZ {
    double lambda;
    bool rejected;    // always true
    bool degenerate;  // lambda == 0
};

/// lambda towers of the rejected z-variants (1: lambda = 1 + N, 2: lambda = N).
RejectedZ rejected_z_spectra(int z_variant, int N);

/// (+eps, -eps) with eps = sqrt(M^2 + p^2).
std::pair<double, double> energy(double p, double M);

struct EnumerationOptions {
    int r_variant_filter = 0;              // 0 = all
    int z_variant_filter = 0;              // 0 = both 3 and 4
    bool classify_normalizability = true;  // quadrature ladder per record
    GridSpec norm_quad{0.0, 1.0, 64, 3};   // base resolution + ladder depth
};

/// All admissible states with n <= n_max, N <= N_max, lambda > 0, p > 0,
/// ordered by (eps, r_variant, z_variant, n, N, twice_m).  Both branch signs
/// and the p -> -p system share one record.
std::vector<SpectrumRecord> enumerate_states(const field::FieldParams& params,
                                             std::span<const int> twice_m_list, int n_max,
                                             int N_max, const EnumerationOptions& opts = {});

struct FlatLimitPoint {
    double rho;
    double B;  // b * rho^2
    double lambda;
    double p;
    double p2_over_rho2;
    bool admissible;
    std::string note;  // violated constraint when inadmissible
};

/// Scans the physical-field configuration across curvature radii: B = b*rho^2
/// with b fixed, reporting p^2/rho^2 which tends to the flat-space value.
std::vector<FlatLimitPoint> flat_limit_scan(double b, int twice_m, int r_variant, int z_variant,
                                            int n, int N, std::span<const double> rhos);

}  // namespace curved_landau::spectra
