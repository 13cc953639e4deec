#include "curved_landau/separation.hpp"

#include <cmath>
#include <numbers>

namespace curved_landau::separation {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr complexd kI{0.0, 1.0};
}  // namespace

double branch_coefficient(double eps, double M, int sign) {
    if (!(M > 0.0)) throw std::domain_error("branch_coefficient: M must be > 0");
    if (sign != 1 && sign != -1) throw std::domain_error("branch_coefficient: sign must be +-1");
    if (std::abs(eps) < M)
        throw evanescent_error("branch_coefficient: |eps| < M, no real momentum");
    const double p = std::sqrt(eps * eps - M * M);
    return (eps + sign * p) / M;
}

complexd z_ode_residual(const OdeSample& s, double z, double p, double lambda) {
    const double cz = std::cos(z);
    if (!(std::abs(z) < kPi / 2) || cz == 0.0)
        throw singularity_error("z_ode_residual: cos(z) vanishes");
    const double tz = std::tan(z);
    return s.d2 - tz * s.d1 + (p * p - kI * p * tz - lambda * lambda / (cz * cz)) * s.value;
}

double radial_potential(double r, int twice_m, double B) {
    const double m = field::half_integer_m(twice_m);
    const double sr = std::sin(r);
    if (!(r > 0.0 && r < kPi) || sr == 0.0)
        throw singularity_error("radial_potential: sin(r) vanishes");
    const double w = m + B * (std::cos(r) - 1.0);
    return (w * w - m * std::cos(r) + B * (std::cos(r) - 1.0)) / (sr * sr);
}

complexd radial_ode_residual(const OdeSample& s, double r, int twice_m, double B, double lambda) {
    return s.d2 + (lambda * lambda - radial_potential(r, twice_m, B)) * s.value;
}

std::array<complexd, 4> first_order_residual(const SpinorDerivs& s, double r, double z, double eps,
                                             int twice_m, double B, double M) {
    const double mu = field::mu(r, twice_m, B);
    const double cz = std::cos(z);
    if (!(std::abs(z) < kPi / 2) || cz == 0.0)
        throw singularity_error("first_order_residual: cos(z) vanishes");
    const auto& f = s.f;
    const auto& fr = s.df_dr;
    const auto& fz = s.df_dz;
    return {
        (fr[3] + mu * f[3]) + cz * fz[2] + kI * cz * (eps * f[2] - M * f[0]),
        (fr[2] - mu * f[2]) - cz * fz[3] + kI * cz * (eps * f[3] - M * f[1]),
        (fr[1] + mu * f[1]) + cz * fz[0] - kI * cz * (eps * f[0] - M * f[2]),
        (fr[0] - mu * f[0]) - cz * fz[1] - kI * cz * (eps * f[1] - M * f[3]),
    };
}

namespace {

using Mat4 = std::array<std::array<complexd, 4>, 4>;

// Spinor (Weyl) basis: g0 = [[0, I], [I, 0]], gk = [[0, -sigma_k], [sigma_k, 0]].
constexpr Mat4 kGamma0 = {{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}};
constexpr Mat4 kGamma1 = {{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}};
const Mat4 kGamma2 = {{{0, 0, 0, kI},
                       {0, 0, -kI, 0},
                       {0, -kI, 0, 0},
                       {kI, 0, 0, 0}}};
constexpr Mat4 kGamma3 = {{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}};

std::array<complexd, 4> apply(const Mat4& g, const std::array<complexd, 4>& v) {
    std::array<complexd, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += g[i][j] * v[j];
    return out;
}

}  // namespace

std::array<complexd, 4> matrix_dirac_residual(const SpinorDerivs& s, double r, double z, double t,
                                              double phi, double eps, int twice_m, double B,
                                              double M) {
    const double m = field::half_integer_m(twice_m);
    const double sr = std::sin(r);
    const double cz = std::cos(z);
    if (!(r > 0.0 && r < kPi) || sr == 0.0)
        throw singularity_error("matrix_dirac_residual: sin(r) vanishes");
    if (!(std::abs(z) < kPi / 2) || cz == 0.0)
        throw singularity_error("matrix_dirac_residual: cos(z) vanishes");

    // Assemble the full field phi_full = e^{-i eps t} e^{i m phi} f and its
    // partials, then apply the operator to it.
    const complexd phase = std::exp(-kI * eps * t) * std::exp(kI * m * phi);
    std::array<complexd, 4> F{}, Fr{}, Fz{}, Ft{}, Fp{};
    for (int a = 0; a < 4; ++a) {
        F[a] = phase * s.f[a];
        Fr[a] = phase * s.df_dr[a];
        Fz[a] = phase * s.df_dz[a];
        Ft[a] = -kI * eps * F[a];  // d_t of the phase field
        Fp[a] = kI * m * F[a];     // d_phi of the phase field
    }

    const double a_phi = B * (std::cos(r) - 1.0);
    const auto g0Ft = apply(kGamma0, Ft);
    const auto g1Fr = apply(kGamma1, Fr);
    const auto g3Fz = apply(kGamma3, Fz);
    std::array<complexd, 4> azim{};
    for (int a = 0; a < 4; ++a) azim[a] = (kI * Fp[a] - a_phi * F[a]) / sr;
    const auto g2A = apply(kGamma2, azim);

    std::array<complexd, 4> w{};
    for (int a = 0; a < 4; ++a)
        w[a] = kI * g1Fr[a] + g2A[a] + cz * (kI * g0Ft[a] + kI * g3Fz[a] - M * F[a]);

    // Phase removed; rows aligned with the printed component equations.
    const std::array<complexd, 4> row = {kI, kI, -kI, -kI};
    std::array<complexd, 4> out{};
    for (int a = 0; a < 4; ++a) out[a] = row[a] * w[a] / phase;
    return out;
}

}  // namespace curved_landau::separation
