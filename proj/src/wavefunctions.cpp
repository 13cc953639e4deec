#include "curved_landau/wavefunctions.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace curved_landau::wavefunctions {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr complexd kI{0.0, 1.0};
constexpr double kRuleTol = 1e-9;

void require_interior_z(double z) {
    if (!(std::abs(z) < kPi / 2) || std::cos(z) == 0.0)
        throw singularity_error("z-profile: |z| must be < pi/2");
}

void require_interior_r(double r) {
    if (!(r > 0.0 && r < kPi) || std::sin(r) == 0.0)
        throw singularity_error("radial profile: r must lie in (0, pi)");
}
}  // namespace

ZVariant z_variant(int index, double p) {
    switch (index) {
        case 1: return {1, (p + 1) / 2, (1 - p) / 2, true};
        case 2: return {2, -p / 2, p / 2, true};
        case 3: return {3, (p + 1) / 2, p / 2, false};
        case 4: return {4, -p / 2, (1 - p) / 2, false};
        default: throw std::domain_error("z_variant: index must be 1..4");
    }
}

RVariant r_variant(int index, int twice_m, double B) {
    const auto rep = spectra::admissible(index, twice_m, B);
    if (!rep.ok)
        throw admissibility_error("radial variant " + std::to_string(index) +
                                      " inadmissible for twice_m = " + std::to_string(twice_m) +
                                      ", B = " + std::to_string(B) + ": violates " + rep.violated,
                                  rep.violated);
    const double m = field::half_integer_m(twice_m);
    switch (index) {
        case 1: return {1, (2 * B - m) / 2, m / 2};
        case 2: return {2, (m + 1 - 2 * B) / 2, m / 2};
        case 3: return {3, (m + 1 - 2 * B) / 2, (1 - m) / 2};
        case 4: return {4, (2 * B - m) / 2, (1 - m) / 2};
        default: throw std::domain_error("r_variant: index must be 1..4");
    }
}

ZProfile z_profile(int variant, double lambda, double p, int N, double z) {
    if (!(lambda > 0.0))
        throw degenerate_separation_error("z_profile: lambda must be > 0 (Z2 divides by lambda)");
    if (N < 0) throw std::domain_error("z_profile: N must be >= 0");
    require_interior_z(z);

    const ZVariant v = z_variant(variant, p);
    const double s = v.A + v.C;  // sum of exponents
    const double d = v.A - v.C;  // difference
    const hyp2f1::TerminatingSeries F(lambda + s, -lambda + s, 2 * v.A + 0.5);
    if (F.degree() != N)
        throw std::invalid_argument(
            "z_profile: (lambda, p, N) violate the variant's spectrum rule (series degree " +
            std::to_string(F.degree()) + " != N = " + std::to_string(N) + ")");

    const double cz = std::cos(z), tz = std::tan(z);
    const complexd y = std::exp(kI * z) / (2 * cz);
    const auto fe = F(y);
    const complexd pref = std::polar(std::pow(cz, -s), d * z);  // e^{i d z} (cos z)^{-s}
    const complexd Z1 = pref * fe.value;
    const complexd dy = kI / (2 * cz * cz);   // d/dz of e^{iz}/(2 cos z)
    const complexd d2y = 2.0 * dy * tz;
    const complexd q = kI * d + s * tz;       // pref'/pref
    const complexd dq = s / (cz * cz);
    const complexd dZ1 = q * Z1 + pref * fe.d1 * dy;
    const complexd d2Z1 = (q * q + dq) * Z1 + 2.0 * q * pref * fe.d1 * dy +
                          pref * (fe.d2 * dy * dy + fe.d1 * d2y);
    const complexd Z2 = cz * (dZ1 + kI * p * Z1) / lambda;
    // second channel equation, exact because Z1 solves the z-equation
    const complexd dZ2 = kI * p * Z2 + lambda * Z1 / cz;
    return {Z1, Z2, dZ1, dZ2, d2Z1};
}

RProfile radial_profile(int variant, int twice_m, double B, double lambda, int n, double r) {
    if (!(lambda > 0.0))
        throw degenerate_separation_error("radial_profile: lambda must be > 0");
    if (n < 0) throw std::domain_error("radial_profile: n must be >= 0");
    require_interior_r(r);

    const RVariant v = r_variant(variant, twice_m, B);
    const double s = v.A + v.C;
    const double root = std::sqrt(B * B + lambda * lambda);
    const double alpha = s - root;
    if (std::abs(alpha + n) > kRuleTol)
        throw std::invalid_argument(
            "radial_profile: lambda is off the variant's tower for n = " + std::to_string(n));
    const hyp2f1::TerminatingSeries F(alpha, s + root, 2 * v.A + 0.5);

    const double cr = std::cos(r), sr = std::sin(r);
    const double up = 1 + cr, um = 1 - cr;
    const auto fe = F(complexd{(1 + cr) / 2, 0.0});
    const double Fv = fe.value.real(), Fd = fe.d1.real(), Fdd = fe.d2.real();
    const double env = std::pow(up, v.A) * std::pow(um, v.C);
    const double g = -v.A * sr / up + v.C * sr / um;  // env'/env
    const double th = std::tan(r / 2);
    const double dg = -v.A * 0.5 * (1 + th * th) - v.C * 0.5 * (1 + 1 / (th * th));
    const double dy = -sr / 2, d2y = -cr / 2;
    const double R1 = env * Fv;
    const double dR1 = g * R1 + env * Fd * dy;
    const double d2R1 = (g * g + dg) * R1 + 2 * g * env * Fd * dy +
                        env * (Fdd * dy * dy + Fd * d2y);
    const double mu = field::mu(r, twice_m, B);
    const double R2 = (dR1 - mu * R1) / lambda;
    const double dR2 = -mu * R2 - lambda * R1;
    return {R1, R2, dR1, dR2, d2R1};
}

namespace {

struct StateParts {
    ZProfile zp;
    RProfile rp;
    double A;  // branch coefficient
};

StateParts parts(const spectra::SpectrumRecord& rec, double r, double z) {
    return {
        z_profile(rec.z_variant, rec.lambda, rec.p, rec.qn.N, z),
        radial_profile(rec.r_variant, rec.qn.twice_m, rec.B, rec.lambda, rec.qn.n, r),
        separation::branch_coefficient(rec.eps, rec.M, rec.qn.branch.sign),
    };
}

}  // namespace

SpinorSample assemble_spinor(const spectra::SpectrumRecord& rec, double t, double r, double z,
                             double phi) {
    const auto [zp, rp, A] = parts(rec, r, z);
    SpinorSample out{};
    out.f = {zp.Z1 * rp.R1, zp.Z2 * rp.R2, A * zp.Z1 * rp.R1, A * zp.Z2 * rp.R2};
    const double m = field::half_integer_m(rec.qn.twice_m);
    const complexd phase =
        std::exp(-kI * rec.eps * t) * std::exp(kI * m * phi) /
        (std::sqrt(std::sin(r)) * std::cos(z));
    for (int a = 0; a < 4; ++a) out.psi[a] = phase * out.f[a];
    return out;
}

separation::SpinorDerivs spinor_derivs(const spectra::SpectrumRecord& rec, double r, double z) {
    const auto [zp, rp, A] = parts(rec, r, z);
    separation::SpinorDerivs s{};
    s.f = {zp.Z1 * rp.R1, zp.Z2 * rp.R2, A * zp.Z1 * rp.R1, A * zp.Z2 * rp.R2};
    s.df_dr = {zp.Z1 * rp.dR1, zp.Z2 * rp.dR2, A * zp.Z1 * rp.dR1, A * zp.Z2 * rp.dR2};
    s.df_dz = {zp.dZ1 * rp.R1, zp.dZ2 * rp.R2, A * zp.dZ1 * rp.R1, A * zp.dZ2 * rp.R2};
    return s;
}

NormResult norm_integral(const spectra::SpectrumRecord& rec, const GridSpec& quad,
                         double amplitude) {
    validate(quad);
    if (quad.levels < 3)
        throw std::invalid_argument("norm_integral: refinement ladder needs >= 3 levels");

    const double A = separation::branch_coefficient(rec.eps, rec.M, rec.qn.branch.sign);
    NormResult out{};
    for (int level = 0; level < quad.levels; ++level) {
        const int n = quad.points << level;
        const double hr = kPi / n, hz = kPi / n;
        // The integrand separates: sum_ij |Z R|^2 = (sum_i |R|^2)(sum_j |Z|^2).
        double SR1 = 0, SR2 = 0, SZ1 = 0, SZ2 = 0;
        for (int i = 0; i < n; ++i) {
            const double r = (i + 0.5) * hr;
            const auto rp =
                radial_profile(rec.r_variant, rec.qn.twice_m, rec.B, rec.lambda, rec.qn.n, r);
            SR1 += rp.R1 * rp.R1;
            SR2 += rp.R2 * rp.R2;
            const double z = -kPi / 2 + (i + 0.5) * hz;
            const auto zp = z_profile(rec.z_variant, rec.lambda, rec.p, rec.qn.N, z);
            SZ1 += std::norm(zp.Z1);
            SZ2 += std::norm(zp.Z2);
        }
        const double value =
            amplitude * amplitude * (1 + A * A) * hr * hz * (SR1 * SZ1 + SR2 * SZ2);
        out.ladder.push_back(value);
    }
    out.value = out.ladder.back();
    const double prev = out.ladder[out.ladder.size() - 2];
    out.finite = std::abs(out.value - prev) <= 0.01 * std::abs(out.value);
    return out;
}

}  // namespace curved_landau::wavefunctions
