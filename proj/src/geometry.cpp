#include "curved_landau/geometry.hpp"

#include <cmath>
#include <numbers>

namespace curved_landau::geometry {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryTol = 1e-12;
}  // namespace

void validate(const Point& p) {
    if (!(p.r >= 0.0 && p.r <= kPi)) throw std::domain_error("Point: r must lie in [0, pi]");
    if (!(p.z >= -kPi / 2 && p.z <= kPi / 2))
        throw std::domain_error("Point: z must lie in [-pi/2, pi/2]");
    if (!(p.phi >= 0.0 && p.phi < 2 * kPi))
        throw std::domain_error("Point: phi must lie in [0, 2*pi)");
}

bool is_boundary(const Point& p) {
    return std::abs(std::sin(p.r)) < kBoundaryTol || std::abs(std::cos(p.z)) < kBoundaryTol;
}

std::array<double, 4> embed(const Point& p) {
    validate(p);
    const double cz = std::cos(p.z), sz = std::sin(p.z);
    const double cr = std::cos(p.r), sr = std::sin(p.r);
    return {cz * cr, cz * sr * std::cos(p.phi), cz * sr * std::sin(p.phi), sz};
}

std::array<double, 4> metric_diag(const Point& p) {
    const double cz2 = std::cos(p.z) * std::cos(p.z);
    const double sr2 = std::sin(p.r) * std::sin(p.r);
    return {1.0, -cz2, -cz2 * sr2, -1.0};
}

FrameData frame_at(const Point& p) {
    validate(p);
    const double sr = std::sin(p.r), cz = std::cos(p.z);
    if (std::abs(sr) < kBoundaryTol)
        throw singularity_error("frame_at: sin(r) vanishes at this point");
    if (std::abs(cz) < kBoundaryTol)
        throw singularity_error("frame_at: cos(z) vanishes at this point");

    FrameData out{};
    out.metric = metric_diag(p);

    out.tetrad = {};
    out.tetrad[0][0] = 1.0;
    out.tetrad[1][1] = 1.0 / cz;
    out.tetrad[2][2] = 1.0 / (cz * sr);
    out.tetrad[3][3] = 1.0;

    const double tz = std::tan(p.z);
    const double sz = std::sin(p.z);
    out.christoffel = {
        .r_rz = -tz,
        .r_phiphi = -sr * std::cos(p.r),
        .phi_rphi = std::cos(p.r) / sr,
        .phi_phiz = -tz,
        .z_rr = sz * cz,
        .z_phiphi = sz * cz * sr * sr,
    };
    out.ricci_rot = {
        .g122 = 1.0 / (cz * std::tan(p.r)),
        .g311 = -tz,
        .g322 = -tz,
    };
    return out;
}

Gamma christoffel_closed(const Point& p) {
    Gamma g{};  // zero-initialized; only spatial entries below are nonzero
    const Christoffel c = frame_at(p).christoffel;
    constexpr int R = 1, PHI = 2, Z = 3;
    g[R][R][Z] = g[R][Z][R] = c.r_rz;
    g[R][PHI][PHI] = c.r_phiphi;
    g[PHI][R][PHI] = g[PHI][PHI][R] = c.phi_rphi;
    g[PHI][PHI][Z] = g[PHI][Z][PHI] = c.phi_phiz;
    g[Z][R][R] = c.z_rr;
    g[Z][PHI][PHI] = c.z_phiphi;
    return g;
}

Gamma christoffel_fd(const Point& p, double step) {
    validate(p);
    if (is_boundary(p)) throw singularity_error("christoffel_fd: boundary point");

    // dg[mu][alpha] = d_mu g_{alpha alpha}; only mu in {r, z} can be nonzero.
    std::array<std::array<double, 4>, 4> dg{};
    const auto diff = [&](Point a, Point b) {
        const auto ga = metric_diag(a), gb = metric_diag(b);
        std::array<double, 4> d{};
        for (int i = 0; i < 4; ++i) d[i] = (ga[i] - gb[i]) / (2 * step);
        return d;
    };
    dg[1] = diff({p.r + step, p.z, p.phi}, {p.r - step, p.z, p.phi});
    dg[3] = diff({p.r, p.z + step, p.phi}, {p.r, p.z - step, p.phi});

    const auto g = metric_diag(p);
    Gamma out{};
    // Diagonal metric: Gamma^a_{bc} = (1/2) g^{aa} (d_b g_{ac} + d_c g_{ab} - d_a g_{bc})
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                double s = 0.0;
                if (a == c) s += dg[b][a];
                if (a == b) s += dg[c][a];
                s -= dg[a][b] * (b == c ? 1.0 : 0.0);
                out[a][b][c] = 0.5 * s / g[a];
            }
    return out;
}

}  // namespace curved_landau::geometry
