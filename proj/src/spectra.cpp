#include "curved_landau/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "curved_landau/wavefunctions.hpp"

namespace curved_landau::spectra {

AdmissibilityReport admissible(int r_variant, int twice_m, double B) {
    if (!(B > 0.0)) throw std::domain_error("admissible: B must be > 0");
    const double m = field::half_integer_m(twice_m);
    std::vector<std::string> violated;
    switch (r_variant) {
        case 1:
            if (!(m > 0.0)) violated.push_back("0 < m");
            if (!(m < 2 * B)) violated.push_back("m < 2B");
            break;
        case 2:
            if (!(m > 0.0)) violated.push_back("m > 0");
            if (!(m > 2 * B - 1)) violated.push_back("m > 2B - 1");
            break;
        case 3:
            if (!(m < 1.0)) violated.push_back("m < 1");
            if (!(m > 2 * B - 1)) violated.push_back("m > 2B - 1");
            if (!(B < 1.0)) violated.push_back("0 < B < 1");
            break;
        case 4:
            if (!(m < 1.0)) violated.push_back("m < 1");
            if (!(m < 2 * B)) violated.push_back("m < 2B");
            if (!(m < B + 0.5)) violated.push_back("m < B + 1/2");
            break;
        default: throw std::domain_error("admissible: r_variant must be 1..4");
    }
    AdmissibilityReport rep{violated.empty(), {}};
    for (size_t i = 0; i < violated.size(); ++i)
        rep.violated += (i ? " and " : "") + violated[i];
    return rep;
}

namespace {

// lambda^2 of the tower, or the positivity inequality it violates.
struct Lambda2 {
    double value;
    std::string positivity;  // printed constraint, for error text
};

Lambda2 lambda2_of(int r_variant, double m, double B, int n) {
    switch (r_variant) {
        case 1: return {2 * B * n + double(n) * n, "n > 0"};
        case 2: {
            const double s = n + m + 0.5;
            return {s * s - 2 * B * s, "n + m + 1/2 > 2B"};
        }
        case 3: {
            const double t = n + 1.0;
            return {t * t - 2 * B * t, "n + 1 > 2B"};
        }
        case 4: {
            const double s = n - m + 0.5;
            return {s * s + 2 * B * s, "n - m + 1/2 > 0"};
        }
        default: throw std::domain_error("lambda_of: r_variant must be 1..4");
    }
}

}  // namespace

double lambda_of(int r_variant, int twice_m, double B, int n) {
    if (n < 0) throw std::domain_error("lambda_of: n must be >= 0");
    const auto rep = admissible(r_variant, twice_m, B);
    if (!rep.ok)
        throw admissibility_error("lambda_of: radial variant " + std::to_string(r_variant) +
                                      " inadmissible: violates " + rep.violated,
                                  rep.violated);
    const double m = field::half_integer_m(twice_m);
    const auto l2 = lambda2_of(r_variant, m, B, n);
    if (l2.value == 0.0)
        throw degenerate_separation_error("lambda_of: lambda = 0 at the tower base (" +
                                          l2.positivity + " fails with equality)");
    if (l2.value < 0.0)
        throw std::domain_error("lambda_of: lambda^2 <= 0, requires " + l2.positivity);
    return std::sqrt(l2.value);
}

double lambda_squared_of(int r_variant, int twice_m, double B, int n) {
    if (n < 0) throw std::domain_error("lambda_squared_of: n must be >= 0");
    const auto rep = admissible(r_variant, twice_m, B);
    if (!rep.ok)
        throw admissibility_error("lambda_squared_of: radial variant " +
                                      std::to_string(r_variant) + " inadmissible: violates " +
                                      rep.violated,
                                  rep.violated);
    return lambda2_of(r_variant, field::half_integer_m(twice_m), B, n).value;
}

double p_of(int z_variant, double lambda, int N) {
    if (N < 0) throw std::domain_error("p_of: N must be >= 0");
    if (!(lambda > 0.0)) throw std::domain_error("p_of: lambda must be > 0");
    switch (z_variant) {
        case 1:
        case 2:
            throw rejected_variant_error(
                "p_of: z-variants 1 and 2 quantize lambda, not p, and are rejected");
        case 3: {
            const double p = lambda - (N + 0.5);
            if (!(p > 0.0))
                throw out_of_tower_error("p_of: p = lambda - (N + 1/2) <= 0 for N = " +
                                         std::to_string(N) + " (tower requires N < lambda - 1/2)");
            return p;
        }
        case 4: return lambda + (N + 0.5);
        default: throw std::domain_error("p_of: z_variant must be 1..4");
    }
}

RejectedZ rejected_z_spectra(int z_variant, int N) {
    if (N < 0) throw std::domain_error("rejected_z_spectra: N must be >= 0");
    double lambda;
    if (z_variant == 1)
        lambda = 1.0 + N;
    else if (z_variant == 2)
        lambda = N;
    else
        throw std::domain_error("rejected_z_spectra: z_variant must be 1 or 2");
    return {lambda, true, lambda == 0.0};
}

std::pair<double, double> energy(double p, double M) {
    if (!(p > 0.0)) throw std::domain_error("energy: p must be > 0");
    if (!(M > 0.0)) throw std::domain_error("energy: M must be > 0 (massless case unsupported)");
    const double eps = std::sqrt(M * M + p * p);
    return {eps, -eps};
}

std::vector<SpectrumRecord> enumerate_states(const field::FieldParams& params,
                                             std::span<const int> twice_m_list, int n_max,
                                             int N_max, const EnumerationOptions& opts) {
    field::validate(params);
    if (twice_m_list.empty()) throw usage_error("enumerate_states: empty twice_m set");
    if (n_max < 0 || N_max < 0)
        throw std::domain_error("enumerate_states: n_max and N_max must be >= 0");

    std::vector<int> ms(twice_m_list.begin(), twice_m_list.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (int tm : ms) field::half_integer_m(tm);

    std::vector<SpectrumRecord> out;
    for (int tm : ms) {
        const double m = field::half_integer_m(tm);
        for (int rv = 1; rv <= 4; ++rv) {
            if (opts.r_variant_filter && rv != opts.r_variant_filter) continue;
            if (!admissible(rv, tm, params.B).ok) continue;
            for (int n = 0; n <= n_max; ++n) {
                const auto l2 = lambda2_of(rv, m, params.B, n);
                if (!(l2.value > 0.0)) continue;
                const double lambda = std::sqrt(l2.value);
                for (int zv : {3, 4}) {
                    if (opts.z_variant_filter && zv != opts.z_variant_filter) continue;
                    for (int N = 0; N <= N_max; ++N) {
                        const double p =
                            zv == 3 ? lambda - (N + 0.5) : lambda + (N + 0.5);
                        if (!(p > 0.0)) continue;
                        SpectrumRecord rec{};
                        rec.r_variant = rv;
                        rec.z_variant = zv;
                        rec.qn = {tm, n, N, separation::BranchChoice{}};
                        rec.B = params.B;
                        rec.M = params.M;
                        rec.lambda = lambda;
                        rec.p = p;
                        rec.eps = std::sqrt(params.M * params.M + p * p);
                        rec.admissible = true;
                        rec.normalizable = false;
                        rec.rejected_variant = false;
                        if (opts.classify_normalizability)
                            rec.normalizable =
                                wavefunctions::norm_integral(rec, opts.norm_quad).finite;
                        out.push_back(rec);
                    }
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const SpectrumRecord& a, const SpectrumRecord& b) {
        return std::tuple(a.eps, a.r_variant, a.z_variant, a.qn.n, a.qn.N, a.qn.twice_m) <
               std::tuple(b.eps, b.r_variant, b.z_variant, b.qn.n, b.qn.N, b.qn.twice_m);
    });
    return out;
}

std::vector<FlatLimitPoint> flat_limit_scan(double b, int twice_m, int r_variant, int z_variant,
                                            int n, int N, std::span<const double> rhos) {
    if (!(b > 0.0)) throw std::domain_error("flat_limit_scan: b must be > 0");
    if (rhos.empty()) throw usage_error("flat_limit_scan: empty rho list");
    if (z_variant != 3 && z_variant != 4)
        throw rejected_variant_error("flat_limit_scan: z_variant must be 3 or 4");
    field::half_integer_m(twice_m);
    if (n < 0 || N < 0) throw std::domain_error("flat_limit_scan: n and N must be >= 0");

    const double m = field::half_integer_m(twice_m);
    std::vector<FlatLimitPoint> out;
    for (double rho : rhos) {
        if (!(rho > 0.0)) throw std::domain_error("flat_limit_scan: rho must be > 0");
        FlatLimitPoint pt{};
        pt.rho = rho;
        pt.B = b * rho * rho;
        const auto rep = admissible(r_variant, twice_m, pt.B);
        if (!rep.ok) {
            pt.admissible = false;
            pt.note = "violates " + rep.violated;
            out.push_back(pt);
            continue;
        }
        const auto l2 = lambda2_of(r_variant, m, pt.B, n);
        if (!(l2.value > 0.0)) {
            pt.admissible = false;
            pt.note = "lambda^2 <= 0, requires " + l2.positivity;
            out.push_back(pt);
            continue;
        }
        pt.lambda = std::sqrt(l2.value);
        const double p = z_variant == 3 ? pt.lambda - (N + 0.5) : pt.lambda + (N + 0.5);
        if (!(p > 0.0)) {
            pt.admissible = false;
            pt.note = "p <= 0 for this N";
            out.push_back(pt);
            continue;
        }
        pt.p = p;
        pt.p2_over_rho2 = p * p / (rho * rho);
        pt.admissible = true;
        out.push_back(pt);
    }
    return out;
}

}  // namespace curved_landau::spectra
