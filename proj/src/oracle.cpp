#include "curved_landau/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "curved_landau/separation.hpp"
#include "curved_landau/wavefunctions.hpp"

namespace curved_landau::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kImagTol = 1e-8;

void require_interval(const GridSpec& g, double lo, double hi, const char* who) {
    validate(g);
    if (std::abs(g.lower - lo) > 1e-12 || std::abs(g.upper - hi) > 1e-12)
        throw std::invalid_argument(std::string(who) + ": grid must span the full open interval");
}

unsigned thread_count(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("CURVED_LANDAU_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Romberg collapse of one level chain, h halving per entry, O(h^2) base scheme.
double romberg(std::vector<double> chain) {
    for (size_t j = 1; j < chain.size(); ++j) {
        const double w = std::pow(4.0, static_cast<double>(j));
        for (size_t i = chain.size() - 1; i >= j; --i)
            chain[i] = (w * chain[i] - chain[i - 1]) / (w - 1.0);
    }
    return chain.back();
}

}  // namespace

std::vector<double> radial_fd_raw(int twice_m, double B, int npts, int k) {
    if (k < 1) throw usage_error("radial_fd_raw: k must be >= 1");
    if (k > npts / 4) throw usage_error("radial_fd_raw: k too large for the grid");
    const double h = kPi / (npts + 1);
    Eigen::VectorXd diag(npts);
    for (int i = 0; i < npts; ++i)
        diag[i] = 2.0 / (h * h) + separation::radial_potential(h * (i + 1), twice_m, B);
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(npts - 1, -1.0 / (h * h));
    // constant-coefficient second difference: symmetry is structural
    if ((sub.array() != sub[0]).any())
        throw std::runtime_error("radial_fd_raw: non-symmetric assembly detected");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("radial_fd_raw: tridiagonal eigensolve failed");
    return {es.eigenvalues().data(), es.eigenvalues().data() + k};
}

std::vector<double> radial_fd_eigen(int twice_m, double B, const GridSpec& grid, int k) {
    require_interval(grid, 0.0, kPi, "radial_fd_eigen");
    if (grid.levels < 2)
        throw std::invalid_argument("radial_fd_eigen: Richardson needs >= 2 levels");
    if (k > grid.points / 4) throw usage_error("radial_fd_eigen: k too large for the grid");

    // level l has n_l = 2^l (n+1) - 1 points, so h halves each level
    std::vector<std::vector<double>> levels;
    for (int l = 0; l < grid.levels; ++l)
        levels.push_back(radial_fd_raw(twice_m, B, ((grid.points + 1) << l) - 1, k));

    std::vector<double> out(k);
    for (int i = 0; i < k; ++i) {
        std::vector<double> chain(grid.levels);
        for (int l = 0; l < grid.levels; ++l) chain[l] = levels[l][i];
        out[i] = romberg(std::move(chain));
    }
    return out;
}

std::vector<double> z_fd_raw(double lambda, int npts, int k, bool reversed) {
    if (!(lambda > 0.0)) throw std::domain_error("z_fd_raw: lambda must be > 0");
    if (k < 1) throw usage_error("z_fd_raw: k must be >= 1");
    if (k > npts / 4) throw usage_error("z_fd_raw: k too large for the grid");
    using cd = std::complex<double>;
    const double h = kPi / (npts + 1);
    const int n = npts;

    // companion form [[0, I], [-A0, -A1]] of p^2 + p A1 + A0
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    // on the reversed grid the index neighbor i+1 sits at z - h, so the
    // first-derivative stencil flips sign
    const double sgn = reversed ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
        const double z = reversed ? kPi / 2 - h * (i + 1) : -kPi / 2 + h * (i + 1);
        const double t = std::tan(z), cz = std::cos(z);
        C(i, n + i) = 1.0;
        C(n + i, i) = -(-2.0 / (h * h) - lambda * lambda / (cz * cz));
        if (i > 0) C(n + i, i - 1) = -(1.0 / (h * h) + sgn * t / (2 * h));
        if (i + 1 < n) C(n + i, i + 1) = -(1.0 / (h * h) - sgn * t / (2 * h));
        C(n + i, n + i) = cd(0.0, t);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("z_fd_raw: companion eigensolve failed");

    std::vector<double> real;
    for (int i = 0; i < 2 * n; ++i) {
        const cd w = es.eigenvalues()[i];
        if (std::abs(w.imag()) < kImagTol) real.push_back(w.real());
    }
    if (real.empty())
        throw std::runtime_error(
            "z_fd_raw: no real eigenvalues converged (lambda = " + std::to_string(lambda) +
            ", points = " + std::to_string(npts) + "); all imaginary parts exceed 1e-8");
    std::sort(real.begin(), real.end(),
              [](double a, double b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
    if (static_cast<int>(real.size()) > k) real.resize(k);
    return real;
}

std::vector<double> z_fd_eigen(double lambda, const GridSpec& grid, int k) {
    require_interval(grid, -kPi / 2, kPi / 2, "z_fd_eigen");
    if (grid.levels < 2) throw std::invalid_argument("z_fd_eigen: Richardson needs >= 2 levels");

    // gather generously at each level, match chains by proximity, extrapolate
    const int gather = 2 * k + 8;
    std::vector<std::vector<double>> levels;
    for (int l = 0; l < grid.levels; ++l) {
        const int n = ((grid.points + 1) << l) - 1;
        levels.push_back(z_fd_raw(lambda, n, std::min(gather, n / 4)));
    }

    std::vector<double> out;
    const auto& finest = levels.back();
    for (double v : finest) {
        std::vector<double> chain{v};
        bool complete = true;
        double target = v;
        for (int l = grid.levels - 2; l >= 0; --l) {
            const auto& lvl = levels[l];
            auto it = std::min_element(lvl.begin(), lvl.end(), [target](double a, double b) {
                return std::abs(a - target) < std::abs(b - target);
            });
            if (it == lvl.end() || std::abs(*it - target) > 0.25) {
                complete = false;
                break;
            }
            chain.push_back(*it);
            target = *it;
        }
        if (!complete) continue;
        std::reverse(chain.begin(), chain.end());  // coarsest first
        out.push_back(romberg(std::move(chain)));
    }
    std::sort(out.begin(), out.end(),
              [](double a, double b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
    if (static_cast<int>(out.size()) > k) out.resize(k);
    return out;
}

double residual_scan(const spectra::SpectrumRecord& rec, const GridSpec& grid_r,
                     const GridSpec& grid_z, unsigned threads) {
    require_interval(grid_r, 0.0, kPi, "residual_scan");
    require_interval(grid_z, -kPi / 2, kPi / 2, "residual_scan");

    const int nr = grid_r.points, nz = grid_z.points;
    struct RowResult {
        double max_res = 0.0;
        double max_f = 0.0;
    };
    std::vector<RowResult> rows(nr);

    const auto do_row = [&](int i) {
        const double r = grid_r.node(i);
        RowResult acc;
        for (int j = 0; j < nz; ++j) {
            const double z = grid_z.node(j);
            const auto s = wavefunctions::spinor_derivs(rec, r, z);
            const auto res = separation::first_order_residual(s, r, z, rec.eps, rec.qn.twice_m,
                                                              rec.B, rec.M);
            for (const auto& c : res) acc.max_res = std::max(acc.max_res, std::abs(c));
            for (const auto& c : s.f) acc.max_f = std::max(acc.max_f, std::abs(c));
        }
        rows[i] = acc;
    };

    const unsigned nthreads = std::min<unsigned>(thread_count(threads), nr);
    if (nthreads <= 1) {
        for (int i = 0; i < nr; ++i) do_row(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (int i = t; i < nr; i += nthreads) do_row(i);
            });
        for (auto& th : pool) th.join();
    }

    double max_res = 0.0, max_f = 0.0;
    for (const auto& row : rows) {
        max_res = std::max(max_res, row.max_res);
        max_f = std::max(max_f, row.max_f);
    }
    return max_f > 0.0 ? max_res / max_f : max_res;
}

TowerEndpointNote radial_tower_note(int r_variant, int twice_m, double B) {
    const auto v = wavefunctions::r_variant(r_variant, twice_m, B);
    const double at0 = 2 * v.C, atPi = 2 * v.A;
    TowerEndpointNote note{true, {}};
    const auto classify = [&](double e, const char* where) {
        if (e < 0.5 - 1e-12) {
            note.expected_under_dirichlet = false;
            note.caveat += std::string(note.caveat.empty() ? "" : "; ") +
                           "non-principal branch at " + where + ": not expected under Dirichlet";
        } else if (e < 0.5 + 1e-12) {
            note.caveat += std::string(note.caveat.empty() ? "" : "; ") +
                           "critical double indicial root at " + where +
                           ": logarithmic FD convergence";
        } else if (e < 1.5) {
            note.caveat += std::string(note.caveat.empty() ? "" : "; ") + "limit-circle at " +
                           where + ": reduced FD order";
        }
    };
    classify(at0, "r = 0");
    classify(atPi, "r = pi");
    return note;
}

}  // namespace curved_landau::oracle
