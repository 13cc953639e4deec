#include "curved_landau/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "curved_landau/geometry.hpp"
#include "curved_landau/oracle.hpp"
#include "curved_landau/spectra.hpp"
#include "curved_landau/wavefunctions.hpp"

namespace curved_landau::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json record_to_json(const spectra::SpectrumRecord& r) {
    return json{
        {"r_variant", r.r_variant},
        {"z_variant", r.z_variant},
        {"qn",
         {{"twice_m", r.qn.twice_m},
          {"n", r.qn.n},
          {"N", r.qn.N},
          {"branch", {{"sign", r.qn.branch.sign}, {"p_flip", r.qn.branch.p_flip}}}}},
        {"B", r.B},
        {"M", r.M},
        {"lambda", r.lambda},
        {"p", r.p},
        {"eps", r.eps},
        {"admissible", r.admissible},
        {"normalizable", r.normalizable},
        {"rejected_variant", r.rejected_variant},
    };
}

void record_to_csv(std::ostream& os, const spectra::SpectrumRecord& r) {
    os << r.r_variant << ',' << r.z_variant << ',' << r.qn.twice_m << ',' << r.qn.n << ','
       << r.qn.N << ',' << fmt17(r.B) << ',' << fmt17(r.M) << ',' << fmt17(r.lambda) << ','
       << fmt17(r.p) << ',' << fmt17(r.eps) << ',' << (r.admissible ? "true" : "false") << ','
       << (r.normalizable ? "true" : "false") << '\n';
}

constexpr const char* kSpectrumCsvHeader =
    "r_variant,z_variant,twice_m,n,N,B,M,lambda,p,energy,admissible,normalizable";

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot open output file: " + path);
    f << text;
}

struct CommonParams {
    double B = 0.0;
    double M = 0.0;
    std::vector<int> twice_m;
};

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    CommonParams common;
    int n_max = 3, N_max = 2;
    int r_variant = 0, z_variant = 0;
    std::string format = "json";
    std::string output;
    bool expand_branches = false;
    bool no_normalizability = false;
    int norm_points = 64, norm_levels = 3;
};

int run_spectrum(const SpectrumArgs& a, std::ostream& out) {
    spectra::EnumerationOptions opts;
    opts.r_variant_filter = a.r_variant;
    opts.z_variant_filter = a.z_variant;
    opts.classify_normalizability = !a.no_normalizability;
    opts.norm_quad = GridSpec{0.0, 1.0, a.norm_points, a.norm_levels};
    const auto records = spectra::enumerate_states(field::FieldParams{a.common.B, a.common.M},
                                                   a.common.twice_m, a.n_max, a.N_max, opts);
    std::ostringstream os;
    if (a.format == "csv") {
        os << kSpectrumCsvHeader << '\n';
        for (const auto& r : records) record_to_csv(os, r);
    } else {
        json arr = json::array();
        for (const auto& r : records) {
            if (a.expand_branches) {
                for (int sign : {+1, -1})
                    for (bool flip : {false, true}) {
                        auto rec = r;
                        rec.qn.branch = {sign, flip};
                        arr.push_back(record_to_json(rec));
                    }
            } else {
                arr.push_back(record_to_json(r));
            }
        }
        os << arr.dump(2) << '\n';
    }
    emit(os.str(), a.output, out);
    return 0;
}

// ------------------------------------------------------------ wavefunction

struct WavefunctionArgs {
    CommonParams common;
    int r_variant = 1, z_variant = 4;
    int n = 1, N = 0;
    int nr = 64, nz = 64;
    std::string output;
};

spectra::SpectrumRecord resolve_record(double B, double M, int twice_m, int rv, int zv, int n,
                                       int N) {
    const double lambda = spectra::lambda_of(rv, twice_m, B, n);
    const double p = spectra::p_of(zv, lambda, N);
    spectra::SpectrumRecord rec{};
    rec.r_variant = rv;
    rec.z_variant = zv;
    rec.qn = {twice_m, n, N, separation::BranchChoice{}};
    rec.B = B;
    rec.M = M;
    rec.lambda = lambda;
    rec.p = p;
    rec.eps = spectra::energy(p, M).first;
    rec.admissible = true;
    rec.normalizable = true;
    rec.rejected_variant = false;
    return rec;
}

int run_wavefunction(const WavefunctionArgs& a, std::ostream& out) {
    const auto rec = resolve_record(a.common.B, a.common.M, a.common.twice_m.at(0), a.r_variant,
                                    a.z_variant, a.n, a.N);
    const GridSpec gr{0.0, kPi, a.nr, 1};
    const GridSpec gz{-kPi / 2, kPi / 2, a.nz, 1};
    std::ostringstream os;
    os << "r,z,re_f1,im_f1,re_f2,im_f2,re_f3,im_f3,re_f4,im_f4\n";
    for (int i = 0; i < gr.points; ++i) {
        const double r = gr.node(i);
        for (int j = 0; j < gz.points; ++j) {
            const double z = gz.node(j);
            const auto s = wavefunctions::assemble_spinor(rec, 0.0, r, z, 0.0);
            os << fmt17(r) << ',' << fmt17(z);
            for (const auto& c : s.f) os << ',' << fmt17(c.real()) << ',' << fmt17(c.imag());
            os << '\n';
        }
    }
    emit(os.str(), a.output, out);
    return 0;
}

// ---------------------------------------------------------------- geometry

int run_geometry(double r, double z, double phi, std::ostream& out) {
    const geometry::Point pt{r, z, phi};
    const auto u = geometry::embed(pt);
    const auto frame = geometry::frame_at(pt);
    json j{
        {"point", {{"r", pt.r}, {"z", pt.z}, {"phi", pt.phi}}},
        {"embedding", {{"u0", u[0]}, {"u1", u[1]}, {"u2", u[2]}, {"u3", u[3]}}},
        {"embedding_norm", std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3])},
        {"metric_diag", frame.metric},
        {"tetrad",
         {{"e0_t", frame.tetrad[0][0]},
          {"e1_r", frame.tetrad[1][1]},
          {"e2_phi", frame.tetrad[2][2]},
          {"e3_z", frame.tetrad[3][3]}}},
        {"christoffel",
         {{"r_rz", frame.christoffel.r_rz},
          {"r_phiphi", frame.christoffel.r_phiphi},
          {"phi_rphi", frame.christoffel.phi_rphi},
          {"phi_phiz", frame.christoffel.phi_phiz},
          {"z_rr", frame.christoffel.z_rr},
          {"z_phiphi", frame.christoffel.z_phiphi}}},
        {"ricci_rotation",
         {{"g122", frame.ricci_rot.g122},
          {"g311", frame.ricci_rot.g311},
          {"g322", frame.ricci_rot.g322}}},
    };
    out << j.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------- verify residual

struct VerifyResidualArgs {
    CommonParams common;
    int n_max = 2, N_max = 1;
    int nr = 64, nz = 64;
    double tol = 1e-9;
    unsigned threads = 0;
    std::string output;
};

int run_verify_residual(const VerifyResidualArgs& a, std::ostream& out) {
    spectra::EnumerationOptions opts;
    const auto records = spectra::enumerate_states(field::FieldParams{a.common.B, a.common.M},
                                                   a.common.twice_m, a.n_max, a.N_max, opts);
    const GridSpec gr{0.0, kPi, a.nr, 1};
    const GridSpec gz{-kPi / 2, kPi / 2, a.nz, 1};
    json entries = json::array();
    bool all_pass = true;
    for (const auto& rec : records) {
        const double res = oracle::residual_scan(rec, gr, gz, a.threads);
        const bool pass = res < a.tol;
        all_pass = all_pass && pass;
        json e = record_to_json(rec);
        e["max_residual"] = res;
        e["pass"] = pass;
        entries.push_back(std::move(e));
    }
    json report{
        {"tolerance", a.tol},
        {"grid", {{"nr", a.nr}, {"nz", a.nz}}},
        {"records", std::move(entries)},
        {"all_pass", all_pass},
    };
    emit(report.dump(2) + "\n", a.output, out);
    return all_pass ? 0 : 1;
}

// ------------------------------------------------------------ verify oracle

struct VerifyOracleArgs {
    int twice_m = 3;
    double B = 2.0;
    int k = 3;
    int points = 1000;
    int z_points = 128;
    int z_k = 6;
    int levels = 2;
    double tol = 1e-3;
    std::vector<double> lambdas;  // empty: use the radial towers found
    std::string output;
};

struct Pair {
    double closed_form, oracle_value;
};

json compare_pairs(std::vector<double> expected, std::vector<double> got, double tol,
                   bool* all_pass) {
    // pair by value order so +-p twins cannot cross on rounding noise
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    json pairs = json::array();
    const size_t n = std::min(expected.size(), got.size());
    for (size_t i = 0; i < n; ++i) {
        const double abs_err = std::abs(got[i] - expected[i]);
        const double denom = std::max(std::abs(expected[i]), 1e-300);
        // absolute comparison for a zero target (tower base lambda = 0)
        const double rel_err = expected[i] == 0.0 ? abs_err : abs_err / denom;
        const bool pass = rel_err < tol;
        *all_pass = *all_pass && pass;
        pairs.push_back(json{{"closed_form", expected[i]},
                             {"oracle", got[i]},
                             {"abs_err", abs_err},
                             {"rel_err", rel_err},
                             {"pass", pass}});
    }
    if (expected.size() != got.size()) *all_pass = false;
    return pairs;
}

int run_verify_oracle(const VerifyOracleArgs& a, std::ostream& out) {
    bool all_pass = true;

    // radial: union of admissible towers (zero-mode included) vs FD
    json towers = json::array();
    std::vector<double> expected;
    std::vector<double> state_lambdas;
    for (int rv = 1; rv <= 4; ++rv) {
        const auto rep = spectra::admissible(rv, a.twice_m, a.B);
        if (!rep.ok) continue;
        const auto note = oracle::radial_tower_note(rv, a.twice_m, a.B);
        towers.push_back(json{{"r_variant", rv},
                              {"expected_under_dirichlet", note.expected_under_dirichlet},
                              {"caveat", note.caveat}});
        if (!note.expected_under_dirichlet) continue;
        for (int n = 0; n <= a.k + 2; ++n) {
            const double l2 = spectra::lambda_squared_of(rv, a.twice_m, a.B, n);
            if (l2 >= 0.0) expected.push_back(l2);
            if (l2 > 0.0 && static_cast<int>(state_lambdas.size()) < a.k)
                state_lambdas.push_back(std::sqrt(l2));
        }
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    if (expected.size() > static_cast<size_t>(a.k)) expected.resize(a.k);

    const GridSpec rgrid{0.0, kPi, a.points, a.levels};
    const auto fd = oracle::radial_fd_eigen(a.twice_m, a.B, rgrid, a.k);
    std::vector<double> fd_trim(fd.begin(), fd.begin() + expected.size());
    bool radial_pass = true;
    json radial_pairs = compare_pairs(expected, fd_trim, a.tol, &radial_pass);
    all_pass = all_pass && radial_pass;

    // z: pencil towers +-(lambda + N + 1/2) vs FD; v3 values must be absent
    std::vector<double> lambdas = a.lambdas.empty() ? state_lambdas : a.lambdas;
    json zreports = json::array();
    const GridSpec zgrid{-kPi / 2, kPi / 2, a.z_points, a.levels};
    for (double lambda : lambdas) {
        std::vector<double> zexp;
        for (int N = 0; N < (a.z_k + 1) / 2; ++N) {
            zexp.push_back(lambda + N + 0.5);
            zexp.push_back(-(lambda + N + 0.5));
        }
        std::sort(zexp.begin(), zexp.end(), [](double x, double y) {
            return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x < y;
        });
        zexp.resize(std::min<size_t>(zexp.size(), a.z_k));
        const auto zfd = oracle::z_fd_eigen(lambda, zgrid, a.z_k);
        bool zpass = true;
        json zpairs = compare_pairs(zexp, zfd, a.tol, &zpass);

        // any FD value near a variant-3 tower value would contradict the
        // Dirichlet classification
        json v3hits = json::array();
        for (int N = 0;; ++N) {
            const double p3 = lambda - (N + 0.5);
            if (p3 <= 0.0) break;
            for (double x : zfd)
                if (std::abs(std::abs(x) - p3) < 0.05) {
                    v3hits.push_back(json{{"N", N}, {"p", p3}, {"fd", x}});
                    zpass = false;
                }
        }
        all_pass = all_pass && zpass;
        zreports.push_back(json{{"lambda", lambda},
                                {"pairs", std::move(zpairs)},
                                {"v3_values_found", std::move(v3hits)},
                                {"all_pass", zpass}});
    }

    json report{
        {"tolerance", a.tol},
        {"radial",
         {{"twice_m", a.twice_m},
          {"B", a.B},
          {"points", a.points},
          {"levels", a.levels},
          {"towers", std::move(towers)},
          {"pairs", std::move(radial_pairs)},
          {"all_pass", radial_pass}}},
        {"z", std::move(zreports)},
        {"all_pass", all_pass},
    };
    emit(report.dump(2) + "\n", a.output, out);
    return all_pass ? 0 : 1;
}

// -------------------------------------------------------- verify flat-limit

struct VerifyFlatLimitArgs {
    double b = 1.0;
    int twice_m = 3;
    int r_variant = 1;
    int z_variant = 4;
    int n = 1, N = 0;
    std::vector<double> rhos{10.0, 100.0, 1000.0};
    std::string output;
};

int run_verify_flat_limit(const VerifyFlatLimitArgs& a, std::ostream& out) {
    const auto scan =
        spectra::flat_limit_scan(a.b, a.twice_m, a.r_variant, a.z_variant, a.n, a.N, a.rhos);

    // the surviving towers contract to 2*b*n (variant 1) or
    // 2*b*(n - m + 1/2) (variant 4); variants 2 and 3 close
    const double m = field::half_integer_m(a.twice_m);
    double limit = 0.0;
    bool has_limit = true;
    if (a.r_variant == 1)
        limit = 2 * a.b * a.n;
    else if (a.r_variant == 4)
        limit = 2 * a.b * (a.n - m + 0.5);
    else
        has_limit = false;

    json entries = json::array();
    bool all_admissible = true;
    std::vector<double> errs;
    for (const auto& pt : scan) {
        all_admissible = all_admissible && pt.admissible;
        json e{{"rho", pt.rho}, {"B", pt.B}, {"admissible", pt.admissible}};
        if (pt.admissible) {
            e["lambda"] = pt.lambda;
            e["p"] = pt.p;
            e["p2_over_rho2"] = pt.p2_over_rho2;
            if (has_limit) errs.push_back(std::abs(pt.p2_over_rho2 - limit));
        } else {
            e["note"] = pt.note;
        }
        entries.push_back(std::move(e));
    }

    // O(1/rho): err * rho should stay within a constant band
    bool rate_ok = has_limit && all_admissible && errs.size() == a.rhos.size();
    if (rate_ok) {
        double lo = 1e300, hi = 0.0;
        for (size_t i = 0; i < errs.size(); ++i) {
            const double scaled = errs[i] * a.rhos[i];
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        rate_ok = hi <= 3.0 * lo && errs.back() <= errs.front();
    }

    json report{
        {"b", a.b},
        {"twice_m", a.twice_m},
        {"r_variant", a.r_variant},
        {"z_variant", a.z_variant},
        {"n", a.n},
        {"N", a.N},
        {"entries", std::move(entries)},
        {"all_pass", rate_ok},
    };
    if (has_limit) report["limit"] = limit;
    emit(report.dump(2) + "\n", a.output, out);
    return rate_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Energy spectra and wavefunctions of a spin-1/2 particle in a homogeneous "
        "magnetic field on the 3-sphere, with independent numerical verification"};
    app.set_config("--config", "", "key=value configuration file (flags win)");
    app.require_subcommand(0, 1);
    unsigned threads = 0;
    app.add_option("--threads", threads,
                   "worker cap for grid scans (0 = CURVED_LANDAU_THREADS or hardware)");

    SpectrumArgs sa;
    auto* sp = app.add_subcommand("spectrum", "enumerate exact bound states");
    sp->add_option("--B", sa.common.B, "dimensionless magnetic strength (> 0)")->required();
    sp->add_option("--M", sa.common.M, "dimensionless mass (> 0)")->required();
    sp->add_option("--twice-m", sa.common.twice_m, "azimuthal 2m values (odd integers)")
        ->required();
    sp->add_option("--n-max", sa.n_max, "largest radial index");
    sp->add_option("--N-max", sa.N_max, "largest z index");
    sp->add_option("--r-variant", sa.r_variant, "restrict to one radial variant (0 = all)");
    sp->add_option("--z-variant", sa.z_variant, "restrict to one z variant (0 = both 3 and 4)");
    sp->add_option("--format", sa.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sp->add_option("--output", sa.output, "write to file instead of stdout");
    sp->add_flag("--expand-branches", sa.expand_branches,
                 "emit one JSON record per branch sign and p-mirror");
    sp->add_flag("--no-normalizability", sa.no_normalizability,
                 "skip the quadrature ladder classification");
    sp->add_option("--norm-points", sa.norm_points, "quadrature base resolution");
    sp->add_option("--norm-levels", sa.norm_levels, "quadrature ladder depth (>= 3)");

    WavefunctionArgs wa;
    auto* wf = app.add_subcommand("wavefunction", "sample the profiles f1..f4 as CSV");
    wf->add_option("--B", wa.common.B)->required();
    wf->add_option("--M", wa.common.M)->required();
    wf->add_option("--twice-m", wa.common.twice_m, "azimuthal 2m (odd integer)")
        ->required()
        ->expected(1);
    wf->add_option("--r-variant", wa.r_variant, "radial variant 1..4")->required();
    wf->add_option("--z-variant", wa.z_variant, "z variant 3 or 4")->required();
    wf->add_option("--n", wa.n, "radial index")->required();
    wf->add_option("--N", wa.N, "z index")->required();
    wf->add_option("--nr", wa.nr, "radial sample count");
    wf->add_option("--nz", wa.nz, "z sample count");
    wf->add_option("--output", wa.output, "write to file instead of stdout");

    double gr = kPi / 2, gz = 0.0, gphi = 0.0;
    auto* ge = app.add_subcommand("geometry", "frame data and embedding at a point");
    ge->add_option("--r", gr, "r in [0, pi]")->required();
    ge->add_option("--z", gz, "z in [-pi/2, pi/2]")->required();
    ge->add_option("--phi", gphi, "phi in [0, 2*pi)");

    auto* ve = app.add_subcommand("verify", "cross-checks against independent oracles");
    ve->require_subcommand(1);

    VerifyResidualArgs vra;
    auto* vr = ve->add_subcommand("residual", "first-order-system residual scan of all states");
    vr->add_option("--B", vra.common.B)->required();
    vr->add_option("--M", vra.common.M)->required();
    vr->add_option("--twice-m", vra.common.twice_m)->required();
    vr->add_option("--n-max", vra.n_max);
    vr->add_option("--N-max", vra.N_max);
    vr->add_option("--nr", vra.nr, "scan grid points in r");
    vr->add_option("--nz", vra.nz, "scan grid points in z");
    vr->add_option("--tol", vra.tol, "pass threshold on the scaled residual");
    vr->add_option("--output", vra.output);

    VerifyOracleArgs voa;
    auto* vo = ve->add_subcommand("oracle", "finite-difference eigenvalue cross-check");
    vo->add_option("--twice-m", voa.twice_m)->expected(1);
    vo->add_option("--B", voa.B);
    vo->add_option("--k", voa.k, "number of radial eigenvalues to compare");
    vo->add_option("--points", voa.points, "radial base grid");
    vo->add_option("--z-points", voa.z_points, "z base grid");
    vo->add_option("--z-k", voa.z_k, "number of z eigenvalues to compare");
    vo->add_option("--levels", voa.levels, "Richardson refinement levels");
    vo->add_option("--tol", voa.tol, "relative tolerance");
    vo->add_option("--lambda", voa.lambdas, "z-equation lambda values (default: radial towers)");
    vo->add_option("--output", voa.output);

    VerifyFlatLimitArgs vfa;
    auto* vf = ve->add_subcommand("flat-limit", "vanishing-curvature scan of a tower");
    vf->add_option("--b", vfa.b, "physical field strength");
    vf->add_option("--twice-m", vfa.twice_m)->expected(1);
    vf->add_option("--r-variant", vfa.r_variant);
    vf->add_option("--z-variant", vfa.z_variant);
    vf->add_option("--n", vfa.n);
    vf->add_option("--N", vfa.N);
    vf->add_option("--rho", vfa.rhos, "curvature radii");
    vf->add_option("--output", vfa.output);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        vra.threads = threads;
        if (sp->parsed()) return run_spectrum(sa, out);
        if (wf->parsed()) return run_wavefunction(wa, out);
        if (ge->parsed()) return run_geometry(gr, gz, gphi, out);
        if (ve->parsed()) {
            if (vr->parsed()) return run_verify_residual(vra, out);
            if (vo->parsed()) return run_verify_oracle(voa, out);
            if (vf->parsed()) return run_verify_flat_limit(vfa, out);
        }
        err << "a subcommand is required; see --help\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace curved_landau::cli
