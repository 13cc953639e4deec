#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "curved_landau/spectra.hpp"
#include "curved_landau/wavefunctions.hpp"
#include "test_util.hpp"

using namespace curved_landau;
using namespace curved_landau::spectra;

TEST_SUITE("spectra") {

TEST_CASE("admissibility windows of the four radial variants") {
    CHECK(admissible(1, 1, 2.0).ok);
    CHECK_FALSE(admissible(1, -1, 2.0).ok);
    CHECK(admissible(1, -1, 2.0).violated == "0 < m");
    const auto v3 = admissible(3, 1, 2.0);
    CHECK_FALSE(v3.ok);
    CHECK(v3.violated.find("m > 2B - 1") != std::string::npos);
    CHECK(v3.violated.find("0 < B < 1") != std::string::npos);
    CHECK(admissible(3, -1, 0.125).ok);
    CHECK(admissible(4, -5, 2.0).ok);
    CHECK_FALSE(admissible(4, 3, 2.0).ok);
    CHECK_FALSE(admissible(2, 3, 2.0).ok);
    CHECK_THROWS_AS(admissible(5, 1, 2.0), std::domain_error);
    CHECK_THROWS_AS(admissible(1, 2, 2.0), std::domain_error);  // even twice_m
    CHECK_THROWS_AS(admissible(1, 1, 0.0), std::domain_error);  // B <= 0
}

TEST_CASE("separation-constant towers") {
    CHECK(lambda_of(1, 3, 2.0, 1) == doctest::Approx(std::sqrt(5.0)));
    CHECK(lambda_of(1, 3, 2.0, 2) == doctest::Approx(std::sqrt(12.0)));
    CHECK(lambda_of(1, 3, 2.0, 3) == doctest::Approx(std::sqrt(21.0)));
    // v2 at B = 1/2, m = 3/2, n = 0: (n+m+1/2)^2 - 2B(n+m+1/2) = 4 - 2 = 2
    CHECK(lambda_of(2, 3, 0.5, 0) == doctest::Approx(std::sqrt(2.0)));
    // v4 at B = 2, m = -1/2, n = 0: 1 + 4 = 5
    CHECK(lambda_of(4, -1, 2.0, 0) == doctest::Approx(std::sqrt(5.0)));

    // tower-base degeneracy and positivity violations
    CHECK_THROWS_AS(lambda_of(1, 3, 2.0, 0), degenerate_separation_error);
    CHECK_THROWS_AS(lambda_of(4, 1, 2.0, 0), degenerate_separation_error);  // s = 0
    try {
        lambda_of(2, 1, 2.0, 0);  // m = 1/2: inadmissible first
        CHECK(false);
    } catch (const admissibility_error&) {
        CHECK(true);
    }
    // admissible v2 but lambda^2 < 0: m = 3/2, B = 1.05, n = 0: s = 2, 4 - 4.2 < 0
    CHECK(admissible(2, 3, 1.05).ok);
    CHECK_THROWS_WITH_AS(lambda_of(2, 3, 1.05, 0), doctest::Contains("n + m + 1/2 > 2B"),
                         std::domain_error);
    // admissible v3 but n + 1 <= 2B: m = 1/2, B = 0.6, n = 0: 1 - 1.2 < 0
    CHECK(admissible(3, 1, 0.6).ok);
    CHECK_THROWS_WITH_AS(lambda_of(3, 1, 0.6, 0), doctest::Contains("n + 1 > 2B"),
                         std::domain_error);
}

TEST_CASE("z towers quantize p") {
    CHECK(p_of(3, 2.0, 0) == doctest::Approx(1.5));
    CHECK(p_of(3, 2.0, 1) == doctest::Approx(0.5));
    CHECK_THROWS_AS(p_of(3, 2.0, 2), out_of_tower_error);
    CHECK(p_of(4, std::sqrt(3.0), 1) == doctest::Approx(std::sqrt(3.0) + 1.5));
    CHECK_THROWS_AS(p_of(1, 2.0, 0), rejected_variant_error);
    CHECK_THROWS_AS(p_of(2, 2.0, 0), rejected_variant_error);
    CHECK_THROWS_AS(p_of(3, -1.0, 0), std::domain_error);
}

TEST_CASE("rejected z-variants quantize lambda instead") {
    const auto v1 = rejected_z_spectra(1, 0);
    CHECK(v1.lambda == 1.0);
    CHECK(v1.rejected);
    CHECK_FALSE(v1.degenerate);
    CHECK(rejected_z_spectra(2, 3).lambda == 3.0);
    const auto v2base = rejected_z_spectra(2, 0);
    CHECK(v2base.lambda == 0.0);
    CHECK(v2base.rejected);
    CHECK(v2base.degenerate);
    CHECK_THROWS_AS(rejected_z_spectra(3, 0), std::domain_error);
}

TEST_CASE("energies come in symmetric pairs") {
    const auto [ep, em] = energy(4.0, 3.0);
    CHECK(ep == doctest::Approx(5.0));
    CHECK(em == doctest::Approx(-5.0));
    CHECK(energy(1e-8, 1.0).first == doctest::Approx(1.0));
    CHECK_THROWS_AS(energy(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(energy(1.5, 0.0), std::domain_error);
}

TEST_CASE("enumeration matches the hand count") {
    const std::vector<int> ms{3};
    const auto recs = enumerate_states(field::FieldParams{2.0, 1.0}, ms, 3, 1);
    CHECK(recs.size() == 12);
    for (const auto& r : recs) {
        CHECK(r.r_variant == 1);  // only variant 1 is admissible at m = 3/2, B = 2
        CHECK((r.z_variant == 3 || r.z_variant == 4));
        CHECK(r.qn.n >= 1);  // n = 0 is the lambda = 0 base
        CHECK(r.eps * r.eps - r.M * r.M - r.p * r.p == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(r.lambda > 0.0);
        CHECK(r.p > 0.0);
        CHECK(r.admissible);
    }
    // z-variant 3 towers are non-normalizable, variant 4 normalizable
    for (const auto& r : recs) CHECK(r.normalizable == (r.z_variant == 4));
}

TEST_CASE("negative m excludes variant 1 and keeps variant 4") {
    const std::vector<int> ms{-5};
    const auto recs = enumerate_states(field::FieldParams{2.0, 1.0}, ms, 2, 1);
    CHECK(!recs.empty());
    for (const auto& r : recs) CHECK(r.r_variant == 4);
}

TEST_CASE("enumeration is deterministic and canonically ordered") {
    const std::vector<int> ms{3, -1, 1};
    EnumerationOptions opts;
    const auto a = enumerate_states(field::FieldParams{1.0, 0.7}, ms, 3, 2, opts);
    const auto b = enumerate_states(field::FieldParams{1.0, 0.7}, ms, 3, 2, opts);
    REQUIRE(a.size() == b.size());
    std::ostringstream sa, sb;
    for (const auto& r : a)
        sa << r.r_variant << ' ' << r.z_variant << ' ' << r.qn.twice_m << ' ' << r.qn.n << ' '
           << r.qn.N << ' ' << r.lambda << ' ' << r.p << ' ' << r.eps << '\n';
    for (const auto& r : b)
        sb << r.r_variant << ' ' << r.z_variant << ' ' << r.qn.twice_m << ' ' << r.qn.n << ' '
           << r.qn.N << ' ' << r.lambda << ' ' << r.p << ' ' << r.eps << '\n';
    CHECK(sa.str() == sb.str());
    for (size_t i = 1; i < a.size(); ++i) {
        CHECK(a[i - 1].eps <= a[i].eps);  // primary sort key
    }
}

TEST_CASE("energies grow monotonically along each tower") {
    const std::vector<int> ms{3};
    const auto recs = enumerate_states(field::FieldParams{2.0, 1.0}, ms, 4, 2);
    for (const auto& r1 : recs)
        for (const auto& r2 : recs) {
            if (r1.r_variant == r2.r_variant && r1.z_variant == r2.z_variant &&
                r1.qn.twice_m == r2.qn.twice_m && r1.qn.N == r2.qn.N && r1.qn.n < r2.qn.n)
                CHECK(r1.eps < r2.eps);
            if (r1.r_variant == r2.r_variant && r1.z_variant == 4 && r2.z_variant == 4 &&
                r1.qn.twice_m == r2.qn.twice_m && r1.qn.n == r2.qn.n && r1.qn.N < r2.qn.N)
                CHECK(r1.eps < r2.eps);
        }
}

TEST_CASE("m = 1/2 degeneracy: variants 1 and 4 share towers and profiles") {
    const int twice_m = 1;
    const double B = 1.25;
    REQUIRE(admissible(1, twice_m, B).ok);
    REQUIRE(admissible(4, twice_m, B).ok);
    for (int n = 1; n <= 3; ++n) {
        const double l1 = lambda_of(1, twice_m, B, n);
        const double l4 = lambda_of(4, twice_m, B, n);
        CHECK(l1 == doctest::Approx(l4).epsilon(1e-15));
        for (double r : {0.4, 1.3, 2.8}) {
            const auto p1 = wavefunctions::radial_profile(1, twice_m, B, l1, n, r);
            const auto p4 = wavefunctions::radial_profile(4, twice_m, B, l4, n, r);
            CHECK(p1.R1 == doctest::Approx(p4.R1).epsilon(1e-14));
            CHECK(p1.R2 == doctest::Approx(p4.R2).epsilon(1e-14));
        }
    }
}

TEST_CASE("enumeration never emits an inequality violation (sampled)") {
    Uniform rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const double B = rng.in(0.05, 4.0);
        const int twice_m = 2 * static_cast<int>(rng.in(-4, 5)) + 1;
        const double m = 0.5 * twice_m;
        EnumerationOptions opts;
        opts.classify_normalizability = false;
        const std::vector<int> ms{twice_m};
        const auto recs = enumerate_states(field::FieldParams{B, 1.0}, ms, 3, 2, opts);
        for (const auto& r : recs) {
            CHECK(r.lambda > 0.0);
            CHECK(r.p > 0.0);
            switch (r.r_variant) {
                case 1: CHECK((0 < m && m < 2 * B)); break;
                case 2:
                    CHECK(m > 0);
                    CHECK(r.qn.n + m + 0.5 > 2 * B);
                    break;
                case 3:
                    CHECK(m < 1);
                    CHECK(m > 2 * B - 1);
                    CHECK((0 < B && B < 1));
                    CHECK(r.qn.n + 1 > 2 * B);
                    break;
                case 4:
                    CHECK(m < 1);
                    CHECK(m < 2 * B);
                    CHECK(m < B + 0.5);
                    break;
                default: CHECK(false);
            }
        }
    }
}

TEST_CASE("enumeration input validation") {
    const std::vector<int> empty;
    CHECK_THROWS_AS(enumerate_states(field::FieldParams{2.0, 1.0}, empty, 3, 2), usage_error);
    const std::vector<int> even{2};
    CHECK_THROWS_AS(enumerate_states(field::FieldParams{2.0, 1.0}, even, 3, 2),
                    std::domain_error);
    const std::vector<int> ok{1};
    CHECK_THROWS_AS(enumerate_states(field::FieldParams{-1.0, 1.0}, ok, 3, 2),
                    std::domain_error);
}

TEST_CASE("flat limit of the lowest variant-1 tower") {
    const std::vector<double> rhos{10.0, 100.0, 1000.0};
    const auto scan = flat_limit_scan(1.0, 3, 1, 4, 1, 0, rhos);
    REQUIRE(scan.size() == 3);
    CHECK(scan[0].p2_over_rho2 == doctest::Approx(2.154274).epsilon(1e-5));
    CHECK(scan[1].p2_over_rho2 == doctest::Approx(2.014267).epsilon(1e-5));
    CHECK(scan[2].p2_over_rho2 == doctest::Approx(2.001415).epsilon(1e-5));
    // O(1/rho) rate toward 2 b n = 2
    for (size_t i = 0; i + 1 < scan.size(); ++i) {
        const double e0 = std::abs(scan[i].p2_over_rho2 - 2.0);
        const double e1 = std::abs(scan[i + 1].p2_over_rho2 - 2.0);
        CHECK(e1 < e0 * 0.15);
        CHECK(e1 > e0 * 0.05);
    }
}

TEST_CASE("only variants 1 and 4 survive vanishing curvature") {
    for (double rho : {30.0, 300.0}) {
        const double B = 1.0 * rho * rho;
        for (int twice_m : {1, 3, 5}) {
            CHECK(admissible(1, twice_m, B).ok);
            CHECK_FALSE(admissible(2, twice_m, B).ok);
            CHECK_FALSE(admissible(3, twice_m, B).ok);
        }
        for (int twice_m : {-1, -3, -5}) {
            CHECK(admissible(4, twice_m, B).ok);
            CHECK_FALSE(admissible(1, twice_m, B).ok);
            CHECK_FALSE(admissible(2, twice_m, B).ok);
            CHECK_FALSE(admissible(3, twice_m, B).ok);
        }
    }
}

TEST_CASE("flat-limit scan reports inadmissible windows per entry") {
    // variant 2 closes as rho grows
    const std::vector<double> rhos{0.5, 50.0};
    const auto scan = flat_limit_scan(1.0, 3, 2, 4, 0, 0, rhos);
    REQUIRE(scan.size() == 2);
    CHECK(scan[0].admissible);  // B = 0.25: m = 1.5 > 2B - 1 = -0.5
    CHECK_FALSE(scan[1].admissible);
    CHECK(scan[1].note.find("m > 2B - 1") != std::string::npos);
}

}  // TEST_SUITE
