#include <doctest.h>

#include <cmath>
#include <array>
#include <complex>
#include <vector>

#include "curved_landau/hyp2f1.hpp"
#include "test_util.hpp"

using namespace curved_landau::hyp2f1;
using complexd = std::complex<double>;

namespace {

// brute-force oracle: direct term sum with Pochhammer products
complexd brute_2f1(double a, double b, double g, complexd x, int N) {
    complexd sum = 0.0;
    for (int k = 0; k <= N; ++k) {
        double num = 1.0, den = 1.0;
        for (int j = 0; j < k; ++j) {
            num *= (a + j) * (b + j);
            den *= (g + j) * (j + 1);
        }
        sum += num / den * std::pow(x, k);
    }
    return sum;
}

}  // namespace

TEST_SUITE("hyp2f1") {

TEST_CASE("degenerate and one-term series") {
    CHECK(poly_2f1(0.0, 3.7, 1.2, complexd{2.5, 1.0}).first == complexd{1.0, 0.0});
    auto [v, d] = poly_2f1(-1.0, 3.0, 2.0, 0.5);
    CHECK(v.real() == doctest::Approx(0.25));
    CHECK(d.real() == doctest::Approx(-1.5));
}

TEST_CASE("three-term series against the brute-force sum") {
    // F(-2, 2, 1; 1): brute force gives 1 - 4 + 3 = 0
    const complexd expect = brute_2f1(-2.0, 2.0, 1.0, 1.0, 2);
    CHECK(std::abs(expect) < 1e-15);
    CHECK(std::abs(poly_2f1(-2.0, 2.0, 1.0, 1.0).first - expect) < 1e-14);

    Uniform rng(3);
    for (int i = 0; i < 50; ++i) {
        const int N = static_cast<int>(rng.in(0, 7));
        const double b = rng.in(-3.0, 6.0), g = rng.in(0.3, 4.0);
        const complexd x{rng.in(-1.5, 1.5), rng.in(-1.5, 1.5)};
        const auto got = poly_2f1(-N, b, g, x).first;
        const auto want = brute_2f1(-N, b, g, x, N);
        CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("value at the origin and parameter symmetry") {
    Uniform rng(17);
    for (int i = 0; i < 50; ++i) {
        const int N = static_cast<int>(rng.in(0, 9));
        const double b = rng.in(-4.0, 8.0), g = rng.in(0.2, 5.0);
        CHECK(poly_2f1(-N, b, g, 0.0).first == complexd{1.0, 0.0});
        const complexd x{rng.in(-2.0, 2.0), rng.in(-2.0, 2.0)};
        const auto ab = poly_2f1(-N, b, g, x).first;
        const auto ba = poly_2f1(b, -N, g, x).first;
        CHECK(std::abs(ab - ba) <= 1e-14 * std::max(1.0, std::abs(ab)));
    }
}

TEST_CASE("series satisfies the hypergeometric equation") {
    // y(1-y) F'' + [g - (a+b+1) y] F' - a b F = 0
    Uniform rng(29);
    for (int i = 0; i < 40; ++i) {
        const int N = static_cast<int>(rng.in(0, 8));
        const double a = -N, b = rng.in(-2.0, 7.0), g = rng.in(0.3, 5.0);
        const TerminatingSeries F(a, b, g);
        for (int s = 0; s < 20; ++s) {
            const complexd y{rng.in(-1.2, 1.8), rng.in(-0.8, 0.8)};
            const auto e = F(y);
            const complexd res =
                y * (1.0 - y) * e.d2 + (g - (a + b + 1) * y) * e.d1 - a * b * e.value;
            CHECK(std::abs(res) <= 1e-11 * std::max(1.0, std::abs(e.value)));
        }
    }
}

TEST_CASE("series satisfies the equation at the profile parameter sets") {
    // the exact (alpha, beta, gamma) combinations the profiles are built from
    std::vector<std::array<double, 3>> sets;
    for (const double lambda : {std::sqrt(5.0), std::sqrt(12.0), std::sqrt(2.0)}) {
        for (int N : {0, 1, 2}) {
            const double p4 = lambda + N + 0.5;
            sets.push_back({lambda - p4 + 0.5, -lambda - p4 + 0.5, -p4 + 0.5});  // z variant 4
            const double p3 = lambda - (N + 0.5);
            if (p3 > 0) sets.push_back({lambda + p3 + 0.5, -lambda + p3 + 0.5, p3 + 1.5});
        }
        // radial variant 1 at m = 3/2, B = 2
        const double A = (2 * 2.0 - 1.5) / 2, C = 1.5 / 2;
        const double root = std::sqrt(4.0 + lambda * lambda);
        sets.push_back({A + C - root, A + C + root, 2 * A + 0.5});
    }
    Uniform rng(71);
    const auto terminates = [](double x) {
        return std::abs(x - std::round(x)) <= 1e-9 && std::round(x) <= 0.0;
    };
    int tested = 0;
    for (const auto& [a, b, g] : sets) {
        if (!terminates(a) && !terminates(b)) continue;
        ++tested;
        const TerminatingSeries F(a, b, g);
        for (int s = 0; s < 20; ++s) {
            const complexd y{rng.in(-1.0, 2.0), rng.in(-1.0, 1.0)};
            const auto e = F(y);
            const complexd res =
                y * (1.0 - y) * e.d2 + (g - (a + b + 1) * y) * e.d1 - a * b * e.value;
            CHECK(std::abs(res) <= 1e-11 * std::max(1.0, std::abs(e.value)));
        }
    }
    CHECK(tested >= 12);
}

TEST_CASE("termination uses the smaller nonpositive upper parameter") {
    const TerminatingSeries F(-2.0, -5.0, 1.3);
    CHECK(F.degree() == 2);
    CHECK(F.coefficients().size() == 3);
    CHECK(F.coefficients()[0] == 1.0);
}

TEST_CASE("near-integer parameters are snapped") {
    const TerminatingSeries F(-3.0 + 4e-10, 2.0, 1.5);
    CHECK(F.degree() == 3);
    CHECK(F.alpha() == -3.0);
}

TEST_CASE("unsupported parameter combinations are rejected") {
    CHECK_THROWS_AS(TerminatingSeries(0.5, 1.5, 1.0), std::invalid_argument);   // non-terminating
    CHECK_THROWS_AS(TerminatingSeries(-4.0, 2.0, -2.0), std::invalid_argument); // gamma pole
    CHECK_NOTHROW(TerminatingSeries(-2.0, 1.0, -2.5));  // non-integer gamma is fine
    CHECK_NOTHROW(TerminatingSeries(-2.0, 1.0, -2.0 - 1e-3));
}

}  // TEST_SUITE
