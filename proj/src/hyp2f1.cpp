#include "curved_landau/hyp2f1.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace curved_landau::hyp2f1 {

namespace {

constexpr double kIntTol = 1e-9;

// Nonpositive integer within tolerance -> its magnitude as termination degree.
std::optional<int> termination_degree(double a) {
    const double r = std::round(a);
    if (std::abs(a - r) > kIntTol) return std::nullopt;
    if (r > 0.0) return std::nullopt;
    return static_cast<int>(-r);
}

}  // namespace

TerminatingSeries::TerminatingSeries(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
    const auto na = termination_degree(alpha);
    const auto nb = termination_degree(beta);
    if (!na && !nb)
        throw std::invalid_argument(
            "TerminatingSeries: neither upper parameter is a nonpositive integer (alpha = " +
            std::to_string(alpha) + ", beta = " + std::to_string(beta) + ")");
    degree_ = na && nb ? std::min(*na, *nb) : (na ? *na : *nb);

    // gamma + k = 0 for some k < degree poisons the recurrence.
    const auto ng = termination_degree(gamma);
    if (ng && *ng < degree_)
        throw std::invalid_argument("TerminatingSeries: gamma = " + std::to_string(gamma) +
                                    " is a nonpositive integer inside the series range");

    // Snap the terminating parameter so the last coefficient is exact.
    if (na && *na == degree_) alpha_ = -degree_;
    if (nb && *nb == degree_) beta_ = -degree_;

    c_.resize(degree_ + 1);
    c_[0] = 1.0;
    for (int k = 0; k < degree_; ++k)
        c_[k + 1] = c_[k] * (alpha_ + k) * (beta_ + k) / ((gamma_ + k) * (k + 1));
}

Eval TerminatingSeries::operator()(std::complex<double> x) const {
    std::complex<double> v = 0.0, d1 = 0.0, d2 = 0.0;
    for (int k = degree_; k >= 2; --k) d2 = d2 * x + static_cast<double>(k) * (k - 1) * c_[k];
    for (int k = degree_; k >= 1; --k) d1 = d1 * x + static_cast<double>(k) * c_[k];
    for (int k = degree_; k >= 0; --k) v = v * x + c_[k];
    return {v, d1, d2};
}

std::pair<std::complex<double>, std::complex<double>> poly_2f1(double alpha, double beta,
                                                               double gamma,
                                                               std::complex<double> x) {
    const TerminatingSeries s(alpha, beta, gamma);
    const Eval e = s(x);
    return {e.value, e.d1};
}

}  // namespace curved_landau::hyp2f1
