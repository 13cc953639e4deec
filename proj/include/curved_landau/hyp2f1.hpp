#pragma once

#include <complex>
#include <vector>

#include "curved_landau/errors.hpp"

// Terminating Gauss hypergeometric series.  Every profile in this project has
// a nonpositive-integer upper parameter, so F(alpha, beta, gamma; x) is a
// polynomial and can be evaluated exactly; no analytic continuation is needed
// or provided.

namespace curved_landau::hyp2f1 {

struct Eval {
    std::complex<double> value;
    std::complex<double> d1;
    std::complex<double> d2;
};

/// Polynomial F(alpha, beta, gamma; x) with coefficients
/// c_k = (alpha)_k (beta)_k / ((gamma)_k k!), built by forward recurrence.
/// Construction requires alpha or beta within 1e-9 of a nonpositive integer
/// (snapped); the termination degree is the smaller such magnitude.
class TerminatingSeries {
public:
    TerminatingSeries(double alpha, double beta, double gamma);

    int degree() const { return degree_; }
    const std::vector<double>& coefficients() const { return c_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

    /// Value and first two derivatives, term by term (exact up to rounding).
    Eval operator()(std::complex<double> x) const;

private:
    double alpha_, beta_, gamma_;
    int degree_;
    std::vector<double> c_;
};

/// One-shot value + derivative.
std::pair<std::complex<double>, std::complex<double>> poly_2f1(double alpha, double beta,
                                                               double gamma,
                                                               std::complex<double> x);

}  // namespace curved_landau::hyp2f1
