#pragma once

// Special-function kernel backing every closed form in the toolkit:
// gamma, lower/upper incomplete gamma, K1, E1.
//
// Accuracy targets (enforced by tests against an independent quadrature
// oracle): gamma <= 1e-12 relative on (0, 170]; the other kernels <= 1e-9
// relative on the argument ranges produced by valid model parameters
// (s in (0, 50], x in (0, 1e4]). Arguments outside those ranges raise
// std::domain_error rather than extrapolating.

namespace parkrelay {

// Gamma function on (0, 170] (overflows double beyond ~171.6).
double gamma(double x);

// Lower incomplete gamma: integral of t^{s-1} e^{-t} dt over [0, x].
// Unnormalized; monotone nondecreasing in x with limit gamma(s).
double lower_incomplete_gamma(double s, double x);

// Upper incomplete gamma, computed by its own tail expansion (not as
// gamma(s) - lower), so the identity lower + upper = gamma is a real check.
double upper_incomplete_gamma(double s, double x);

// Regularized upper incomplete gamma Q(s, x) = upper / gamma(s).
// Stable deep in the tail; this is what survival ratios are built from.
double regularized_gamma_q(double s, double x);

// Modified Bessel function of the second kind, order one.
// Underflows to zero beyond x ~ 705; returns 0 there by convention.
double bessel_k1(double x);

// Exponential integral E1(x) = integral of e^{-xt}/t dt over [1, inf), x > 0.
double exp_integral_e1(double x);

// e^x E1(x) without forming either factor; usable for x far beyond 709
// where e^x alone overflows. Needed by the capacity closed form.
double expe1_scaled(double x);

}  // namespace parkrelay
