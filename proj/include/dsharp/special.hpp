#pragma once

namespace dsharp::special {

double normal_pdf(double z);
double normal_cdf(double z);

// Inverse of the standard normal cdf (Wichura's PPND16 rational
// approximations, accurate to ~1e-16 relative). Throws std::domain_error
// unless 0 < p < 1.
double normal_quantile(double p);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chisq_upper_tail(double dof, double x);

}  // namespace dsharp::special
