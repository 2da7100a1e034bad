#pragma once

namespace serpaudit::special {

// ln Gamma(x) for x > 0 (Lanczos approximation, g = 7).
double log_gamma(double x);

// Regularized incomplete beta I_x(a, b), x in [0,1], a,b > 0.
// Lentz continued fraction with the symmetry split at x = (a+1)/(a+b+2).
double regularized_incomplete_beta(double x, double a, double b);

// Regularized lower incomplete gamma P(a, x) and upper Q(a, x) = 1 - P(a, x),
// a > 0, x >= 0. Series expansion for x < a+1, Lentz continued fraction above.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Survival function of the chi-squared distribution with k df.
double chi_squared_sf(double x, double k);

// Survival function P(T > t) of Student's t with df degrees of freedom.
double student_t_sf(double t, double df);

// Survival function P(F > f) of the F distribution with (d1, d2) df.
double f_sf(double f, double d1, double d2);

// Inverse standard normal CDF (Acklam's rational approximation plus one
// Halley refinement step; |relative error| well below 1e-14 on (0,1)).
double normal_quantile(double p);

}  // namespace serpaudit::special
