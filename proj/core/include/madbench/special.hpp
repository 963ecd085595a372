#pragma once

namespace madbench {

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_beta(double a, double b, double x);

// Regularized upper incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

// Survival function of the F distribution with (d1, d2) degrees of freedom.
double f_sf(double f, double d1, double d2);

// Survival function of the chi-squared distribution with k degrees of freedom.
double chi2_sf(double x, double k);

// Two-sided survival-style helper: P(T > t) for Student's t with df degrees
// of freedom (one-sided upper tail).
double student_t_sf(double t, double df);

}  // namespace madbench
