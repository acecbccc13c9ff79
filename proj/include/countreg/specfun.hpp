#pragma once

// Scalar special functions backing every probability computation in the
// pipeline. All functions are pure and thread-safe; domain violations
// throw std::domain_error.

namespace countreg::specfun {

/// Natural log of the Gamma function, Lanczos approximation (g=7, 9 terms).
/// Valid for x > 0; absolute error below 1e-12 on [0.5, 1e6].
double ln_gamma(double x);

/// Regularized lower incomplete gamma P(a, x). Series expansion for
/// x < a+1, continued fraction otherwise.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Chi-square survival function P(X2_df > x) = Q(df/2, x/2).
double chi2_sf(double x, double df);

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile for p in (0, 1). Rational approximation
/// refined by one Newton step on normal_cdf.
double normal_quantile(double p);

/// Poisson pmf P(X = k), computed in log space.
double poisson_pmf(long k, double lambda);

/// Poisson upper tail P(X > k) = 1 - sum_{j<=k} pmf(j, lambda).
double poisson_sf(long k, double lambda);

} // namespace countreg::specfun
