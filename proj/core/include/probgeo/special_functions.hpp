#pragma once

namespace probgeo {

/// Standard normal cdf, evaluated through erfc so both tails retain full
/// relative accuracy (|rel err| ~ 1 ulp of the underlying libm erfc).
[[nodiscard]] double normal_cdf(double x) noexcept;

/// Standard normal density.
[[nodiscard]] double normal_pdf(double x) noexcept;

/// Standard normal quantile. Rational initial guess (Acklam) polished by
/// two Newton steps against normal_cdf; accurate to a few ulps over the
/// full open interval.
[[nodiscard]] double normal_quantile(double p);

/// Regularized incomplete beta function I_x(a,b), continued-fraction
/// evaluation (modified Lentz), with the symmetry reduction applied when
/// x > (a+1)/(a+b+2). Standard method; see Numerical Recipes ch. 6.
[[nodiscard]] double incomplete_beta(double a, double b, double x);

}  // namespace probgeo
