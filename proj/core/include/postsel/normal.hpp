#pragma once

namespace postsel {

/// Standard normal CDF via the complementary error function.
double normal_cdf(double x);

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal quantile. Requires u strictly inside (0, 1).
/// Satisfies |normal_cdf(normal_quantile(u)) - u| <= 1e-12 on [1e-10, 1-1e-10].
double normal_quantile(double u);

}  // namespace postsel
