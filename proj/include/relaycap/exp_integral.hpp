// Exponential integral E1 over the positive reals, plus the exponentially
// scaled variant e^x E1(x) that stays representable for large x.
// Power series below x = 1, continued fraction above; relative accuracy is
// near machine precision throughout.
#pragma once

namespace relaycap {

// E1(x) = integral over [x, inf) of exp(-t)/t dt. Requires x > 0.
// Underflows to 0 around x > 745, as the true value does in double range.
double exp_integral_e1(double x);

// e^x * E1(x). Requires x > 0.
double exp_integral_e1_scaled(double x);

}  // namespace relaycap
