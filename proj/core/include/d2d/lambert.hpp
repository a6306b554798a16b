#pragma once

namespace d2d {

// Principal branch W0 of w e^w = x. Domain x >= -1/e; throws std::domain_error
// below it. Residual |W e^W - x| <= 1e-12 * max(1, |x|).
double lambert_w0(double x);

// W0(exp(y)) evaluated without ever forming exp(y), so y may exceed the range
// where exp overflows. For large y this solves w + ln w = y directly.
double lambert_w0_exp_arg(double y);

}  // namespace d2d
