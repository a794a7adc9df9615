#pragma once

namespace gpgame {

/// base^e for integer e by squaring; exact whenever every intermediate product
/// is exactly representable (integer bases with small exponents).
inline double ipow(double base, int e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  double result = 1.0;
  double factor = base;
  unsigned n = static_cast<unsigned>(e);
  while (n != 0) {
    if (n & 1u) result *= factor;
    n >>= 1;
    if (n != 0) factor *= factor;
  }
  return result;
}

/// Rising factorial a (a+1) ... (a+m-1) = Gamma(a+m)/Gamma(a) for m >= 0;
/// exact for integer a with modest m, which keeps the closed-form gain
/// formulas free of log-space rounding.
inline double rising_factorial(double a, int m) {
  double result = 1.0;
  for (int j = 0; j < m; ++j) result *= a + j;
  return result;
}

/// n! as a double (exact through n = 22).
inline double factorial(int n) { return rising_factorial(1.0, n); }

}  // namespace gpgame
