#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they check: plain power series / integral representations for Bessel J, a
// scan-and-bisect zero finder, the explicit series definition of Jacobi
// polynomials, and a fixed-panel Simpson rule for oracle integrals.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

// fixed-panel composite Simpson; panels must be even
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// power series for J_m(x); extended precision keeps cancellation below
// ~1e-13 absolute for x <= 18
inline double bessel_j_series(int m, double x) {
  const long double half = 0.5L * static_cast<long double>(x);
  long double term = 1.0L;
  for (int i = 1; i <= m; ++i) term *= half / i;
  long double sum = term;
  for (int k = 1; k <= 200; ++k) {
    term *= -half * half / (static_cast<long double>(k) * (k + m));
    sum += term;
    if (std::fabs(term) < 1e-24L * (std::fabs(sum) + 1e-30L)) break;
  }
  return static_cast<double>(sum);
}

// Bessel integral representation J_m(x) = (1/pi) int_0^pi cos(m t - x sin t) dt;
// heavy fixed-panel Simpson makes it serviceable at large x
inline double bessel_j_integral(int m, double x, int panels = 200000) {
  return simpson([&](double t) { return std::cos(m * t - x * std::sin(t)); },
                 0.0, pi, panels) / pi;
}

// s-th positive zero of J_m by scanning for sign changes of the series and
// bisecting; independent of the library's McMahon/Newton path
inline double bessel_zero_bisect(int m, int s) {
  const double step = 0.25;
  double a = m + 1e-3;
  double fa = bessel_j_series(m, a);
  int found = 0;
  for (int i = 0; i < 40000; ++i) {
    const double b = a + step;
    const double fb = bessel_j_series(m, b);
    if ((fa < 0.0) != (fb < 0.0)) {
      ++found;
      if (found == s) {
        double lo = a, hi = b, flo = fa;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (hi - lo < 1e-14 * mid) break;
          const double fm = bessel_j_series(m, mid);
          if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
          } else {
            lo = mid;
            flo = fm;
          }
        }
        return 0.5 * (lo + hi);
      }
    }
    a = b;
    fa = fb;
  }
  throw std::runtime_error("oracle::bessel_zero_bisect: not found");
}

// real-upper-index binomial coefficient C(z, j) = z(z-1)...(z-j+1)/j!
inline double binom_real(double z, int j) {
  double num = 1.0, den = 1.0;
  for (int i = 1; i <= j; ++i) {
    num *= z - j + i;
    den *= i;
  }
  return num / den;
}

// explicit series definition of the Jacobi polynomial,
// P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}
inline double jacobi_series(int n, double a, double b, double x) {
  double sum = 0.0;
  for (int s = 0; s <= n; ++s)
    sum += binom_real(n + a, n - s) * binom_real(n + b, s) *
           std::pow(0.5 * (x - 1.0), s) * std::pow(0.5 * (x + 1.0), n - s);
  return sum;
}

// extended-precision evaluations for spot values
inline double sech2(double x) {
  const long double c = std::cosh(static_cast<long double>(x));
  return static_cast<double>(1.0L / (c * c));
}
inline double cosh2(double x) {
  const long double c = std::cosh(static_cast<long double>(x));
  return static_cast<double>(c * c);
}
inline double csch2(double x) {
  const long double s = std::sinh(static_cast<long double>(x));
  return static_cast<double>(1.0L / (s * s));
}

}  // namespace oracle
