#pragma once

// Special-function kernel: Jacobi polynomials, log-gamma, Bessel functions of
// the first kind (integer order) and their positive zeros. Self-contained;
// everything here is a pure function of its arguments.
//
// Accuracy budget is 1e-12 absolute (Bessel) / relative (log-gamma) so that
// downstream energy comparisons at 1e-6 are never limited by this layer.

#include <cmath>
#include <stdexcept>
#include <string>

namespace pdmchan::specfun {

/// Index pair and degree of a Jacobi polynomial P_n^{(a,b)}.
/// Orthogonality (and the normalizability it encodes) requires a, b > -1.
struct JacobiParams {
  double a = 0.0;
  double b = 0.0;
  int n = 0;
};

/// One positive zero j_{order,index} of J_order, index counted from 1.
struct BesselZero {
  int order = 0;
  int index = 1;
  double value = 0.0;
};

namespace detail {

inline constexpr double pi = 3.14159265358979323846;

inline void require(bool cond, const char* what) {
  if (!cond) throw std::domain_error(what);
}

// Power series around 0, accumulated in extended precision. Cancellation at
// the switchover point x = 12 stays below 1e-15 absolute.
inline double bessel_j_series(int order, double x) {
  const long double half = 0.5L * static_cast<long double>(x);
  long double term = 1.0L;
  for (int i = 1; i <= order; ++i) {
    term *= half / i;
    if (term == 0.0L) return 0.0;  // deep underflow: |J_m(x)| <= (x/2)^m/m!
  }
  long double sum = term;
  const long double mh2 = -half * half;
  for (int k = 1; k <= 400; ++k) {
    term *= mh2 / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (std::fabs(term) < 1e-25L * std::fabs(sum) + 1e-320L) break;
  }
  return static_cast<double>(sum);
}

// Miller backward recurrence with the normalization J_0 + 2*sum J_{2k} = 1.
// Stable for every order at the x > 12 where it is used.
inline double bessel_j_backward(int order, double x) {
  const int start = std::max(order, static_cast<int>(x)) + 52;
  const long double lx = static_cast<long double>(x);
  long double fp = 0.0L;    // f_{i+1}
  long double fc = 1e-30L;  // f_i
  long double sum = 0.0L;
  long double result = 0.0L;
  for (int i = start; i >= 1; --i) {
    long double fm = (2.0L * i / lx) * fc - fp;  // f_{i-1}
    fp = fc;
    fc = fm;
    const int idx = i - 1;
    if (idx == order) result = fc;
    if (idx == 0) {
      sum += fc;
    } else if (idx % 2 == 0) {
      sum += 2.0L * fc;
    }
    if (std::fabs(fc) > 1e250L) {
      fp *= 1e-250L;
      fc *= 1e-250L;
      sum *= 1e-250L;
      result *= 1e-250L;
    }
  }
  return static_cast<double>(result / sum);
}

}  // namespace detail

/// Natural log of the Gamma function for x > 0 (Lanczos, g = 7).
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  static const double c[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection keeps the series argument away from its poles
    return std::log(detail::pi / std::sin(detail::pi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * detail::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

/// P_n^{(a,b)}(x) by the three-term recurrence in the degree.
/// Exact for n = 0, 1; x may exceed [-1,1] by at most 1e-12 of roundoff.
inline double jacobi_eval(const JacobiParams& p, double x) {
  if (!(p.a > -1.0) || !(p.b > -1.0))
    throw std::invalid_argument("jacobi_eval: requires a > -1 and b > -1");
  if (p.n < 0) throw std::invalid_argument("jacobi_eval: requires n >= 0");
  detail::require(std::fabs(x) <= 1.0 + 1e-12, "jacobi_eval: |x| > 1");
  if (p.n == 0) return 1.0;
  const double a = p.a, b = p.b;
  double pm = 1.0;
  double pc = 0.5 * (a - b) + (1.0 + 0.5 * (a + b)) * x;
  for (int i = 2; i <= p.n; ++i) {
    const double s = 2.0 * i + a + b;
    const double c1 = 2.0 * i * (i + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (i + a - 1.0) * (i + b - 1.0) * s;
    const double pn = (c2 * pc - c3 * pm) / c1;
    pm = pc;
    pc = pn;
  }
  return pc;
}

/// J_order(x) for integer order >= 0 and x >= 0.
/// Absolute accuracy <= 1e-12 on [0, 100].
inline double bessel_j(int order, double x) {
  if (order < 0) throw std::invalid_argument("bessel_j: requires order >= 0");
  if (!std::isfinite(x)) throw std::domain_error("bessel_j: non-finite x");
  detail::require(x >= 0.0, "bessel_j: requires x >= 0");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x <= 12.0) return detail::bessel_j_series(order, x);
  return detail::bessel_j_backward(order, x);
}

/// d/dx J_order(x); J_0' = -J_1, otherwise (J_{m-1} - J_{m+1})/2.
inline double bessel_j_deriv(int order, double x) {
  if (order == 0) return -bessel_j(1, x);
  return 0.5 * (bessel_j(order - 1, x) - bessel_j(order + 1, x));
}

namespace detail {

// Sequential sign-change scan; guaranteed step << minimal zero spacing (~pi).
inline void scan_bracket(int order, int index, double& a, double& b) {
  const double step = 0.5;
  double x0 = order + 1e-3;  // all zeros of J_m exceed m
  double fa = bessel_j(order, x0);
  int found = 0;
  for (int i = 0; i < 100000; ++i) {
    const double x1 = x0 + step;
    const double fb = bessel_j(order, x1);
    if ((fa < 0.0) != (fb < 0.0)) {
      ++found;
      if (found == index) {
        a = x0;
        b = x1;
        return;
      }
    }
    x0 = x1;
    fa = fb;
  }
  throw std::runtime_error("bessel_zero: scan failed to bracket");
}

}  // namespace detail

/// The index-th positive zero of J_order (index >= 1), to <= 1e-12 absolute.
/// McMahon guess bracketed and verified, bisection then safeguarded Newton.
inline BesselZero bessel_zero(int order, int index) {
  if (order < 0) throw std::invalid_argument("bessel_zero: requires order >= 0");
  if (index < 1) throw std::invalid_argument("bessel_zero: requires index >= 1");

  double a = 0.0, b = 0.0;
  bool bracketed = false;
  if (order <= 10) {
    // McMahon's expansion; for order <= 10 the guess is within 0.5 of the
    // true zero while consecutive zeros are > 3.1 apart, so a verified sign
    // change in [guess - 1.2, guess + 1.2] identifies the wanted zero.
    const double mu = 4.0 * order * order;
    const double beta = (index + 0.5 * order - 0.25) * detail::pi;
    const double e8 = 8.0 * beta;
    double guess = beta - (mu - 1.0) / e8 -
                   4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e8 * e8 * e8);
    a = std::max(guess - 1.2, 0.5 * guess);
    b = guess + 1.2;
    bracketed = (bessel_j(order, a) < 0.0) != (bessel_j(order, b) < 0.0);
  }
  if (!bracketed) detail::scan_bracket(order, index, a, b);

  double fa = bessel_j(order, a);
  // bisect to a narrow interval first
  for (int i = 0; i < 20; ++i) {
    const double mid = 0.5 * (a + b);
    const double fm = bessel_j(order, mid);
    if ((fa < 0.0) != (fm < 0.0)) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  // Newton, falling back to bisection whenever a step would leave [a, b]
  double x = 0.5 * (a + b);
  for (int i = 0; i < 60; ++i) {
    const double f = bessel_j(order, x);
    if ((fa < 0.0) != (f < 0.0)) {
      b = x;
    } else {
      a = x;
      fa = f;
    }
    const double df = bessel_j_deriv(order, x);
    double next = (df != 0.0) ? x - f / df : 0.5 * (a + b);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    const double dx = std::fabs(next - x);
    x = next;
    if (dx <= 1e-15 * std::max(1.0, std::fabs(x))) break;
  }
  if (std::fabs(bessel_j(order, x)) > 1e-10)
    throw std::runtime_error("bessel_zero: no convergence for order " +
                             std::to_string(order) + ", index " +
                             std::to_string(index));
  return BesselZero{order, index, x};
}

}  // namespace pdmchan::specfun
