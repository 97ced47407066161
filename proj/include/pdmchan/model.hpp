#pragma once

// Physical model: solitonic mass profile M(x) = sech^2(qx), von Roos
// ordering-ambiguity parameters, channel geometry and the effective
// potentials of the separated problem. Units: hbar = 2*m0 = 1.

#include <cmath>
#include <stdexcept>
#include <string>

#include "pdmchan/log.hpp"

namespace pdmchan::model {

inline constexpr double pi = 3.14159265358979323846;

/// von Roos ambiguity parameters. gamma is derived from alpha + beta + gamma
/// = -1 and never stored, so a triple can not be inconsistent.
struct AmbiguityParams {
  double alpha = 0.0;
  double beta = -1.0;  // BenDaniel-Duke default
  double gamma() const { return -1.0 - alpha - beta; }
};

enum class Geometry { Parallelepipedal, Cylindrical };

inline const char* geometry_name(Geometry g) {
  return g == Geometry::Parallelepipedal ? "parallel" : "cylinder";
}

/// Channel definition. q sets the inverse length scale of the mass profile,
/// k > 0 the csch^2 coupling, R the cylinder radius (cylindrical geometry
/// only). The transverse box half-width of the parallel geometry is fixed at
/// pi/(2q) by the construction of the solvable potential.
struct ChannelModel {
  Geometry geometry = Geometry::Parallelepipedal;
  double q = 1.0;
  double k = 1.0;
  double R = 1.0;
  AmbiguityParams ambiguity{};

  double transverse_half_width() const { return pi / (2.0 * q); }

  void validate() const {
    if (!(q > 0.0)) throw std::invalid_argument("ChannelModel: requires q > 0");
    if (!(k > 0.0)) throw std::invalid_argument("ChannelModel: requires k > 0");
    if (geometry == Geometry::Cylindrical && !(R > 0.0))
      throw std::invalid_argument("ChannelModel: requires R > 0");
    if (k < 0.5)
      log::warn("k = " + std::to_string(k) +
                " < 1/2: the csch^2 term is strongly attractive near x = 0; "
                "states remain normalizable but verify with refined grids");
  }
};

/// Dimensionless mass profile M(x) = sech^2(qx); in (0, 1], even in x.
inline double mass(const ChannelModel& m, double x) {
  const double s = 1.0 / std::cosh(m.q * x);
  return s * s;
}

/// Ambiguity-dependent part of the effective potential,
///   -2 q^2 [2a(a+b+1)+b+1] cosh^2(qx) + q^2 [4a(a+b+1)+b+1].
/// Identically zero exactly for the BenDaniel-Duke choice (0, -1).
inline double effective_potential_shift(const ChannelModel& m, double x) {
  const double a = m.ambiguity.alpha, b = m.ambiguity.beta;
  const double c1 = 2.0 * a * (a + b + 1.0) + b + 1.0;
  const double c2 = 4.0 * a * (a + b + 1.0) + b + 1.0;
  const double ch = std::cosh(m.q * x);
  return m.q * m.q * (-2.0 * c1 * ch * ch + c2);
}

/// Channel potential along x for 0 < x < infinity (infinite wall at x <= 0):
///   V(x) = -q^2 cosh^2(qx) + q^2 k(k-1) csch^2(qx).
inline double potential_x(const ChannelModel& m, double x) {
  if (!(x > 0.0)) throw std::domain_error("potential_x: requires x > 0");
  const double ch = std::cosh(m.q * x);
  const double cs = 1.0 / std::sinh(m.q * x);
  return m.q * m.q * (-ch * ch + m.k * (m.k - 1.0) * cs * cs);
}

/// Scalar potential of the separated one-dimensional problem
///   -(cosh^2(qx) phi')' + W(x) phi = E phi,
///   W(x) = q^2 (delta^2 - 1) cosh^2(qx) + q^2 k(k-1) csch^2(qx),
/// where delta carries the transverse eigenvalues.
inline double reduced_x_potential(const ChannelModel& m, double delta, double x) {
  if (!(delta > 0.0))
    throw std::invalid_argument("reduced_x_potential: requires delta > 0");
  if (!(x > 0.0)) throw std::domain_error("reduced_x_potential: requires x > 0");
  const double ch = std::cosh(m.q * x);
  const double cs = 1.0 / std::sinh(m.q * x);
  return m.q * m.q *
         ((delta * delta - 1.0) * ch * ch + m.k * (m.k - 1.0) * cs * cs);
}

}  // namespace pdmchan::model
