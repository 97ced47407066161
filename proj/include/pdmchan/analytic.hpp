#pragma once

// Closed-form bound-state spectrum and eigenfunctions for both channel
// geometries, plus spectrum enumeration and degeneracy classification.
//
// Both geometries share E = q^2 (2n+1+delta)(2n+2k+delta) and the same
// x-factor; they differ only in the transverse modes and in how delta is
// built: sqrt((l+1)^2+(m+1)^2) for the box cross-section, j_{|m|,s}/(qR)
// for the disk.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pdmchan/model.hpp"
#include "pdmchan/specfun.hpp"

namespace pdmchan::analytic {

using model::ChannelModel;
using model::Geometry;

/// Quantum numbers of a bound state. Parallel channel states carry (n, l, m)
/// with l, m >= 0; cylindrical states carry (n, m, s) with signed azimuthal m
/// and radial zero index s >= 1. The unused index is disengaged.
struct QuantumNumbers {
  int n = 0;
  std::optional<int> l;
  int m = 0;
  std::optional<int> s;

  static QuantumNumbers parallel(int n, int l, int m) {
    return QuantumNumbers{n, l, m, std::nullopt};
  }
  static QuantumNumbers cylinder(int n, int m, int s) {
    return QuantumNumbers{n, std::nullopt, m, s};
  }
  bool is_parallel() const { return l.has_value(); }
};

struct SpectrumEntry {
  QuantumNumbers qn;
  double delta = 0.0;
  double energy = 0.0;
  int degeneracy_class = 0;
};

/// Enumeration caps. l_max applies to the parallel geometry only, s_max to
/// the cylinder only; the cylinder ranges m over -m_max..m_max.
struct SpectrumCaps {
  int n_max = 0;
  int l_max = 0;
  int m_max = 0;
  int s_max = 1;
};

/// delta = sqrt((l+1)^2 + (m+1)^2); symmetric in (l, m) bit for bit.
inline double delta_parallel(int l, int m) {
  if (l < 0 || m < 0)
    throw std::invalid_argument("delta_parallel: requires l, m >= 0");
  const double a = l + 1.0, b = m + 1.0;
  return std::sqrt(a * a + b * b);
}

/// delta = j_{|m|,s} / (qR) for the cylindrical channel.
inline double delta_cylinder(const ChannelModel& mdl, int m, int s) {
  if (mdl.geometry != Geometry::Cylindrical)
    throw std::invalid_argument("delta_cylinder: model must be cylindrical");
  if (s < 1) throw std::invalid_argument("delta_cylinder: requires s >= 1");
  return specfun::bessel_zero(std::abs(m), s).value / (mdl.q * mdl.R);
}

/// E = q^2 (2n+1+delta)(2n+2k+delta); positive and increasing in n.
inline double energy(const ChannelModel& mdl, int n, double delta) {
  if (n < 0) throw std::invalid_argument("energy: requires n >= 0");
  if (!(delta > 0.0)) throw std::invalid_argument("energy: requires delta > 0");
  return mdl.q * mdl.q * (2.0 * n + 1.0 + delta) * (2.0 * n + 2.0 * mdl.k + delta);
}

namespace detail {

// log of the x-factor normalization constant, Gamma ratios kept in log space
// so degrees n of a few tens do not overflow.
inline double log_norm_x(const ChannelModel& mdl, int n, double delta) {
  using specfun::log_gamma;
  const double k = mdl.k;
  return 0.5 * (std::log(2.0 * mdl.q * (2.0 * n + k + 0.5 + delta)) +
                log_gamma(n + 1.0) + log_gamma(n + k + 0.5 + delta) -
                log_gamma(n + 1.0 + delta) - log_gamma(n + k + 0.5));
}

}  // namespace detail

/// Normalized x-factor
///   phi_n(x) = N (tanh qx)^k (sech qx)^{1+delta} P_n^{(k-1/2,delta)}(1-2tanh^2 qx)
/// on x >= 0; vanishes at the wall x = 0 and decays like e^{-(1+delta)qx}.
inline double phi_x(const ChannelModel& mdl, int n, double delta, double x) {
  if (n < 0) throw std::invalid_argument("phi_x: requires n >= 0");
  if (!(delta > 0.0)) throw std::invalid_argument("phi_x: requires delta > 0");
  if (x < 0.0) throw std::domain_error("phi_x: requires x >= 0");
  if (x == 0.0) return 0.0;
  const double t = std::tanh(mdl.q * x);
  const double s = 1.0 / std::cosh(mdl.q * x);
  const double poly =
      specfun::jacobi_eval({mdl.k - 0.5, delta, n}, 1.0 - 2.0 * t * t);
  // assemble in log space; sech^{1+delta} underflows by x ~ 300/q otherwise
  const double lmag = detail::log_norm_x(mdl, n, delta) +
                      mdl.k * std::log(t) + (1.0 + delta) * std::log(s);
  return std::exp(lmag) * poly;
}

/// Transverse box mode: sqrt(2q/pi) cos[(l+1)qy] for even l, sin for odd l.
/// Defined on |y| <= pi/(2q); vanishes on the walls.
inline double chi_transverse(int l, double q, double y) {
  if (l < 0) throw std::invalid_argument("chi_transverse: requires l >= 0");
  const double half = model::pi / (2.0 * q);
  if (std::fabs(y) > half * (1.0 + 1e-12))
    throw std::domain_error("chi_transverse: |y| > pi/(2q)");
  const double amp = std::sqrt(2.0 * q / model::pi);
  const double arg = (l + 1.0) * q * y;
  return (l % 2 == 0) ? amp * std::cos(arg) : amp * std::sin(arg);
}

/// Radial disk mode: sqrt(2) [R J_{|m|+1}(j_{|m|,s})]^{-1} J_{|m|}(j_{|m|,s} rho/R),
/// normalized with weight rho on [0, R]; vanishes at rho = R.
inline double chi_radial(const ChannelModel& mdl, int m, int s, double rho) {
  if (mdl.geometry != Geometry::Cylindrical)
    throw std::invalid_argument("chi_radial: model must be cylindrical");
  if (s < 1) throw std::invalid_argument("chi_radial: requires s >= 1");
  if (rho < 0.0 || rho > mdl.R * (1.0 + 1e-12))
    throw std::domain_error("chi_radial: rho outside [0, R]");
  if (rho >= mdl.R) return 0.0;  // Dirichlet wall
  const int mm = std::abs(m);
  const double j = specfun::bessel_zero(mm, s).value;
  const double norm =
      std::sqrt(2.0) / (mdl.R * specfun::bessel_j(mm + 1, j));
  return norm * specfun::bessel_j(mm, j * rho / mdl.R);
}

/// Azimuthal factor e^{i m phi} / sqrt(2 pi); 2pi-periodic.
inline std::complex<double> zeta_azimuthal(int m, double phi) {
  const double amp = 1.0 / std::sqrt(2.0 * model::pi);
  return std::polar(amp, m * phi);
}

/// One sampled amplitude: (x, y, z) or (x, rho, phi) plus psi there.
/// Parallel-channel values are real; cylindrical values are complex with
/// |psi| independent of the sign of m.
struct WavefunctionSample {
  std::array<double, 3> point{};
  std::complex<double> value;
};

/// Full eigenfunction. The point is (x, y, z) for the parallel channel and
/// (x, rho, phi) for the cylinder; parallel values are real.
inline std::complex<double> psi(const ChannelModel& mdl, const QuantumNumbers& qn,
                                const std::array<double, 3>& point) {
  if (mdl.geometry == Geometry::Parallelepipedal) {
    if (!qn.l.has_value())
      throw std::invalid_argument("psi: parallel state requires l");
    const double d = delta_parallel(*qn.l, qn.m);
    const double v = phi_x(mdl, qn.n, d, point[0]) *
                     chi_transverse(*qn.l, mdl.q, point[1]) *
                     chi_transverse(qn.m, mdl.q, point[2]);
    return {v, 0.0};
  }
  if (!qn.s.has_value())
    throw std::invalid_argument("psi: cylindrical state requires s");
  const double d = delta_cylinder(mdl, qn.m, *qn.s);
  return phi_x(mdl, qn.n, d, point[0]) *
         chi_radial(mdl, qn.m, *qn.s, point[1]) *
         zeta_azimuthal(qn.m, point[2]);
}

namespace detail {

// deterministic tie-break: (n, l, m) / (n, |m|, s, sign m)
inline bool qn_less(const QuantumNumbers& a, const QuantumNumbers& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.is_parallel()) {
    if (*a.l != *b.l) return *a.l < *b.l;
    return a.m < b.m;
  }
  const int am = std::abs(a.m), bm = std::abs(b.m);
  if (am != bm) return am < bm;
  if (*a.s != *b.s) return *a.s < *b.s;
  return a.m < b.m;
}

}  // namespace detail

/// All states within the caps, sorted by energy with a deterministic
/// tie-break; entries with equal energy (relative 1e-12, which only absorbs
/// floating-point noise since true coincidences are bitwise here) share a
/// degeneracy class id.
inline std::vector<SpectrumEntry> enumerate_spectrum(const ChannelModel& mdl,
                                                     const SpectrumCaps& caps,
                                                     double group_tol = 1e-12) {
  if (caps.n_max < 0 || caps.l_max < 0 || caps.m_max < 0 || caps.s_max < 0)
    throw std::invalid_argument("enumerate_spectrum: negative caps");
  std::vector<SpectrumEntry> out;
  if (mdl.geometry == Geometry::Parallelepipedal) {
    for (int n = 0; n <= caps.n_max; ++n)
      for (int l = 0; l <= caps.l_max; ++l)
        for (int m = 0; m <= caps.m_max; ++m) {
          const double d = delta_parallel(l, m);
          out.push_back({QuantumNumbers::parallel(n, l, m), d,
                         energy(mdl, n, d), 0});
        }
  } else {
    for (int n = 0; n <= caps.n_max; ++n)
      for (int m = -caps.m_max; m <= caps.m_max; ++m)
        for (int s = 1; s <= caps.s_max; ++s) {
          const double d = delta_cylinder(mdl, m, s);
          out.push_back({QuantumNumbers::cylinder(n, m, s), d,
                         energy(mdl, n, d), 0});
        }
  }
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              return detail::qn_less(a.qn, b.qn);
            });
  int cls = -1;
  double ref = 0.0;
  for (auto& e : out) {
    if (cls < 0 || std::fabs(e.energy - ref) > group_tol * std::fabs(ref)) {
      ++cls;
      ref = e.energy;
    }
    e.degeneracy_class = cls;
  }
  return out;
}

enum class DegeneracyKind { none, exchange, sign, accidental };

inline const char* degeneracy_kind_name(DegeneracyKind k) {
  switch (k) {
    case DegeneracyKind::none: return "none";
    case DegeneracyKind::exchange: return "exchange";
    case DegeneracyKind::sign: return "sign";
    case DegeneracyKind::accidental: return "accidental";
  }
  return "?";
}

struct DegeneracyClass {
  int id = 0;
  double energy = 0.0;
  std::vector<QuantumNumbers> members;
  DegeneracyKind kind = DegeneracyKind::none;
};

namespace detail {

inline DegeneracyKind classify(const std::vector<QuantumNumbers>& members) {
  if (members.size() < 2) return DegeneracyKind::none;
  const bool parallel = members.front().is_parallel();
  if (parallel) {
    // pure (l,m)-exchange class: exactly the two states (n,l,m), (n,m,l)
    if (members.size() == 2) {
      const auto& a = members[0];
      const auto& b = members[1];
      if (a.n == b.n && *a.l == b.m && a.m == *b.l && *a.l != a.m)
        return DegeneracyKind::exchange;
    }
    // anything else coincides through equal (l+1)^2+(m+1)^2; insist on the
    // integer identity so roundoff can never mint an accidental class
    long first = -1;
    for (const auto& q : members) {
      const long a = *q.l + 1, b = q.m + 1;
      const long s2 = a * a + b * b;
      if (first < 0) first = s2;
      if (s2 != first || q.n != members.front().n) return DegeneracyKind::none;
    }
    return DegeneracyKind::accidental;
  }
  // cylinder: the only symmetry is m -> -m
  if (members.size() == 2) {
    const auto& a = members[0];
    const auto& b = members[1];
    if (a.n == b.n && *a.s == *b.s && a.m == -b.m && a.m != 0)
      return DegeneracyKind::sign;
  }
  return DegeneracyKind::accidental;
}

}  // namespace detail

/// Group entries by degeneracy class and label each class exchange / sign /
/// accidental / none.
inline std::vector<DegeneracyClass> degeneracy_report(
    const std::vector<SpectrumEntry>& entries) {
  std::vector<DegeneracyClass> classes;
  for (const auto& e : entries) {
    if (classes.empty() || classes.back().id != e.degeneracy_class)
      classes.push_back({e.degeneracy_class, e.energy, {}, DegeneracyKind::none});
    classes.back().members.push_back(e.qn);
  }
  for (auto& c : classes) c.kind = detail::classify(c.members);
  return classes;
}

}  // namespace pdmchan::analytic
