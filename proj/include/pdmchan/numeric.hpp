#pragma once

// Independent numerical verification path: conservative finite-difference
// discretization of the separated x-problem and of the radial disk problem,
// and a symmetric tridiagonal eigensolver based on Sturm-sequence bisection.
//
// Only the few lowest eigenvalues are ever needed, and bisection resolves
// them to a small absolute tolerance even though the Dirichlet-truncated
// operators carry entries of order cosh^2(q x_max)/h^2.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdmchan/log.hpp"
#include "pdmchan/model.hpp"

namespace pdmchan::numeric {

using model::ChannelModel;

/// Uniform grid of interior nodes on (x_min, x_max) with Dirichlet data at
/// both ends: x_i = x_min + (i+1) h, i = 0..n_points-1, h = (x_max -
/// x_min)/(n_points + 1).
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_points = 3;

  Grid1D() = default;
  Grid1D(double lo, double hi, int n) : x_min(lo), x_max(hi), n_points(n) {
    if (!(x_min >= 0.0)) throw std::invalid_argument("Grid1D: requires x_min >= 0");
    if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: requires x_max > x_min");
    if (n_points < 3) throw std::invalid_argument("Grid1D: requires n_points >= 3");
  }

  double spacing() const { return (x_max - x_min) / (n_points + 1); }
  double node(int i) const { return x_min + (i + 1) * spacing(); }
};

/// Symmetric tridiagonal matrix; self-adjoint by construction, so all
/// eigenvalues are real.
struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size diag.size() - 1
};

/// Flux-form (conservative) second-order discretization of
///   -(p(x) u')' + w(x) u  on the grid, Dirichlet at both ends:
///   diag_i = [p(x_i - h/2) + p(x_i + h/2)]/h^2 + w(x_i),
///   off_i  = -p(x_i + h/2)/h^2.
template <typename P, typename W>
TridiagonalOperator discretize_sturm_liouville(P&& p, W&& w, const Grid1D& g) {
  const double h = g.spacing();
  const double inv_h2 = 1.0 / (h * h);
  TridiagonalOperator op;
  op.diag.resize(g.n_points);
  op.offdiag.resize(g.n_points - 1);
  for (int i = 0; i < g.n_points; ++i) {
    const double x = g.node(i);
    op.diag[i] = (p(x - 0.5 * h) + p(x + 0.5 * h)) * inv_h2 + w(x);
    if (i + 1 < g.n_points) op.offdiag[i] = -p(x + 0.5 * h) * inv_h2;
  }
  return op;
}

/// Discretized separated x-operator -(cosh^2(qx) phi')' + W(x) phi with the
/// wall at x = 0 honored by excluding the boundary node. Throws when k < 1
/// and the grid is too coarse to carry the attractive csch^2 singularity.
inline TridiagonalOperator discretize_x(const ChannelModel& mdl, double delta,
                                        const Grid1D& g) {
  const auto p = [&mdl](double x) {
    const double c = std::cosh(mdl.q * x);
    return c * c;  // 1/M(x)
  };
  const auto w = [&mdl, delta](double x) {
    return model::reduced_x_potential(mdl, delta, x);
  };
  const double h = g.spacing();
  const double x1 = g.x_min + h;
  if (mdl.k < 1.0 && std::fabs(w(x1)) * h * h > 1.0)
    throw std::invalid_argument(
        "discretize_x: grid too coarse near x = 0 for k < 1 "
        "(|W(x_1)| h^2 > 1)");
  return discretize_sturm_liouville(p, w, g);
}

namespace detail {

// number of eigenvalues strictly below x, by the signs of the LDL^T pivots
inline int sturm_count_below(const TridiagonalOperator& op, double x) {
  constexpr double pivmin = 1e-300;
  int count = 0;
  double q = 1.0;
  const int n = static_cast<int>(op.diag.size());
  for (int i = 0; i < n; ++i) {
    const double e2 = (i == 0) ? 0.0 : op.offdiag[i - 1] * op.offdiag[i - 1];
    q = (op.diag[i] - x) - e2 / q;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace detail

/// Eigenvalue-count function exposed for property checks: the number of
/// eigenvalues of op strictly below lambda, non-decreasing in lambda.
inline int eigenvalue_count_below(const TridiagonalOperator& op, double lambda) {
  return detail::sturm_count_below(op, lambda);
}

/// The `count` smallest eigenvalues, ascending, each bisected to absolute
/// tolerance max(1e-10, 1e-12 |lambda|). Deterministic.
inline std::vector<double> eigen_tridiagonal(const TridiagonalOperator& op,
                                             int count) {
  const int n = static_cast<int>(op.diag.size());
  if (n == 0 || static_cast<int>(op.offdiag.size()) != n - 1)
    throw std::invalid_argument("eigen_tridiagonal: inconsistent sizes");
  if (count < 1 || count > n)
    throw std::invalid_argument("eigen_tridiagonal: count out of range");

  // Gershgorin enclosure of the whole spectrum
  double glo = op.diag[0], ghi = op.diag[0];
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::fabs(op.offdiag[i - 1]) : 0.0) +
                     (i + 1 < n ? std::fabs(op.offdiag[i]) : 0.0);
    glo = std::min(glo, op.diag[i] - r);
    ghi = std::max(ghi, op.diag[i] + r);
  }
  // tighten the upper end: the wanted eigenvalues are usually far below ghi
  double hi0 = std::max(1.0, std::fabs(glo));
  while (hi0 < ghi && detail::sturm_count_below(op, hi0) < count) hi0 *= 4.0;
  hi0 = std::min(hi0, ghi);

  std::vector<double> out(count);
  for (int j = 1; j <= count; ++j) {
    double lo = glo, hi = hi0;
    while (hi - lo > std::max(1e-10, 1e-12 * std::max(std::fabs(lo), std::fabs(hi)))) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // interval at roundoff limit
      if (detail::sturm_count_below(op, mid) >= j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out[j - 1] = 0.5 * (lo + hi);
  }
  return out;
}

/// Lowest n_eigen eigenvalues of the separated x-problem; approximates
/// E_n = q^2 (2n+1+delta)(2n+2k+delta) with O(h^2) error. Warns when the
/// truncation tail e^{-(1+delta) q x_max} is not negligible.
inline std::vector<double> solve_x_spectrum(const ChannelModel& mdl, double delta,
                                            int n_eigen, const Grid1D& g) {
  const double tail = std::exp(-(1.0 + delta) * mdl.q * (g.x_max - g.x_min));
  if (tail > 1e-12)
    log::warn("solve_x_spectrum: decay factor exp(-(1+delta) q x_max) = " +
              std::to_string(tail) +
              " > 1e-12; requested states may not be confined within x_max");
  return eigen_tridiagonal(discretize_x(mdl, delta, g), n_eigen);
}

/// Lowest n_eigen eigenvalues kappa^2 of the radial disk problem
///   -(chi'' + chi'/rho - m^2 chi/rho^2) = kappa^2 chi,  chi(R) = 0,
/// regular at rho = 0. Discretized in flux form with weight rho on the
/// staggered grid rho_j = (j - 1/2) h (the rho = 0 face then carries zero
/// flux, which encodes regularity), symmetrized by the similarity transform
/// u = sqrt(rho) chi. Converges to (j_{|m|,s}/R)^2 at O(h^2).
inline std::vector<double> solve_radial_spectrum(const ChannelModel& mdl, int m,
                                                 int n_eigen, int n_points) {
  if (mdl.geometry != model::Geometry::Cylindrical)
    throw std::invalid_argument("solve_radial_spectrum: model must be cylindrical");
  if (n_points < 3)
    throw std::invalid_argument("solve_radial_spectrum: requires n_points >= 3");
  const int mm = std::abs(m);
  const double h = mdl.R / (n_points + 0.5);  // Dirichlet node at rho = R
  const double inv_h2 = 1.0 / (h * h);
  TridiagonalOperator op;
  op.diag.resize(n_points);
  op.offdiag.resize(n_points - 1);
  for (int j = 1; j <= n_points; ++j) {
    const double rho = (j - 0.5) * h;
    const double rl = (j - 1.0) * h;  // rho_{j-1/2}
    const double rr = j * h;          // rho_{j+1/2}
    op.diag[j - 1] = (rl + rr) * inv_h2 / rho + mm * mm / (rho * rho);
    if (j < n_points) {
      const double rho_next = (j + 0.5) * h;
      op.offdiag[j - 1] = -rr * inv_h2 / std::sqrt(rho * rho_next);
    }
  }
  return eigen_tridiagonal(op, n_eigen);
}

}  // namespace pdmchan::numeric
