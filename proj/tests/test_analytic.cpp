#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <set>

#include "oracles.hpp"
#include "pdmchan/analytic.hpp"
#include "pdmchan/verify.hpp"

using namespace pdmchan;
using analytic::QuantumNumbers;
using analytic::SpectrumCaps;
using model::ChannelModel;
using model::Geometry;
using Catch::Approx;

namespace {

ChannelModel box(double q = 1.0, double k = 1.0) {
  ChannelModel m;
  m.geometry = Geometry::Parallelepipedal;
  m.q = q;
  m.k = k;
  return m;
}

ChannelModel disk(double q = 1.0, double k = 1.0, double R = 1.0) {
  ChannelModel m;
  m.geometry = Geometry::Cylindrical;
  m.q = q;
  m.k = k;
  m.R = R;
  return m;
}

}  // namespace

TEST_CASE("delta_parallel values", "[analytic]") {
  CHECK(analytic::delta_parallel(0, 0) == Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(analytic::delta_parallel(1, 8) == Approx(std::sqrt(85.0)).epsilon(1e-15));
  CHECK(analytic::delta_parallel(5, 6) == analytic::delta_parallel(1, 8));
  // bitwise symmetric
  for (int l = 0; l <= 6; ++l)
    for (int m = 0; m <= 6; ++m)
      CHECK(analytic::delta_parallel(l, m) == analytic::delta_parallel(m, l));
  CHECK_THROWS_AS(analytic::delta_parallel(-1, 0), std::invalid_argument);
}

TEST_CASE("delta_cylinder = j_{|m|,s}/(qR)", "[analytic]") {
  CHECK(analytic::delta_cylinder(disk(1.0, 1.0, 1.0), 0, 1) ==
        Approx(oracle::bessel_zero_bisect(0, 1)).margin(1e-10));
  CHECK(analytic::delta_cylinder(disk(1.0, 1.0, 2.0), 0, 1) ==
        Approx(0.5 * oracle::bessel_zero_bisect(0, 1)).margin(1e-10));
  CHECK(analytic::delta_cylinder(disk(2.0, 1.0, 1.0), 1, 1) ==
        Approx(0.5 * oracle::bessel_zero_bisect(1, 1)).margin(1e-10));
  CHECK(analytic::delta_cylinder(disk(), -3, 2) ==
        analytic::delta_cylinder(disk(), 3, 2));
  CHECK_THROWS_AS(analytic::delta_cylinder(box(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(analytic::delta_cylinder(disk(), 0, 0), std::invalid_argument);
}

TEST_CASE("energy closed form", "[analytic]") {
  const double r2 = std::sqrt(2.0);
  CHECK(analytic::energy(box(1.0, 1.0), 0, r2) ==
        Approx(4.0 + 3.0 * r2).epsilon(1e-15));
  CHECK(analytic::energy(box(1.0, 1.0), 1, r2) ==
        Approx(14.0 + 7.0 * r2).epsilon(1e-15));
  // cylinder ground state with delta from the oracle zero
  const double j01 = oracle::bessel_zero_bisect(0, 1);
  CHECK(analytic::energy(box(1.0, 1.0), 0, j01) ==
        Approx((1.0 + j01) * (2.0 + j01)).epsilon(1e-14));
  // q^2 scaling
  CHECK(analytic::energy(box(2.0, 1.0), 0, r2) ==
        Approx(4.0 * analytic::energy(box(1.0, 1.0), 0, r2)).epsilon(1e-15));
}

TEST_CASE("energy is positive and increasing in n", "[analytic]") {
  const auto m = box(1.0, 0.7);
  for (double d : {0.3, 1.0, std::sqrt(2.0), 5.5}) {
    double prev = 0.0;
    for (int n = 0; n <= 30; ++n) {
      const double e = analytic::energy(m, n, d);
      CHECK(e > prev);
      prev = e;
    }
  }
}

TEST_CASE("energy grows quadratically in n", "[analytic]") {
  // desk-scale proxy for the infinite tower of bound states:
  // E/(4 q^2 n^2) -> 1 from above, with 1/n correction (1+2k+2delta)/(2n)
  const auto m = box();
  const double d = std::sqrt(2.0);
  auto ratio = [&](int n) {
    return analytic::energy(m, n, d) / (4.0 * n * n);
  };
  CHECK(std::fabs(ratio(200) - 1.0) < std::fabs(ratio(100) - 1.0));
  CHECK(std::fabs(ratio(400) - 1.0) < std::fabs(ratio(200) - 1.0));
  // the deviation at n = 100, 200 agrees with the exact correction to 1%
  for (int n : {100, 200})
    CHECK(ratio(n) - 1.0 ==
          Approx((3.0 + 2.0 * d) / (2.0 * n)).epsilon(1e-2));
  // the ratio itself is inside 1% once n >= 292
  CHECK(ratio(300) == Approx(1.0).epsilon(0.01));
}

TEST_CASE("phi_x boundary and decay", "[analytic]") {
  const double r2 = std::sqrt(2.0);
  CHECK(analytic::phi_x(box(), 0, r2, 0.0) == 0.0);
  CHECK(analytic::phi_x(box(1.0, 2.5), 3, 2.2, 0.0) == 0.0);
  // tail ratio ~ e^{-(1+delta) q dx}
  const double ratio = analytic::phi_x(box(), 0, r2, 8.0) /
                       analytic::phi_x(box(), 0, r2, 7.0);
  CHECK(ratio == Approx(std::exp(-(1.0 + r2))).epsilon(1e-3));
  CHECK_THROWS_AS(analytic::phi_x(box(), 0, r2, -0.1), std::domain_error);
}

TEST_CASE("phi_x is normalized", "[analytic]") {
  const double r2 = std::sqrt(2.0);
  const double norm = verify::integrate(
      [&](double x) {
        const double v = analytic::phi_x(box(), 0, r2, x);
        return v * v;
      },
      0.0, 14.0, {verify::QuadratureMethod::adaptive_simpson, 1e-11, 48});
  CHECK(norm == Approx(1.0).margin(1e-8));
}

TEST_CASE("chi_transverse modes", "[analytic]") {
  const double amp = std::sqrt(2.0 / model::pi);
  CHECK(std::fabs(analytic::chi_transverse(0, 1.0, model::pi / 2.0)) <= 1e-15);
  CHECK(analytic::chi_transverse(0, 1.0, 0.0) == Approx(amp).epsilon(1e-15));
  CHECK(analytic::chi_transverse(1, 1.0, 0.0) == 0.0);
  // walls for the sine branch too
  CHECK(std::fabs(analytic::chi_transverse(1, 1.0, model::pi / 2.0)) <= 1e-15);
  CHECK_THROWS_AS(analytic::chi_transverse(0, 1.0, 1.6), std::domain_error);
}

TEST_CASE("chi_radial modes", "[analytic]") {
  CHECK(std::fabs(analytic::chi_radial(disk(), 0, 1, 1.0)) <= 1e-12);
  CHECK(analytic::chi_radial(disk(), 1, 1, 0.0) == 0.0);
  const double norm = verify::integrate(
      [&](double rho) {
        const double v = analytic::chi_radial(disk(), 0, 1, rho);
        return v * v * rho;
      },
      0.0, 1.0, {verify::QuadratureMethod::adaptive_simpson, 1e-11, 48});
  CHECK(norm == Approx(1.0).margin(1e-8));
  CHECK_THROWS_AS(analytic::chi_radial(disk(), 0, 1, 1.5), std::domain_error);
}

TEST_CASE("zeta_azimuthal", "[analytic]") {
  const double amp = 1.0 / std::sqrt(2.0 * model::pi);
  CHECK(analytic::zeta_azimuthal(0, 1.23).real() == Approx(amp).epsilon(1e-15));
  CHECK(analytic::zeta_azimuthal(0, 1.23).imag() == 0.0);
  CHECK(analytic::zeta_azimuthal(1, model::pi).real() == Approx(-amp).epsilon(1e-12));
  const auto a = analytic::zeta_azimuthal(2, 0.0);
  const auto b = analytic::zeta_azimuthal(2, 2.0 * model::pi);
  CHECK(std::abs(a - b) <= 1e-14);
  CHECK(std::abs(analytic::zeta_azimuthal(5, 0.77)) == Approx(amp).epsilon(1e-15));
}

TEST_CASE("psi product structure", "[analytic]") {
  const auto qn = QuantumNumbers::parallel(0, 0, 0);
  CHECK(std::abs(analytic::psi(box(), qn, {0.0, 0.2, -0.4})) == 0.0);
  // l = 0 factor is even in y
  const auto v1 = analytic::psi(box(), qn, {1.0, 0.5, 0.3});
  const auto v2 = analytic::psi(box(), qn, {1.0, -0.5, 0.3});
  CHECK(v1.real() == Approx(v2.real()).epsilon(1e-14));
  CHECK(v1.imag() == 0.0);
  // l = m state symmetric under (y, z) swap
  const auto v3 = analytic::psi(box(), qn, {1.0, 0.3, 0.5});
  CHECK(v1.real() == Approx(v3.real()).epsilon(1e-14));
  // cylinder: m -> -m conjugates
  const auto cp = analytic::psi(disk(), QuantumNumbers::cylinder(0, 2, 1),
                                {1.0, 0.4, 0.9});
  const auto cm = analytic::psi(disk(), QuantumNumbers::cylinder(0, -2, 1),
                                {1.0, 0.4, 0.9});
  CHECK(cp.real() == Approx(cm.real()).epsilon(1e-13));
  CHECK(cp.imag() == Approx(-cm.imag()).epsilon(1e-13));
  CHECK(std::abs(analytic::psi(disk(), QuantumNumbers::cylinder(0, 1, 1),
                               {2.0, 1.0, 0.0})) <= 1e-12);
  CHECK_THROWS_AS(analytic::psi(box(), qn, {1.0, 2.0, 0.0}), std::domain_error);
}

TEST_CASE("x-factor orthonormality (Gram identity)", "[analytic][quadrature]") {
  const double r2 = std::sqrt(2.0);
  const auto g = verify::gram_matrix_x(box(), r2, 5,
                                       {verify::QuadratureMethod::adaptive_simpson,
                                        1e-11, 48});
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j)
      CHECK(g[i][j] == Approx(i == j ? 1.0 : 0.0).margin(1e-8));
}

TEST_CASE("transverse orthonormality", "[analytic][quadrature]") {
  const auto g = verify::gram_matrix_transverse(
      1.0, 6, {verify::QuadratureMethod::adaptive_simpson, 1e-12, 48});
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j)
      CHECK(g[i][j] == Approx(i == j ? 1.0 : 0.0).margin(1e-10));
}

TEST_CASE("radial orthonormality", "[analytic][quadrature]") {
  const auto g = verify::gram_matrix_radial(
      disk(), 0, 4, {verify::QuadratureMethod::adaptive_simpson, 1e-11, 48});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(g[i][j] == Approx(i == j ? 1.0 : 0.0).margin(1e-8));
}

TEST_CASE("enumerate_spectrum single state", "[analytic][spectrum]") {
  const auto entries = analytic::enumerate_spectrum(box(), {0, 0, 0, 1});
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].energy == Approx(4.0 + 3.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(entries[0].degeneracy_class == 0);
}

TEST_CASE("enumerate_spectrum ordering and exchange degeneracy",
          "[analytic][spectrum]") {
  const auto entries = analytic::enumerate_spectrum(box(), {1, 5, 5, 1});
  REQUIRE_FALSE(entries.empty());
  for (size_t i = 1; i < entries.size(); ++i)
    CHECK(entries[i].energy >= entries[i - 1].energy);
  // bitwise exchange symmetry within the enumeration
  for (const auto& e : entries) {
    if (*e.qn.l != e.qn.m) {
      const double swapped = analytic::energy(
          box(), e.qn.n, analytic::delta_parallel(e.qn.m, *e.qn.l));
      CHECK(swapped == e.energy);
    }
  }
}

TEST_CASE("the sqrt(85) class contains exactly its four states",
          "[analytic][spectrum]") {
  const auto entries = analytic::enumerate_spectrum(box(), {0, 9, 9, 1});
  REQUIRE(entries.size() == 100);
  std::set<std::pair<int, int>> members;
  int cls = -1;
  for (const auto& e : entries) {
    if (std::fabs(e.delta - std::sqrt(85.0)) < 1e-12) {
      if (cls < 0) cls = e.degeneracy_class;
      CHECK(e.degeneracy_class == cls);
      members.insert({*e.qn.l, e.qn.m});
    } else {
      CHECK(std::fabs(e.energy - analytic::energy(box(), 0, std::sqrt(85.0))) >
            1e-9);
    }
  }
  const std::set<std::pair<int, int>> expected{{1, 8}, {8, 1}, {5, 6}, {6, 5}};
  CHECK(members == expected);
}

TEST_CASE("cylinder +-m states share a class", "[analytic][spectrum]") {
  const auto entries = analytic::enumerate_spectrum(disk(), {0, 0, 1, 1});
  REQUIRE(entries.size() == 3);  // m = -1, 0, +1
  int plus_cls = -1, minus_cls = -1;
  for (const auto& e : entries) {
    if (e.qn.m == 1) plus_cls = e.degeneracy_class;
    if (e.qn.m == -1) minus_cls = e.degeneracy_class;
  }
  CHECK(plus_cls == minus_cls);
  CHECK(plus_cls >= 0);
}

TEST_CASE("degeneracy_report classifications", "[analytic][spectrum]") {
  using analytic::DegeneracyKind;

  // exchange pair fed directly
  {
    const double d = analytic::delta_parallel(1, 8);
    const double e = analytic::energy(box(), 0, d);
    std::vector<analytic::SpectrumEntry> pair{
        {QuantumNumbers::parallel(0, 1, 8), d, e, 0},
        {QuantumNumbers::parallel(0, 8, 1), d, e, 0}};
    const auto classes = analytic::degeneracy_report(pair);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].kind == DegeneracyKind::exchange);
  }
  // accidental pair: (1,8) vs (5,6), both delta^2 = 85
  {
    const double d = analytic::delta_parallel(1, 8);
    const double e = analytic::energy(box(), 0, d);
    std::vector<analytic::SpectrumEntry> pair{
        {QuantumNumbers::parallel(0, 1, 8), d, e, 0},
        {QuantumNumbers::parallel(0, 5, 6), d, e, 0}};
    const auto classes = analytic::degeneracy_report(pair);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].kind == DegeneracyKind::accidental);
  }
  // accidental pair with delta^2 = 50: (0,6) and (4,4)
  {
    const double d = analytic::delta_parallel(0, 6);
    REQUIRE(d == analytic::delta_parallel(4, 4));
    const double e = analytic::energy(box(), 0, d);
    std::vector<analytic::SpectrumEntry> pair{
        {QuantumNumbers::parallel(0, 0, 6), d, e, 0},
        {QuantumNumbers::parallel(0, 4, 4), d, e, 0}};
    const auto classes = analytic::degeneracy_report(pair);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].kind == DegeneracyKind::accidental);
  }
  // the full sqrt(85) class from the enumeration is accidental; singletons none
  {
    const auto entries = analytic::enumerate_spectrum(box(), {0, 9, 9, 1});
    const auto classes = analytic::degeneracy_report(entries);
    bool found85 = false;
    for (const auto& c : classes) {
      if (c.members.size() == 4 &&
          std::fabs(c.energy - analytic::energy(box(), 0, std::sqrt(85.0))) <
              1e-9) {
        found85 = true;
        CHECK(c.kind == DegeneracyKind::accidental);
      }
      if (c.members.size() == 1) CHECK(c.kind == DegeneracyKind::none);
    }
    CHECK(found85);
  }
  // cylinder sign pairs
  {
    const auto entries = analytic::enumerate_spectrum(disk(), {0, 0, 2, 2});
    const auto classes = analytic::degeneracy_report(entries);
    for (const auto& c : classes) {
      if (c.members.size() == 2) {
        CHECK(c.kind == analytic::DegeneracyKind::sign);
        CHECK(c.members[0].m == -c.members[1].m);
      } else {
        CHECK(c.members.size() == 1);
        CHECK(c.members[0].m == 0);
      }
    }
  }
}
