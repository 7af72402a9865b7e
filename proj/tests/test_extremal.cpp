#include <doctest.h>

#include <cmath>

#include "bazlab/extremal.hpp"
#include "support.hpp"

using namespace bazlab;
using bazlab::testing::kPi;

TEST_CASE("upper_bound and lower_bound values") {
  CHECK(upper_bound(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(upper_bound(2.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(upper_bound(1e-12) == doctest::Approx(0.5).epsilon(1e-9));

  CHECK(lower_bound(1.0) == doctest::Approx(-1.0 / std::sqrt(5.0)).epsilon(1e-14));
  CHECK(lower_bound(1e-12) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-9));
  const double a2 = std::sqrt(2.0) - 1.0;
  CHECK(lower_bound(a2) == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));

  CHECK_THROWS_AS(upper_bound(0.0), std::domain_error);
  CHECK_THROWS_AS(lower_bound(-1.0), std::domain_error);
}

TEST_CASE("bounds are monotone and inside the universal envelope") {
  double prev_up = 1e300, prev_lo = -1e300;
  for (double alpha = 0.01; alpha < 8.0; alpha += 0.01) {
    const double up = upper_bound(alpha), lo = lower_bound(alpha);
    CHECK(up < prev_up);
    CHECK(lo > prev_lo);
    CHECK(up <= 0.5);
    CHECK(lo >= -std::sqrt(2.0) / 2.0);
    prev_up = up;
    prev_lo = lo;
  }
}

TEST_CASE("critical_alphas: closed forms, residuals, ordering") {
  const auto c = critical_alphas();
  CHECK(std::abs(c.alpha1 - 0.5 * (std::sqrt(6.0) - 2.0)) < 1e-12);
  CHECK(std::abs(c.alpha2 - (std::sqrt(2.0) - 1.0)) < 1e-12);
  CHECK(std::abs(c.alpha3 - (std::sqrt((std::sqrt(129.0) + 33.0) / 30.0) - 1.0)) < 1e-12);
  CHECK(c.alpha1 == doctest::Approx(0.2247448714).epsilon(1e-9));
  CHECK(c.alpha2 == doctest::Approx(0.4142135624).epsilon(1e-9));
  CHECK(c.alpha3 == doctest::Approx(0.21597446096536840).epsilon(1e-12));
  CHECK(std::abs(sharpness_quartic(c.alpha1)) < 1e-10);
  CHECK(std::abs(sharpness_quartic(c.alpha2)) < 1e-10);
  CHECK(std::abs(vertex_quartic(c.alpha3)) < 1e-10);
  CHECK(c.alpha3 < c.alpha1);
  CHECK(c.alpha1 < c.alpha2);
}

TEST_CASE("quartic sign pattern on a grid") {
  const auto c = critical_alphas();
  for (double alpha = 0.01; alpha < 1.0; alpha += 0.002) {
    const double q = sharpness_quartic(alpha);
    if (alpha > c.alpha1 + 1e-6 && alpha < c.alpha2 - 1e-6) CHECK(q < 0.0);
    if (alpha < c.alpha1 - 1e-6 || alpha > c.alpha2 + 1e-6) CHECK(q > 0.0);
    // t1 >= -1 iff alpha >= alpha3.
    const auto a = psi_minimum(alpha);
    CHECK((a.t1 >= -1.0) == (vertex_quartic(alpha) >= 0.0));
    if (alpha > c.alpha3 + 1e-9) CHECK(a.t1 >= -1.0);
    if (alpha < c.alpha3 - 1e-9) CHECK(a.t1 < -1.0);
  }
}

TEST_CASE("psi: values and domain") {
  CHECK(psi(1.3, 0.0) ==
        doctest::Approx(1.0 - 1.3 * 3.3 / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(psi(1.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(psi(-1.0, 0.0), std::domain_error);
}

TEST_CASE("psi differs from boundary Re h2 by a t-independent offset") {
  // Expanding Re h2(e^{i phi}) in t = cos(theta+phi) yields the constant
  // term 1 - alpha(alpha+2) b2^2/2, while psi carries 1 - alpha(alpha+2)/2,
  // so the two differ by exactly alpha(alpha+2)(b2^2 - 1)/2 at every t.
  for (const double alpha : {0.1, 0.3, 1.0}) {
    const double b2 = extremal_b2(alpha);
    const double offset = 0.5 * alpha * (alpha + 2.0) * (b2 * b2 - 1.0);
    for (const double theta : {0.0, 1.1, kPi}) {
      const auto h2 = lower_extremal_transform(alpha, theta, 8);
      for (int k = 0; k < 512; ++k) {
        const double phi = 2.0 * kPi * k / 512;
        const double t = std::cos(theta + phi);
        const Complex z = std::polar(1.0 - 1e-6, phi);
        CHECK(std::abs(psi(alpha, t) - eval(h2, z).real() - offset) < 1e-5);
      }
    }
  }
  // At alpha = sqrt(3) - 1, b2 = 1 and the offset vanishes, so psi really is
  // the boundary real part there.
  const double alpha = std::sqrt(3.0) - 1.0;
  const auto h2 = lower_extremal_transform(alpha, 0.7, 8);
  for (int k = 0; k < 128; ++k) {
    const double phi = 2.0 * kPi * k / 128;
    const Complex z = std::polar(1.0 - 1e-6, phi);
    CHECK(std::abs(psi(alpha, std::cos(0.7 + phi)) - eval(h2, z).real()) < 1e-5);
  }
}

TEST_CASE("psi_minimum: closed form matches brute-force grid minimum") {
  const auto c = critical_alphas();
  for (const double alpha :
       {0.05, 0.1, c.alpha3, 0.22, 0.3, 0.41, 0.5, 1.0, 2.0}) {
    const auto a = psi_minimum(alpha);
    CHECK(a.t_star == std::max(-1.0, a.t1));
    double brute = 1e300;
    const int n = 1000000;
    for (int i = 0; i <= n; ++i)
      brute = std::min(brute, psi(alpha, -1.0 + 2.0 * i / n));
    CHECK(std::abs(a.psi_min - brute) < 1e-9);
  }
}

TEST_CASE("psi_minimum at the critical points and around them") {
  const auto c = critical_alphas();
  CHECK(std::abs(psi_minimum(c.alpha1).psi_min) < 1e-9);
  CHECK(std::abs(psi_minimum(c.alpha2).psi_min) < 1e-9);
  CHECK(psi_minimum(0.3).psi_min > 0.0);
  const auto low = psi_minimum(0.1);
  CHECK(low.t_star == -1.0);
  CHECK(low.psi_min < 0.0);
  CHECK_THROWS_AS(psi_minimum(0.0), std::domain_error);
}

TEST_CASE("sharpness_verdict") {
  CHECK(sharpness_verdict(0.3).lower_sharp);
  CHECK_FALSE(sharpness_verdict(1.0).lower_sharp);
  const auto c = critical_alphas();
  const auto at_a2 = sharpness_verdict(c.alpha2);
  CHECK(at_a2.lower_sharp);
  CHECK(std::abs(at_a2.margin) < 1e-9);
  CHECK(at_a2.upper_sharp);
}

TEST_CASE("extremal_upper: attains the upper bound and is valid") {
  for (const double alpha : bazlab::testing::kAlphaGrid) {
    const auto c = extremal_upper(alpha);
    CHECK(c.valid == Validity::Valid);
    const double gd = gamma_diff(log_coeffs(jet_of(c)));
    CHECK(std::abs(gd - upper_bound(alpha)) < 1e-12);
    CHECK(std::abs(log_coeffs(jet_of(c)).gamma1) < 1e-14);
  }
  const auto c2 = extremal_upper(2.0);
  CHECK(std::abs(c2.f[3] - Complex{0.5}) < 1e-13);
}

TEST_CASE("extremal_lower: the cubic's jet attains the bound, the cubic does not belong") {
  SUBCASE("jet attains the bound but the function leaves the class") {
    // Even inside the certificate interval [alpha1, alpha2] the cubic's
    // transform F has negative real part inside the disk (F is not h2 for
    // alpha != 1, and even Re h2 dips below zero there).
    for (const double alpha : {0.23, 0.3, 0.41, 1.0}) {
      const auto c = extremal_lower(alpha, 0.0);
      CHECK(c.valid == Validity::Invalid);
      CHECK(c.evidence.min_re_f < 0.0);
      CHECK(std::abs(gamma_diff(log_coeffs(jet_of(c))) - lower_bound(alpha)) <
            1e-12);
    }
  }
  SUBCASE("gamma_diff independent of theta") {
    const double base = gamma_diff(log_coeffs(jet_of(extremal_lower(0.35, 0.0))));
    for (const double theta : {0.4, 1.9, 3.6, 5.5}) {
      const auto c = extremal_lower(0.35, theta);
      CHECK(std::abs(gamma_diff(log_coeffs(jet_of(c))) - base) < 1e-12);
    }
  }
}

TEST_CASE("lower_witness_jet: realizes to a valid candidate attaining the bound") {
  for (const double alpha : {0.1, 0.23, 0.3, 0.41, 1.0, 5.0}) {
    const auto jet = lower_witness_jet(alpha);
    // On the feasible boundary: c2 = 1 - c1^2 exactly.
    CHECK(std::abs(jet.c2 - Complex{1.0 - std::norm(jet.c1)}) < 1e-15);
    const auto lc = log_coeffs(jet_from_schwarz(alpha, jet));
    CHECK(std::abs(lc.gamma2) < 1e-15);
    CHECK(std::abs(gamma_diff(lc) - lower_bound(alpha)) < 1e-14);
  }
}

TEST_CASE("extremal_lower: transform matches h2 through order 2 only") {
  for (const double alpha : {0.3, 1.0, 2.5}) {
    for (const double theta : {0.0, 1.1}) {
      const auto c = extremal_lower(alpha, theta, 32);
      const auto F = membership_transform(alpha, c.f);
      const auto h2 = lower_extremal_transform(alpha, theta, 32);
      for (int k = 0; k <= 2; ++k) CHECK(std::abs(F[k] - h2[k]) < 1e-12);
      // z^3 coefficient of F: (alpha-1)(alpha+1)(alpha+3)/6 a2^3, which
      // vanishes only at alpha = 1 (F == h2 identically there).
      const Complex a2 = c.f[2];
      const Complex want =
          (alpha - 1.0) * (alpha + 1.0) * (alpha + 3.0) / 6.0 * a2 * a2 * a2;
      CHECK(std::abs(F[3] - want) < 1e-12);
      if (alpha == 1.0)
        for (int k = 3; k <= 32; ++k) CHECK(std::abs(F[k]) < 1e-12);
    }
  }
}
