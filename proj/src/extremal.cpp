#include "bazlab/extremal.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace bazlab {

namespace {

void require_positive_alpha(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
}

/// Bisection on an analytically derived bracket; f(lo) and f(hi) must have
/// opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol) {
  double flo = f(lo);
  if (flo * f(hi) > 0.0) throw std::logic_error("bisect: bracket has no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double extremal_b2(double alpha) {
  require_positive_alpha(alpha);
  return 2.0 / std::sqrt((alpha + 1.0) * (alpha + 1.0) + 1.0);
}

double upper_bound(double alpha) {
  require_positive_alpha(alpha);
  return 1.0 / (alpha + 2.0);
}

double lower_bound(double alpha) {
  require_positive_alpha(alpha);
  return -1.0 / std::sqrt((alpha + 1.0) * (alpha + 1.0) + 1.0);
}

double sharpness_quartic(double a) {
  return ((2.0 * a + 8.0) * a + 5.0) * a * a - 6.0 * a + 1.0;
}

double vertex_quartic(double a) {
  return ((15.0 * a + 60.0) * a + 57.0) * a * a - 6.0 * a - 2.0;
}

CriticalAlphas critical_alphas() {
  static const CriticalAlphas cached = [] {
    const double a1 = bisect(sharpness_quartic, 0.2, 0.25, 1e-15);
    const double a2 = bisect(sharpness_quartic, 0.4, 0.45, 1e-15);
    const double a3 = bisect(vertex_quartic, 0.2, 0.22, 1e-15);
    const double a1_closed = 0.5 * (std::sqrt(6.0) - 2.0);
    const double a2_closed = std::sqrt(2.0) - 1.0;
    const double a3_closed = std::sqrt((std::sqrt(129.0) + 33.0) / 30.0) - 1.0;
    if (std::abs(a1 - a1_closed) > 1e-12 || std::abs(a2 - a2_closed) > 1e-12 ||
        std::abs(a3 - a3_closed) > 1e-12)
      throw std::logic_error("critical alphas disagree with closed forms");
    return CriticalAlphas{a1, a2, a3};
  }();
  return cached;
}

double psi(double alpha, double t) {
  require_positive_alpha(alpha);
  if (t < -1.0 || t > 1.0) throw std::domain_error("psi: t must be in [-1, 1]");
  const double b2 = extremal_b2(alpha);
  const double aa2 = alpha * (alpha + 2.0);
  return aa2 * b2 * b2 * t * t + (alpha + 1.0) * b2 * t + 1.0 - aa2 / 2.0;
}

SharpnessAnalysis psi_minimum(double alpha) {
  require_positive_alpha(alpha);
  const CriticalAlphas crit = critical_alphas();
  const double b2 = extremal_b2(alpha);
  const double s = (alpha + 1.0) * (alpha + 1.0) + 1.0;
  const double aa2 = alpha * (alpha + 2.0);
  const double t1 = -s * (alpha + 1.0) / (4.0 * aa2 * std::sqrt(s));
  const double t_star = std::max(-1.0, t1);
  double psi_min;
  if (alpha >= crit.alpha3) {
    psi_min = 1.0 - aa2 / 2.0 -
              (alpha + 1.0) * (alpha + 1.0) / (4.0 * aa2);
  } else {
    psi_min = 1.0 - aa2 / 2.0 - 2.0 * (alpha + 1.0) / std::sqrt(s) +
              4.0 * aa2 / s;
  }
  // Endpoint roundoff band: the sharpness interval is closed.
  const bool lower_sharp = psi_min >= -1e-9;
  return SharpnessAnalysis{alpha, b2, t1, t_star, psi_min, lower_sharp};
}

SharpnessVerdict sharpness_verdict(double alpha) {
  const SharpnessAnalysis a = psi_minimum(alpha);
  return SharpnessVerdict{true, a.lower_sharp, a.psi_min};
}

BazilevicCandidate extremal_upper(double alpha, int order) {
  require_positive_alpha(alpha);
  // h(z) = (1+z^2)/(1-z^2) = 1 + 2 z^2 + 2 z^4 + ...
  TruncatedSeries h(order);
  h[0] = 1.0;
  for (int k = 2; k <= order; k += 2) h[k] = 2.0;
  return validate_membership(bazilevic_from_h(alpha, h));
}

BazilevicCandidate extremal_lower(double alpha, double theta, int order) {
  require_positive_alpha(alpha);
  const double b2 = extremal_b2(alpha);
  const Complex w = std::polar(1.0, theta);
  TruncatedSeries f(order + 1);
  f[1] = 1.0;
  f[2] = b2 * w;
  f[3] = 0.5 * b2 * b2 * w * w;
  TruncatedSeries u(order);
  for (int k = 0; k <= order; ++k) u[k] = f[k + 1];
  BazilevicCandidate c{alpha, std::move(f), pow_unit(u, alpha),
                       Validity::Undetermined, {}};
  return validate_membership(std::move(c));
}

SchwarzJet lower_witness_jet(double alpha) {
  require_positive_alpha(alpha);
  const double b2 = extremal_b2(alpha);
  const double x = 0.5 * (alpha + 1.0) * b2;
  return SchwarzJet{Complex{x, 0.0}, Complex{0.25 * b2 * b2, 0.0}};
}

TruncatedSeries lower_extremal_transform(double alpha, double theta,
                                         int order) {
  require_positive_alpha(alpha);
  const double b2 = extremal_b2(alpha);
  const Complex w = std::polar(1.0, theta);
  TruncatedSeries h2(order);
  h2[0] = 1.0;
  h2[1] = (alpha + 1.0) * b2 * w;
  h2[2] = 0.5 * alpha * (alpha + 2.0) * b2 * b2 * w * w;
  return h2;
}

}  // namespace bazlab
