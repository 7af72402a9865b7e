#include "bazlab/classb1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bazlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// f/z for a normalized f (f0 = 0, f1 = 1); drops the order by one.
TruncatedSeries divide_by_z(const TruncatedSeries& f) {
  if (std::abs(f[0]) > kUnitTol || std::abs(f[1] - 1.0) > kUnitTol)
    throw std::domain_error("f must be normalized: f(0)=0, f'(0)=1");
  TruncatedSeries u(f.order() - 1);
  for (int k = 0; k <= u.order(); ++k) u[k] = f[k + 1];
  return u;
}

}  // namespace

CaratheodoryMeasure::CaratheodoryMeasure(std::vector<CaratheodoryAtom> atoms)
    : atoms_(std::move(atoms)) {
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (a.weight < 0.0)
      throw std::domain_error("atom weights must be non-negative");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > kUnitTol)
    throw std::domain_error("atom weights must sum to 1");
}

Complex CaratheodoryMeasure::eval(Complex z) const {
  Complex acc{};
  for (const auto& a : atoms_) {
    const Complex xz = std::polar(1.0, a.angle) * z;
    acc += a.weight * (1.0 + xz) / (1.0 - xz);
  }
  return acc;
}

bool SchwarzJet::feasible(double tol) const {
  const double m1 = std::abs(c1);
  return m1 <= 1.0 + tol && std::abs(c2) <= 1.0 - m1 * m1 + tol;
}

const char* to_string(Validity v) {
  switch (v) {
    case Validity::Valid: return "valid";
    case Validity::Invalid: return "invalid";
    case Validity::Undetermined: return "undetermined";
  }
  return "?";
}

TruncatedSeries caratheodory_series(const CaratheodoryMeasure& mu, int order) {
  TruncatedSeries h(order);
  h[0] = 1.0;
  for (const auto& a : mu.atoms()) {
    const Complex x = std::polar(1.0, a.angle);
    Complex xn{1.0};
    for (int n = 1; n <= order; ++n) {
      xn *= x;
      h[n] += 2.0 * a.weight * xn;
    }
  }
  return h;
}

TruncatedSeries schwarz_to_caratheodory(const TruncatedSeries& omega) {
  if (std::abs(omega[0]) > kUnitTol)
    throw std::domain_error("schwarz_to_caratheodory: omega(0) must be 0");
  const auto one = TruncatedSeries::one(omega.order());
  return mul(one - omega, recip_unit(one + omega));
}

BazilevicCandidate bazilevic_from_h(double alpha, const TruncatedSeries& h) {
  if (alpha <= 0.0) throw std::domain_error("alpha must be positive");
  if (std::abs(h[0] - 1.0) > kUnitTol)
    throw std::domain_error("bazilevic_from_h: h(0) must be 1");
  const int n = h.order();
  TruncatedSeries g(n);
  g[0] = 1.0;
  for (int k = 1; k <= n; ++k) g[k] = alpha / (alpha + k) * h[k];
  const TruncatedSeries u = pow_unit(g, 1.0 / alpha);
  TruncatedSeries f(n + 1);
  for (int k = 0; k <= n; ++k) f[k + 1] = u[k];
  return BazilevicCandidate{alpha, std::move(f), std::move(g),
                            Validity::Undetermined, {}};
}

FunctionJet jet_from_schwarz(double alpha, const SchwarzJet& jet) {
  if (alpha <= 0.0) throw std::domain_error("alpha must be positive");
  if (!jet.feasible()) throw std::domain_error("infeasible Schwarz jet");
  const Complex a2 = -2.0 * jet.c1 / (alpha + 1.0);
  const Complex a3 =
      -2.0 * jet.c2 / (alpha + 2.0) + (alpha + 3.0) / (2.0 * (alpha + 2.0)) * a2 * a2;
  return FunctionJet{alpha, a2, a3};
}

FunctionJet jet_of(const BazilevicCandidate& c) {
  return FunctionJet{c.alpha, c.f[2], c.f[3]};
}

LogCoeffPair log_coeffs(const FunctionJet& jet) {
  return LogCoeffPair{jet.a2 / 2.0, (jet.a3 - jet.a2 * jet.a2 / 2.0) / 2.0};
}

std::vector<Complex> log_coeffs_series(const TruncatedSeries& f, int count) {
  const TruncatedSeries l = log_unit(divide_by_z(f));
  if (count > l.order())
    throw std::invalid_argument("log_coeffs_series: count exceeds order");
  std::vector<Complex> out(static_cast<size_t>(count));
  for (int k = 1; k <= count; ++k) out[static_cast<size_t>(k - 1)] = l[k] / 2.0;
  return out;
}

double gamma_diff(const LogCoeffPair& pair) {
  return std::abs(pair.gamma2) - std::abs(pair.gamma1);
}

TruncatedSeries membership_transform(double alpha, const TruncatedSeries& f) {
  const TruncatedSeries u = divide_by_z(f);
  TruncatedSeries fprime(u.order());
  for (int k = 0; k <= fprime.order(); ++k)
    fprime[k] = static_cast<double>(k + 1) * f[k + 1];
  return mul(pow_unit(u, alpha - 1.0), fprime);
}

BazilevicCandidate validate_membership(BazilevicCandidate c,
                                       const std::vector<double>& radii,
                                       int samples) {
  if (radii.empty() || !std::is_sorted(radii.begin(), radii.end()))
    throw std::invalid_argument("radii must be sorted ascending");
  if (radii.front() <= 0.0 || radii.back() >= 1.0)
    throw std::domain_error("radii must lie in (0, 1)");
  if (samples < 256) throw std::invalid_argument("need at least 256 samples");

  const TruncatedSeries F = membership_transform(c.alpha, c.f);

  // If the high-order coefficients of F are zero to roundoff, F is an exact
  // polynomial and can be sampled arbitrarily close to the boundary, where
  // the real part of the cubic extremal transform changes sign first.
  double scale = 1.0;
  for (int k = 0; k <= F.order(); ++k) scale = std::max(scale, std::abs(F[k]));
  int tail_start = F.order() + 1;
  while (tail_start > 0 && std::abs(F[tail_start - 1]) <= 1e-12 * scale)
    --tail_start;
  const bool edge_check = tail_start <= F.order() / 2;

  std::vector<double> check_radii = radii;
  if (edge_check) check_radii.push_back(1.0 - 1e-6);

  double min_re_f = std::numeric_limits<double>::infinity();
  double min_abs_g = std::numeric_limits<double>::infinity();
  for (const double r : check_radii) {
    for (int k = 0; k < samples; ++k) {
      const Complex z = std::polar(r, kTwoPi * k / samples);
      min_re_f = std::min(min_re_f, eval(F, z).real());
      if (r <= radii.back())
        min_abs_g = std::min(min_abs_g, std::abs(eval(c.g, z)));
    }
  }

  // Winding of g on the outermost circle; a nonzero count means g vanishes
  // inside, so (f/z)^{1/alpha} has a branch point there.
  double total_arg = 0.0;
  Complex prev = eval(c.g, Complex{radii.back(), 0.0});
  const Complex first = prev;
  bool g_vanishes = std::abs(prev) < 1e-12;
  for (int k = 1; k <= kWindingSamples; ++k) {
    const Complex z = std::polar(radii.back(), kTwoPi * k / kWindingSamples);
    const Complex cur = (k == kWindingSamples) ? first : eval(c.g, z);
    if (std::abs(cur) < 1e-12) g_vanishes = true;
    total_arg += std::arg(cur / prev);
    prev = cur;
  }
  const long winding = std::lround(total_arg / kTwoPi);

  c.evidence = MembershipEvidence{radii,     samples, min_re_f,
                                  min_abs_g, winding, edge_check};
  if (winding != 0 || min_re_f < -kMembershipTol)
    c.valid = Validity::Invalid;
  else if (min_re_f > kMembershipTol && !g_vanishes)
    c.valid = Validity::Valid;
  else
    c.valid = Validity::Undetermined;
  return c;
}

}  // namespace bazlab
