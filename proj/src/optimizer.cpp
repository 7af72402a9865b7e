#include "bazlab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bazlab/extremal.hpp"

namespace bazlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_budget(const SearchBudget& b) {
  if (b.grid_x < 2 || b.grid_rho < 2 || b.grid_arg < 2 || b.refine_tol <= 0.0)
    throw std::invalid_argument("degenerate search budget");
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

struct Cell {
  double signed_value;  // direction-normalized: smaller is better
  JetSearchPoint point;
};

/// Full grid scan; returns the best `keep` cells ordered by signed value,
/// ties broken by scan order (lexicographic in (x, rho, psi_arg)).
std::vector<Cell> scan_grid(double alpha, double sign, const SearchBudget& b,
                            size_t keep) {
  std::vector<Cell> best;
  best.reserve(keep + 1);
  const double dx = 1.0 / (b.grid_x - 1);
  const double drho = 1.0 / (b.grid_rho - 1);
  const double darg = kTwoPi / b.grid_arg;
  for (int i = 0; i < b.grid_x; ++i) {
    for (int j = 0; j < b.grid_rho; ++j) {
      for (int k = 0; k < b.grid_arg; ++k) {
        const JetSearchPoint p{i * dx, j * drho, k * darg};
        const double v = sign * objective(alpha, p);
        if (best.size() == keep && v >= best.back().signed_value) continue;
        // Strict '<' on insertion keeps the earlier (lexicographically
        // smaller) point on exact ties.
        auto it = std::upper_bound(
            best.begin(), best.end(), v,
            [](double val, const Cell& c) { return val < c.signed_value; });
        best.insert(it, Cell{v, p});
        if (best.size() > keep) best.pop_back();
      }
    }
  }
  return best;
}

/// Coordinate pattern search; the objective has |.| kinks, so no gradients.
JetSearchPoint pattern_search(double alpha, double sign, JetSearchPoint p,
                              const SearchBudget& b) {
  double step_x = 1.0 / (b.grid_x - 1);
  double step_rho = 1.0 / (b.grid_rho - 1);
  double step_arg = kTwoPi / b.grid_arg;
  double best = sign * objective(alpha, p);
  while (std::max({step_x, step_rho, step_arg}) > b.refine_tol) {
    bool improved = false;
    for (int dir = -1; dir <= 1; dir += 2) {
      const JetSearchPoint trials[3] = {
          {std::clamp(p.x + dir * step_x, 0.0, 1.0), p.rho, p.psi_arg},
          {p.x, std::clamp(p.rho + dir * step_rho, 0.0, 1.0), p.psi_arg},
          {p.x, p.rho, wrap_angle(p.psi_arg + dir * step_arg)}};
      for (const auto& q : trials) {
        const double v = sign * objective(alpha, q);
        if (v < best) {
          best = v;
          p = q;
          improved = true;
        }
      }
    }
    if (!improved) {
      step_x *= 0.5;
      step_rho *= 0.5;
      step_arg *= 0.5;
    }
  }
  return p;
}

/// With c1 = x real (the rotation normalization of the search space),
/// gamma2 = (x^2/(alpha+1)^2 - c2)/(alpha+2) and |gamma1| does not depend on
/// c2, so the optimum over the disk |c2| <= 1 - x^2 for fixed x is closed
/// form: clamp c2 toward x^2/(alpha+1)^2 to minimize |gamma2|, take the
/// antipodal boundary point to maximize it.
JetSearchPoint inner_optimum(double alpha, double sign, double x) {
  if (sign < 0.0) return {x, 1.0, std::numbers::pi};
  const double room = 1.0 - x * x;
  const double target = x * x / ((alpha + 1.0) * (alpha + 1.0));
  if (room <= 0.0 || target >= room) return {x, 1.0, 0.0};
  return {x, target / room, 0.0};
}

/// Golden-section over x with the exact inner optimum over c2. The reduced
/// objective is unimodal in x for both directions (piecewise smooth with one
/// kink where the clamp activates), where coordinate-wise pattern search
/// stalls in the curved valley.
JetSearchPoint refine_structured(double alpha, double sign,
                                 const SearchBudget& b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 0.0, hi = 1.0;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = sign * objective(alpha, inner_optimum(alpha, sign, x1));
  double f2 = sign * objective(alpha, inner_optimum(alpha, sign, x2));
  while (hi - lo > b.refine_tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = sign * objective(alpha, inner_optimum(alpha, sign, x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = sign * objective(alpha, inner_optimum(alpha, sign, x2));
    }
  }
  // Endpoints can carry the optimum (the Max direction sits at x = 0).
  JetSearchPoint best_p = inner_optimum(alpha, sign, 0.5 * (lo + hi));
  double best_v = sign * objective(alpha, best_p);
  for (const double x : {lo, hi, 0.0, 1.0}) {
    const JetSearchPoint q = inner_optimum(alpha, sign, x);
    const double v = sign * objective(alpha, q);
    if (v < best_v) {
      best_v = v;
      best_p = q;
    }
  }
  return best_p;
}

JetSearchPoint refine(double alpha, double sign, JetSearchPoint p,
                      const SearchBudget& b) {
  const JetSearchPoint coarse = pattern_search(alpha, sign, p, b);
  const JetSearchPoint structured = refine_structured(alpha, sign, b);
  // The structured point is analytically optimal; pattern search can edge it
  // out only by |polar| rounding of order one ulp, so give it that slack to
  // keep the canonical argument (e.g. psi = pi rather than an arbitrary
  // angle on the |c2| = 1 circle at x = 0).
  return sign * objective(alpha, structured) <=
                 sign * objective(alpha, coarse) + 1e-13
             ? structured
             : coarse;
}

}  // namespace

SchwarzJet JetSearchPoint::decode() const {
  return SchwarzJet{Complex{x, 0.0},
                    (1.0 - x * x) * rho * std::polar(1.0, psi_arg)};
}

double objective(double alpha, const JetSearchPoint& p) {
  return gamma_diff(log_coeffs(jet_from_schwarz(alpha, p.decode())));
}

OptResult optimize(double alpha, Direction direction, const SearchBudget& budget,
                   int order) {
  if (alpha <= 0.0) throw std::domain_error("alpha must be positive");
  check_budget(budget);
  const double sign = direction == Direction::Max ? -1.0 : 1.0;
  const JetSearchPoint coarse = scan_grid(alpha, sign, budget, 1).front().point;
  const JetSearchPoint arg = refine(alpha, sign, coarse, budget);
  const double value = objective(alpha, arg);
  const double bound =
      direction == Direction::Max ? upper_bound(alpha) : lower_bound(alpha);
  const SchwarzJet jet = arg.decode();
  const Validity verdict = realize(alpha, jet, order).valid;
  return OptResult{alpha, direction, value, arg, jet, value - bound, verdict};
}

BazilevicCandidate realize(double alpha, const SchwarzJet& jet, int order) {
  if (alpha <= 0.0) throw std::domain_error("alpha must be positive");
  if (!jet.feasible()) throw std::domain_error("infeasible Schwarz jet");
  const double room = 1.0 - std::norm(jet.c1);
  Complex zeta{};
  if (room > 1e-12) {
    zeta = jet.c2 / room;
    if (std::abs(zeta) > 1.0 + 1e-12)
      throw std::domain_error("jet outside the Schwarz coefficient body");
    zeta = std::abs(zeta) > 1.0 ? zeta / std::abs(zeta) : zeta;
  }
  // omega = z (c1 + zeta z)/(1 + conj(c1) zeta z); |c1| = 1 collapses to c1 z.
  TruncatedSeries num(order);
  num[1] = jet.c1;
  if (order >= 2) num[2] = zeta;
  TruncatedSeries den_inv(order);
  const Complex q = -std::conj(jet.c1) * zeta;
  Complex qn{1.0};
  for (int n = 0; n <= order; ++n) {
    den_inv[n] = qn;
    qn *= q;
  }
  const TruncatedSeries omega = mul(num, den_inv);
  if (std::abs(omega[1] - jet.c1) > 1e-12 || std::abs(omega[2] - jet.c2) > 1e-12)
    throw std::logic_error("realized omega jet mismatch");
  return validate_membership(
      bazilevic_from_h(alpha, schwarz_to_caratheodory(omega)));
}

EmpiricalRange empirical_range(double alpha, const SearchBudget& budget,
                               int order) {
  if (alpha <= 0.0) throw std::domain_error("alpha must be positive");
  check_budget(budget);
  constexpr size_t kParetoSet = 32;

  EmpiricalRange out{};
  for (const Direction dir : {Direction::Min, Direction::Max}) {
    const double sign = dir == Direction::Max ? -1.0 : 1.0;
    const std::vector<Cell> top = scan_grid(alpha, sign, budget, kParetoSet);
    const JetSearchPoint arg = refine(alpha, sign, top.front().point, budget);
    const double relax = objective(alpha, arg);
    (dir == Direction::Min ? out.relax_min : out.relax_max) = relax;

    std::optional<double> best;
    auto consider = [&](const JetSearchPoint& p) {
      const BazilevicCandidate c = realize(alpha, p.decode(), order);
      if (c.valid != Validity::Valid) return;
      const double gd = gamma_diff(log_coeffs(jet_of(c)));
      if (!best || (dir == Direction::Min ? gd < *best : gd > *best)) best = gd;
    };
    consider(arg);
    for (const Cell& cell : top) consider(cell.point);
    (dir == Direction::Min ? out.validated_min : out.validated_max) = best;
  }
  return out;
}

}  // namespace bazlab
