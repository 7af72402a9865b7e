#pragma once

#include <optional>
#include <vector>

#include "bazlab/classb1.hpp"

namespace bazlab {

/// Parameterization of the exact attainable Schwarz 2-jet set:
/// c1 = x (real, >= 0 after rotation normalization),
/// c2 = (1-x^2) * rho * e^{i psi_arg}. Every decoded jet is feasible by
/// construction.
struct JetSearchPoint {
  double x;        // in [0, 1]
  double rho;      // in [0, 1]
  double psi_arg;  // in [0, 2*pi)

  SchwarzJet decode() const;
};

enum class Direction { Max, Min };

struct SearchBudget {
  int grid_x = 101;
  int grid_rho = 51;
  int grid_arg = 128;
  double refine_tol = 1e-9;
};

struct OptResult {
  double alpha;
  Direction direction;
  double value;
  JetSearchPoint arg_point;
  SchwarzJet arg_jet;
  double relaxation_gap;  // value minus the corresponding theoretical bound
  Validity validated;     // verdict of the realized candidate
};

/// |gamma2| - |gamma1| of the jet decoded from p.
double objective(double alpha, const JetSearchPoint& p);

/// Coarse grid scan followed by derivative-free pattern-search refinement.
/// Deterministic for a fixed budget (lexicographic tie-break on the grid).
OptResult optimize(double alpha, Direction direction,
                   const SearchBudget& budget = {},
                   int order = kDefaultOrder);

/// Lifts a feasible jet to a concrete candidate via the Schwarz function
/// omega(z) = z (c1 + zeta z)/(1 + conj(c1) zeta z), zeta = c2/(1-|c1|^2),
/// then h = (1-omega)/(1+omega) and the integral construction. Validated.
BazilevicCandidate realize(double alpha, const SchwarzJet& jet,
                           int order = kDefaultOrder);

struct EmpiricalRange {
  std::optional<double> validated_min;
  std::optional<double> validated_max;
  double relax_min;
  double relax_max;
};

/// Optimizes both directions, realizes the optimizing jets plus the top
/// near-optimal grid cells, and reports the best gamma-diff among Valid
/// candidates next to the unconstrained relaxation optima.
EmpiricalRange empirical_range(double alpha, const SearchBudget& budget = {},
                               int order = kDefaultOrder);

}  // namespace bazlab
