#pragma once

#include <numbers>
#include <random>
#include <vector>

#include "bazlab/classb1.hpp"

namespace bazlab::testing {

inline constexpr double kPi = std::numbers::pi;

/// Deterministic generator; every suite seeds its own.
using Rng = std::mt19937_64;

inline Complex random_in_disk(Rng& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  return std::polar(r, 2.0 * kPi * unit(rng));
}

/// Uniform-ish point of the exact feasible jet body |c2| <= 1 - |c1|^2.
inline SchwarzJet random_feasible_jet(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Complex c1 = random_in_disk(rng);
  const double room = 1.0 - std::norm(c1);
  return SchwarzJet{c1, std::polar(room * unit(rng), 2.0 * kPi * unit(rng))};
}

inline CaratheodoryMeasure random_measure(Rng& rng, int max_atoms = 4) {
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = natoms(rng);
  std::vector<CaratheodoryAtom> atoms(static_cast<size_t>(n));
  double total = 0.0;
  for (auto& a : atoms) {
    a.weight = 0.05 + unit(rng);  // keep atoms non-degenerate
    a.angle = 2.0 * kPi * unit(rng);
    total += a.weight;
  }
  for (auto& a : atoms) a.weight /= total;
  return CaratheodoryMeasure(std::move(atoms));
}

/// Random unit-constant series with |c_k| <= bound for k >= 1.
inline TruncatedSeries random_unit_series(Rng& rng, int order,
                                          double bound = 0.5) {
  TruncatedSeries s(order);
  s[0] = 1.0;
  for (int k = 1; k <= order; ++k) s[k] = random_in_disk(rng, bound);
  return s;
}

/// Default alpha grid for suites; brackets all critical values.
inline const std::vector<double> kAlphaGrid{
    0.05, 0.1, 0.2159791, 0.2248, 0.3, 0.4, 0.4143, 0.5, 1.0, 2.0, 5.0};

}  // namespace bazlab::testing
