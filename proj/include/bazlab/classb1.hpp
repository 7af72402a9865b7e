#pragma once

#include <vector>

#include "bazlab/series.hpp"

namespace bazlab {

/// Default truncation order for constructed candidates. Long enough that
/// the truncation tail of a Caratheodory-coefficient series (|p_n| <= 2) is
/// below the Harnack floor (1-r)/(1+r) on every default check circle.
inline constexpr int kDefaultOrder = 64;

/// Sign tolerance for Re F on the membership check grid.
inline constexpr double kMembershipTol = 1e-9;

inline constexpr int kDefaultSamples = 4096;
inline constexpr int kWindingSamples = 8192;

/// Check circles for membership validation. The outermost radius is chosen
/// so that the series tail bound 2 r^{N+1}/(1-r) at N=64 (~0.021 at r=0.9)
/// stays below the Harnack lower bound (1-r)/(1+r) (~0.053 at r=0.9); at
/// larger radii a degree-64 jet cannot certify anything.
inline const std::vector<double> kDefaultRadii{0.5, 0.75, 0.9};

struct CaratheodoryAtom {
  double weight;  // >= 0
  double angle;   // in [0, 2*pi)
};

/// Atomic Herglotz measure: h(z) = sum_j w_j (1+e^{i t_j} z)/(1-e^{i t_j} z),
/// weights summing to 1 so h(0) = 1 and Re h > 0 on the disk.
class CaratheodoryMeasure {
public:
  explicit CaratheodoryMeasure(std::vector<CaratheodoryAtom> atoms);

  const std::vector<CaratheodoryAtom>& atoms() const { return atoms_; }

  /// Exact evaluation of h(z), |z| < 1.
  Complex eval(Complex z) const;

private:
  std::vector<CaratheodoryAtom> atoms_;
};

/// The 2-jet (c1, c2) of a Schwarz function; feasible iff |c1| <= 1 and
/// |c2| <= 1 - |c1|^2.
struct SchwarzJet {
  Complex c1;
  Complex c2;
  bool feasible(double tol = 1e-10) const;
};

struct FunctionJet {
  double alpha;
  Complex a2;
  Complex a3;
};

struct LogCoeffPair {
  Complex gamma1;
  Complex gamma2;
};

enum class Validity { Valid, Invalid, Undetermined };

const char* to_string(Validity v);

struct MembershipEvidence {
  std::vector<double> radii;
  int samples = 0;
  double min_re_f = 0.0;  // over all check circles
  double min_abs_g = 0.0;
  long winding = 0;       // of g on the outermost circle
  // When the F series is a polynomial to roundoff, truncation cannot hide
  // anything and Re F is additionally sampled at r = 1 - 1e-6, where sign
  // changes invisible at the grid radii show up (the cubic extremal family).
  bool edge_checked = false;
};

struct BazilevicCandidate {
  double alpha;
  TruncatedSeries f;  // z + a2 z^2 + ..., order N+1
  TruncatedSeries g;  // (f/z)^alpha, constant term 1, order N
  Validity valid = Validity::Undetermined;
  MembershipEvidence evidence;
};

/// Series 1 + p1 z + ... + p_N z^N with p_n = 2 sum_j w_j e^{i n t_j}.
TruncatedSeries caratheodory_series(const CaratheodoryMeasure& mu, int order);

/// (1 - omega)/(1 + omega) for a Schwarz-normalized omega (omega(0) = 0).
/// Applying the same transform to the result returns omega.
TruncatedSeries schwarz_to_caratheodory(const TruncatedSeries& omega);

/// Builds the candidate with (f/z)^alpha = 1 + sum alpha/(alpha+n) p_n z^n,
/// i.e. the solution of (f/z)^{alpha-1} f' = h. Returned Undetermined;
/// validation is a separate step.
BazilevicCandidate bazilevic_from_h(double alpha, const TruncatedSeries& h);

/// Inverts c1 = -(alpha+1)a2/2 and c2 = -[(alpha+2)/2 a3 - (alpha+3)/4 a2^2].
FunctionJet jet_from_schwarz(double alpha, const SchwarzJet& jet);

/// The (a2, a3) jet read off a candidate's f series.
FunctionJet jet_of(const BazilevicCandidate& c);

/// gamma1 = a2/2, gamma2 = (a3 - a2^2/2)/2.
LogCoeffPair log_coeffs(const FunctionJet& jet);

/// First `count` coefficients gamma_1..gamma_count of (1/2) log(f/z).
std::vector<Complex> log_coeffs_series(const TruncatedSeries& f, int count);

/// |gamma2| - |gamma1|.
double gamma_diff(const LogCoeffPair& pair);

/// F = (f/z)^{alpha-1} f' as a series of order N (f has order N+1).
TruncatedSeries membership_transform(double alpha, const TruncatedSeries& f);

/// Grid check of Re F > 0 on the given circles plus the winding number of g
/// on the outermost circle (a zero of g inside the disk makes f^{1/alpha}
/// branch and the candidate leaves the class).
BazilevicCandidate validate_membership(
    BazilevicCandidate c, const std::vector<double>& radii = kDefaultRadii,
    int samples = kDefaultSamples);

}  // namespace bazlab
