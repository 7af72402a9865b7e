#pragma once

#include "bazlab/classb1.hpp"

namespace bazlab {

/// b2 = 2/sqrt((alpha+1)^2 + 1), the extremal |a2| of the lower bound.
double extremal_b2(double alpha);

/// 1/(alpha+2); sharp for every alpha > 0.
double upper_bound(double alpha);

/// -1/sqrt((alpha+1)^2 + 1); attained at every alpha by realizing
/// lower_witness_jet (the quadratic certificate psi flags [alpha1, alpha2]).
double lower_bound(double alpha);

/// 2a^4 + 8a^3 + 5a^2 - 6a + 1; its positive roots are alpha1 and alpha2.
double sharpness_quartic(double alpha);

/// 15a^4 + 60a^3 + 57a^2 - 6a - 2; nonnegative exactly where the vertex of
/// psi lies inside [-1, 1], i.e. for alpha >= alpha3.
double vertex_quartic(double alpha);

struct CriticalAlphas {
  double alpha1;  // (sqrt(6)-2)/2
  double alpha2;  // sqrt(2)-1
  double alpha3;  // sqrt((sqrt(129)+33)/30)-1
};

/// Bisection roots of the two quartics, cross-checked against the closed
/// forms to 1e-12.
CriticalAlphas critical_alphas();

/// Certificate quadratic in t = cos(theta+phi):
///   alpha(alpha+2) b2^2 t^2 + (alpha+1) b2 t + 1 - alpha(alpha+2)/2.
/// Its sign on [-1, 1] defines the sharpness interval [alpha1, alpha2].
/// Note: it is NOT the boundary real part of h2 — expanding Re h2(e^{i phi})
/// in t gives the constant term 1 - alpha(alpha+2) b2^2/2, so psi exceeds
/// Re h2 by the t-independent offset alpha(alpha+2)(b2^2 - 1)/2.
/// Requires t in [-1, 1].
double psi(double alpha, double t);

struct SharpnessAnalysis {
  double alpha;
  double b2;
  double t1;      // vertex abscissa of psi
  double t_star;  // max(-1, t1)
  double psi_min;
  bool lower_sharp;
};

/// Closed-form minimum of psi on [-1, 1]; nonnegative iff alpha is in
/// [alpha1, alpha2].
SharpnessAnalysis psi_minimum(double alpha);

struct SharpnessVerdict {
  bool upper_sharp;  // always true
  bool lower_sharp;
  double margin;  // psi_min
};

SharpnessVerdict sharpness_verdict(double alpha);

/// Candidate built from h(z) = (1+z^2)/(1-z^2): a2 = 0, a3 = 2/(alpha+2),
/// attains the upper bound; validated.
BazilevicCandidate extremal_upper(double alpha, int order = kDefaultOrder);

/// The cubic f(z) = z + b2 e^{it} z^2 + (1/2) b2^2 e^{2it} z^3. Its 2-jet
/// attains the lower bound exactly, but the cubic itself leaves the class at
/// every alpha (its transform F has negative real part inside the disk), so
/// validation reports Invalid; membership witnesses for the bound come from
/// realizing lower_witness_jet instead.
BazilevicCandidate extremal_lower(double alpha, double theta,
                                  int order = kDefaultOrder);

/// The quadratic h2(z) = 1 + (alpha+1) b2 e^{it} z +
/// alpha(alpha+2)/2 b2^2 e^{2it} z^2. It matches the cubic's transform
/// F = (f/z)^{alpha-1} f' through order 2 only: the z^3 coefficient of F is
/// (alpha-1)(alpha+1)(alpha+3)/6 a2^3, so F == h2 identically iff alpha = 1.
TruncatedSeries lower_extremal_transform(double alpha, double theta,
                                         int order = kDefaultOrder);

/// The boundary Schwarz jet c1 = (alpha+1) b2/2, c2 = b2^2/4 = 1 - c1^2.
/// Its function jet has gamma1 = -b2/2 and gamma2 = 0, so any realization
/// attains the lower bound; the Blaschke-quotient realization is in the
/// class for every alpha > 0.
SchwarzJet lower_witness_jet(double alpha);

}  // namespace bazlab
