#include "bazlab/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bazlab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series order mismatch: " +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}

void require_constant(const TruncatedSeries& s, Complex want, const char* op) {
  if (std::abs(s[0] - want) > kUnitTol)
    throw std::domain_error(std::string(op) + ": constant term must be " +
                            (want == Complex{1.0} ? "1" : "0"));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order)
    : coeffs_(static_cast<size_t>(order) + 1) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2)
    throw std::invalid_argument("series needs at least order 1");
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s[0] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int m) const {
  TruncatedSeries r(m);
  const int n = std::min(m, order());
  for (int k = 0; k <= n; ++k) r[k] = coeffs_[static_cast<size_t>(k)];
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = s * a[k];
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const int n = a.order();
  TruncatedSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == Complex{}) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries recip_unit(const TruncatedSeries& s) {
  require_constant(s, Complex{1.0}, "recip_unit");
  const int n = s.order();
  TruncatedSeries r(n);
  r[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    Complex acc{};
    for (int k = 1; k <= m; ++k) acc += s[k] * r[m - k];
    r[m] = -acc;
  }
  return r;
}

TruncatedSeries log_unit(const TruncatedSeries& s) {
  require_constant(s, Complex{1.0}, "log_unit");
  const int n = s.order();
  TruncatedSeries l(n);
  for (int m = 1; m <= n; ++m) {
    Complex acc = static_cast<double>(m) * s[m];
    for (int k = 1; k < m; ++k)
      acc -= static_cast<double>(k) * l[k] * s[m - k];
    l[m] = acc / static_cast<double>(m);
  }
  return l;
}

TruncatedSeries exp_unit(const TruncatedSeries& s) {
  require_constant(s, Complex{0.0}, "exp_unit");
  const int n = s.order();
  TruncatedSeries e(n);
  e[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    Complex acc{};
    for (int k = 1; k <= m; ++k)
      acc += static_cast<double>(k) * s[k] * e[m - k];
    e[m] = acc / static_cast<double>(m);
  }
  return e;
}

TruncatedSeries pow_unit(const TruncatedSeries& s, double beta) {
  require_constant(s, Complex{1.0}, "pow_unit");
  return exp_unit(Complex{beta} * log_unit(s));
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  const int n = s.order();
  TruncatedSeries r(n);
  for (int k = 1; k <= n; ++k) r[k - 1] = static_cast<double>(k) * s[k];
  return r;
}

Complex eval(const TruncatedSeries& s, Complex z) {
  Complex acc{};
  for (int k = s.order(); k >= 0; --k) acc = acc * z + s[k];
  return acc;
}

}  // namespace bazlab
