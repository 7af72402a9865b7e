#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bazlab {

using Complex = std::complex<double>;

/// Tolerance for the "constant term is exactly 1 (or 0)" preconditions.
/// All series here are constructed, not measured, so this is tight.
inline constexpr double kUnitTol = 1e-12;

/// A complex power-series jet c0 + c1 z + ... + cN z^N. All arithmetic is
/// exact modulo z^{N+1}; no operation ever reads or writes past index N.
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  Complex& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// Copy truncated (or zero-padded) to order m.
  TruncatedSeries truncated(int m) const;

private:
  std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex s, const TruncatedSeries& a);

/// Cauchy product truncated at the common order. Orders must match.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/s for s with constant term 1.
TruncatedSeries recip_unit(const TruncatedSeries& s);

/// log s for s with constant term 1; result has constant term 0.
/// Uses the recurrence n*l_n = n*c_n - sum_{k=1}^{n-1} k*l_k*c_{n-k}.
TruncatedSeries log_unit(const TruncatedSeries& s);

/// exp s for s with constant term 0; result has constant term 1.
TruncatedSeries exp_unit(const TruncatedSeries& s);

/// s^beta = exp(beta*log s) for s with constant term 1.
TruncatedSeries pow_unit(const TruncatedSeries& s, double beta);

/// Term-wise derivative. Stored at the same declared order with a trailing
/// zero; consumers must not rely on the top coefficient.
TruncatedSeries derivative(const TruncatedSeries& s);

/// Horner evaluation of the underlying polynomial.
Complex eval(const TruncatedSeries& s, Complex z);

}  // namespace bazlab
