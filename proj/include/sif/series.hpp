#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sif/counting.hpp"

namespace sif {

using BigRational = boost::multiprecision::cpp_rational;

/// Truncated integer formal power series: coefficients c_0..c_N, all
/// operations truncate consistently at the smaller order of their operands.
class IntSeries {
 public:
  explicit IntSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  static IntSeries from_coefficients(std::vector<BigCount> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("a series has at least its constant term");
    IntSeries s(static_cast<int>(coeffs.size()) - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const BigCount& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  BigCount& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const {
    for (const BigCount& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  IntSeries truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
    IntSeries out(new_order);
    for (int i = 0; i <= new_order; ++i) out[i] = coeffs_[static_cast<std::size_t>(i)];
    return out;
  }

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b) {
    const int n = std::min(a.order(), b.order());
    IntSeries out(n);
    for (int i = 0; i <= n; ++i) out[i] = a[i] + b[i];
    return out;
  }

  friend IntSeries operator-(const IntSeries& a, const IntSeries& b) {
    const int n = std::min(a.order(), b.order());
    IntSeries out(n);
    for (int i = 0; i <= n; ++i) out[i] = a[i] - b[i];
    return out;
  }

  friend IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    const int n = std::min(a.order(), b.order());
    IntSeries out(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
  }

  /// e-th power at this order, by repeated squaring.
  IntSeries pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative series power");
    IntSeries result(order());
    result[0] = 1;
    IntSeries base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Termwise derivative, one order lower.
  IntSeries derivative() const {
    if (order() == 0) return IntSeries(0);
    IntSeries out(order() - 1);
    for (int i = 1; i <= order(); ++i) out[i - 1] = BigCount(i) * coeffs_[static_cast<std::size_t>(i)];
    return out;
  }

  /// Multiplicative inverse; requires constant term +1 or -1, so the result
  /// stays integral.
  IntSeries reciprocal_unit() const {
    const BigCount& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
      throw std::invalid_argument("reciprocal requires constant term +1 or -1");
    IntSeries out(order());
    out[0] = c0;
    for (int m = 1; m <= order(); ++m) {
      BigCount s = 0;
      for (int i = 1; i <= m; ++i) s += coeffs_[static_cast<std::size_t>(i)] * out[m - i];
      out[m] = -c0 * s;
    }
    return out;
  }

 private:
  std::vector<BigCount> coeffs_;
};

/// A(x) = sum a_n x^n truncated at `order`.
inline IntSeries series_from_counts(CountContext& ctx, int order) {
  IntSeries s(order);
  for (int k = 0; k <= order; ++k) s[k] = ctx.sif_count(k);
  return s;
}

struct GfIdentityRow {
  int n;
  BigCount coefficient;  // [x^{n-1}] A(x)^n
  BigCount expected;     // n!
  bool pass;
};

/// Verify [x^{n-1}] A(x)^n = n! for n = 1..max_n, bigint-exact.
inline std::vector<GfIdentityRow> check_gf_identity(CountContext& ctx, int max_n) {
  if (max_n < 1) throw std::invalid_argument("check_gf_identity requires max_n >= 1");
  std::vector<GfIdentityRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    const IntSeries a = series_from_counts(ctx, n - 1);
    const IntSeries power = a.pow(n);
    const BigCount& coeff = power[n - 1];
    const BigCount& expected = ctx.factorial(n);
    rows.push_back({n, coeff, expected, coeff == expected});
  }
  return rows;
}

/// Residual of x A'(x) - A(x) + x + x/(A(x)-1), truncated at `order`;
/// identically zero when the counting recurrence holds. x/(A-1) is computed
/// as the reciprocal of (A-1)/x, whose constant term is a_1 = 1.
inline IntSeries check_ode(CountContext& ctx, int order) {
  if (order < 2) throw std::invalid_argument("check_ode requires order >= 2");
  const IntSeries a = series_from_counts(ctx, order + 1);
  IntSeries shifted(order);  // (A - 1) / x
  for (int k = 0; k <= order; ++k) shifted[k] = a[k + 1];
  const IntSeries recip = shifted.reciprocal_unit();
  IntSeries residual(order);
  for (int k = 0; k <= order; ++k) {
    BigCount v = BigCount(k) * a[k];  // x A' coefficient
    v -= a[k];
    if (k == 1) v += 1;
    v += recip[k];
    residual[k] = std::move(v);
  }
  return residual;
}

/// e = sum 1/k! as an exact rational; 60 terms leave an error below 1e-80,
/// far beyond the 30 significant digits reported anywhere.
inline BigRational e_approximation(int terms = 60) {
  BigRational e = 0;
  BigCount f = 1;
  for (int k = 0; k <= terms; ++k) {
    if (k > 0) f *= k;
    e += BigRational(BigCount(1), f);
  }
  return e;
}

struct AsymptoticRow {
  int n;
  BigRational sif_fraction;  // a_n / n!
  BigRational e_scaled;      // e * a_n / n!
  BigRational first_order;   // n (1 - e a_n/n!), conjectured -> 1
  BigRational second_order;  // n^2 (1 - 1/n - e a_n/n!), conjectured -> 5/2
};

/// Diagnostic table for the asymptotic behavior of a_n/n!; exact rational
/// arithmetic throughout, decimal conversion only at formatting time.
inline std::vector<AsymptoticRow> asymptotic_report(CountContext& ctx, int n_max, int step) {
  if (n_max < 1 || step < 1) throw std::invalid_argument("asymptotic_report requires n_max, step >= 1");
  const BigRational e = e_approximation();
  std::vector<AsymptoticRow> rows;
  for (int n = step; n <= n_max; n += step) {
    const BigRational fraction(ctx.sif_count(n), ctx.factorial(n));
    const BigRational scaled = e * fraction;
    const BigRational first = BigRational(n) * (1 - scaled);
    const BigRational second = BigRational(n) * BigRational(n) * (1 - BigRational(1, n) - scaled);
    rows.push_back({n, fraction, scaled, first, second});
  }
  return rows;
}

/// Exact decimal expansion, truncated after `fractional_digits` digits.
inline std::string decimal_string(const BigRational& q, int fractional_digits = 36) {
  BigCount num = boost::multiprecision::numerator(q);
  const BigCount den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigCount integral = num / den;
  BigCount rem = num % den;
  std::string out = (negative ? "-" : "") + integral.str();
  out += '.';
  for (int i = 0; i < fractional_digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

}  // namespace sif
