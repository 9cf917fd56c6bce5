#pragma once

#include <map>
#include <string>

#include "leech/half_exp.hpp"
#include "leech/rational.hpp"

namespace leech {

// Truncated Laurent series in q^{1/2} with exact rational coefficients.
//
// Truncation semantics are a hard knowledge boundary: coefficients are exact
// for every exponent strictly below trunc_order() and nothing is claimed at
// or above it. All operations compute the provably exact window of the
// result and never extrapolate; that is what the certification layer relies
// on. Stored coefficients are never zero (canonical sparse form).
class FormalSeries {
 public:
  FormalSeries(HalfExp min_exp, HalfExp trunc_order);

  static FormalSeries zero(HalfExp trunc_order) {
    return FormalSeries(HalfExp(0), trunc_order);
  }
  static FormalSeries one(HalfExp trunc_order);
  static FormalSeries monomial(const Rat& c, HalfExp e, HalfExp trunc_order);

  HalfExp min_exp() const { return min_exp_; }
  HalfExp trunc_order() const { return trunc_; }
  const std::map<HalfExp, Rat>& coeffs() const { return coeffs_; }

  // Exact coefficient, zero if absent; throws std::out_of_range at or above
  // the truncation order (the value is unknown there, not zero).
  const Rat& coefficient(HalfExp e) const;
  Rat coefficient(long twice) const { return coefficient(HalfExp(twice)); }

  // Inserts/overwrites a coefficient inside the window.
  void set(HalfExp e, const Rat& v);

  bool is_zero() const { return coeffs_.empty(); }

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  FormalSeries operator-() const;

  FormalSeries scaled(const Rat& c) const;
  // Multiplication by the exact monomial q^e.
  FormalSeries shifted(HalfExp e) const;
  // Restricts the knowledge window; new_trunc must not exceed the current one.
  FormalSeries truncated(HalfExp new_trunc) const;
  // Raises min_exp to the lowest stored exponent (all elided coefficients in
  // between are exactly zero, so no information is lost).
  FormalSeries trimmed() const;
  FormalSeries pow(unsigned long e) const;

  // Multiplicative inverse by long division. The series is trimmed first;
  // a series that is identically zero on its window cannot be inverted.
  FormalSeries inverse() const;

  // True when the two series agree coefficientwise strictly below `below`,
  // which must lie inside both knowledge windows.
  bool agrees_with(const FormalSeries& o, HalfExp below) const;

  // Debug/golden rendering: exponents ascending, exact rationals as "p/q",
  // e.g. "1 - 24*q + 252*q^2 - 1472*q^3" or "-8*q^{1/2}".
  std::string str() const;

 private:
  std::map<HalfExp, Rat> coeffs_;
  HalfExp min_exp_;
  HalfExp trunc_;
};

std::string render_exponent(HalfExp e);

}  // namespace leech
