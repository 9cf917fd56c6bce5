#pragma once

#include <string>
#include <vector>

#include "leech/formal_series.hpp"

namespace leech {

// Dense univariate polynomial over the rationals in the variable u = q^{1/2}.
// Canonical form strips trailing zero coefficients; the zero polynomial has
// degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  // Reads a series as a polynomial: the coefficient of q^{t/2} becomes the
  // coefficient of u^t. The series must have min_exp >= 0.
  static RatPoly from_series(const FormalSeries& s);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](size_t i) const { return c_[i]; }
  // Lowest index with a nonzero coefficient (0 for the zero polynomial).
  long min_degree() const;

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly scaled(const Rat& s) const;
  // Exact division by u^v; the low-order coefficients must vanish.
  RatPoly divided_by_power(long v) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

}  // namespace leech
