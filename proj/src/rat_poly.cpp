#include "leech/rat_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace leech {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::from_series(const FormalSeries& s) {
  if (s.min_exp() < HalfExp(0))
    throw std::invalid_argument("series has negative exponents; not a polynomial in u");
  std::vector<Rat> c;
  for (const auto& [e, v] : s.coeffs()) {
    if (static_cast<size_t>(e.twice) >= c.size()) c.resize(static_cast<size_t>(e.twice) + 1);
    c[static_cast<size_t>(e.twice)] = v;
  }
  return RatPoly(std::move(c));
}

long RatPoly::min_degree() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<long>(i);
  return 0;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    v *= x;
    v += c_[i];
  }
  return v;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
  return RatPoly(std::move(d));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
  return RatPoly(std::move(d));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> d(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) d[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(d));
}

RatPoly RatPoly::scaled(const Rat& s) const {
  if (s == 0) return RatPoly();
  std::vector<Rat> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
  return RatPoly(std::move(d));
}

RatPoly RatPoly::divided_by_power(long v) const {
  if (v == 0) return *this;
  if (v < 0 || static_cast<size_t>(v) > c_.size())
    throw std::invalid_argument("bad power in exact division");
  for (long i = 0; i < v; ++i)
    if (c_[static_cast<size_t>(i)] != 0)
      throw std::invalid_argument("division by u^v is not exact");
  return RatPoly(std::vector<Rat>(c_.begin() + v, c_.end()));
}

std::string RatPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (first) {
      if (sgn(a) < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "u";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace leech
