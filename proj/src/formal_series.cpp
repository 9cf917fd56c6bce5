#include "leech/formal_series.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace leech {

namespace {
const Rat kZero = 0;
}

FormalSeries::FormalSeries(HalfExp min_exp, HalfExp trunc_order)
    : min_exp_(min_exp), trunc_(trunc_order) {
  if (trunc_ < min_exp_)
    throw std::invalid_argument("trunc_order below min_exp");
}

FormalSeries FormalSeries::one(HalfExp trunc_order) {
  return monomial(1, HalfExp(0), trunc_order);
}

FormalSeries FormalSeries::monomial(const Rat& c, HalfExp e, HalfExp trunc_order) {
  FormalSeries s(e, trunc_order);
  s.set(e, c);
  return s;
}

const Rat& FormalSeries::coefficient(HalfExp e) const {
  if (e >= trunc_)
    throw std::out_of_range("coefficient of q^" + e.str() +
                            " is beyond the truncation order q^" + trunc_.str());
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? kZero : it->second;
}

void FormalSeries::set(HalfExp e, const Rat& v) {
  if (e >= trunc_) throw std::out_of_range("set beyond truncation order");
  if (e < min_exp_) min_exp_ = e;
  if (v == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = v;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  trunc_ = min(trunc_, o.trunc_);
  min_exp_ = min(min_exp_, o.min_exp_);
  while (!coeffs_.empty() && coeffs_.rbegin()->first >= trunc_)
    coeffs_.erase(std::prev(coeffs_.end()));
  for (const auto& [e, c] : o.coeffs_) {
    if (e >= trunc_) break;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  return *this += -o;
}

FormalSeries FormalSeries::operator-() const {
  FormalSeries out(min_exp_, trunc_);
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  // Cauchy product. The exact window of the product is limited by the worst
  // pairing of one factor's unknown tail with the other's lowest term.
  const HalfExp min_exp = a.min_exp_ + b.min_exp_;
  const HalfExp trunc =
      min(a.trunc_ + b.min_exp_, b.trunc_ + a.min_exp_);
  FormalSeries out(min_exp, max(min_exp, trunc));
  if (trunc <= min_exp) return out;  // empty window

  // Dense accumulator indexed from min_exp; windows here are a few hundred
  // slots at the orders this library runs at.
  std::vector<Rat> acc(static_cast<size_t>(trunc.twice - min_exp.twice));
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      const HalfExp e = ea + eb;
      if (e >= trunc) break;
      acc[static_cast<size_t>(e.twice - min_exp.twice)] += ca * cb;
    }
  }
  for (size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0)
      out.coeffs_.emplace(HalfExp(min_exp.twice + static_cast<long>(i)),
                          std::move(acc[i]));
  return out;
}

FormalSeries FormalSeries::scaled(const Rat& c) const {
  FormalSeries out(min_exp_, trunc_);
  if (c == 0) return out;
  for (const auto& [e, v] : coeffs_) out.coeffs_.emplace(e, c * v);
  return out;
}

FormalSeries FormalSeries::shifted(HalfExp e) const {
  FormalSeries out(min_exp_ + e, trunc_ + e);
  for (const auto& [k, v] : coeffs_) out.coeffs_.emplace(k + e, v);
  return out;
}

FormalSeries FormalSeries::truncated(HalfExp new_trunc) const {
  if (new_trunc > trunc_)
    throw std::invalid_argument("cannot extend a knowledge window");
  FormalSeries out(min(min_exp_, new_trunc), new_trunc);
  for (const auto& [e, v] : coeffs_) {
    if (e >= new_trunc) break;
    out.coeffs_.emplace(e, v);
  }
  return out;
}

FormalSeries FormalSeries::trimmed() const {
  FormalSeries out = *this;
  out.min_exp_ = coeffs_.empty() ? trunc_ : coeffs_.begin()->first;
  return out;
}

FormalSeries FormalSeries::pow(unsigned long e) const {
  if (e == 0) return one(trunc_);
  FormalSeries base = *this;
  FormalSeries out = base;
  // Square-and-multiply keeps windows as wide as repeated multiplication does.
  --e;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

FormalSeries FormalSeries::inverse() const {
  const FormalSeries a = trimmed();
  if (a.coeffs_.empty())
    throw std::domain_error("cannot invert a series with zero leading coefficient");
  const HalfExp m = a.min_exp_;
  const long width = a.trunc_.twice - m.twice;  // exact window length in half-steps

  // b = a^{-1} has min_exp -m and the same window length: a*b = 1 is solved
  // coefficient by coefficient via long division.
  std::vector<Rat> av(static_cast<size_t>(width));
  for (const auto& [e, v] : a.coeffs_)
    av[static_cast<size_t>(e.twice - m.twice)] = v;

  std::vector<Rat> bv(static_cast<size_t>(width));
  const Rat lead_inv = Rat(1) / av[0];
  for (long i = 0; i < width; ++i) {
    Rat s = (i == 0) ? Rat(1) : Rat(0);
    for (long j = 0; j < i; ++j)
      if (bv[static_cast<size_t>(j)] != 0 && av[static_cast<size_t>(i - j)] != 0)
        s -= bv[static_cast<size_t>(j)] * av[static_cast<size_t>(i - j)];
    bv[static_cast<size_t>(i)] = s * lead_inv;
  }

  FormalSeries out(-m, HalfExp(-m.twice + width));
  for (long i = 0; i < width; ++i)
    if (bv[static_cast<size_t>(i)] != 0)
      out.coeffs_.emplace(HalfExp(-m.twice + i), std::move(bv[static_cast<size_t>(i)]));
  return out;
}

bool FormalSeries::agrees_with(const FormalSeries& o, HalfExp below) const {
  if (below > trunc_ || below > o.trunc_)
    throw std::out_of_range("comparison window exceeds a truncation order");
  auto ia = coeffs_.begin();
  auto ib = o.coeffs_.begin();
  while (true) {
    while (ia != coeffs_.end() && ia->first >= below) ia = coeffs_.end();
    while (ib != o.coeffs_.end() && ib->first >= below) ib = o.coeffs_.end();
    const bool ea = (ia == coeffs_.end());
    const bool eb = (ib == o.coeffs_.end());
    if (ea && eb) return true;
    if (ea != eb) return false;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

std::string render_exponent(HalfExp e) {
  if (e.is_integer()) return std::to_string(e.int_part());
  return "{" + std::to_string(e.twice) + "/2}";
}

std::string FormalSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    const bool unit = (a == 1) && e.twice != 0;
    if (!unit) os << a.get_str();
    if (e.twice != 0) {
      if (!unit) os << "*";
      os << "q";
      if (e.twice != 2) os << "^" << render_exponent(e);
    }
  }
  return os.str();
}

}  // namespace leech
