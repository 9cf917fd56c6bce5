#include "leech/bounds.hpp"

#include <stdexcept>

namespace leech {

PowerBound base_bound(const std::string& name) {
  if (name == "E2") return {rat(24), 2, Grid::integer, HalfExp(0)};
  if (name == "E4") return {rat(240), 4, Grid::integer, HalfExp(0)};
  if (name == "E6") return {rat(504), 6, Grid::integer, HalfExp(0)};
  if (name == "Theta4") return {rat(24), 2, Grid::half, HalfExp(0)};
  throw std::invalid_argument("no base bound for " + name);
}

PowerBound promote_to_half(const PowerBound& a) {
  if (a.grid == Grid::half) return a;
  return {a.C, a.k, Grid::half, a.shift};
}

namespace {
// Aligns two bounds onto a common grid and a common shift. Lowering a shift
// is sound: the skipped slots are zero for any series the original bound
// applies to, and (m+1)^k <= (n+1)^k for m <= n.
std::pair<PowerBound, PowerBound> align(const PowerBound& a, const PowerBound& b) {
  PowerBound x = a, y = b;
  if (x.grid != y.grid) {
    x = promote_to_half(x);
    y = promote_to_half(y);
  }
  const HalfExp s = min(x.shift, y.shift);
  if ((x.shift.twice - s.twice) % x.step_twice() != 0 ||
      (y.shift.twice - s.twice) % y.step_twice() != 0) {
    x = promote_to_half(x);
    y = promote_to_half(y);
  }
  x.shift = s;
  y.shift = s;
  return {x, y};
}
}  // namespace

PowerBound bound_product(const PowerBound& a, const PowerBound& b) {
  PowerBound x = a, y = b;
  if (x.grid != y.grid) {
    x = promote_to_half(x);
    y = promote_to_half(y);
  }
  return {x.C * y.C, x.k + y.k + 1, x.grid, x.shift + y.shift};
}

PowerBound bound_sum(const PowerBound& a, const PowerBound& b) {
  auto [x, y] = align(a, b);
  return {x.C + y.C, std::max(x.k, y.k), x.grid, x.shift};
}

PowerBound bound_scale(const PowerBound& a, const Rat& s) {
  Rat c = s < 0 ? Rat(-s) : s;
  if (c == 0) throw std::invalid_argument("power bound must keep C > 0");
  return {a.C * c, a.k, a.grid, a.shift};
}

PowerBound bound_shift(const PowerBound& a, HalfExp delta) {
  if (a.grid == Grid::integer && delta.twice % 2 != 0)
    return {a.C, a.k, Grid::half, promote_to_half(a).shift + delta};
  return {a.C, a.k, a.grid, a.shift + delta};
}

TailBound tail_bound(const PowerBound& b, long n0, const Rat& q0, long normalize_at) {
  if (q0 <= 0 || q0 >= 1)
    throw std::domain_error("geometric majorant requires 0 < q0 < 1");
  if (n0 < 0) throw std::invalid_argument("tail start must be nonnegative");

  // Find N >= n0 with ratio rho = (1 + 1/(N+1))^k * q0 < 1, then sum the
  // first terms exactly and majorize the rest by the geometric series from N.
  long N = n0;
  auto ratio_at = [&](long n) -> Rat {
    return pow_rat(rat(n + 2, n + 1), b.k) * q0;
  };
  while (ratio_at(N) >= 1) N = 2 * N + 16;
  N += 48;  // a few extra exact terms tighten the majorant

  auto term = [&](long n) -> Rat {
    return b.C * pow_rat(rat(n + 1), b.k) * pow_rat(q0, n - normalize_at);
  };
  Rat partial = 0;
  for (long n = n0; n < N; ++n) partial += term(n);
  const Rat rho = ratio_at(N);
  return TailBound{partial + term(N) / (1 - rho)};
}

std::optional<HalfExp> check_empirical(const PowerBound& b, const FormalSeries& s) {
  const long step = b.step_twice();
  for (const auto& [e, c] : s.coeffs()) {
    const long off = e.twice - b.shift.twice;
    if (off < 0 || off % step != 0) return e;  // below the claim or off-grid
    const long n = off / step;
    const Rat cap = b.C * pow_rat(rat(n + 1), b.k);
    if (abs(c) > cap) return e;
  }
  return std::nullopt;
}

std::map<std::string, PowerBound> derive_numerator_bounds() {
  const PowerBound e2 = base_bound("E2");
  const PowerBound e4 = base_bound("E4");
  const PowerBound e6 = base_bound("E6");
  const PowerBound th = base_bound("Theta4");

  auto prod = [](std::initializer_list<PowerBound> fs) {
    PowerBound out;
    bool first = true;
    for (const auto& f : fs) {
      out = first ? f : bound_product(out, f);
      first = false;
    }
    return out;
  };
  auto thpow = [&](int quarters) {  // bound for Theta^{4*quarters}
    PowerBound out = th;
    for (int i = 1; i < quarters; ++i) out = bound_product(out, th);
    return out;
  };

  std::map<std::string, PowerBound> out;

  // Numerator of phi per its defining combination: the five monomials in
  // E4, E6, E2 with their coefficients taken in absolute value.
  out["num_phi"] = bound_sum(
      bound_sum(bound_scale(prod({e4, e4, e4, e4}), 25),
                bound_scale(prod({e6, e6, e4}), 49)),
      bound_sum(bound_scale(prod({e6, e4, e4, e2}), 48),
                bound_sum(bound_scale(prod({e4, e4, e4, e2, e2}), 49),
                          bound_scale(prod({e6, e6, e2, e2}), 25))));

  const PowerBound x_bound = bound_sum(bound_scale(prod({e4, e4, e4}), 49),
                                       bound_scale(prod({e6, e6}), 25));
  out["num_phi1"] = bound_sum(bound_scale(prod({e6, e4, e4}), 288),
                              bound_scale(bound_product(e2, x_bound), 12));
  out["num_phi2"] = bound_scale(x_bound, 36);

  // psi numerators: every theta monomial has seven Theta^4 factors.
  const PowerBound psi_term = bound_sum(
      bound_sum(bound_scale(bound_product(thpow(5), thpow(2)), 7),
                bound_scale(bound_product(thpow(6), thpow(1)), 7)),
      bound_scale(thpow(7), 2));
  out["num_psi_i"] = psi_term;
  out["num_psi_s"] = psi_term;
  out["num_psi_t"] = psi_term;

  const PowerBound delta = bound_scale(
      bound_sum(prod({e4, e4, e4}), prod({e6, e6})), rat(1, 1728));
  out["delta"] = delta;
  out["delta2"] = bound_product(delta, delta);
  return out;
}

}  // namespace leech
