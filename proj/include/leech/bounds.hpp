#pragma once

#include <map>
#include <optional>
#include <string>

#include "leech/formal_series.hpp"

namespace leech {

enum class Grid { integer, half };

// Certified coefficient-growth bound: |coefficient at exponent
// shift + n*step| <= C*(n+1)^k for all n >= 0, where step is one q-unit or
// one q^{1/2}-unit per `grid`. The bound is only claimed for series whose
// min_exp is at least `shift`. These are deliberately crude; they only have
// to make the truncation tails summable.
struct PowerBound {
  Rat C;
  int k = 0;
  Grid grid = Grid::integer;
  HalfExp shift{0};

  long step_twice() const { return grid == Grid::integer ? 2 : 1; }
};

// The stated base bounds: E2 -> 24(n+1)^2, E4 -> 240(n+1)^4,
// E6 -> 504(n+1)^6, Theta4 -> 24(n+1)^2 on the half-integer grid.
PowerBound base_bound(const std::string& name);

// |c_n| <= Ca(n+1)^ka, |d_n| <= Cb(n+1)^kb gives a Cauchy-product bound
// CaCb(n+1)^(ka+kb+1); shifts add. Mixed grids promote to the half grid.
PowerBound bound_product(const PowerBound& a, const PowerBound& b);

// Sum bound: C = Ca + Cb with the lower power rounded up to the higher.
PowerBound bound_sum(const PowerBound& a, const PowerBound& b);

// Scalar multiple: C *= |s|.
PowerBound bound_scale(const PowerBound& a, const Rat& s);

// Relabels exponents by delta (multiplication by the exact monomial
// q^{delta}); the (n+1)^k profile is unchanged.
PowerBound bound_shift(const PowerBound& a, HalfExp delta);

// Re-reads an integer-grid bound on the half grid (odd slots are zero, so
// the same C and k remain valid with n counting half-steps).
PowerBound promote_to_half(const PowerBound& a);

// Certified upper bound on sum_{n >= n0} C(n+1)^k q0^{n - normalize_at}:
// a finite partial sum plus a geometric majorant, all in exact rationals.
// Throws if the majorant ratio cannot be brought below one (q0 >= 1).
struct TailBound {
  Rat value;
};
TailBound tail_bound(const PowerBound& b, long n0, const Rat& q0, long normalize_at);

// Verifies |coefficient| <= C(n+1)^k for every computed coefficient of s;
// returns the first offending exponent, or nullopt when the bound holds.
std::optional<HalfExp> check_empirical(const PowerBound& b, const FormalSeries& s);

// The composite numerator bounds of the appendix calculus, composed from the
// base bounds exactly along the defining formulas. Keys: num_phi, num_phi1,
// num_phi2, num_psi_i, num_psi_s, num_psi_t, delta, delta2.
std::map<std::string, PowerBound> derive_numerator_bounds();

}  // namespace leech
