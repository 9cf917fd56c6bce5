#pragma once

#include <stdexcept>
#include <vector>

#include "leech/rat_poly.hpp"

namespace leech {

struct EndpointRootError : std::runtime_error {
  Rat endpoint;
  explicit EndpointRootError(const Rat& at)
      : std::runtime_error("polynomial vanishes at interval endpoint " + at.get_str()),
        endpoint(at) {}
};

// Canonical Sturm sequence p, p', then negated remainders, ending at a
// nonzero constant (or at the gcd for non-squarefree input).
std::vector<RatPoly> sturm_chain(const RatPoly& p);

// Exact sign of p(x).
int sign_at(const RatPoly& p, const Rat& x);

// Exact number of distinct real roots of p in the open interval (lo, hi).
// The endpoints must not be roots (EndpointRootError otherwise); callers that
// hit an endpoint root shrink inward by a recorded epsilon. Multiple roots
// are handled by counting on p / gcd(p, p'). Internally this runs a
// content-normalized integer remainder sequence, which is the same chain up
// to positive scalars and therefore has identical sign variations.
long count_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi);

}  // namespace leech
