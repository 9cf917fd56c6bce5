#pragma once

#include "leech/formal_series.hpp"

namespace leech {

// A FormalSeries scaled by an explicit power of pi and of i; the represented
// object is body * pi^pi_power * i^i_power. Keeping pi and i out of the body
// is what lets every certification step run in exact rationals.
struct PiSeries {
  FormalSeries body;
  int pi_power = 0;
  int i_power = 0;  // modulo 4

  PiSeries(FormalSeries b, int pi_pow = 0, int i_pow = 0)
      : body(std::move(b)), pi_power(pi_pow), i_power(((i_pow % 4) + 4) % 4) {}
};

}  // namespace leech
