#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace leech {

// Exact arithmetic throughout the library is mpq_class. GMP keeps values in
// lowest terms with a positive denominator, which is exactly the canonical
// form we need; the helpers below exist so call sites never touch
// canonicalize() directly.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", or "p/q".
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("unparsable rational: " + s);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rat& r) { return sgn(r); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// base^e for integer e of either sign; base must be nonzero when e < 0.
inline Rat pow_rat(const Rat& base, long e) {
  if (e < 0 && base == 0)
    throw std::domain_error("negative power of zero");
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat out(pow_int(Int(base.get_num()), a), pow_int(Int(base.get_den()), a));
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

inline Rat pow10_rat(long e) { return pow_rat(rat(10), e); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace leech
