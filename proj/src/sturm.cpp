#include "leech/sturm.hpp"

namespace leech {

namespace {

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> r(a.coeffs());
  std::vector<Rat> q;
  const long db = b.degree();
  long dr = a.degree();
  if (dr >= db) q.assign(static_cast<size_t>(dr - db) + 1, Rat(0));
  const Rat lead = b[static_cast<size_t>(db)];
  while (dr >= db) {
    while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
    if (dr < db) break;
    const Rat f = r[static_cast<size_t>(dr)] / lead;
    q[static_cast<size_t>(dr - db)] = f;
    for (long i = 0; i <= db; ++i)
      r[static_cast<size_t>(dr - db + i)] -= f * b[static_cast<size_t>(i)];
    --dr;
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

// Integer polynomials, canonical with nonzero leading coefficient. These
// carry the remainder sequence; content normalization keeps coefficient
// growth at subresultant scale.
struct ZPoly {
  std::vector<Int> c;

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

Int content_of(const ZPoly& p) {
  Int g = 0;
  for (const Int& x : p.c)
    if (x != 0) {
      Int a = abs(x);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
      if (g == 1) break;
    }
  return g;
}

void make_primitive(ZPoly& p) {
  const Int g = content_of(p);
  if (g > 1)
    for (Int& x : p.c)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ZPoly z_from_rat(const RatPoly& p) {
  Int l = 1;
  for (const Rat& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly out;
  out.c.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    Rat scaled = c * l;
    out.c.push_back(Int(scaled.get_num()));
  }
  out.normalize();
  make_primitive(out);
  return out;
}

ZPoly z_derivative(const ZPoly& p) {
  ZPoly d;
  if (p.c.size() <= 1) return d;
  d.c.resize(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) d.c[i - 1] = p.c[i] * static_cast<long>(i);
  make_primitive(d);
  return d;
}

// Positive multiple of rem(a, b): pseudo-division tracking the sign of the
// accumulated lc(b) factors, so sign variations are those of the true chain.
ZPoly positive_rem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const Int& d = b.c.back();
  const long db = b.degree();
  long flips = 0;
  while (!r.is_zero() && r.degree() >= db) {
    const long dr = r.degree();
    // nr = d*r - lc(r)*u^{dr-db}*b drops the degree by at least one
    ZPoly nr;
    nr.c.assign(static_cast<size_t>(dr) + 1, Int(0));
    for (size_t i = 0; i < r.c.size(); ++i) nr.c[i] = d * r.c[i];
    const Int lead = r.c.back();
    for (long i = 0; i <= db; ++i)
      nr.c[static_cast<size_t>(dr - db + i)] -= lead * b.c[static_cast<size_t>(i)];
    nr.normalize();
    r = std::move(nr);
    ++flips;
  }
  if (d < 0 && (flips % 2) != 0)
    for (Int& x : r.c) x = -x;
  make_primitive(r);
  return r;
}

// Sturm-like sequence with positive-scalar normalization; `ended_in_gcd` is
// set when the remainder sequence terminated at a nonconstant gcd.
std::vector<ZPoly> z_chain(const ZPoly& p, bool* ended_in_gcd) {
  std::vector<ZPoly> seq;
  seq.push_back(p);
  ZPoly d = z_derivative(p);
  *ended_in_gcd = false;
  if (d.is_zero()) return seq;
  seq.push_back(std::move(d));
  while (seq.back().degree() > 0) {
    ZPoly r = positive_rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) {
      *ended_in_gcd = true;
      return seq;
    }
    for (Int& x : r.c) x = -x;
    seq.push_back(std::move(r));
  }
  return seq;
}

int z_sign_at(const ZPoly& p, const Rat& x) {
  if (p.is_zero()) return 0;
  // sign of sum c_i a^i b^{d-i} with x = a/b, b > 0
  const Int a(x.get_num());
  const Int b(x.get_den());
  Int v = 0;
  for (size_t i = p.c.size(); i-- > 0;) {
    v *= a;
    Int t;
    mpz_pow_ui(t.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p.c.size() - 1 - i));
    v += p.c[i] * t;
  }
  return sgn(v);
}

long variations(const std::vector<ZPoly>& seq, const Rat& x) {
  long v = 0;
  int last = 0;
  for (const ZPoly& p : seq) {
    const int s = z_sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

ZPoly z_exact_divide(const ZPoly& a, const ZPoly& b) {
  // Both primitive, b | a over Q implies b | a over Z (Gauss), so rational
  // division with a zero remainder is safe.
  std::vector<Rat> ar(a.c.size()), br(b.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) ar[i] = rat(a.c[i]);
  for (size_t i = 0; i < b.c.size(); ++i) br[i] = rat(b.c[i]);
  auto [q, r] = divmod(RatPoly(std::move(ar)), RatPoly(std::move(br)));
  if (!r.is_zero()) throw std::logic_error("gcd division left a remainder");
  ZPoly out = z_from_rat(q);
  return out;
}

}  // namespace

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  std::vector<RatPoly> seq;
  seq.push_back(p);
  RatPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(std::move(d));
  while (seq.back().degree() > 0) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;  // non-squarefree: chain ends at the gcd
    seq.push_back(-r);
  }
  return seq;
}

int sign_at(const RatPoly& p, const Rat& x) {
  if (p.is_zero()) return 0;
  return sgn(p.eval(x));
}

long count_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  ZPoly zp = z_from_rat(p);
  if (z_sign_at(zp, lo) == 0) throw EndpointRootError(lo);
  if (z_sign_at(zp, hi) == 0) throw EndpointRootError(hi);

  bool ended_in_gcd = false;
  std::vector<ZPoly> seq = z_chain(zp, &ended_in_gcd);
  if (ended_in_gcd) {
    // Count distinct roots on the squarefree part.
    ZPoly sf = z_exact_divide(zp, seq.back());
    seq = z_chain(sf, &ended_in_gcd);
    if (ended_in_gcd) throw std::logic_error("squarefree part was not squarefree");
  }
  return variations(seq, lo) - variations(seq, hi);
}

}  // namespace leech
