#include "leech/forms.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace leech {

namespace {

Int sigma(long n, int power) {
  Int s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += pow_int(d, power);
    const long e = n / d;
    if (e != d) s += pow_int(e, power);
  }
  return s;
}

// Signed lattice-point counts for the theta fourth powers. Index is the
// twice-exponent (so value t means q^{t/2}).
std::vector<Int> theta4_counts(ThetaKind kind, long below_twice) {
  std::vector<Int> two(static_cast<size_t>(below_twice), Int(0));
  std::vector<Int> four(static_cast<size_t>(below_twice), Int(0));
  if (kind == ThetaKind::k10) {
    // Theta_10^4 lives on odd twice-values: q^{t/2} with 4t a sum of four odd
    // squares. Convolve the two-odd-square counts.
    const long n4 = 4 * below_twice;
    std::vector<Int> odd2(static_cast<size_t>(n4), Int(0));
    for (long x = 1; x * x < n4; x += 2)
      for (long y = 1; x * x + y * y < n4; y += 2)
        odd2[static_cast<size_t>(x * x + y * y)] += 4;  // sign choices of x, y
    for (long t = 0; t < below_twice; ++t) {
      Int c = 0;
      for (long j = 0; j <= 4 * t; ++j)
        if (odd2[static_cast<size_t>(j)] != 0 && odd2[static_cast<size_t>(4 * t - j)] != 0)
          c += odd2[static_cast<size_t>(j)] * odd2[static_cast<size_t>(4 * t - j)];
      four[static_cast<size_t>(t)] = c;
    }
    return four;
  }
  // Theta_00 and Theta_01: convolve signed two-square counts on the integer
  // twice-grid (exponent of q^{1/2} per square is x^2).
  const bool signed_count = (kind == ThetaKind::k01);
  const long lim = static_cast<long>(std::sqrt(static_cast<double>(below_twice))) + 2;
  for (long x = -lim; x <= lim; ++x)
    for (long y = -lim; y <= lim; ++y) {
      const long t = x * x + y * y;
      if (t >= below_twice) continue;
      const long s = signed_count && ((x + y) % 2 != 0) ? -1 : 1;
      two[static_cast<size_t>(t)] += s;
    }
  for (long t = 0; t < below_twice; ++t) {
    Int c = 0;
    for (long j = 0; j <= t; ++j)
      if (two[static_cast<size_t>(j)] != 0 && two[static_cast<size_t>(t - j)] != 0)
        c += two[static_cast<size_t>(j)] * two[static_cast<size_t>(t - j)];
    four[static_cast<size_t>(t)] = c;
  }
  return four;
}

struct NumeratorSet {
  FormalSeries num_phi, num_phi1, num_phi2;
  FormalSeries e2, e4, e6;
};

NumeratorSet phi_numerators(HalfExp order) {
  FormalSeries e2 = eisenstein(2, order);
  FormalSeries e4 = eisenstein(4, order);
  FormalSeries e6 = eisenstein(6, order);
  const FormalSeries e4sq = e4 * e4;
  const FormalSeries e4cu = e4sq * e4;
  const FormalSeries e6sq = e6 * e6;
  // X = -49 E4^3 + 25 E6^2 is the combination whose E2-powers carry the
  // depth; it also feeds phi1 and phi2.
  const FormalSeries x = e4cu.scaled(-49) + e6sq.scaled(25);
  FormalSeries num_phi = e4 * (e4cu.scaled(25) + e6sq.scaled(-49)) +
                         (e6 * e4sq * e2).scaled(48) + x * (e2 * e2);
  FormalSeries num_phi1 = (e6 * e4sq).scaled(-288) + (e2 * x).scaled(-12);
  FormalSeries num_phi2 = x.scaled(-36);
  return {std::move(num_phi), std::move(num_phi1), std::move(num_phi2),
          std::move(e2), std::move(e4), std::move(e6)};
}

struct PsiNumeratorSet {
  FormalSeries num_i, num_s, num_t;
  FormalSeries th00, th01, th10;
};

PsiNumeratorSet psi_numerators(HalfExp order) {
  FormalSeries th00 = theta4(ThetaKind::k00, order);
  FormalSeries th01 = theta4(ThetaKind::k01, order);
  FormalSeries th10 = theta4(ThetaKind::k10, order);
  const FormalSeries a5 = th01.pow(5), a6 = th01.pow(6), a7 = th01.pow(7);
  const FormalSeries b5 = th10.pow(5), b6 = th10.pow(6), b7 = th10.pow(7);
  const FormalSeries c5 = th00.pow(5), c6 = th00.pow(6), c7 = th00.pow(7);
  const FormalSeries th10sq = th10 * th10;
  const FormalSeries th01sq = th01 * th01;
  FormalSeries num_i =
      (a5 * th10sq).scaled(7) + (a6 * th10).scaled(7) + a7.scaled(2);
  FormalSeries num_s =
      -((b5 * th01sq).scaled(7) + (b6 * th01).scaled(7) + b7.scaled(2));
  FormalSeries num_t =
      (c5 * th10sq).scaled(7) + (c6 * th10).scaled(-7) + c7.scaled(2);
  return {std::move(num_i), std::move(num_s), std::move(num_t),
          std::move(th00), std::move(th01), std::move(th10)};
}

}  // namespace

FormalSeries eisenstein(int k, HalfExp order) {
  if (order <= HalfExp(0)) throw std::invalid_argument("order must be positive");
  long constant;
  switch (k) {
    case 2: constant = -24; break;   // 2/zeta(-1)
    case 4: constant = 240; break;   // 2/zeta(-3)
    case 6: constant = -504; break;  // 2/zeta(-5)
    default:
      throw std::invalid_argument("unsupported Eisenstein weight " + std::to_string(k));
  }
  FormalSeries s(HalfExp(0), order);
  s.set(HalfExp(0), 1);
  for (long n = 1; 2 * n < order.twice; ++n)
    s.set(HalfExp::integer(n), rat(Int(constant) * sigma(n, k - 1)));
  return s;
}

FormalSeries delta_series(HalfExp order) {
  // Built with enough internal margin that the requested window is exact.
  const HalfExp work = order + HalfExp(2);
  FormalSeries e4 = eisenstein(4, work);
  FormalSeries e6 = eisenstein(6, work);
  FormalSeries d = (e4.pow(3) - e6 * e6).scaled(rat(1, 1728));
  return d.truncated(order).trimmed();
}

FormalSeries theta4(ThetaKind kind, HalfExp order) {
  if (order <= HalfExp(0)) throw std::invalid_argument("order must be positive");
  const auto counts = theta4_counts(kind, order.twice);
  FormalSeries s(HalfExp(0), order);
  for (long t = 0; t < order.twice; ++t)
    if (counts[static_cast<size_t>(t)] != 0)
      s.set(HalfExp(t), rat(counts[static_cast<size_t>(t)]));
  return s;
}

PhiFamily phi_family(HalfExp order) {
  if (order < HalfExp::integer(3))
    throw std::invalid_argument("order too small to divide by Delta^2");
  // Division by Delta^2 costs six twice-units of window (Delta^2 starts at
  // q^2 and inversion spends another factor), so build with margin.
  const HalfExp work = order + HalfExp(10);
  NumeratorSet nums = phi_numerators(work);
  const FormalSeries delta2 = [&] {
    FormalSeries d = (nums.e4.pow(3) - nums.e6 * nums.e6).scaled(rat(1, 1728)).trimmed();
    return d * d;
  }();
  const FormalSeries inv_d2 = delta2.inverse();
  PhiFamily out{
      (nums.num_phi.trimmed() * inv_d2).truncated(order),
      PiSeries((nums.num_phi1.trimmed() * inv_d2).truncated(order), -1, 1),
      PiSeries((nums.num_phi2.trimmed() * inv_d2).truncated(order), -2, 0),
      nums.num_phi.truncated(order),
      nums.num_phi1.truncated(order),
      nums.num_phi2.truncated(order)};
  return out;
}

PsiFamily psi_family(HalfExp order) {
  if (order < HalfExp::integer(3))
    throw std::invalid_argument("order too small to divide by Delta^2");
  const HalfExp work = order + HalfExp(10);
  PsiNumeratorSet nums = psi_numerators(work);
  const FormalSeries delta2 = [&] {
    FormalSeries d = delta_series(work);
    return d * d;
  }();
  const FormalSeries inv_d2 = delta2.inverse();
  return PsiFamily{
      (nums.num_i.trimmed() * inv_d2).truncated(order),
      (nums.num_s.trimmed() * inv_d2).truncated(order),
      (nums.num_t.trimmed() * inv_d2).truncated(order),
      nums.num_i.truncated(order),
      nums.num_s.truncated(order),
      nums.num_t.truncated(order)};
}

FormCatalog FormCatalog::build(HalfExp order) {
  FormCatalog c;
  c.order_ = order;
  const HalfExp work = order + HalfExp(10);

  NumeratorSet en = phi_numerators(work);
  PsiNumeratorSet tn = psi_numerators(work);
  FormalSeries delta = (en.e4.pow(3) - en.e6 * en.e6).scaled(rat(1, 1728)).trimmed();
  const FormalSeries delta2 = delta * delta;
  const FormalSeries inv_d2 = delta2.inverse();

  auto put = [&](const std::string& name, const FormalSeries& s, int pi_pow, int i_pow) {
    c.entries_.emplace(name, PiSeries(s.truncated(order), pi_pow, i_pow));
  };
  put("E2", en.e2, 0, 0);
  put("E4", en.e4, 0, 0);
  put("E6", en.e6, 0, 0);
  put("Delta", delta, 0, 0);
  put("Th00_4", tn.th00, 0, 0);
  put("Th01_4", tn.th01, 0, 0);
  put("Th10_4", tn.th10, 0, 0);
  put("phi", en.num_phi.trimmed() * inv_d2, 0, 0);
  put("Phi1", en.num_phi1.trimmed() * inv_d2, -1, 1);
  put("Phi2", en.num_phi2.trimmed() * inv_d2, -2, 0);
  put("psiI", tn.num_i.trimmed() * inv_d2, 0, 0);
  put("psiS", tn.num_s.trimmed() * inv_d2, 0, 0);
  put("psiT", tn.num_t.trimmed() * inv_d2, 0, 0);

  auto putn = [&](const std::string& name, const FormalSeries& s) {
    c.numerators_.emplace(name, s.truncated(order));
  };
  putn("num_phi", en.num_phi);
  putn("num_phi1", en.num_phi1);
  putn("num_phi2", en.num_phi2);
  putn("num_psi_i", tn.num_i);
  putn("num_psi_s", tn.num_s);
  putn("num_psi_t", tn.num_t);
  putn("delta2", delta2);
  return c;
}

const PiSeries& FormCatalog::form(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw std::out_of_range("unknown form: " + name);
  return it->second;
}

const FormalSeries& FormCatalog::numerator(const std::string& name) const {
  auto it = numerators_.find(name);
  if (it == numerators_.end()) throw std::out_of_range("unknown numerator: " + name);
  return it->second;
}

const std::vector<std::string>& FormCatalog::form_names() {
  static const std::vector<std::string> names = {
      "E2", "E4", "E6", "Delta", "Th00_4", "Th01_4", "Th10_4",
      "phi", "Phi1", "Phi2", "psiI", "psiS", "psiT"};
  return names;
}

void FormCatalog::inject_fault(const std::string& name, HalfExp e, const Rat& delta) {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw std::out_of_range("unknown form: " + name);
  FormalSeries& body = it->second.body;
  body.set(e, body.coefficient(e) + delta);
}

std::string fnv1a_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return std::string(buf);
}

std::string FormCatalog::content_hash() const {
  std::string all;
  for (const auto& [name, ps] : entries_) {
    all += name;
    all += ':';
    all += ps.body.str();
    all += ';';
  }
  return fnv1a_hex(all);
}

std::string FormCatalog::to_json() const {
  nlohmann::json j;
  j["order_twice"] = order_.twice;
  nlohmann::json forms = nlohmann::json::object();
  for (const auto& [name, ps] : entries_) {
    nlohmann::json f;
    f["pi_power"] = ps.pi_power;
    f["i_power"] = ps.i_power;
    f["trunc_twice"] = ps.body.trunc_order().twice;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [e, c] : ps.body.coeffs())
      coeffs.push_back({e.twice, c.get_str()});
    f["coeffs"] = std::move(coeffs);
    forms[name] = std::move(f);
  }
  j["forms"] = std::move(forms);
  return j.dump(2);
}

IdentityReport verify_identities(const FormCatalog& c) {
  IdentityReport rep;
  const HalfExp order = c.order();

  auto check = [&](const std::string& name, const FormalSeries& lhs,
                   const FormalSeries& rhs, HalfExp below) {
    IdentityReport::Item item{name, true, std::nullopt};
    const HalfExp lo = min(lhs.min_exp(), rhs.min_exp());
    for (long t = lo.twice; t < below.twice; ++t) {
      const HalfExp e{t};
      if (lhs.coefficient(e) != rhs.coefficient(e)) {
        item.ok = false;
        item.first_fail = e;
        break;
      }
    }
    rep.items.push_back(item);
    rep.all_ok = rep.all_ok && item.ok;
  };

  const FormalSeries& e4 = c.form("E4").body;
  const FormalSeries& e6 = c.form("E6").body;
  const FormalSeries e4cu_minus_e6sq = e4.pow(3) - e6 * e6;
  check("delta_formula", c.form("Delta").body.scaled(1728), e4cu_minus_e6sq,
        min(order, e4cu_minus_e6sq.trunc_order()));

  const FormalSeries jac_lhs = c.form("Th01_4").body + c.form("Th10_4").body;
  check("jacobi", jac_lhs, c.form("Th00_4").body, order);

  const FormalSeries psi_sum = c.form("psiS").body + c.form("psiT").body;
  check("psi_sum", psi_sum, c.form("psiI").body, order);

  const FormalSeries& delta = c.form("Delta").body;
  const FormalSeries phi_d2 = c.form("phi").body * delta * delta;
  check("phi_numerator", phi_d2, c.numerator("num_phi"),
        min(phi_d2.trunc_order(), c.numerator("num_phi").trunc_order()));

  // psi_T = psi_I with the sign of every odd twice-exponent flipped.
  {
    IdentityReport::Item item{"psi_t_mirror", true, std::nullopt};
    const FormalSeries& pi = c.form("psiI").body;
    const FormalSeries& pt = c.form("psiT").body;
    for (long t = pi.min_exp().twice; t < order.twice; ++t) {
      const HalfExp e{t};
      const Rat want = (t % 2 == 0) ? pi.coefficient(e) : Rat(-pi.coefficient(e));
      if (pt.coefficient(e) != want) {
        item.ok = false;
        item.first_fail = e;
        break;
      }
    }
    rep.items.push_back(item);
    rep.all_ok = rep.all_ok && item.ok;
  }
  return rep;
}

}  // namespace leech
