#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leech/pi_series.hpp"

namespace leech {

// q-expansions of the named forms. Orders are truncation boundaries on the
// q^{1/2} grid: a series built at order T carries exact coefficients for all
// exponents with twice-value < T.twice.

// E_k = 1 + (2/zeta(1-k)) * sum sigma_{k-1}(n) q^n for k in {2, 4, 6}; the
// three rational constants are -24, 240, -504.
FormalSeries eisenstein(int k, HalfExp order);

// Delta = (E4^3 - E6^2)/1728 = q - 24q^2 + 252q^3 - ...
FormalSeries delta_series(HalfExp order);

enum class ThetaKind { k00, k01, k10 };

// Fourth power of the indicated theta constant, computed from four-square
// representation counts on the q^{1/2} grid.
FormalSeries theta4(ThetaKind kind, HalfExp order);

struct PhiFamily {
  FormalSeries phi;  // weight -8 depth 2; vanishes at the cusp
  PiSeries phi1;     // (i/pi)   * integer-coefficient body
  PiSeries phi2;     // (1/pi^2) * integer-coefficient body
  // Numerators over Delta^2, kept for the growth-bound calculus.
  FormalSeries num_phi, num_phi1, num_phi2;
};
PhiFamily phi_family(HalfExp order);

struct PsiFamily {
  FormalSeries psi_i, psi_s, psi_t;
  FormalSeries num_psi_i, num_psi_s, num_psi_t;
};
PsiFamily psi_family(HalfExp order);

// All named forms at one common truncation order, plus the Delta^2 numerator
// data the certifier consumes.
class FormCatalog {
 public:
  static FormCatalog build(HalfExp order);

  HalfExp order() const { return order_; }
  const PiSeries& form(const std::string& name) const;
  const FormalSeries& numerator(const std::string& name) const;
  static const std::vector<std::string>& form_names();

  // Test hook: adds delta to one stored coefficient of a named form. The
  // matching numerator is left untouched, so identity checks notice.
  void inject_fault(const std::string& name, HalfExp e, const Rat& delta);

  // Stable FNV-1a hash of the rendered expansions, for report identity.
  std::string content_hash() const;

  std::string to_json() const;

 private:
  HalfExp order_{0};
  std::map<std::string, PiSeries> entries_;
  std::map<std::string, FormalSeries> numerators_;
};

struct IdentityReport {
  struct Item {
    std::string name;
    bool ok = false;
    std::optional<HalfExp> first_fail;
  };
  std::vector<Item> items;
  bool all_ok = true;
};

// Exact checks through the catalog order: (i) 1728*Delta = E4^3 - E6^2,
// (ii) Jacobi, (iii) psi_S + psi_T = psi_I, (iv) phi*Delta^2 equals its
// numerator, (v) psi_T is psi_I with the odd-half-power signs flipped.
IdentityReport verify_identities(const FormCatalog& c);

// FNV-1a over a string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& s);

}  // namespace leech
