#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leech/bounds.hpp"
#include "leech/forms.hpp"
#include "leech/rat_poly.hpp"

namespace leech {

enum class Sense { should_be_negative, should_be_positive };

// floor(10^10 pi)/10^10 and ceil(10^10 pi)/10^10.
const Rat& pi_lower();
const Rat& pi_upper();

// sum over (t_degree j, pi_power p) of t^j pi^p (series in q^{1/2});
// the carrier for the appendix branch expressions multiplied by Delta^2.
struct TPiPoly {
  std::map<std::pair<int, int>, FormalSeries> terms;
};

struct BranchPlan {
  std::string name;  // "t_ge_1" or "t_le_1" (the original lemma variable)
  Sense sense;
  TPiPoly expr;
  // Certified growth bound for each term's series.
  std::map<std::pair<int, int>, PowerBound> term_bounds;
  // The pure-q branch accounts tails with q0 = 1/535 per q-step; branches
  // with t-factors or half powers use q0 = 1/23 per half-step.
  bool integer_tail_accounting = false;
};

struct ReducedBranch {
  RatPoly poly;          // sign-equivalent polynomial on the u-interval
  long clear_power = 0;  // multiplied through by u^clear_power
  long strip_power = 0;  // common u-power then removed
  Rat tail_total;        // certified tail sum, as a coefficient of q^6
  Rat injected_tail;     // constant folded in at q^6 against the sense
  bool tail_ok = false;  // tail_total < 10^-50
  nlohmann::json replacement_log;
};

// Builds the one-sided polynomial bound for a branch: valid for
// u in (0, 1/23), t in [1, 1/(23 q^{1/2})]. Sign-constancy of the result on
// (0, 1/23) with the sign matching `sense` implies the branch inequality on
// the physical region. `cut` is the truncation exponent (series terms at or
// above it are dropped and covered by the injected tail).
ReducedBranch reduce_branch(const BranchPlan& plan, HalfExp cut);

struct BranchResult {
  std::string name;
  std::string sense;     // "negative" / "positive"
  Rat lo, hi;            // interval for the Sturm check
  long degree = -1;
  long root_count = -1;
  int midpoint_sign = 0;
  Rat tail_total;
  Rat injected_tail;
  bool tail_ok = false;
  bool ok = false;
  std::string failure;   // empty when ok
  double wall_ms = 0;
  std::string poly_hash;
  long clear_power = 0, strip_power = 0;
  Rat endpoint_shift_lo, endpoint_shift_hi;  // recorded perturbations
  nlohmann::json replacement_log;
};

struct CertResult {
  std::string lemma_id;
  std::vector<BranchResult> branches;
  bool ok = false;
  double wall_ms = 0;
  long order_twice = 0;  // catalog truncation order used
  long cut_twice = 0;    // series cut for the tail accounting
};

// The appendix branch plans, assembled from the catalog numerators.
std::vector<BranchPlan> lemma_branches(const std::string& id, const FormCatalog& cat);

// Runs the branch plan for lemma id in {"A1", "A2", "A3"} at the catalog's
// order: reduce, Sturm-count on (0, 1/23), record midpoint sign.
CertResult certify_lemma(const std::string& id, const FormCatalog& cat);

// (10 - 3 pi)(2 - s) + 3 > 0 on s in (0, 2), with pi replaced by its upper
// rational bound; certifies the sign of the extra term for 0 < r < sqrt(2).
CertResult certify_fhat_gap();

nlohmann::json cert_to_json(const CertResult& r);

}  // namespace leech
