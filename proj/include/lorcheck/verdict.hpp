#ifndef LORCHECK_VERDICT_HPP
#define LORCHECK_VERDICT_HPP

#include <optional>

#include <nlohmann/json.hpp>

#include "lorcheck/types.hpp"

namespace lorcheck {

// Structured counterexample payload. Keys are checker-specific (point,
// alpha/beta/gamma, indices, ...); rationals appear as "p/q" strings.
using Witness = nlohmann::json;

// Uniform checker result. margin is the checker-documented slack
// (for inequalities LHS <= RHS it is RHS - LHS at the reported spot).
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::optional<Rat> margin;

  static Verdict ok() { return Verdict{}; }
  static Verdict ok_with_margin(const Rat& m) {
    Verdict v;
    v.margin = m;
    return v;
  }
  static Verdict fail(Witness w, const Rat& m) {
    Verdict v;
    v.holds = false;
    v.witness = std::move(w);
    v.margin = m;
    return v;
  }
  static Verdict fail(Witness w) {
    Verdict v;
    v.holds = false;
    v.witness = std::move(w);
    return v;
  }
};

nlohmann::json witness_point(const RatVector& x);
nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace lorcheck

#endif
