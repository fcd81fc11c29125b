#ifndef FOURFOLD_VERDICT_HPP
#define FOURFOLD_VERDICT_HPP

#include <optional>
#include <string>
#include <vector>

#include "fourfold/pi_arith.hpp"

namespace fourfold {

enum class VerdictState { Holds, Fails, Undetermined };

std::string verdict_state_str(VerdictState s);

/// Tri-state answer for predicates that may depend on unknown invariants or
/// on certificates. A verdict optionally carries the exact margin
/// (LHS - RHS) of the inequality it decided, for reporting.
struct Verdict {
  VerdictState state = VerdictState::Undetermined;
  std::vector<std::string> reasons;
  std::optional<PiQuantity> margin;

  static Verdict holds(std::string reason = {}, std::optional<PiQuantity> margin = {});
  static Verdict fails(std::string reason, std::optional<PiQuantity> margin = {});
  static Verdict undetermined(std::string reason);

  bool is_holds() const { return state == VerdictState::Holds; }
  bool is_fails() const { return state == VerdictState::Fails; }
  bool is_undetermined() const { return state == VerdictState::Undetermined; }

  Verdict& also(std::string reason);
};

}  // namespace fourfold

#endif
