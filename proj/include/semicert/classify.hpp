#pragma once

/**
 * @file classify.hpp
 * @brief Left exactness of a semifield from its descriptor flags.
 *
 * A semifield is left exact iff it is a division ring or satisfies 1 + 1 = 1.
 * Anything else lacks an e with 1 + 1 + e = 1, and the system
 * A = [[0,1],[1,1]], b = (1+1, 1) then has left ker A ⊆ left ker b while
 * b ∉ right-im A; that instance is attached to the verdict.
 */

#include <optional>
#include <string_view>
#include <utility>

#include "semicert/descriptor.hpp"
#include "semicert/witness.hpp"

namespace semicert {

enum class Exactness { left_exact, not_left_exact };
enum class ExactnessReason { division_ring, idempotent, no_absorbing_e };

constexpr std::string_view to_string(ExactnessReason reason) noexcept {
  switch (reason) {
    case ExactnessReason::division_ring: return "division ring";
    case ExactnessReason::idempotent: return "idempotent: 1+1=1";
    case ExactnessReason::no_absorbing_e: return "no e with 1+1+e=1";
  }
  return "?";
}

struct ExactnessVerdict {
  Exactness verdict;
  ExactnessReason reason;
  std::optional<std::pair<Matrix, ColVec>> witness;  // set iff not_left_exact
};

inline ExactnessVerdict classify(const SemiringDescriptor& desc) {
  if (auto why = desc.inconsistency(); !why.empty()) throw error(errc::invalid_descriptor, why);
  if (desc.has_minus_one) return {Exactness::left_exact, ExactnessReason::division_ring, std::nullopt};
  if (desc.is_idempotent) return {Exactness::left_exact, ExactnessReason::idempotent, std::nullopt};
  return {Exactness::not_left_exact, ExactnessReason::no_absorbing_e, corcor1_instance(desc.tag)};
}

inline ExactnessVerdict classify(Tag tag) { return classify(SemiringDescriptor::builtin(tag)); }

}  // namespace semicert
