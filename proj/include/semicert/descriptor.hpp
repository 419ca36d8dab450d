#pragma once

/**
 * @file descriptor.hpp
 * @brief Axiom flags of a semifield, the input to exactness classification.
 */

#include <string>

#include "semicert/element.hpp"

namespace semicert {

enum class CarrierSize : std::uint8_t { two, infinite };

struct SemiringDescriptor {
  Tag tag = Tag::boolean;
  bool is_idempotent = false;      // 1 + 1 = 1
  bool has_minus_one = false;      // some x with 1 + x = 0
  bool is_zero_sum_free = false;   // a + b = 0 forces a = b = 0
  bool exists_absorbing_e = false; // some e with 1 + 1 + e = 1
  CarrierSize carrier_size = CarrierSize::infinite;

  static SemiringDescriptor builtin(Tag tag) {
    switch (tag) {
      case Tag::boolean: return {tag, true, false, true, true, CarrierSize::two};
      case Tag::tropical: return {tag, true, false, true, true, CarrierSize::infinite};
      case Tag::nonneg_rational: return {tag, false, false, true, false, CarrierSize::infinite};
      case Tag::rational: return {tag, false, true, false, true, CarrierSize::infinite};
    }
    throw error(errc::invalid_argument, "unknown tag");
  }

  /// Empty string when the flags are mutually consistent for a semifield,
  /// otherwise the first violated implication.
  std::string inconsistency() const {
    if (is_idempotent && !is_zero_sum_free) return "idempotent implies zero-sum free";
    if (has_minus_one && is_zero_sum_free) return "1 + x = 0 contradicts zero-sum freeness";
    if (is_idempotent && !exists_absorbing_e) return "idempotent carriers have e = 1";
    if (has_minus_one && !exists_absorbing_e) return "e = -1 satisfies 1 + 1 + e = 1";
    // In a semifield, (1+e)^2 = 1+e forces 1+e in {0,1}: a ring or 1+1=1.
    if (exists_absorbing_e && !is_idempotent && !has_minus_one) {
      return "an e with 1 + 1 + e = 1 forces a ring or 1 + 1 = 1";
    }
    return {};
  }
};

}  // namespace semicert
