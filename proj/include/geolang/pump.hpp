// Pigeonhole pumping of long accepted words and the periodic words and
// conjugate elements it produces.

#ifndef GEOLANG_PUMP_HPP_
#define GEOLANG_PUMP_HPP_

#include <memory>
#include <optional>

#include "geolang/fsa.hpp"
#include "geolang/group.hpp"

namespace geolang {

struct PumpDecomposition {
  Word u, v, q;  // prefix = u v q
  State state = kNoState;  // state after u and after u v
  std::shared_ptr<const Fsa> machine;
};

//! Among the prefixes of length i .. i + states, the earliest whose state
//! repeats an earlier one in that range.  Throws NotAccepted,
//! PrefixTooShort (length < i + states + 1), NondeterministicInput.
PumpDecomposition pump_decomposition(const Fsa& fsa, const Word& prefix, std::size_t i);

//! u v^n; throws NotAccepted if the parent machine rejects it.
Word periodic_word(const PumpDecomposition& d, std::size_t n);

struct MorseCandidate {
  Word element;  // normal form of u v u^-1
  std::size_t checked_powers = 0;
  //! First n with |g^n| < n |v| - 2 |u|, if any.
  std::optional<std::size_t> growth_failure;
  bool linear_growth() const noexcept { return !growth_failure; }
};

MorseCandidate morse_element_candidate(const GroupModel& model, const PumpDecomposition& d,
                                       std::size_t max_power = 50);

}  // namespace geolang

#endif  // GEOLANG_PUMP_HPP_
