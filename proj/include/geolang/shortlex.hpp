// Equality recognizer for a geodesic word language and extraction of the
// lexicographically least representative of each element.

#ifndef GEOLANG_SHORTLEX_HPP_
#define GEOLANG_SHORTLEX_HPP_

#include <span>
#include <string>
#include <vector>

#include "geolang/cone.hpp"
#include "geolang/fsa.hpp"
#include "geolang/group.hpp"

namespace geolang {

struct DiscrepancyWitness {
  std::size_t value = 0;  // largest prefix discrepancy seen
  Word u, v;              // a pair attaining it (empty when value is 0)
  //! up_to[i]: largest discrepancy over pairs of length at most i.
  std::vector<std::size_t> up_to;
};

//! Brute force over equal-element pairs of L-words of length at most n:
//! the largest |u(i)^-1 v(i)| over all prefixes.
DiscrepancyWitness max_equal_pair_discrepancy(const Fsa& language, const GroupModel& model,
                                              std::size_t n);

//! Pairs (u, v) of equal-length L-words with equal value whose prefix
//! discrepancy stays in B(e, r).  When `validation_depth` is nonzero the
//! oracle is consulted and BoundTooSmall is thrown if some equal pair of
//! that length needs a larger r.  Throws NondeterministicInput,
//! AlphabetMismatch, NotGeodesic.
PairFsa equality_recognizer(const Fsa& language, const GroupModel& model, std::size_t r,
                            std::size_t validation_depth = 6);

//! Ranks of the alphabet's symbols under `order` (empty keeps the
//! alphabet's own order).
std::vector<std::size_t> symbol_ranks(const Alphabet& alphabet,
                                      const std::vector<std::string>& order);

//! Three-state machine over pair labels accepting pairs whose second word is
//! lexicographically smaller than the first.
Fsa second_smaller_comparator(const std::vector<std::string>& base_labels,
                              std::span<const std::size_t> rank);

//! { u : (u, u) in Q and no (u, w) in Q with w < u }, minimised.
Fsa lex_least(const PairFsa& q, std::span<const std::size_t> rank);

struct ShortlexOptions {
  ConeBuildOptions cone{};
  std::vector<std::string> order;  // empty: alphabet order
  std::size_t r_hint = 4;
  std::size_t r_cap = 16;
  std::size_t validation_depth = 6;
};

struct ShortlexResult {
  Fsa language;
  std::size_t r = 0;
  std::size_t m = 0;
  std::size_t cone_states = 0;
  std::size_t pair_states = 0;
  std::size_t r_escalations = 0;
  //! The oracle's discrepancy was the same at the validation depth and two
  //! below it.  False means r merely tracks the depth.
  bool stabilized = true;
};

//! Cone automaton, then the equality recognizer with r raised from the hint
//! to the largest discrepancy the oracle finds at the validation depth, then
//! lex_least.  Throws NonStabilization when that exceeds the cap.
ShortlexResult unique_rep_language(const GroupModel& model, const ShortlexOptions& options);

//! Number of distinct elements represented by words of `language` of length
//! at most n (brute force).
std::size_t represented_elements(const Fsa& language, const GroupModel& model, std::size_t n);

}  // namespace geolang

#endif  // GEOLANG_SHORTLEX_HPP_
