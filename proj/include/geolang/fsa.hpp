// Finite state automata over an indexed label set.
//
// An Fsa is immutable; build one with FsaBuilder.  States are integer
// indices.  The deterministic flag is computed from the transitions, so it
// is always truthful.

#ifndef GEOLANG_FSA_HPP_
#define GEOLANG_FSA_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geolang/word.hpp"

namespace geolang {

using State = std::uint32_t;
using Count = boost::multiprecision::cpp_int;

inline constexpr State kNoState = static_cast<State>(-1);

struct Edge {
  Letter label;
  State target;
  auto operator<=>(const Edge&) const = default;
};

class Fsa {
 public:
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t label_count() const noexcept { return labels_.size(); }
  std::size_t state_count() const noexcept { return edges_.size(); }
  std::size_t transition_count() const noexcept;
  State initial() const noexcept { return initial_; }
  bool is_accept(State s) const { return accept_.at(s); }
  std::vector<State> accept_states() const;
  bool deterministic() const noexcept { return deterministic_; }

  //! Out-edges sorted by (label, target).
  std::span<const Edge> edges(State s) const { return edges_.at(s); }

  //! Deterministic step; kNoState when there is no transition.
  State step(State s, Letter label) const;
  //! Deterministic run from the initial state; kNoState if it falls off.
  State run(std::span<const Letter> w) const;

 private:
  friend class FsaBuilder;
  std::vector<std::string> labels_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> accept_;
  State initial_ = 0;
  bool deterministic_ = true;
};

class FsaBuilder {
 public:
  explicit FsaBuilder(std::vector<std::string> labels);

  State add_state(bool accept = false);
  void set_accept(State s, bool accept = true);
  void set_initial(State s);
  void add_transition(State from, Letter label, State to);
  std::size_t state_count() const noexcept { return fsa_.edges_.size(); }

  //! Creates a single initial state if none were added.
  Fsa build() &&;

 private:
  Fsa fsa_;
};

//! A machine over ordered pairs of base symbols; the pair (a, b) is the
//! label a * base_size + b.
struct PairFsa {
  Fsa fsa;
  std::vector<std::string> base_labels;

  std::size_t base_size() const noexcept { return base_labels.size(); }
  Letter pair(Letter a, Letter b) const {
    return static_cast<Letter>(a * base_labels.size() + b);
  }
  Letter first(Letter label) const { return static_cast<Letter>(label / base_labels.size()); }
  Letter second(Letter label) const { return static_cast<Letter>(label % base_labels.size()); }
};

//! Labels "(a,b)" for every pair of base labels in pair-index order.
std::vector<std::string> pair_labels(const std::vector<std::string>& base);

// --- language operations -----------------------------------------------------

//! Existential acceptance (works for nondeterministic machines).  Throws
//! UnknownSymbol on labels outside the machine's alphabet.
bool accepts(const Fsa& fsa, std::span<const Letter> w);

//! Keep only states on some initial-to-accept path.  An empty language
//! trims to a lone non-accepting initial state.
Fsa trim(const Fsa& fsa);
bool is_trimmed(const Fsa& fsa);

//! Product machine; throws AlphabetMismatch on differing label sets.
Fsa intersect(const Fsa& a, const Fsa& b);
//! Union (nondeterministic unless both inputs are trivial).
Fsa unite(const Fsa& a, const Fsa& b);
//! Subset construction over reachable subsets.
Fsa determinize(const Fsa& fsa);
//! Add a rejecting sink so every state has every label.
Fsa complete(const Fsa& fsa);
//! Complement relative to all words over the label set.
Fsa complement(const Fsa& fsa);
//! { u : (u, v) accepted for some v }; generally nondeterministic.
Fsa project_first(const PairFsa& q);

struct Minimized {
  Fsa fsa;
  std::vector<State> class_of;  // old state -> new state, kNoState if dropped
};

//! Minimal trimmed deterministic machine with states numbered in BFS order.
Minimized minimize(const Fsa& fsa);

//! Machine accepting all words over `labels` (one accepting state).
Fsa universal_fsa(const std::vector<std::string>& labels);
//! Machine accepting no words.
Fsa empty_fsa(const std::vector<std::string>& labels);

// --- counting and enumeration -------------------------------------------------

struct GrowthCounts {
  std::vector<Count> sphere;      // words of length exactly n
  std::vector<Count> cumulative;  // words of length at most n
};

//! f_L(0..n).  Throws NondeterministicInput on nondeterministic machines,
//! because runs and words differ there.
GrowthCounts count_words(const Fsa& fsa, std::size_t n);

//! Accepted words of length at most n in shortlex (label index) order.
//! Works for nondeterministic machines.  Throws BudgetExceeded.
std::vector<Word> enumerate_words(const Fsa& fsa, std::size_t n, std::size_t budget = 5'000'000);

// --- interchange ---------------------------------------------------------------

//! { "alphabet", "states", "initial", "accepts", "transitions": [[s, label, t]] }
std::string to_json(const Fsa& fsa, int indent = 2);
Fsa fsa_from_json(const std::string& text);
std::string to_dot(const Fsa& fsa, const std::string& name = "fsa");

}  // namespace geolang

#endif  // GEOLANG_FSA_HPP_
