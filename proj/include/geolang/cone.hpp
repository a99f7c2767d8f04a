// Cone types of filtered geodesic words and the automaton they define.
//
// A geodesic word u is summarised by its signature at locality m: the
// m-tail (short elements g with |ug| < |u|) and the m-restricted cone (words
// w of length at most m such that uw is geodesic and passes the window
// filter).  The builder explores signatures breadth first, one
// representative word per signature, and checks on every collision that the
// two colliding words extend identically by one letter.  The resulting
// signature automaton is then minimised, so its states are exactly the cone
// types of the explored language.

#ifndef GEOLANG_CONE_HPP_
#define GEOLANG_CONE_HPP_

#include <string>
#include <vector>

#include "geolang/ball.hpp"
#include "geolang/filter.hpp"
#include "geolang/fsa.hpp"
#include "geolang/group.hpp"

namespace geolang {

struct Signature {
  std::vector<Word> tail;  // normal forms, sorted
  std::vector<Word> cone;  // extension words, sorted
  auto operator<=>(const Signature&) const = default;
};

//! T_n(u).  Throws NotGeodesic.
std::vector<Word> tail(const GroupModel& model, const Word& u, std::size_t n);

//! Cone_n(u) under `filter`.  Throws NotGeodesic, or FilterRejected when u
//! itself fails the filter.
std::vector<Word> restricted_cone(const GroupModel& model, const Word& u, std::size_t n,
                                  const WindowFilter& filter);

Signature cone_signature(const GroupModel& model, const Word& u, std::size_t m,
                         const WindowFilter& filter);

struct ConeBuildOptions {
  std::size_t m = 1;
  WindowFilter filter{};
  //! Longest representative word the breadth-first search may create.
  std::size_t depth_budget = env_budget("GEOLANG_DEPTH_BUDGET", 32);
  std::size_t state_budget = env_budget("GEOLANG_STATE_BUDGET", 20'000);
  //! On InconsistentLocality (or failed validation) retry with m + 1.
  bool auto_escalate = false;
  std::size_t max_escalations = 4;
  //! If nonzero, each candidate machine is checked against brute-force
  //! enumeration up to this length; failures count as inconsistent.
  std::size_t validation_depth = 0;
};

class ConeAutomaton {
 public:
  const Fsa& fsa() const noexcept { return fsa_; }
  std::size_t m() const noexcept { return m_; }
  const WindowFilter& filter() const noexcept { return filter_; }
  std::size_t state_count() const noexcept { return fsa_.state_count(); }

  //! First word reaching each state in breadth-first order.
  const Word& representative(State s) const { return representative_.at(s); }
  const Signature& signature_of_state(State s) const { return signature_.at(s); }

  //! Distinct signatures found before merging equal cone types.
  std::size_t signature_classes() const noexcept { return signature_classes_; }
  //! Number of m increments performed by auto-escalation.
  std::size_t escalations() const noexcept { return escalations_; }
  //! Signature collisions re-checked during the build.
  std::size_t consistency_checks() const noexcept { return consistency_checks_; }

 private:
  friend ConeAutomaton build_cone_automaton(const GroupModel&, const ConeBuildOptions&);
  Fsa fsa_;
  std::size_t m_ = 0;
  WindowFilter filter_;
  std::vector<Word> representative_;
  std::vector<Signature> signature_;
  std::size_t signature_classes_ = 0;
  std::size_t escalations_ = 0;
  std::size_t consistency_checks_ = 0;
};

//! Throws InconsistentLocality (with witness words) or BudgetExceeded.
ConeAutomaton build_cone_automaton(const GroupModel& model, const ConeBuildOptions& options);

inline ConeAutomaton build_cone_automaton(const GroupModel& model, std::size_t m,
                                          const WindowFilter& filter = {},
                                          std::size_t depth_budget = 32) {
  ConeBuildOptions options;
  options.m = m;
  options.filter = filter;
  options.depth_budget = depth_budget;
  return build_cone_automaton(model, options);
}

struct Mismatch {
  Word word;
  bool in_machine = false;
  bool in_oracle = false;
};

struct ValidationReport {
  std::size_t depth = 0;
  std::size_t machine_words = 0;
  std::size_t oracle_words = 0;
  std::size_t mismatch_count = 0;
  std::vector<Mismatch> witnesses;  // first few mismatches
  bool passed() const noexcept { return mismatch_count == 0; }
};

//! Compare the words of length at most n accepted by `fsa` with the
//! brute-force filtered geodesic words.
ValidationReport validate_automaton(const Fsa& fsa, const GroupModel& model,
                                    const WindowFilter& filter, std::size_t n);

inline ValidationReport validate_automaton(const ConeAutomaton& automaton,
                                           const GroupModel& model, std::size_t n) {
  return validate_automaton(automaton.fsa(), model, automaton.filter(), n);
}

std::string format_report(const ValidationReport& report, const Alphabet& alphabet);

//! Largest distance between the i-th prefixes of u and v (shorter words
//! stay at their endpoint).  Throws NotGeodesic, or EndpointMismatch when
//! the endpoints are more than 1 apart.
std::size_t fellow_traveling_distance(const GroupModel& model, const Word& u, const Word& v);

bool brute_force_fellow_traveling(const GroupModel& model, const Word& u, const Word& v,
                                  double bound);

}  // namespace geolang

#endif  // GEOLANG_CONE_HPP_
