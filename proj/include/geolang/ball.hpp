// Geodesic lengths, Cayley-graph balls and brute-force enumeration of
// geodesic words.  These are the testing oracles for every automaton.

#ifndef GEOLANG_BALL_HPP_
#define GEOLANG_BALL_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "geolang/filter.hpp"
#include "geolang/group.hpp"

namespace geolang {

//! Value of environment variable `name`, or `fallback` when unset.
std::size_t env_budget(const char* name, std::size_t fallback);

//! Element cap for ball enumeration; overridable with GEOLANG_BALL_BUDGET.
std::size_t default_ball_budget();

std::size_t geodesic_length(const GroupModel& model, const Word& w);
bool is_geodesic(const GroupModel& model, const Word& w);

//! The ball B(e, r): every element of length at most r with its length.
class Ball {
 public:
  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }

  //! Normal forms in BFS order (by length, then discovery order).
  const std::vector<Word>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> length_of(const Word& normal_form) const;
  bool contains(const Word& normal_form) const { return index_.count(normal_form) != 0; }
  std::optional<std::size_t> index_of(const Word& normal_form) const;

  //! Number of elements of each length 0..radius.
  std::vector<std::size_t> sphere_sizes() const;

 private:
  friend Ball enumerate_ball(const GroupModel&, std::size_t, std::size_t);
  std::size_t radius_ = 0;
  std::vector<Word> elements_;
  std::vector<std::size_t> length_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

//! BFS over the Cayley graph.  Throws BudgetExceeded past `budget` elements.
Ball enumerate_ball(const GroupModel& model, std::size_t radius,
                    std::size_t budget = default_ball_budget());

//! Every geodesic word of length at most n passing `filter` on all windows,
//! in shortlex order.  Throws BudgetExceeded past `budget` words.
std::vector<Word> enumerate_geodesic_words(const GroupModel& model, std::size_t n,
                                           const WindowFilter& filter = {},
                                           std::size_t budget = default_ball_budget());

//! Geodesic words of length at most n, passing `filter`, that end at one of
//! `targets` (normal forms).  Only prefixes of geodesics to a target are
//! explored, so this stays cheap when the target set is sparse.
std::vector<Word> enumerate_geodesic_words_to(const GroupModel& model,
                                              const std::vector<Word>& targets, std::size_t n,
                                              const WindowFilter& filter = {},
                                              std::size_t budget = default_ball_budget());

}  // namespace geolang

#endif  // GEOLANG_BALL_HPP_
