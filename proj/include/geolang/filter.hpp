// Window filters: subword-closed predicates on short windows of a word.
//
// A word passes a filter of scale B when every contiguous subword of length
// at most B is accepted.  Because acceptance is subword-closed it is enough
// to test the windows of length exactly min(B, length).

#ifndef GEOLANG_FILTER_HPP_
#define GEOLANG_FILTER_HPP_

#include <span>
#include <string>
#include <vector>

#include "geolang/group.hpp"

namespace geolang {

enum class FilterKind {
  Trivial,        // every window, scale 0
  SyllableBound,  // within a run of one free factor, no generator used more than s times
  CommutingBlock  // no run of more than s letters that pairwise commute
};

class WindowFilter {
 public:
  //! Accepts everything; reproduces classical cone types.
  WindowFilter() = default;

  static WindowFilter trivial() { return {}; }
  static WindowFilter syllable_bound(const GroupModel& model, std::size_t s);
  static WindowFilter commuting_block(const GroupModel& model, std::size_t s);

  //! Parse "trivial", "syllable:<s>" or "commuting:<s>".
  static WindowFilter parse(const GroupModel& model, const std::string& spec);

  FilterKind kind() const noexcept { return kind_; }
  std::size_t scale() const noexcept { return scale_; }
  std::size_t parameter() const noexcept { return parameter_; }
  std::string name() const;

  bool accepts_window(std::span<const Letter> window) const;

  //! Every window of `w` is accepted.
  bool passes(const Word& w) const;

  //! Assuming `w` minus its last letter passes, check the windows that end at
  //! the last letter.
  bool passes_last(const Word& w) const;

 private:
  FilterKind kind_ = FilterKind::Trivial;
  std::size_t scale_ = 0;
  std::size_t parameter_ = 0;
  std::vector<int> factor_;                 // SyllableBound
  std::vector<Letter> generator_;           // SyllableBound
  std::vector<std::vector<bool>> commute_;  // CommutingBlock
};

}  // namespace geolang

#endif  // GEOLANG_FILTER_HPP_
