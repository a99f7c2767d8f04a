// Subgroup membership oracles and word languages attached to a subgroup H:
// paths staying near H, words ending in H, their intersection with the
// filtered geodesic language, and the unique-representative version.

#ifndef GEOLANG_SUBGROUP_HPP_
#define GEOLANG_SUBGROUP_HPP_

#include <memory>
#include <string>
#include <vector>

#include "geolang/cone.hpp"
#include "geolang/fsa.hpp"
#include "geolang/group.hpp"
#include "geolang/shortlex.hpp"

namespace geolang {

enum class SubgroupKind { Trivial, Whole, Cyclic, Factor, Generated };

class SubgroupOracle {
 public:
  static SubgroupOracle trivial(ModelPtr model);
  static SubgroupOracle whole(ModelPtr model);
  //! <g>.  Powers are searched up to |j| <= distortion * |x| + 1.
  static SubgroupOracle cyclic(ModelPtr model, Word g, std::size_t distortion = 3);
  //! Subgroup generated by a set of generators (given by name).
  static SubgroupOracle factor(ModelPtr model, const std::vector<std::string>& generators,
                               std::size_t distortion = 3);
  //! Subgroup generated by arbitrary words; membership of x searches the
  //! subgroup's Cayley graph to word length distortion * |x|.
  static SubgroupOracle generated(ModelPtr model, std::vector<Word> generators,
                                  std::size_t distortion = 3);

  SubgroupKind kind() const noexcept { return kind_; }
  const GroupModel& model() const noexcept { return *model_; }
  const std::vector<Word>& generators() const noexcept { return generators_; }
  std::size_t distortion() const noexcept { return distortion_; }
  std::string describe() const;

  //! Membership of the element represented by `w` (any word).
  bool contains(const Word& w) const;

  //! Normal forms of the elements of H of length at most n, sorted.
  std::vector<Word> elements_within(std::size_t n) const;

  //! Whether the element `w` lies within distance k of H.
  bool within_distance(const Word& w, std::size_t k) const;
  //! Distance from `w` to H (searches h with |h| <= |w|).
  std::size_t distance(const Word& w) const;

 private:
  struct Cache;
  SubgroupOracle(SubgroupKind kind, ModelPtr model, std::vector<Word> generators,
                 std::size_t distortion);
  bool visible_factor() const;
  //! Grow the subgroup Cayley-graph BFS to the given word length.
  void grow(std::size_t length) const;

  SubgroupKind kind_;
  ModelPtr model_;
  std::vector<Word> generators_;
  std::size_t distortion_;
  std::vector<bool> allowed_letter_;  // Factor
  std::shared_ptr<Cache> cache_;
};

//! States are B(e, k) and every state accepts; g -a-> g' when
//! g a g'^-1 lies in H.  Nondeterministic in general.
Fsa neighborhood_automaton(const GroupModel& model, const SubgroupOracle& h, std::size_t k);

//! The same machine accepting only at e: words ending in H whose paths
//! stay k-close to H.
Fsa subgroup_word_automaton(const GroupModel& model, const SubgroupOracle& h, std::size_t k);

struct SubgroupLanguageOptions {
  std::size_t k = 0;
  ConeBuildOptions cone{};
  //! Raise k until the language matches the oracle at validation_depth.
  bool escalate = false;
  std::size_t k_cap = 4;
  //! 0 selects 2 * (k_cap + 2).
  std::size_t validation_depth = 0;
};

enum class SubgroupOutcome {
  Matched,       // agrees with the oracle at the validation depth
  Inconclusive,  // escalation cap reached without agreement
  Unchecked      // no oracle comparison was made
};

std::string to_string(SubgroupOutcome outcome);

struct SubgroupLanguageResult {
  Fsa language;  // deterministic, trimmed, minimised
  std::size_t k = 0;
  std::size_t m = 0;
  SubgroupOutcome outcome = SubgroupOutcome::Unchecked;
  std::size_t validation_depth = 0;
  std::size_t oracle_words = 0;
  std::size_t missing_count = 0;          // oracle words the machine rejects
  std::vector<Word> missing_witnesses;    // first few, shortlex
  std::vector<std::size_t> k_tried;
};

//! Filtered geodesic words into H: words of L(L_M) ∩ L_{H,k}.
SubgroupLanguageResult stable_language(const GroupModel& model, const SubgroupOracle& h,
                                       const SubgroupLanguageOptions& options);

//! Geodesic words into H of length at most n passing `filter` (brute force).
std::vector<Word> oracle_subgroup_words(const GroupModel& model, const SubgroupOracle& h,
                                        std::size_t n, const WindowFilter& filter = {});

//! J_M ∩ L_{H,k}; the k used is options.k (or the escalated one).
SubgroupLanguageResult unique_rep_subgroup_language(const GroupModel& model,
                                                    const SubgroupOracle& h,
                                                    const SubgroupLanguageOptions& options,
                                                    const std::vector<std::string>& order = {});

struct NeighborhoodReport {
  std::size_t n = 0;
  std::size_t bound = 0;           // state count of the machine
  std::size_t words_checked = 0;
  std::size_t max_distance = 0;    // over all path vertices checked
  std::vector<Word> far_vertices;  // words with a vertex beyond the bound
  std::vector<Word> outside_h;     // accepted words not ending in H
  bool passed() const noexcept { return far_vertices.empty() && outside_h.empty(); }
};

//! For accepted words up to length n, check that every path vertex is
//! within (state count) of H and that the word ends in H.
NeighborhoodReport regularity_neighborhood_bound(const Fsa& fsa, const GroupModel& model,
                                                 const SubgroupOracle& h, std::size_t n);

}  // namespace geolang

#endif  // GEOLANG_SUBGROUP_HPP_
