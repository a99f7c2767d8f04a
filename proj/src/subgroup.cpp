#include "geolang/subgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "geolang/ball.hpp"
#include "geolang/error.hpp"

namespace geolang {

struct SubgroupOracle::Cache {
  std::mutex mutex;
  std::size_t length = 0;  // BFS complete to this subgroup word length
  std::vector<Word> frontier{Word{}};
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::map<std::size_t, std::vector<Word>> within;
};

SubgroupOracle::SubgroupOracle(SubgroupKind kind, ModelPtr model, std::vector<Word> generators,
                               std::size_t distortion)
    : kind_(kind),
      model_(std::move(model)),
      generators_(std::move(generators)),
      distortion_(distortion),
      cache_(std::make_shared<Cache>()) {
  if (!model_) throw Error(ErrorKind::InvalidInput, "subgroup needs a group model");
  for (Word& g : generators_) g = model_->normal_form(g);
}

SubgroupOracle SubgroupOracle::trivial(ModelPtr model) {
  return SubgroupOracle(SubgroupKind::Trivial, std::move(model), {}, 1);
}

SubgroupOracle SubgroupOracle::whole(ModelPtr model) {
  std::vector<Word> gens;
  for (Letter a = 0; a < model->alphabet().size(); ++a) gens.push_back({a});
  return SubgroupOracle(SubgroupKind::Whole, std::move(model), std::move(gens), 1);
}

SubgroupOracle SubgroupOracle::cyclic(ModelPtr model, Word g, std::size_t distortion) {
  return SubgroupOracle(SubgroupKind::Cyclic, std::move(model), {std::move(g)}, distortion);
}

SubgroupOracle SubgroupOracle::factor(ModelPtr model, const std::vector<std::string>& generators,
                                      std::size_t distortion) {
  const Alphabet& alphabet = model->alphabet();
  std::vector<Word> gens;
  std::vector<bool> allowed(alphabet.size(), false);
  for (const std::string& name : generators) {
    Letter a = alphabet.letter(name);
    allowed[a] = allowed[alphabet.inverse(a)] = true;
    gens.push_back({a});
  }
  SubgroupOracle out(SubgroupKind::Factor, std::move(model), std::move(gens), distortion);
  out.allowed_letter_ = std::move(allowed);
  return out;
}

SubgroupOracle SubgroupOracle::generated(ModelPtr model, std::vector<Word> generators,
                                         std::size_t distortion) {
  return SubgroupOracle(SubgroupKind::Generated, std::move(model), std::move(generators),
                        distortion);
}

std::string SubgroupOracle::describe() const {
  const Alphabet& alphabet = model_->alphabet();
  auto list = [&]() {
    std::string out;
    for (const Word& g : generators_) {
      if (!out.empty()) out += ", ";
      out += alphabet.format(g);
    }
    return out;
  };
  switch (kind_) {
    case SubgroupKind::Trivial: return "trivial";
    case SubgroupKind::Whole: return "whole group";
    case SubgroupKind::Cyclic: return "cyclic <" + list() + "> (distortion " + std::to_string(distortion_) + ")";
    case SubgroupKind::Factor: return "factor <" + list() + ">";
    case SubgroupKind::Generated:
      return "generated <" + list() + "> (distortion " + std::to_string(distortion_) + ")";
  }
  return "";
}

bool SubgroupOracle::visible_factor() const {
  return kind_ == SubgroupKind::Factor && model_->special_subgroups_visible();
}

void SubgroupOracle::grow(std::size_t length) const {
  // Caller holds the mutex.
  Cache& c = *cache_;
  const Alphabet& alphabet = model_->alphabet();
  std::vector<Word> steps;
  for (const Word& g : generators_) {
    steps.push_back(g);
    steps.push_back(alphabet.inverse_word(g));
  }
  const std::size_t budget = default_ball_budget();
  while (c.length < length && !c.frontier.empty()) {
    std::vector<Word> next;
    for (const Word& h : c.frontier) {
      for (const Word& s : steps) {
        Word x = model_->normal_form(concat(h, s));
        if (c.seen.insert(x).second) {
          if (c.seen.size() > budget) {
            throw Error(ErrorKind::BudgetExceeded,
                        "subgroup search exceeds " + std::to_string(budget) + " elements");
          }
          next.push_back(std::move(x));
        }
      }
    }
    c.frontier = std::move(next);
    ++c.length;
  }
}

bool SubgroupOracle::contains(const Word& w) const {
  Word x = model_->normal_form(w);
  switch (kind_) {
    case SubgroupKind::Trivial: return x.empty();
    case SubgroupKind::Whole: return true;
    default: break;
  }
  if (visible_factor()) {
    return std::all_of(x.begin(), x.end(), [&](Letter a) { return allowed_letter_[a]; });
  }
  std::lock_guard lock(cache_->mutex);
  if (cache_->seen.count(x)) return true;
  grow(distortion_ * x.size() + 1);
  return cache_->seen.count(x) != 0;
}

std::vector<Word> SubgroupOracle::elements_within(std::size_t n) const {
  if (kind_ == SubgroupKind::Trivial) return {Word{}};
  if (kind_ == SubgroupKind::Whole) {
    std::vector<Word> out = enumerate_ball(*model_, n).elements();
    std::sort(out.begin(), out.end());
    return out;
  }
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->within.find(n);
  if (it != cache_->within.end()) return it->second;
  // In a visible factor subgroup, word length in the factor equals length in G.
  grow(visible_factor() ? n : distortion_ * n + 1);
  std::vector<Word> out;
  for (const Word& x : cache_->seen) {
    if (x.size() <= n) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  cache_->within.emplace(n, out);
  return out;
}

bool SubgroupOracle::within_distance(const Word& w, std::size_t k) const {
  if (kind_ == SubgroupKind::Whole) return true;
  Word x = model_->normal_form(w);
  const Alphabet& alphabet = model_->alphabet();
  for (const Word& h : elements_within(x.size() + k)) {
    if (geodesic_length(*model_, concat(alphabet.inverse_word(h), x)) <= k) return true;
  }
  return false;
}

std::size_t SubgroupOracle::distance(const Word& w) const {
  if (kind_ == SubgroupKind::Whole) return 0;
  Word x = model_->normal_form(w);
  const Alphabet& alphabet = model_->alphabet();
  std::size_t best = x.size();
  for (const Word& h : elements_within(2 * x.size())) {
    best = std::min(best, geodesic_length(*model_, concat(alphabet.inverse_word(h), x)));
  }
  return best;
}

namespace {

Fsa near_subgroup_machine(const GroupModel& model, const SubgroupOracle& h, std::size_t k,
                          bool accept_everywhere) {
  const Alphabet& alphabet = model.alphabet();
  Ball ball = enumerate_ball(model, k);
  std::vector<Word> nearby_h = h.elements_within(2 * k + 1);
  FsaBuilder builder(alphabet.names());
  for (std::size_t i = 0; i < ball.size(); ++i) builder.add_state(accept_everywhere || i == 0);
  builder.set_initial(0);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (Letter a = 0; a < alphabet.size(); ++a) {
      Word x = ball.elements()[i];
      x.push_back(a);
      for (const Word& y : nearby_h) {
        if (auto j = ball.index_of(model.normal_form(concat(y, x)))) {
          builder.add_transition(static_cast<State>(i), a, static_cast<State>(*j));
        }
      }
    }
  }
  return std::move(builder).build();
}

Fsa shrink(const Fsa& fsa) { return minimize(trim(fsa)).fsa; }

std::size_t resolved_depth(const SubgroupLanguageOptions& options) {
  return options.validation_depth ? options.validation_depth : 2 * (options.k_cap + 2);
}

void compare_with_oracle(SubgroupLanguageResult& result, const GroupModel& model,
                         const SubgroupOracle& h, const WindowFilter& filter, std::size_t depth) {
  std::vector<Word> oracle = oracle_subgroup_words(model, h, depth, filter);
  std::vector<Word> machine = enumerate_words(result.language, depth);
  std::set<Word> accepted(machine.begin(), machine.end());
  result.validation_depth = depth;
  result.oracle_words = oracle.size();
  result.missing_count = 0;
  result.missing_witnesses.clear();
  for (const Word& w : oracle) {
    if (accepted.count(w)) continue;
    ++result.missing_count;
    if (result.missing_witnesses.size() < 10) result.missing_witnesses.push_back(w);
  }
  result.outcome = result.missing_count == 0 && machine.size() == oracle.size()
                       ? SubgroupOutcome::Matched
                       : SubgroupOutcome::Inconclusive;
}

}  // namespace

Fsa neighborhood_automaton(const GroupModel& model, const SubgroupOracle& h, std::size_t k) {
  return near_subgroup_machine(model, h, k, true);
}

Fsa subgroup_word_automaton(const GroupModel& model, const SubgroupOracle& h, std::size_t k) {
  return near_subgroup_machine(model, h, k, false);
}

std::string to_string(SubgroupOutcome outcome) {
  switch (outcome) {
    case SubgroupOutcome::Matched: return "matched";
    case SubgroupOutcome::Inconclusive: return "inconclusive";
    case SubgroupOutcome::Unchecked: return "unchecked";
  }
  return "unchecked";
}

std::vector<Word> oracle_subgroup_words(const GroupModel& model, const SubgroupOracle& h,
                                        std::size_t n, const WindowFilter& filter) {
  if (h.kind() == SubgroupKind::Whole) return enumerate_geodesic_words(model, n, filter);
  return enumerate_geodesic_words_to(model, h.elements_within(n), n, filter);
}

SubgroupLanguageResult stable_language(const GroupModel& model, const SubgroupOracle& h,
                                       const SubgroupLanguageOptions& options) {
  ConeAutomaton cone = build_cone_automaton(model, options.cone);
  const std::size_t depth = resolved_depth(options);
  SubgroupLanguageResult result;
  result.m = cone.m();
  std::size_t k = options.k;
  for (;;) {
    result.k = k;
    result.k_tried.push_back(k);
    result.language =
        shrink(intersect(cone.fsa(), determinize(subgroup_word_automaton(model, h, k))));
    if (!options.escalate && options.validation_depth == 0) return result;
    compare_with_oracle(result, model, h, cone.filter(), depth);
    if (result.outcome == SubgroupOutcome::Matched || !options.escalate || k >= options.k_cap) {
      return result;
    }
    ++k;
  }
}

SubgroupLanguageResult unique_rep_subgroup_language(const GroupModel& model,
                                                    const SubgroupOracle& h,
                                                    const SubgroupLanguageOptions& options,
                                                    const std::vector<std::string>& order) {
  SubgroupLanguageResult result;
  if (options.escalate) {
    result = stable_language(model, h, options);
  } else {
    result.k = options.k;
    result.k_tried = {options.k};
  }
  ShortlexOptions shortlex;
  shortlex.cone = options.cone;
  shortlex.order = order;
  ShortlexResult j = unique_rep_language(model, shortlex);
  result.m = j.m;
  result.language =
      shrink(intersect(j.language, determinize(subgroup_word_automaton(model, h, result.k))));
  return result;
}

NeighborhoodReport regularity_neighborhood_bound(const Fsa& fsa, const GroupModel& model,
                                                 const SubgroupOracle& h, std::size_t n) {
  NeighborhoodReport report;
  report.n = n;
  report.bound = fsa.state_count();
  std::unordered_map<Word, std::size_t, WordHash> distance;
  auto distance_of = [&](const Word& prefix) {
    Word x = model.normal_form(prefix);
    auto it = distance.find(x);
    if (it != distance.end()) return it->second;
    std::size_t d = h.distance(x);
    distance.emplace(std::move(x), d);
    return d;
  };
  for (const Word& w : enumerate_words(fsa, n)) {
    ++report.words_checked;
    if (!h.contains(w) && report.outside_h.size() < 10) report.outside_h.push_back(w);
    bool far = false;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      std::size_t d = distance_of(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)));
      report.max_distance = std::max(report.max_distance, d);
      far = far || d > report.bound;
    }
    if (far && report.far_vertices.size() < 10) report.far_vertices.push_back(w);
  }
  return report;
}

}  // namespace geolang
