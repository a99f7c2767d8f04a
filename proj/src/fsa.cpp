#include "geolang/fsa.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "geolang/error.hpp"
#include "json.hpp"

namespace geolang {

// --- Fsa / builder --------------------------------------------------------------

std::size_t Fsa::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

std::vector<State> Fsa::accept_states() const {
  std::vector<State> out;
  for (State s = 0; s < accept_.size(); ++s) {
    if (accept_[s]) out.push_back(s);
  }
  return out;
}

State Fsa::step(State s, Letter label) const {
  const auto& out = edges_.at(s);
  auto it = std::lower_bound(out.begin(), out.end(), Edge{label, 0});
  if (it == out.end() || it->label != label) return kNoState;
  return it->target;
}

State Fsa::run(std::span<const Letter> w) const {
  State s = initial_;
  for (Letter a : w) {
    s = step(s, a);
    if (s == kNoState) return kNoState;
  }
  return s;
}

FsaBuilder::FsaBuilder(std::vector<std::string> labels) { fsa_.labels_ = std::move(labels); }

State FsaBuilder::add_state(bool accept) {
  fsa_.edges_.emplace_back();
  fsa_.accept_.push_back(accept);
  return static_cast<State>(fsa_.edges_.size() - 1);
}

void FsaBuilder::set_accept(State s, bool accept) { fsa_.accept_.at(s) = accept; }

void FsaBuilder::set_initial(State s) {
  if (s >= fsa_.edges_.size()) throw Error(ErrorKind::InvalidInput, "initial state out of range");
  fsa_.initial_ = s;
}

void FsaBuilder::add_transition(State from, Letter label, State to) {
  if (from >= fsa_.edges_.size() || to >= fsa_.edges_.size()) {
    throw Error(ErrorKind::InvalidInput, "transition endpoint out of range");
  }
  if (label >= fsa_.labels_.size()) {
    throw Error(ErrorKind::UnknownSymbol, "transition label out of range");
  }
  fsa_.edges_[from].push_back({label, to});
}

Fsa FsaBuilder::build() && {
  if (fsa_.edges_.empty()) add_state(false);
  fsa_.deterministic_ = true;
  for (auto& out : fsa_.edges_) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (out[i].label == out[i - 1].label) fsa_.deterministic_ = false;
    }
  }
  return std::move(fsa_);
}

std::vector<std::string> pair_labels(const std::vector<std::string>& base) {
  std::vector<std::string> out;
  for (const auto& a : base) {
    for (const auto& b : base) out.push_back("(" + a + "," + b + ")");
  }
  return out;
}

// --- helpers ---------------------------------------------------------------------

namespace {

void check_same_alphabet(const Fsa& a, const Fsa& b) {
  if (a.labels() != b.labels()) {
    throw Error(ErrorKind::AlphabetMismatch, "machines are over different alphabets");
  }
}

std::vector<bool> forward_reachable(const Fsa& fsa) {
  std::vector<bool> seen(fsa.state_count(), false);
  std::deque<State> queue{fsa.initial()};
  seen[fsa.initial()] = true;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (const Edge& e : fsa.edges(s)) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        queue.push_back(e.target);
      }
    }
  }
  return seen;
}

std::vector<bool> co_reachable(const Fsa& fsa) {
  std::vector<std::vector<State>> reverse(fsa.state_count());
  for (State s = 0; s < fsa.state_count(); ++s) {
    for (const Edge& e : fsa.edges(s)) reverse[e.target].push_back(s);
  }
  std::vector<bool> seen(fsa.state_count(), false);
  std::deque<State> queue;
  for (State s : fsa.accept_states()) {
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (State p : reverse[s]) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

// Renumber the states kept by `keep` in BFS order from the initial state.
// Returns the new machine and old -> new map.
std::pair<Fsa, std::vector<State>> restrict_bfs(const Fsa& fsa, const std::vector<bool>& keep) {
  std::vector<State> map(fsa.state_count(), kNoState);
  FsaBuilder b(fsa.labels());
  if (!keep[fsa.initial()]) {
    b.add_state(false);
    return {std::move(b).build(), map};
  }
  std::vector<State> order{fsa.initial()};
  map[fsa.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Edge& e : fsa.edges(order[i])) {
      if (keep[e.target] && map[e.target] == kNoState) {
        map[e.target] = static_cast<State>(order.size());
        order.push_back(e.target);
      }
    }
  }
  for (State old : order) b.add_state(fsa.is_accept(old));
  for (State old : order) {
    for (const Edge& e : fsa.edges(old)) {
      if (map[e.target] != kNoState) b.add_transition(map[old], e.label, map[e.target]);
    }
  }
  b.set_initial(0);
  return {std::move(b).build(), map};
}

std::pair<Fsa, std::vector<State>> trim_with_map(const Fsa& fsa) {
  auto fwd = forward_reachable(fsa);
  auto bwd = co_reachable(fsa);
  std::vector<bool> keep(fsa.state_count());
  for (State s = 0; s < fsa.state_count(); ++s) keep[s] = fwd[s] && bwd[s];
  return restrict_bfs(fsa, keep);
}

}  // namespace

// --- language operations ------------------------------------------------------------

bool accepts(const Fsa& fsa, std::span<const Letter> w) {
  std::vector<State> current{fsa.initial()};
  for (Letter a : w) {
    if (a >= fsa.label_count()) {
      throw Error(ErrorKind::UnknownSymbol, "label " + std::to_string(a) + " not in the alphabet");
    }
    std::vector<State> next;
    for (State s : current) {
      for (const Edge& e : fsa.edges(s)) {
        if (e.label == a) next.push_back(e.target);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) return false;
    current = std::move(next);
  }
  return std::any_of(current.begin(), current.end(), [&](State s) { return fsa.is_accept(s); });
}

Fsa trim(const Fsa& fsa) { return trim_with_map(fsa).first; }

bool is_trimmed(const Fsa& fsa) {
  auto fwd = forward_reachable(fsa);
  auto bwd = co_reachable(fsa);
  for (State s = 0; s < fsa.state_count(); ++s) {
    if (!fwd[s] || !bwd[s]) {
      // The lone initial state of an empty-language machine counts as trimmed.
      return fsa.state_count() == 1 && fsa.transition_count() == 0;
    }
  }
  return true;
}

Fsa intersect(const Fsa& a, const Fsa& b) {
  check_same_alphabet(a, b);
  FsaBuilder out(a.labels());
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  auto get = [&](State x, State y) {
    auto [it, inserted] = index.try_emplace({x, y}, 0);
    if (inserted) {
      it->second = out.add_state(a.is_accept(x) && b.is_accept(y));
      queue.emplace_back(x, y);
    }
    return it->second;
  };
  out.set_initial(get(a.initial(), b.initial()));
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    State from = index.at({x, y});
    auto ex = a.edges(x);
    auto ey = b.edges(y);
    for (const Edge& e : ex) {
      auto lo = std::lower_bound(ey.begin(), ey.end(), Edge{e.label, 0});
      for (auto it = lo; it != ey.end() && it->label == e.label; ++it) {
        State to = get(e.target, it->target);
        out.add_transition(from, e.label, to);
      }
    }
  }
  return std::move(out).build();
}

Fsa unite(const Fsa& a, const Fsa& b) {
  check_same_alphabet(a, b);
  FsaBuilder out(a.labels());
  State start = out.add_state(a.is_accept(a.initial()) || b.is_accept(b.initial()));
  auto copy = [&](const Fsa& m) {
    auto offset = static_cast<State>(out.state_count());
    for (State s = 0; s < m.state_count(); ++s) out.add_state(m.is_accept(s));
    for (State s = 0; s < m.state_count(); ++s) {
      for (const Edge& e : m.edges(s)) out.add_transition(offset + s, e.label, offset + e.target);
    }
    for (const Edge& e : m.edges(m.initial())) out.add_transition(start, e.label, offset + e.target);
  };
  copy(a);
  copy(b);
  out.set_initial(start);
  return trim(std::move(out).build());
}

Fsa determinize(const Fsa& fsa) {
  FsaBuilder out(fsa.labels());
  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> subsets;
  auto get = [&](std::vector<State> subset) {
    auto it = index.find(subset);
    if (it != index.end()) return it->second;
    bool accept = std::any_of(subset.begin(), subset.end(),
                              [&](State s) { return fsa.is_accept(s); });
    State id = out.add_state(accept);
    index.emplace(subset, id);
    subsets.push_back(std::move(subset));
    return id;
  };
  out.set_initial(get({fsa.initial()}));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::map<Letter, std::vector<State>> next;
    for (State s : subsets[i]) {
      for (const Edge& e : fsa.edges(s)) next[e.label].push_back(e.target);
    }
    for (auto& [label, targets] : next) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      State to = get(std::move(targets));
      out.add_transition(static_cast<State>(i), label, to);
    }
  }
  return std::move(out).build();
}

Fsa complete(const Fsa& fsa) {
  Fsa d = fsa.deterministic() ? fsa : determinize(fsa);
  FsaBuilder out(d.labels());
  for (State s = 0; s < d.state_count(); ++s) out.add_state(d.is_accept(s));
  State sink = kNoState;
  auto get_sink = [&]() {
    if (sink == kNoState) {
      sink = out.add_state(false);
      for (Letter a = 0; a < d.label_count(); ++a) out.add_transition(sink, a, sink);
    }
    return sink;
  };
  for (State s = 0; s < d.state_count(); ++s) {
    for (Letter a = 0; a < d.label_count(); ++a) {
      State t = d.step(s, a);
      out.add_transition(s, a, t == kNoState ? get_sink() : t);
    }
  }
  out.set_initial(d.initial());
  return std::move(out).build();
}

Fsa complement(const Fsa& fsa) {
  Fsa c = complete(fsa);
  FsaBuilder out(c.labels());
  for (State s = 0; s < c.state_count(); ++s) out.add_state(!c.is_accept(s));
  for (State s = 0; s < c.state_count(); ++s) {
    for (const Edge& e : c.edges(s)) out.add_transition(s, e.label, e.target);
  }
  out.set_initial(c.initial());
  return std::move(out).build();
}

Fsa project_first(const PairFsa& q) {
  if (q.fsa.label_count() != q.base_size() * q.base_size()) {
    throw Error(ErrorKind::AlphabetMismatch, "pair machine label count is not base size squared");
  }
  FsaBuilder out(q.base_labels);
  for (State s = 0; s < q.fsa.state_count(); ++s) out.add_state(q.fsa.is_accept(s));
  for (State s = 0; s < q.fsa.state_count(); ++s) {
    for (const Edge& e : q.fsa.edges(s)) out.add_transition(s, q.first(e.label), e.target);
  }
  out.set_initial(q.fsa.initial());
  return std::move(out).build();
}

Minimized minimize(const Fsa& input) {
  Fsa d = input.deterministic() ? input : determinize(input);
  auto [t, trim_map] = trim_with_map(d);
  std::size_t n = t.state_count();
  // Moore refinement; a missing transition goes to an implicit dead class.
  std::vector<std::size_t> cls(n);
  for (State s = 0; s < n; ++s) cls[s] = t.is_accept(s) ? 1 : 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sig_index;
    std::vector<std::size_t> next(n);
    for (State s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{cls[s]};
      for (Letter a = 0; a < t.label_count(); ++a) {
        State u = t.step(s, a);
        sig.push_back(u == kNoState ? static_cast<std::size_t>(-1) : cls[u]);
      }
      auto [it, inserted] = sig_index.try_emplace(std::move(sig), sig_index.size());
      next[s] = it->second;
    }
    std::size_t before = std::set<std::size_t>(cls.begin(), cls.end()).size();
    cls = std::move(next);
    if (sig_index.size() == before) break;
  }
  std::size_t classes = std::set<std::size_t>(cls.begin(), cls.end()).size();
  FsaBuilder q(t.labels());
  for (std::size_t c = 0; c < classes; ++c) q.add_state(false);
  for (State s = 0; s < n; ++s) {
    if (t.is_accept(s)) q.set_accept(static_cast<State>(cls[s]));
    for (const Edge& e : t.edges(s)) {
      q.add_transition(static_cast<State>(cls[s]), e.label, static_cast<State>(cls[e.target]));
    }
  }
  q.set_initial(static_cast<State>(cls[t.initial()]));
  Fsa quotient = std::move(q).build();
  auto [canonical, order_map] = restrict_bfs(quotient, std::vector<bool>(classes, true));
  std::vector<State> class_of(input.state_count(), kNoState);
  if (input.deterministic()) {
    for (State s = 0; s < input.state_count(); ++s) {
      if (trim_map[s] != kNoState) class_of[s] = order_map[cls[trim_map[s]]];
    }
  }
  return {std::move(canonical), std::move(class_of)};
}

Fsa universal_fsa(const std::vector<std::string>& labels) {
  FsaBuilder b(labels);
  State s = b.add_state(true);
  for (Letter a = 0; a < labels.size(); ++a) b.add_transition(s, a, s);
  return std::move(b).build();
}

Fsa empty_fsa(const std::vector<std::string>& labels) {
  FsaBuilder b(labels);
  b.add_state(false);
  return std::move(b).build();
}

// --- counting -----------------------------------------------------------------------

GrowthCounts count_words(const Fsa& fsa, std::size_t n) {
  if (!fsa.deterministic()) {
    throw Error(ErrorKind::NondeterministicInput,
                "word counts need a deterministic machine; determinize first");
  }
  GrowthCounts out;
  std::vector<Count> paths(fsa.state_count(), 0);
  paths[fsa.initial()] = 1;
  Count total = 0;
  for (std::size_t len = 0; len <= n; ++len) {
    Count sphere = 0;
    for (State s = 0; s < fsa.state_count(); ++s) {
      if (fsa.is_accept(s)) sphere += paths[s];
    }
    total += sphere;
    out.sphere.push_back(sphere);
    out.cumulative.push_back(total);
    if (len == n) break;
    std::vector<Count> next(fsa.state_count(), 0);
    for (State s = 0; s < fsa.state_count(); ++s) {
      if (paths[s] == 0) continue;
      for (const Edge& e : fsa.edges(s)) next[e.target] += paths[s];
    }
    paths = std::move(next);
  }
  return out;
}

std::vector<Word> enumerate_words(const Fsa& fsa, std::size_t n, std::size_t budget) {
  auto live = co_reachable(fsa);
  std::vector<std::vector<Word>> by_length(n + 1);
  std::size_t count = 0;
  Word current;
  std::function<void(const std::vector<State>&)> visit = [&](const std::vector<State>& states) {
    if (std::any_of(states.begin(), states.end(), [&](State s) { return fsa.is_accept(s); })) {
      if (++count > budget) {
        throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " words");
      }
      by_length[current.size()].push_back(current);
    }
    if (current.size() == n) return;
    std::map<Letter, std::vector<State>> next;
    for (State s : states) {
      for (const Edge& e : fsa.edges(s)) {
        if (live[e.target]) next[e.label].push_back(e.target);
      }
    }
    for (auto& [label, targets] : next) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      current.push_back(label);
      visit(targets);
      current.pop_back();
    }
  };
  if (live[fsa.initial()]) visit({fsa.initial()});
  std::vector<Word> out;
  for (auto& layer : by_length) {
    for (auto& w : layer) out.push_back(std::move(w));
  }
  return out;
}

// --- interchange ------------------------------------------------------------------------

std::string to_json(const Fsa& fsa, int indent) {
  nlohmann::ordered_json j;
  j["alphabet"] = fsa.labels();
  j["states"] = fsa.state_count();
  j["initial"] = fsa.initial();
  j["accepts"] = fsa.accept_states();
  auto transitions = nlohmann::ordered_json::array();
  for (State s = 0; s < fsa.state_count(); ++s) {
    for (const Edge& e : fsa.edges(s)) {
      transitions.push_back({s, fsa.labels()[e.label], e.target});
    }
  }
  j["transitions"] = std::move(transitions);
  return j.dump(indent);
}

Fsa fsa_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    auto labels = j.at("alphabet").get<std::vector<std::string>>();
    FsaBuilder b(labels);
    auto states = j.at("states").get<std::size_t>();
    for (std::size_t s = 0; s < states; ++s) b.add_state(false);
    for (auto s : j.at("accepts").get<std::vector<State>>()) {
      if (s >= states) throw Error(ErrorKind::InvalidInput, "accept state out of range");
      b.set_accept(s);
    }
    b.set_initial(j.at("initial").get<State>());
    for (const auto& t : j.at("transitions")) {
      auto label_name = t.at(1).get<std::string>();
      auto it = std::find(labels.begin(), labels.end(), label_name);
      if (it == labels.end()) {
        throw Error(ErrorKind::UnknownSymbol, "transition label '" + label_name + "'");
      }
      b.add_transition(t.at(0).get<State>(), static_cast<Letter>(it - labels.begin()),
                       t.at(2).get<State>());
    }
    return std::move(b).build();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad automaton JSON: ") + e.what());
  }
}

std::string to_dot(const Fsa& fsa, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (State s = 0; s < fsa.state_count(); ++s) {
    os << "  " << s << " [shape=" << (fsa.is_accept(s) ? "doublecircle" : "circle") << "];\n";
  }
  os << "  __start -> " << fsa.initial() << ";\n";
  for (State s = 0; s < fsa.state_count(); ++s) {
    // Merge parallel edges into one arrow with a combined label.
    std::map<State, std::string> merged;
    for (const Edge& e : fsa.edges(s)) {
      auto& label = merged[e.target];
      if (!label.empty()) label += ",";
      label += fsa.labels()[e.label];
    }
    for (const auto& [t, label] : merged) {
      os << "  " << s << " -> " << t << " [label=\"" << label << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace geolang
