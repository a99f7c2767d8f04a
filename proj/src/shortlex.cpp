#include "geolang/shortlex.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "geolang/ball.hpp"
#include "geolang/error.hpp"

namespace geolang {

namespace {

std::size_t prefix_discrepancy(const GroupModel& model, const Word& u, const Word& v) {
  const Alphabet& alphabet = model.alphabet();
  std::size_t worst = 0;
  Word back;  // inverse of the current prefix of u
  Word forth;
  for (std::size_t i = 0; i < u.size(); ++i) {
    back.insert(back.begin(), alphabet.inverse(u[i]));
    forth.push_back(v[i]);
    worst = std::max(worst, geodesic_length(model, concat(back, forth)));
  }
  return worst;
}

void check_language(const Fsa& language, const GroupModel& model) {
  if (language.labels() != model.alphabet().names()) {
    throw Error(ErrorKind::AlphabetMismatch, "machine labels differ from the group alphabet");
  }
  if (!language.deterministic()) {
    throw Error(ErrorKind::NondeterministicInput, "equality recognizer needs a deterministic machine");
  }
  for (const Word& w : enumerate_words(language, 4)) {
    if (!is_geodesic(model, w)) {
      throw Error(ErrorKind::NotGeodesic,
                  "language contains non-geodesic '" + model.alphabet().format(w) + "'");
    }
  }
}

}  // namespace

DiscrepancyWitness max_equal_pair_discrepancy(const Fsa& language, const GroupModel& model,
                                              std::size_t n) {
  std::vector<Word> words = enumerate_words(language, n);
  std::unordered_map<Word, std::vector<std::size_t>, WordHash> by_element;
  for (std::size_t i = 0; i < words.size(); ++i) {
    by_element[model.normal_form(words[i])].push_back(i);
  }
  DiscrepancyWitness out;
  out.up_to.assign(n + 1, 0);
  for (const auto& [element, members] : by_element) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Word& u = words[members[i]];
        const Word& v = words[members[j]];
        if (u.size() != v.size()) continue;
        std::size_t d = prefix_discrepancy(model, u, v);
        out.up_to[u.size()] = std::max(out.up_to[u.size()], d);
        if (d > out.value ||
            (d == out.value && d > 0 && std::tie(u, v) < std::tie(out.u, out.v))) {
          out.value = d;
          out.u = u;
          out.v = v;
        }
      }
    }
  }
  for (std::size_t i = 1; i <= n; ++i) out.up_to[i] = std::max(out.up_to[i], out.up_to[i - 1]);
  return out;
}

PairFsa equality_recognizer(const Fsa& language, const GroupModel& model, std::size_t r,
                            std::size_t validation_depth) {
  check_language(language, model);
  const Alphabet& alphabet = model.alphabet();
  if (validation_depth > 0) {
    DiscrepancyWitness w = max_equal_pair_discrepancy(language, model, validation_depth);
    if (w.value > r) {
      throw Error(ErrorKind::BoundTooSmall,
                  "r=" + std::to_string(r) + " too small: ('" + alphabet.format(w.u) + "', '" +
                      alphabet.format(w.v) + "') needs discrepancy " + std::to_string(w.value));
    }
  }

  const std::size_t k = alphabet.size();
  Ball ball = enumerate_ball(model, r);
  // move[g][a * k + b] = index of a^-1 g b in the ball, or -1 outside it.
  std::vector<std::vector<long>> move(ball.size());
  auto step_discrepancy = [&](std::size_t g, Letter a, Letter b) -> long {
    auto& row = move[g];
    if (row.empty()) {
      row.assign(k * k, -1);
      for (Letter x = 0; x < k; ++x) {
        for (Letter y = 0; y < k; ++y) {
          Word w{alphabet.inverse(x)};
          w.insert(w.end(), ball.elements()[g].begin(), ball.elements()[g].end());
          w.push_back(y);
          auto idx = ball.index_of(model.normal_form(w));
          if (idx) row[x * k + y] = static_cast<long>(*idx);
        }
      }
    }
    return row[a * k + b];
  };

  const std::uint64_t states = language.state_count();
  const std::uint64_t width = ball.size();
  auto key = [&](State s, State t, std::size_t g) { return (s * states + t) * width + g; };
  struct Triple {
    State s, t;
    std::size_t g;
  };
  std::unordered_map<std::uint64_t, State> index;
  std::vector<Triple> triples;
  FsaBuilder builder(pair_labels(alphabet.names()));
  auto intern = [&](State s, State t, std::size_t g) {
    auto [it, fresh] = index.emplace(key(s, t, g), static_cast<State>(triples.size()));
    if (fresh) {
      triples.push_back({s, t, g});
      builder.add_state(language.is_accept(s) && language.is_accept(t) && g == 0);
    }
    return it->second;
  };
  intern(language.initial(), language.initial(), 0);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    Triple cur = triples[i];
    for (const Edge& ea : language.edges(cur.s)) {
      for (const Edge& eb : language.edges(cur.t)) {
        long g = step_discrepancy(cur.g, ea.label, eb.label);
        if (g < 0) continue;
        State to = intern(ea.target, eb.target, static_cast<std::size_t>(g));
        builder.add_transition(static_cast<State>(i), static_cast<Letter>(ea.label * k + eb.label),
                               to);
      }
    }
  }
  builder.set_initial(0);
  return PairFsa{trim(std::move(builder).build()), alphabet.names()};
}

std::vector<std::size_t> symbol_ranks(const Alphabet& alphabet,
                                      const std::vector<std::string>& order) {
  Alphabet copy = alphabet;
  if (!order.empty()) copy.set_order(order);
  auto ranks = copy.ranks();
  return {ranks.begin(), ranks.end()};
}

Fsa second_smaller_comparator(const std::vector<std::string>& base_labels,
                              std::span<const std::size_t> rank) {
  const std::size_t k = base_labels.size();
  FsaBuilder builder(pair_labels(base_labels));
  State undecided = builder.add_state(false);
  State first_smaller = builder.add_state(false);
  State second_smaller = builder.add_state(true);
  builder.set_initial(undecided);
  for (Letter a = 0; a < k; ++a) {
    for (Letter b = 0; b < k; ++b) {
      auto label = static_cast<Letter>(a * k + b);
      State next = a == b ? undecided : (rank[b] < rank[a] ? second_smaller : first_smaller);
      builder.add_transition(undecided, label, next);
      builder.add_transition(first_smaller, label, first_smaller);
      builder.add_transition(second_smaller, label, second_smaller);
    }
  }
  return std::move(builder).build();
}

Fsa lex_least(const PairFsa& q, std::span<const std::size_t> rank) {
  Fsa comparator = second_smaller_comparator(q.base_labels, rank);
  Fsa candidates = determinize(project_first(q));
  PairFsa beaten{intersect(q.fsa, comparator), q.base_labels};
  Fsa losers = complement(determinize(project_first(beaten)));
  return minimize(trim(intersect(candidates, losers))).fsa;
}

ShortlexResult unique_rep_language(const GroupModel& model, const ShortlexOptions& options) {
  ConeAutomaton cone = build_cone_automaton(model, options.cone);
  ShortlexResult out;
  out.m = cone.m();
  out.cone_states = cone.state_count();
  std::size_t r = options.r_hint;
  if (options.validation_depth > 0) {
    DiscrepancyWitness w = max_equal_pair_discrepancy(cone.fsa(), model, options.validation_depth);
    if (w.value > options.r_cap) {
      throw Error(ErrorKind::NonStabilization,
                  "discrepancy " + std::to_string(w.value) + " at depth " +
                      std::to_string(options.validation_depth) + " exceeds cap r=" +
                      std::to_string(options.r_cap) + " ('" + model.alphabet().format(w.u) +
                      "', '" + model.alphabet().format(w.v) + "')");
    }
    if (w.value > r) {
      out.r_escalations = w.value - r;
      r = w.value;
    }
    std::size_t d = options.validation_depth;
    out.stabilized = d < 2 || w.up_to[d] == w.up_to[d - 2];
  }
  check_language(cone.fsa(), model);
  PairFsa q = equality_recognizer(cone.fsa(), model, r, 0);
  out.pair_states = q.fsa.state_count();
  out.language = lex_least(q, symbol_ranks(model.alphabet(), options.order));
  out.r = r;
  return out;
}

std::size_t represented_elements(const Fsa& language, const GroupModel& model, std::size_t n) {
  std::unordered_set<Word, WordHash> seen;
  for (const Word& w : enumerate_words(language, n)) seen.insert(model.normal_form(w));
  return seen.size();
}

}  // namespace geolang
