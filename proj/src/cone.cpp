#include "geolang/cone.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "geolang/error.hpp"

namespace geolang {

namespace {

void require_geodesic(const GroupModel& model, const Word& u) {
  if (!is_geodesic(model, u)) {
    throw Error(ErrorKind::NotGeodesic, "'" + model.alphabet().format(u) + "' is not geodesic");
  }
}

std::vector<Word> tail_in_ball(const GroupModel& model, const Word& u, const Ball& ball) {
  std::vector<Word> out;
  for (const Word& g : ball.elements()) {
    if (g.empty()) continue;
    if (geodesic_length(model, concat(u, g)) < u.size()) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> cone_words(const GroupModel& model, const Word& u, std::size_t n,
                             const WindowFilter& filter) {
  std::vector<Word> out;
  Word current = u;
  std::function<void()> visit = [&]() {
    out.emplace_back(current.begin() + static_cast<std::ptrdiff_t>(u.size()), current.end());
    if (current.size() - u.size() == n) return;
    for (Letter a = 0; a < model.alphabet().size(); ++a) {
      current.push_back(a);
      if (filter.passes_last(current) && is_geodesic(model, current)) visit();
      current.pop_back();
    }
  };
  visit();
  std::sort(out.begin(), out.end());
  return out;
}

// Signatures with the ball B(e, m) computed once.
class SignatureTable {
 public:
  SignatureTable(const GroupModel& model, std::size_t m, const WindowFilter& filter)
      : model_(model), m_(m), filter_(filter), ball_(enumerate_ball(model, m)) {}

  // Filter-passing geodesic extension of a filter-passing geodesic word.
  bool extends(const Word& u, Letter a) const {
    Word w = u;
    w.push_back(a);
    return filter_.passes_last(w) && is_geodesic(model_, w);
  }

  const Signature& of(const Word& u) {
    auto it = cache_.find(u);
    if (it != cache_.end()) return it->second;
    Signature sig{tail_in_ball(model_, u, ball_), cone_words(model_, u, m_, filter_)};
    return cache_.emplace(u, std::move(sig)).first->second;
  }

 private:
  const GroupModel& model_;
  std::size_t m_;
  const WindowFilter& filter_;
  Ball ball_;
  std::map<Word, Signature> cache_;
};

struct Build {
  Fsa fsa;
  std::vector<Word> representative;
  std::vector<Signature> signature;
  std::size_t signature_classes = 0;
  std::size_t checks = 0;
};

Build build_once(const GroupModel& model, const ConeBuildOptions& options) {
  const Alphabet& alphabet = model.alphabet();
  SignatureTable table(model, options.m, options.filter);
  std::map<Signature, State> index;
  std::vector<Word> reps;
  std::vector<std::vector<Edge>> edges;
  Build out;

  auto fail = [&](const Word& u, const Word& v, Letter b, const std::string& what) {
    throw Error(ErrorKind::InconsistentLocality,
                "m=" + std::to_string(options.m) + ": '" + alphabet.format(u) + "' and '" +
                    alphabet.format(v) + "' share a signature but their extensions by '" +
                    alphabet.name(b) + "' differ in " + what);
  };

  auto intern = [&](const Word& w) -> State {
    const Signature& sig = table.of(w);
    auto it = index.find(sig);
    if (it == index.end()) {
      if (reps.size() >= options.state_budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    "more than " + std::to_string(options.state_budget) + " signatures");
      }
      if (w.size() > options.depth_budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    "new signature at depth " + std::to_string(w.size()) + " beyond budget " +
                        std::to_string(options.depth_budget));
      }
      State s = static_cast<State>(reps.size());
      index.emplace(sig, s);
      reps.push_back(w);
      edges.emplace_back();
      return s;
    }
    const Word& rep = reps[it->second];
    if (rep != w) {
      ++out.checks;
      for (Letter b : alphabet.ordered_letters()) {
        bool in_w = table.extends(w, b);
        bool in_rep = table.extends(rep, b);
        if (in_w != in_rep) fail(rep, w, b, "membership");
        if (in_w && table.of(concat(w, {b})) != table.of(concat(rep, {b}))) {
          fail(rep, w, b, "signature");
        }
      }
    }
    return it->second;
  };

  intern({});
  for (std::size_t s = 0; s < reps.size(); ++s) {
    for (Letter a : alphabet.ordered_letters()) {
      Word u = reps[s];
      if (!table.extends(u, a)) continue;
      u.push_back(a);
      State t = intern(u);
      edges[s].push_back({a, t});
    }
  }

  FsaBuilder builder(alphabet.names());
  for (std::size_t s = 0; s < reps.size(); ++s) builder.add_state(true);
  builder.set_initial(0);
  for (std::size_t s = 0; s < reps.size(); ++s) {
    for (const Edge& e : edges[s]) builder.add_transition(static_cast<State>(s), e.label, e.target);
  }
  Minimized min = minimize(std::move(builder).build());

  out.signature_classes = reps.size();
  out.representative.assign(min.fsa.state_count(), {});
  out.signature.assign(min.fsa.state_count(), {});
  std::vector<bool> seen(min.fsa.state_count(), false);
  for (std::size_t s = 0; s < reps.size(); ++s) {
    State c = min.class_of[s];
    if (c == kNoState || seen[c]) continue;
    seen[c] = true;
    out.representative[c] = reps[s];
    out.signature[c] = table.of(reps[s]);
  }
  out.fsa = std::move(min.fsa);
  return out;
}

}  // namespace

std::vector<Word> tail(const GroupModel& model, const Word& u, std::size_t n) {
  require_geodesic(model, u);
  return tail_in_ball(model, u, enumerate_ball(model, n));
}

std::vector<Word> restricted_cone(const GroupModel& model, const Word& u, std::size_t n,
                                  const WindowFilter& filter) {
  require_geodesic(model, u);
  if (!filter.passes(u)) {
    throw Error(ErrorKind::FilterRejected,
                "'" + model.alphabet().format(u) + "' fails filter " + filter.name());
  }
  return cone_words(model, u, n, filter);
}

Signature cone_signature(const GroupModel& model, const Word& u, std::size_t m,
                         const WindowFilter& filter) {
  return {tail(model, u, m), restricted_cone(model, u, m, filter)};
}

ConeAutomaton build_cone_automaton(const GroupModel& model, const ConeBuildOptions& options) {
  ConeBuildOptions current = options;
  std::size_t escalations = 0;
  for (;;) {
    try {
      Build b = build_once(model, current);
      if (current.validation_depth > 0) {
        ValidationReport report =
            validate_automaton(b.fsa, model, current.filter, current.validation_depth);
        if (!report.passed()) {
          throw Error(ErrorKind::InconsistentLocality,
                      "m=" + std::to_string(current.m) + ": machine fails validation at depth " +
                          std::to_string(current.validation_depth) + "; " +
                          format_report(report, model.alphabet()));
        }
      }
      ConeAutomaton out;
      out.fsa_ = std::move(b.fsa);
      out.m_ = current.m;
      out.filter_ = current.filter;
      out.representative_ = std::move(b.representative);
      out.signature_ = std::move(b.signature);
      out.signature_classes_ = b.signature_classes;
      out.escalations_ = escalations;
      out.consistency_checks_ = b.checks;
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InconsistentLocality || !current.auto_escalate ||
          escalations >= current.max_escalations) {
        throw;
      }
      ++current.m;
      ++escalations;
    }
  }
}

ValidationReport validate_automaton(const Fsa& fsa, const GroupModel& model,
                                    const WindowFilter& filter, std::size_t n) {
  if (fsa.labels() != model.alphabet().names()) {
    throw Error(ErrorKind::AlphabetMismatch, "machine labels differ from the group alphabet");
  }
  std::vector<Word> machine = enumerate_words(fsa, n);
  std::vector<Word> oracle = enumerate_geodesic_words(model, n, filter);
  std::set<Word> in_machine(machine.begin(), machine.end());
  std::set<Word> in_oracle(oracle.begin(), oracle.end());

  ValidationReport report;
  report.depth = n;
  report.machine_words = in_machine.size();
  report.oracle_words = in_oracle.size();
  std::vector<Mismatch> all;
  for (const Word& w : in_machine) {
    if (!in_oracle.count(w)) all.push_back({w, true, false});
  }
  for (const Word& w : in_oracle) {
    if (!in_machine.count(w)) all.push_back({w, false, true});
  }
  auto rank = model.alphabet().ranks();
  std::sort(all.begin(), all.end(), [&](const Mismatch& x, const Mismatch& y) {
    return shortlex_less(x.word, y.word, rank);
  });
  report.mismatch_count = all.size();
  if (all.size() > 10) all.resize(10);
  report.witnesses = std::move(all);
  return report;
}

std::string format_report(const ValidationReport& report, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "depth " << report.depth << ": machine " << report.machine_words << " words, oracle "
     << report.oracle_words << " words, " << report.mismatch_count << " mismatches";
  for (const Mismatch& m : report.witnesses) {
    os << "\n  '" << alphabet.format(m.word) << "' "
       << (m.in_machine ? "accepted by machine only" : "missing from machine");
  }
  return os.str();
}

std::size_t fellow_traveling_distance(const GroupModel& model, const Word& u, const Word& v) {
  require_geodesic(model, u);
  require_geodesic(model, v);
  const Alphabet& alphabet = model.alphabet();
  if (geodesic_length(model, concat(alphabet.inverse_word(u), v)) > 1) {
    throw Error(ErrorKind::EndpointMismatch,
                "'" + alphabet.format(u) + "' and '" + alphabet.format(v) +
                    "' end more than distance 1 apart");
  }
  std::size_t worst = 0;
  std::size_t steps = std::max(u.size(), v.size());
  for (std::size_t i = 0; i <= steps; ++i) {
    Word pu(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(std::min(i, u.size())));
    Word pv(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(i, v.size())));
    worst = std::max(worst, geodesic_length(model, concat(alphabet.inverse_word(pu), pv)));
  }
  return worst;
}

bool brute_force_fellow_traveling(const GroupModel& model, const Word& u, const Word& v,
                                  double bound) {
  return static_cast<double>(fellow_traveling_distance(model, u, v)) <= bound;
}

}  // namespace geolang
