#include "geolang/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "geolang/ball.hpp"
#include "geolang/error.hpp"

namespace geolang {

namespace {

bool empty_language(const Fsa& fsa) {
  for (State s = 0; s < fsa.state_count(); ++s) {
    if (fsa.is_accept(s)) return false;
  }
  return true;
}

void check_countable(const Fsa& fsa) {
  if (!fsa.deterministic()) {
    throw Error(ErrorKind::NondeterministicInput, "count matrix needs a deterministic machine");
  }
  if (!is_trimmed(fsa)) throw Error(ErrorKind::NotTrimmed, "count matrix needs a trimmed machine");
}

// Strongly connected components (Kosaraju, iterative).
std::vector<std::vector<std::size_t>> components(const CountMatrix& m) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    seen[root] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < n) {
        std::size_t w = next++;
        if (m[v][w] && !seen[w]) {
          seen[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<long> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    out.emplace_back();
    std::vector<std::size_t> stack{*it};
    comp[*it] = static_cast<long>(out.size() - 1);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t u = 0; u < n; ++u) {
        if (m[u][v] && comp[u] < 0) {
          comp[u] = comp[v];
          stack.push_back(u);
        }
      }
    }
  }
  return out;
}

// Spectral radius of an irreducible block, via the primitive matrix B + I.
PfEstimate irreducible_radius(const CountMatrix& m, const std::vector<std::size_t>& block,
                              double tol, std::size_t max_iterations) {
  const std::size_t k = block.size();
  if (k == 1) {
    double loop = static_cast<double>(m[block[0]][block[0]]);
    return {loop, loop, loop, 0};
  }
  std::vector<double> x(k, 1.0), y(k);
  double lo = 0, hi = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    for (std::size_t i = 0; i < k; ++i) {
      double acc = x[i];
      for (std::size_t j = 0; j < k; ++j) acc += static_cast<double>(m[block[i]][block[j]]) * x[j];
      y[i] = acc;
    }
    double step_lo = std::numeric_limits<double>::infinity(), step_hi = 0, top = 0;
    for (std::size_t i = 0; i < k; ++i) {
      double ratio = y[i] / x[i];
      step_lo = std::min(step_lo, ratio);
      step_hi = std::max(step_hi, ratio);
      top = std::max(top, y[i]);
    }
    lo = std::max(lo, step_lo - 1);
    hi = std::min(hi, step_hi - 1);
    if (hi - lo <= tol) return {(lo + hi) / 2, lo, hi, it};
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / top;
  }
  std::ostringstream os;
  os.precision(12);
  os << "power iteration did not converge; bracket [" << lo << ", " << hi << "]";
  throw Error(ErrorKind::NoConvergence, os.str());
}

}  // namespace

CountMatrix count_matrix(const Fsa& fsa) {
  if (empty_language(fsa)) return {};
  check_countable(fsa);
  CountMatrix m(fsa.state_count(), std::vector<std::uint64_t>(fsa.state_count(), 0));
  for (State s = 0; s < fsa.state_count(); ++s) {
    for (const Edge& e : fsa.edges(s)) ++m[s][e.target];
  }
  return m;
}

CountMatrix adjacency_matrix01(const Fsa& fsa) {
  CountMatrix m = count_matrix(fsa);
  for (auto& row : m) {
    for (auto& x : row) x = x ? 1 : 0;
  }
  return m;
}

PfEstimate pf_eigenvalue(const CountMatrix& m, double tol, std::size_t max_iterations) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
  PfEstimate best;
  for (const auto& block : components(m)) {
    PfEstimate e = irreducible_radius(m, block, tol, max_iterations);
    best.lower = std::max(best.lower, e.lower);
    best.upper = std::max(best.upper, e.upper);
    best.iterations = std::max(best.iterations, e.iterations);
  }
  best.value = (best.lower + best.upper) / 2;
  return best;
}

PfEstimate growth_rate(const Fsa& fsa, double tol) {
  Fsa machine = fsa.deterministic() ? trim(fsa) : minimize(determinize(fsa)).fsa;
  return pf_eigenvalue(count_matrix(machine), tol);
}

Fsa extend_with_free_factor(const Fsa& j, const Word& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "extension word must be nonempty");
  FsaBuilder builder(j.labels());
  for (State s = 0; s < j.state_count(); ++s) builder.add_state(j.is_accept(s));
  builder.set_initial(j.initial());
  for (State s = 0; s < j.state_count(); ++s) {
    for (const Edge& e : j.edges(s)) builder.add_transition(s, e.label, e.target);
  }
  for (Letter a : w) {
    if (a >= j.label_count()) {
      throw Error(ErrorKind::UnknownSymbol, "extension letter outside the machine alphabet");
    }
  }
  for (State s = 0; s < j.state_count(); ++s) {
    if (!j.is_accept(s)) continue;
    State at = s;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      State next = builder.add_state(false);
      builder.add_transition(at, w[i], next);
      at = next;
    }
    builder.add_transition(at, w.back(), j.initial());
  }
  builder.set_accept(j.initial());
  return trim(std::move(builder).build());
}

GapVerdict strict_gap_check(const Fsa& sub, const Fsa& sup, double margin) {
  if (!(margin > 0)) throw Error(ErrorKind::InvalidInput, "margin must be positive");
  GapVerdict v;
  v.margin = margin;
  v.sub_rate = growth_rate(sub).value;
  v.sup_rate = growth_rate(sup).value;
  v.pass = v.sub_rate + margin <= v.sup_rate;
  return v;
}

std::vector<std::size_t> subgroup_growth_counts(const GroupModel& /*model*/, const SubgroupOracle& h,
                                                std::size_t max_n) {
  std::vector<std::size_t> out(max_n + 1, 0);
  for (const Word& x : h.elements_within(max_n)) ++out[x.size()];
  for (std::size_t i = 1; i <= max_n; ++i) out[i] += out[i - 1];
  return out;
}

GrowthReport growth_report(const Fsa& fsa, std::size_t terms, bool with_pf, bool with_series) {
  Fsa machine = fsa.deterministic() ? trim(fsa) : minimize(determinize(fsa)).fsa;
  GrowthReport report;
  report.states = empty_language(machine) ? 0 : machine.state_count();
  const std::size_t s = report.states;
  std::size_t fit_terms = with_series ? std::max(terms, 2 * (s + 1) + 12) : terms;
  GrowthCounts all = count_words(machine, fit_terms);
  report.counts.sphere.assign(all.sphere.begin(), all.sphere.begin() + static_cast<std::ptrdiff_t>(terms + 1));
  report.counts.cumulative.assign(all.cumulative.begin(),
                                  all.cumulative.begin() + static_cast<std::ptrdiff_t>(terms + 1));
  if (with_pf) report.pf = pf_eigenvalue(count_matrix(machine));
  if (with_series) {
    try {
      report.sphere_series = rational_series(all.sphere, std::max<std::size_t>(s, 1));
      report.cumulative_series = rational_series(all.cumulative, s + 1);
    } catch (const Error& e) {
      report.series_error = e.what();
    }
  }
  return report;
}

}  // namespace geolang
