#include "geolang/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "geolang/ball.hpp"
#include "geolang/cone.hpp"
#include "geolang/group.hpp"
#include "geolang/growth.hpp"
#include "geolang/pump.hpp"
#include "geolang/series.hpp"
#include "geolang/shortlex.hpp"
#include "geolang/subgroup.hpp"

namespace geolang {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string message_of(const Error& e) {
  std::string what = e.what();
  std::string prefix = std::string(to_string(e.kind())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), "stage " + name + ": " + message_of(e));
  }
}

std::string fixed(double x, int digits = 9) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << x;
  return os.str();
}

ordered_json count_json(const Count& c) {
  if (c <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(c);
  return c.str();
}

ordered_json counts_json(const std::vector<Count>& cs) {
  ordered_json out = ordered_json::array();
  for (const Count& c : cs) out.push_back(count_json(c));
  return out;
}

ordered_json series_json(const RationalSeries& s) {
  return {{"numerator", counts_json(s.numerator)},
          {"denominator", counts_json(s.denominator)},
          {"order", s.order},
          {"text", s.to_string()}};
}

ModelPtr model(const std::string& name) {
  ModelPtr m = builtin_model(name);
  if (!m) throw Error(ErrorKind::InvalidInput, "unknown built-in group '" + name + "'");
  return m;
}

bool near(double x, double target, double tol) { return std::fabs(x - target) <= tol; }

// Equal-length pairs (u, v) of words with equal value, by length.
std::vector<Count> brute_force_pair_counts(const GroupModel& g, const Fsa& language,
                                           std::size_t n) {
  std::map<Word, std::vector<std::size_t>> by_element;
  for (const Word& w : enumerate_words(language, n)) by_element[g.normal_form(w)].push_back(w.size());
  std::vector<Count> out(n + 1, 0);
  for (const auto& [element, lengths] : by_element) {
    std::map<std::size_t, std::size_t> per_length;
    for (std::size_t l : lengths) ++per_length[l];
    for (const auto& [l, c] : per_length) out[l] += Count(c) * c;
  }
  return out;
}

// --- scenarios ------------------------------------------------------------------

Report f2_cone() {
  Report r;
  r.title = "f2-cone";
  ModelPtr f2 = model("f2");
  ConeAutomaton cone = stage("cone", [&] { return build_cone_automaton(*f2, 1); });
  Fsa machine = trim(cone.fsa());
  r.check("five trimmed states", machine.state_count() == 5, std::to_string(machine.state_count()));
  PfEstimate pf = stage("pf", [&] { return pf_eigenvalue(count_matrix(machine)); });
  r.check("pf = 3", near(pf.value, 3.0, 1e-9), fixed(pf.value, 12));
  GrowthCounts counts = count_words(machine, 22);
  bool spheres = true;
  Count expected = 4;
  for (std::size_t n = 1; n <= 12; ++n, expected *= 3) spheres = spheres && counts.sphere[n] == expected;
  r.check("sphere counts 4*3^(n-1), n <= 12", spheres);
  RationalSeries s = stage("series", [&] { return rational_series(counts.cumulative, 6); });
  bool closed_form = s.numerator == std::vector<Count>{1, 1} &&
                     s.denominator == std::vector<Count>{1, -4, 3};
  r.check("cumulative series (1 + x) / ((1 - 3x)(1 - x))", closed_form, s.to_string());
  ValidationReport v = validate_automaton(cone, *f2, 8);
  r.check("oracle equality to length 8", v.passed(), format_report(v, f2->alphabet()));
  r.data = {{"states", machine.state_count()},
            {"pf", pf.value},
            {"sphere", counts_json(std::vector<Count>(counts.sphere.begin(), counts.sphere.begin() + 13))},
            {"cumulative_series", series_json(s)}};
  return r;
}

Report z2_shortlex() {
  Report r;
  r.title = "z2-shortlex";
  ModelPtr z2 = model("z2");
  ConeAutomaton cone = stage("cone", [&] { return build_cone_automaton(*z2, 2); });
  r.check("nine trimmed states", trim(cone.fsa()).state_count() == 9,
          std::to_string(trim(cone.fsa()).state_count()));
  ShortlexOptions options;
  options.cone.m = 2;
  ShortlexResult j = stage("shortlex", [&] { return unique_rep_language(*z2, options); });
  GrowthCounts counts = count_words(j.language, 10);
  Ball ball = stage("ball", [&] { return enumerate_ball(*z2, 10); });
  auto spheres = ball.sphere_sizes();
  bool formula = true, matches_ball = true;
  std::size_t cumulative = 0;
  for (std::size_t n = 0; n <= 10; ++n) {
    cumulative += spheres[n];
    formula = formula && counts.cumulative[n] == 2 * n * n + 2 * n + 1;
    matches_ball = matches_ball && counts.cumulative[n] == cumulative;
  }
  r.check("counts 2n^2 + 2n + 1, n <= 10", formula);
  r.check("counts equal ball sizes", matches_ball);
  PfEstimate pf = pf_eigenvalue(count_matrix(trim(j.language)));
  r.check("pf = 1", near(pf.value, 1.0, 1e-6), fixed(pf.value, 12));
  Word xy = z2->alphabet().parse("x y"), yx = z2->alphabet().parse("y x");
  r.check("'x y' in J, 'y x' not", accepts(j.language, xy) && !accepts(j.language, yx));
  r.data = {{"cone_states", cone.state_count()},
            {"j_states", j.language.state_count()},
            {"r", j.r},
            {"r_stabilized", j.stabilized},
            {"cumulative", counts_json(counts.cumulative)},
            {"pf", pf.value}};
  return r;
}

Report z2_equality() {
  Report r;
  r.title = "z2-equality";
  ModelPtr z2 = model("z2");
  ConeAutomaton cone = stage("cone", [&] { return build_cone_automaton(*z2, 2); });
  DiscrepancyWitness w = stage("discrepancy", [&] { return max_equal_pair_discrepancy(cone.fsa(), *z2, 6); });
  PairFsa q = stage("recognizer", [&] { return equality_recognizer(cone.fsa(), *z2, w.value, 6); });
  GrowthCounts pairs = count_words(q.fsa, 6);
  std::vector<Count> brute = brute_force_pair_counts(*z2, cone.fsa(), 6);
  r.check("20 pairs of length 2", pairs.sphere[2] == 20, pairs.sphere[2].str());
  r.check("76 pairs of length 3", pairs.sphere[3] == 76, pairs.sphere[3].str());
  r.check("pair counts equal brute force to length 6", pairs.sphere == brute);
  bool too_small = false;
  try {
    equality_recognizer(cone.fsa(), *z2, 0, 2);
  } catch (const Error& e) {
    too_small = e.kind() == ErrorKind::BoundTooSmall;
  }
  r.check("r = 0 is too small", too_small);
  r.data = {{"r", w.value}, {"pair_states", q.fsa.state_count()}, {"pairs", counts_json(pairs.sphere)}};
  return r;
}

Report z2xz_nonregular_witness() {
  Report r;
  r.title = "z2xz-nonregular-witness";
  ModelPtr g = model("z2*z");
  const Alphabet& alphabet = g->alphabet();
  SubgroupOracle h = SubgroupOracle::cyclic(g, alphabet.parse("a b"));
  ordered_json family = ordered_json::array();
  for (std::size_t k = 0; k <= 4; ++k) {
    Fsa lhk = stage("L_{H,k}", [&] { return subgroup_word_automaton(*g, h, k); });
    Word witness = alphabet.parse("a^" + std::to_string(k + 2) + " b^" + std::to_string(k + 2));
    bool rejected = !accepts(lhk, witness);
    bool in_lh = is_geodesic(*g, witness) && h.contains(witness);
    r.check("k=" + std::to_string(k) + " rejects " + alphabet.format(witness), rejected);
    r.check("k=" + std::to_string(k) + " oracle puts it in L_H", in_lh);
    family.push_back({{"k", k}, {"word", alphabet.format(witness)}, {"rejected", rejected}, {"in_L_H", in_lh}});
  }
  SubgroupLanguageOptions options;
  options.k = 0;
  options.k_cap = 4;
  options.escalate = true;
  SubgroupLanguageResult esc = stage("escalation", [&] { return stable_language(*g, h, options); });
  r.check("escalation is inconclusive at the cap", esc.outcome == SubgroupOutcome::Inconclusive,
          to_string(esc.outcome) + ", " + std::to_string(esc.missing_count) + " oracle words missed");
  r.data = {{"family", family},
            {"escalation",
             {{"outcome", to_string(esc.outcome)},
              {"k_tried", esc.k_tried},
              {"validation_depth", esc.validation_depth},
              {"missing", esc.missing_count},
              {"first_missing",
               esc.missing_witnesses.empty() ? "" : alphabet.format(esc.missing_witnesses[0])}}}};
  return r;
}

Report f2_growth_gap() {
  Report r;
  r.title = "f2-growth-gap";
  ModelPtr f2 = model("f2");
  const Alphabet& alphabet = f2->alphabet();
  SubgroupOracle h = SubgroupOracle::cyclic(f2, alphabet.parse("a"));
  SubgroupLanguageOptions options;
  SubgroupLanguageResult j = stage("J_H", [&] { return unique_rep_subgroup_language(*f2, h, options); });
  Fsa extended = stage("extension", [&] { return extend_with_free_factor(j.language, alphabet.parse("b")); });
  ConeAutomaton full = stage("cone", [&] { return build_cone_automaton(*f2, 1); });
  double sub = growth_rate(j.language).value;
  double ext = growth_rate(extended).value;
  double all = growth_rate(full.fsa()).value;
  r.check("lambda(J_<a>) = 1", near(sub, 1.0, 1e-6), fixed(sub));
  r.check("1.1 <= lambda(extension) <= 3", ext >= 1.1 && ext <= 3.0, fixed(ext));
  r.check("lambda(extension) <= lambda(F2) = 3", ext <= all + 1e-9 && near(all, 3.0, 1e-9), fixed(all));
  GapVerdict gap = strict_gap_check(j.language, extended, 0.1);
  r.check("strict gap at margin 0.1", gap.pass);
  r.check("increasing order", sub < ext && ext <= all);
  r.data = {{"lambda_sub", sub}, {"lambda_extension", ext}, {"lambda_full", all},
            {"j_states", j.language.state_count()}, {"extension_states", extended.state_count()}};
  return r;
}

Report f2_finite_index() {
  Report r;
  r.title = "f2-finite-index";
  ModelPtr f2 = model("f2");
  const Alphabet& alphabet = f2->alphabet();
  SubgroupOracle h = SubgroupOracle::cyclic(f2, alphabet.parse("a"));
  SubgroupOracle h2 = SubgroupOracle::cyclic(f2, alphabet.parse("a a"));
  auto fh = stage("counts", [&] { return subgroup_growth_counts(*f2, h, 32); });
  auto fh2 = stage("counts", [&] { return subgroup_growth_counts(*f2, h2, 32); });
  bool sandwich = true;
  for (std::size_t n = 0; n <= 30; ++n) sandwich = sandwich && fh2[n] <= fh[n] && fh[n] <= 2 * fh2[n + 2];
  r.check("f_<a^2>(n) <= f_<a>(n) <= 2 f_<a^2>(n+2), n <= 30", sandwich);
  SubgroupLanguageOptions options;
  options.escalate = true;
  options.k_cap = 3;
  auto jh = stage("J_H", [&] { return unique_rep_subgroup_language(*f2, h, options); });
  auto jh2 = stage("J_H'", [&] { return unique_rep_subgroup_language(*f2, h2, options); });
  double l1 = growth_rate(jh.language).value, l2 = growth_rate(jh2.language).value;
  r.check("lambda(<a>) = 1", near(l1, 1.0, 1e-6), fixed(l1));
  r.check("lambda(<a^2>) = 1", near(l2, 1.0, 1e-6), fixed(l2));
  GrowthCounts c1 = count_words(jh.language, 12), c2 = count_words(jh2.language, 12);
  bool machine_counts = true;
  for (std::size_t n = 0; n <= 12; ++n) {
    machine_counts = machine_counts && c1.cumulative[n] == fh[n] && c2.cumulative[n] == fh2[n];
  }
  r.check("machine counts equal brute force, n <= 12", machine_counts);
  r.data = {{"f_a", fh}, {"f_a2", fh2}, {"lambda_a", l1}, {"lambda_a2", l2}, {"k_a", jh.k}, {"k_a2", jh2.k}};
  return r;
}

Report pump_scenario(const std::string& title, const std::string& group, const std::string& filter,
                     std::size_t m, const std::string& prefix_text, std::size_t i) {
  Report r;
  r.title = title;
  ModelPtr g = model(group);
  const Alphabet& alphabet = g->alphabet();
  ConeAutomaton cone = stage("cone", [&] {
    return build_cone_automaton(*g, m, WindowFilter::parse(*g, filter));
  });
  Word prefix = alphabet.parse(prefix_text);
  PumpDecomposition d = stage("pump", [&] { return pump_decomposition(cone.fsa(), prefix, i); });
  bool repeated = cone.fsa().run(d.u) == cone.fsa().run(concat(d.u, d.v)) && !d.v.empty() &&
                  d.u.size() >= i && concat(concat(d.u, d.v), d.q) == prefix;
  r.check("repeated-state split", repeated,
          "u='" + alphabet.format(d.u) + "' v='" + alphabet.format(d.v) + "'");
  bool stable = true;
  for (std::size_t n = 0; n <= 50; ++n) {
    Word w = periodic_word(d, n);
    stable = stable && is_geodesic(*g, w) && cone.filter().passes(w);
  }
  r.check("u v^n accepted and geodesic, n <= 50", stable);
  MorseCandidate c = morse_element_candidate(*g, d);
  r.check("|g^n| >= n |v| - 2 |u|, n <= 50", c.linear_growth(), "g='" + alphabet.format(c.element) + "'");
  r.data = {{"u", alphabet.format(d.u)}, {"v", alphabet.format(d.v)}, {"q", alphabet.format(d.q)},
            {"state", d.state}, {"candidate", alphabet.format(c.element)}};
  return r;
}

Report s3_escalation() {
  Report r;
  r.title = "s3-escalation";
  ModelPtr s3 = model("s3");
  std::string witness;
  try {
    build_cone_automaton(*s3, 1);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InconsistentLocality) witness = message_of(e);
  }
  r.check("m=1 is inconsistent", !witness.empty(), witness);
  ConeBuildOptions options;
  options.m = 1;
  options.auto_escalate = true;
  ConeAutomaton cone = stage("escalation", [&] { return build_cone_automaton(*s3, options); });
  r.check("escalates to m=2", cone.m() == 2 && cone.escalations() == 1, "m=" + std::to_string(cone.m()));
  r.check("six states, one per element", cone.state_count() == 6, std::to_string(cone.state_count()));
  ValidationReport v = validate_automaton(cone, *s3, 8);
  r.check("oracle equality to length 8", v.passed());
  r.data = {{"witness", witness}, {"m", cone.m()}, {"states", cone.state_count()}};
  return r;
}

const std::vector<std::pair<std::string, std::function<Report()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Report()>>> scenarios = {
      {"f2-cone", f2_cone},
      {"z2-shortlex", z2_shortlex},
      {"z2-equality", z2_equality},
      {"z2xz-nonregular-witness", z2xz_nonregular_witness},
      {"f2-growth-gap", f2_growth_gap},
      {"f2-finite-index", f2_finite_index},
      {"f2-pump", [] { return pump_scenario("f2-pump", "f2", "trivial", 1, "(a b)^5", 1); }},
      {"z2xz-filtered-pump",
       [] { return pump_scenario("z2xz-filtered-pump", "z2*z", "syllable:1", 2, "a (c a)^6", 1); }},
      {"s3-escalation", s3_escalation},
  };
  return scenarios;
}

// --- validation matrix ----------------------------------------------------------

Report validate_entry(const ValidateEntry& entry, const ValidateConfig& config) {
  Report r;
  r.title = entry.model + " " + entry.filter + " m=" + std::to_string(entry.m);
  ModelPtr g = model(entry.model);
  WindowFilter filter = WindowFilter::parse(*g, entry.filter);
  ConeBuildOptions options;
  options.m = entry.m;
  options.filter = filter;
  options.auto_escalate = config.auto_escalate;
  ConeAutomaton cone = stage("cone build", [&] { return build_cone_automaton(*g, options); });
  r.check("signature consistency", true,
          std::to_string(cone.consistency_checks()) + " collisions re-checked at m=" + std::to_string(cone.m()));
  ValidationReport v = stage("oracle enumeration", [&] {
    return validate_automaton(cone, *g, config.depth);
  });
  r.check("language equality to length " + std::to_string(config.depth), v.passed(),
          format_report(v, g->alphabet()));

  Fsa machine = trim(cone.fsa());
  const std::size_t s = machine.state_count();
  GrowthCounts counts = count_words(machine, 2 * s + 10);
  std::string series_detail;
  bool series_ok = false;
  try {
    RationalSeries series = rational_series(counts.sphere, s, 10);
    series_ok = true;
    series_detail = series.to_string();
  } catch (const Error& e) {
    series_detail = e.what();
  }
  r.check("series fit with 10 held-out terms", series_ok, series_detail);
  PfEstimate pf = stage("pf", [&] { return pf_eigenvalue(count_matrix(machine)); });
  bool infinite = counts.sphere.back() > 0;
  r.check("pf >= 1 on infinite languages", !infinite || pf.value >= 1 - 1e-9, fixed(pf.value));

  ShortlexOptions sl;
  sl.cone = options;
  sl.cone.m = cone.m();
  ShortlexResult j = stage("shortlex", [&] { return unique_rep_language(*g, sl); });
  GrowthCounts jc = count_words(j.language, config.shortlex_depth);
  std::size_t elements = represented_elements(cone.fsa(), *g, config.shortlex_depth);
  r.check("shortlex bijection to length " + std::to_string(config.shortlex_depth),
          jc.cumulative.back() == elements,
          jc.cumulative.back().str() + " words vs " + std::to_string(elements) + " elements");
  r.data = {{"model", entry.model},
            {"filter", entry.filter},
            {"m", cone.m()},
            {"states", cone.state_count()},
            {"signature_classes", cone.signature_classes()},
            {"oracle_words", v.oracle_words},
            {"pf", pf.value},
            {"series", series_detail},
            {"shortlex_states", j.language.state_count()},
            {"shortlex_r", j.r}};
  return r;
}

}  // namespace

bool Report::passed() const {
  return failures.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string Report::text() const {
  std::ostringstream os;
  os << title << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const Check& c : checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) {
      std::string detail = c.detail;
      for (std::size_t p = detail.find('\n'); p != std::string::npos; p = detail.find('\n', p + 5)) {
        detail.replace(p, 1, "\n    ");
      }
      os << ": " << detail;
    }
    os << "\n";
  }
  for (const StageFailure& f : failures) {
    os << "  [ERROR] " << f.stage << " (" << to_string(f.kind) << "): " << f.message << "\n";
  }
  if (data.is_object()) {
    for (const auto& [key, value] : data.items()) {
      std::string shown = value.is_string() ? value.get<std::string>() : value.dump();
      if (shown.size() > 160) shown = shown.substr(0, 157) + "...";
      os << "  " << key << ": " << shown << "\n";
    }
  }
  return os.str();
}

std::string Report::json(int indent) const {
  ordered_json j;
  j["title"] = title;
  j["passed"] = passed();
  j["checks"] = ordered_json::array();
  for (const Check& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["failures"] = ordered_json::array();
  for (const StageFailure& f : failures) {
    j["failures"].push_back({{"stage", f.stage},
                             {"kind", std::string(to_string(f.kind))},
                             {"exit_code", static_cast<int>(f.kind)},
                             {"message", f.message}});
  }
  j["data"] = data;
  return j.dump(indent);
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& [name, run] : registry()) out.push_back(name);
  return out;
}

Report run_scenario(const std::string& name) {
  for (const auto& [candidate, run] : registry()) {
    if (candidate == name) return run();
  }
  std::string known;
  for (const auto& n : scenario_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorKind::UnknownScenario, "no scenario '" + name + "' (known: " + known + ")");
}

ValidateConfig default_validate_config() {
  ValidateConfig config;
  config.entries = {
      {"f2", "trivial", 1},         {"f3", "trivial", 1},
      {"z2", "trivial", 2},         {"z3", "trivial", 1},
      {"z2*z", "trivial", 2},       {"z2*z", "syllable:1", 2},
      {"z2*z", "syllable:2", 2},    {"z2*z", "commuting:1", 2},
      {"z2*z-product", "trivial", 2}, {"f2xz", "trivial", 2},
      {"f2xz", "commuting:1", 2},   {"s3", "trivial", 2},
  };
  return config;
}

Report validate_all(const ValidateConfig& config) {
  std::size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<Report> results(config.entries.size());
  std::vector<std::optional<StageFailure>> errors(config.entries.size());
  auto run = [&](std::size_t i) {
    const ValidateEntry& e = config.entries[i];
    try {
      results[i] = validate_entry(e, config);
    } catch (const Error& err) {
      results[i].title = e.model + " " + e.filter + " m=" + std::to_string(e.m);
      std::string msg = message_of(err);
      std::string stage_name = "setup";
      if (msg.rfind("stage ", 0) == 0) {
        auto colon = msg.find(": ");
        stage_name = msg.substr(6, colon - 6);
        msg = msg.substr(colon + 2);
      }
      errors[i] = StageFailure{results[i].title + ": " + stage_name, err.kind(), msg};
    }
  };
  std::vector<std::future<void>> pending;
  std::size_t next = 0;
  while (next < config.entries.size()) {
    while (pending.size() < threads && next < config.entries.size()) {
      pending.push_back(std::async(std::launch::async, run, next++));
    }
    pending.front().get();
    pending.erase(pending.begin());
  }
  for (auto& p : pending) p.get();

  Report out;
  out.title = "validate";
  out.data["entries"] = ordered_json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const Check& c : results[i].checks) out.check(results[i].title + ": " + c.name, c.passed, c.detail);
    if (errors[i]) out.failures.push_back(*errors[i]);
    out.data["entries"].push_back(results[i].data.empty() ? ordered_json{{"title", results[i].title}}
                                                           : results[i].data);
  }
  return out;
}

}  // namespace geolang
