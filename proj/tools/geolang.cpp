// geolang: command-line front end for the geodesic-language library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geolang/ball.hpp"
#include "geolang/cone.hpp"
#include "geolang/fsa.hpp"
#include "geolang/group_spec.hpp"
#include "geolang/growth.hpp"
#include "geolang/pump.hpp"
#include "geolang/scenario.hpp"
#include "geolang/shortlex.hpp"
#include "geolang/subgroup.hpp"

using namespace geolang;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExpectationFailed = 1;
constexpr int kUsage = 2;

const char* kExitCodes = R"(Exit codes:
   0  success
   1  a scenario or validation expectation failed
   2  usage error
   3  UnknownSymbol          12  NotGeodesic
   4  BudgetExceeded         13  FilterRejected
   5  InconsistentLocality   14  EndpointMismatch
   6  BoundTooSmall          15  EmptyWord
   7  NoRecurrence           16  PrefixTooShort
   8  NoConvergence          17  NotAccepted
   9  AlphabetMismatch       18  UnknownScenario
  10  NondeterministicInput  19  NonStabilization
  11  NotTrimmed             20  InvalidInput

Environment:
  GEOLANG_BALL_BUDGET    element cap for Cayley-graph enumeration
  GEOLANG_STATE_BUDGET   state cap for cone construction
  GEOLANG_DEPTH_BUDGET   longest representative word for cone construction
)";

std::size_t env_or(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return std::stoul(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, std::string(name) + " is not a number: " + v);
    }
  }
  return fallback;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

Fsa load_fsa(const std::string& path) { return fsa_from_json(read_file(path)); }

std::string render(const Fsa& fsa, const std::string& format, const std::string& path) {
  std::string f = format;
  if (f.empty()) f = path.size() > 4 && path.substr(path.size() - 4) == ".dot" ? "dot" : "json";
  if (f == "dot") return to_dot(fsa);
  if (f == "json") return to_json(fsa) + "\n";
  throw Error(ErrorKind::InvalidInput, "unknown export format '" + format + "' (dot or json)");
}

std::vector<std::string> split_order(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  for (char ch : text + " ") {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += ch;
    }
  }
  return out;
}

ordered_json counts_json(const std::vector<Count>& cs) {
  ordered_json out = ordered_json::array();
  for (const Count& c : cs) {
    if (c <= std::numeric_limits<std::int64_t>::max()) {
      out.push_back(static_cast<std::int64_t>(c));
    } else {
      out.push_back(c.str());
    }
  }
  return out;
}

struct Common {
  std::string report;  // JSON report path
  std::string exp;     // automaton export path
  std::string format;  // dot | json
};

void add_common(CLI::App* cmd, Common& c, bool exports) {
  cmd->add_option("--report", c.report, "Write the machine-readable report (JSON) here");
  if (exports) {
    cmd->add_option("--export", c.exp, "Write the resulting automaton here");
    cmd->add_option("--format", c.format, "Export format: dot or json (default from extension)")
        ->check(CLI::IsMember({"dot", "json"}));
  }
}

int emit(const Report& r, const Common& c, const Fsa* machine = nullptr) {
  std::cout << r.text();
  if (!c.report.empty()) write_file(c.report, r.json() + "\n");
  if (machine && !c.exp.empty()) write_file(c.exp, render(*machine, c.format, c.exp));
  return r.passed() ? 0 : kExpectationFailed;
}

struct ConeArgs {
  std::string group = "f2";
  std::string filter = "trivial";
  std::size_t m = 1;
  bool auto_escalate = false;
  std::size_t validate = 6;
  Common common;
};

void add_cone_options(CLI::App* cmd, ConeArgs& a) {
  cmd->add_option("--group", a.group, "Group spec file or built-in name")->capture_default_str();
  cmd->add_option("--filter", a.filter, "trivial | syllable:<s> | commuting:<s>")->capture_default_str();
  cmd->add_option("--m", a.m, "Signature locality")->capture_default_str();
  cmd->add_flag("--auto-escalate", a.auto_escalate, "Retry with m + 1 on inconsistent locality");
  cmd->add_option("--validate", a.validate, "Compare with brute force up to this length (0: skip)")
      ->capture_default_str();
  add_common(cmd, a.common, true);
}

ConeBuildOptions cone_options(const GroupModel& model, const ConeArgs& a) {
  ConeBuildOptions o;
  o.m = a.m;
  o.filter = WindowFilter::parse(model, a.filter);
  o.auto_escalate = a.auto_escalate;
  o.state_budget = env_or("GEOLANG_STATE_BUDGET", o.state_budget);
  o.depth_budget = env_or("GEOLANG_DEPTH_BUDGET", o.depth_budget);
  return o;
}

int run_build_cone(const ConeArgs& a) {
  GroupSpec spec = load_group_spec(a.group);
  ConeAutomaton cone = build_cone_automaton(*spec.model, cone_options(*spec.model, a));
  Report r;
  r.title = "build-cone " + spec.name;
  r.check("signature consistency", true, std::to_string(cone.consistency_checks()) + " collisions checked");
  r.data = {{"group", spec.name},
            {"filter", cone.filter().name()},
            {"m", cone.m()},
            {"escalations", cone.escalations()},
            {"states", cone.state_count()},
            {"signature_classes", cone.signature_classes()}};
  ordered_json reps = ordered_json::array();
  for (State s = 0; s < cone.state_count(); ++s) reps.push_back(spec.model->alphabet().format(cone.representative(s)));
  r.data["representatives"] = reps;
  if (a.validate > 0) {
    ValidationReport v = validate_automaton(cone, *spec.model, a.validate);
    r.check("language equality to length " + std::to_string(a.validate), v.passed(),
            format_report(v, spec.model->alphabet()));
  }
  return emit(r, a.common, &cone.fsa());
}

struct ShortlexArgs {
  ConeArgs cone;
  std::string order;
  std::size_t r_hint = 4, r_cap = 16, validation_depth = 6, terms = 8;
};

int run_shortlex(const ShortlexArgs& a) {
  GroupSpec spec = load_group_spec(a.cone.group);
  ShortlexOptions o;
  o.cone = cone_options(*spec.model, a.cone);
  o.order = split_order(a.order);
  o.r_hint = a.r_hint;
  o.r_cap = a.r_cap;
  o.validation_depth = a.validation_depth;
  ShortlexResult j = unique_rep_language(*spec.model, o);
  GrowthCounts counts = count_words(j.language, a.terms);
  Report r;
  r.title = "shortlex " + spec.name;
  if (a.cone.validate > 0) {
    std::size_t n = std::min(a.cone.validate, a.terms);
    std::size_t elements = represented_elements(j.language, *spec.model, n);
    r.check("one word per element to length " + std::to_string(n), counts.cumulative[n] == elements,
            counts.cumulative[n].str() + " words, " + std::to_string(elements) + " elements");
  }
  r.data = {{"group", spec.name}, {"m", j.m}, {"r", j.r}, {"r_stabilized", j.stabilized},
            {"cone_states", j.cone_states}, {"pair_states", j.pair_states},
            {"states", j.language.state_count()}, {"cumulative", counts_json(counts.cumulative)}};
  return emit(r, a.cone.common, &j.language);
}

struct SublangArgs {
  ConeArgs cone;
  std::string subgroup = "trivial";
  std::size_t k = 0, k_cap = 4, validation_depth = 0;
  bool escalate = false;
  std::string language = "unique";
  std::string order;
};

int run_sublang(const SublangArgs& a) {
  GroupSpec spec = load_group_spec(a.cone.group);
  SubgroupOracle h = spec.subgroup(a.subgroup);
  SubgroupLanguageOptions o;
  o.k = a.k;
  o.cone = cone_options(*spec.model, a.cone);
  o.escalate = a.escalate;
  o.k_cap = a.k_cap;
  o.validation_depth = a.validation_depth;
  SubgroupLanguageResult res = a.language == "stable" ? stable_language(*spec.model, h, o)
                                                      : unique_rep_subgroup_language(*spec.model, h, o,
                                                                                     split_order(a.order));
  const Alphabet& alphabet = spec.model->alphabet();
  Report r;
  r.title = "sublang " + spec.name + " " + h.describe();
  ordered_json missing = ordered_json::array();
  for (const Word& w : res.missing_witnesses) missing.push_back(alphabet.format(w));
  r.data = {{"group", spec.name}, {"subgroup", h.describe()}, {"distortion", h.distortion()},
            {"language", a.language}, {"k", res.k}, {"k_tried", res.k_tried}, {"m", res.m},
            {"outcome", to_string(res.outcome)}, {"validation_depth", res.validation_depth},
            {"oracle_words", res.oracle_words}, {"missing", res.missing_count},
            {"missing_witnesses", missing}, {"states", res.language.state_count()}};
  // Cap-hit is a legitimate outcome and is reported, not failed.
  r.check("outcome", true, to_string(res.outcome));
  return emit(r, a.cone.common, &res.language);
}

struct GrowthArgs {
  std::string automaton;
  bool series = false, pf = false;
  std::size_t terms = 20;
  Common common;
};

int run_growth(const GrowthArgs& a) {
  Fsa fsa = load_fsa(a.automaton);
  GrowthReport g = growth_report(fsa, a.terms, a.pf, a.series);
  Report r;
  r.title = "growth " + a.automaton;
  r.data = {{"states", g.states}, {"sphere", counts_json(g.counts.sphere)},
            {"cumulative", counts_json(g.counts.cumulative)}};
  if (g.pf) {
    r.data["pf"] = {{"value", g.pf->value}, {"lower", g.pf->lower}, {"upper", g.pf->upper}};
  }
  if (a.series) {
    r.check("rational series fit", g.series_error.empty(), g.series_error);
    if (g.sphere_series) r.data["sphere_series"] = g.sphere_series->to_string();
    if (g.cumulative_series) r.data["cumulative_series"] = g.cumulative_series->to_string();
  }
  return emit(r, a.common);
}

struct GapArgs {
  std::string sub, sup;
  double margin = 0.1;
  Common common;
};

int run_gap(const GapArgs& a) {
  GapVerdict v = strict_gap_check(load_fsa(a.sub), load_fsa(a.sup), a.margin);
  Report r;
  r.title = "gap";
  std::ostringstream detail;
  detail << std::setprecision(12) << v.sub_rate << " + " << v.margin << " <= " << v.sup_rate;
  r.check("strict gap", v.pass, detail.str());
  r.data = {{"sub_rate", v.sub_rate}, {"sup_rate", v.sup_rate}, {"margin", v.margin}, {"pass", v.pass}};
  return emit(r, a.common);
}

struct PumpArgs {
  std::string automaton, prefix, group;
  std::size_t i = 1, n = 3, max_power = 50;
  Common common;
};

int run_pump(const PumpArgs& a) {
  Fsa fsa = load_fsa(a.automaton);
  std::optional<GroupSpec> spec;
  Alphabet alphabet;
  if (!a.group.empty()) {
    spec = load_group_spec(a.group);
    alphabet = spec->model->alphabet();
    if (alphabet.names() != fsa.labels()) {
      throw Error(ErrorKind::AlphabetMismatch, "automaton labels differ from the group's alphabet");
    }
  } else {
    // Without a group, labels are their own inverses only for parsing.
    std::vector<Letter> self(fsa.label_count());
    for (std::size_t x = 0; x < self.size(); ++x) self[x] = static_cast<Letter>(x);
    alphabet = Alphabet(fsa.labels(), self);
  }
  PumpDecomposition d = pump_decomposition(fsa, alphabet.parse(a.prefix), a.i);
  Word w = periodic_word(d, a.n);
  Report r;
  r.title = "pump";
  r.data = {{"u", alphabet.format(d.u)}, {"v", alphabet.format(d.v)}, {"q", alphabet.format(d.q)},
            {"state", d.state}, {"n", a.n}, {"word", alphabet.format(w)}};
  if (spec) {
    r.check("u v^n geodesic", is_geodesic(*spec->model, w));
    MorseCandidate c = morse_element_candidate(*spec->model, d, a.max_power);
    r.check("linear power growth to n = " + std::to_string(c.checked_powers), c.linear_growth(),
            c.growth_failure ? "fails at n = " + std::to_string(*c.growth_failure) : "");
    r.data["candidate"] = alphabet.format(c.element);
  }
  return emit(r, a.common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic word languages of finitely generated groups"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  ConeArgs cone_args;
  auto* build_cone = app.add_subcommand("build-cone", "Build the cone-type automaton");
  add_cone_options(build_cone, cone_args);
  ConeArgs cone_args2;
  auto* cone = app.add_subcommand("cone", "Cone-type automata");
  auto* cone_build = cone->add_subcommand("build", "Same as build-cone");
  add_cone_options(cone_build, cone_args2);
  cone->require_subcommand(1);

  ShortlexArgs sl;
  auto* shortlex = app.add_subcommand("shortlex", "Shortlex-least geodesic representatives");
  add_cone_options(shortlex, sl.cone);
  shortlex->add_option("--order", sl.order, "Symbol order, comma or space separated");
  shortlex->add_option("--r-hint", sl.r_hint, "Initial fellow-traveling bound")->capture_default_str();
  shortlex->add_option("--r-cap", sl.r_cap, "Largest bound before NonStabilization")->capture_default_str();
  shortlex->add_option("--validation-depth", sl.validation_depth, "Oracle depth for the bound")
      ->capture_default_str();
  shortlex->add_option("--terms", sl.terms, "Report counts to this length")->capture_default_str();

  SublangArgs sub;
  auto* sublang = app.add_subcommand("sublang", "Geodesic words into a subgroup");
  add_cone_options(sublang, sub.cone);
  sublang->add_option("--subgroup", sub.subgroup,
                      "Named subgroup, or trivial | whole | cyclic:<w> | factor:<g,..> | "
                      "generated:<w;..> with optional @<distortion>")
      ->capture_default_str();
  sublang->add_option("--k", sub.k, "Neighborhood radius")->capture_default_str();
  sublang->add_flag("--escalate", sub.escalate, "Raise k until the oracle agrees");
  sublang->add_option("--k-cap", sub.k_cap, "Largest k tried")->capture_default_str();
  sublang->add_option("--validation-depth", sub.validation_depth, "0: 2 (k-cap + 2)")->capture_default_str();
  sublang->add_option("--language", sub.language, "stable (all words) or unique (one per element)")
      ->check(CLI::IsMember({"stable", "unique"}))
      ->capture_default_str();
  sublang->add_option("--order", sub.order, "Symbol order for unique representatives");

  GrowthArgs ga;
  auto* growth = app.add_subcommand("growth", "Counts, growth rate and rational series of an automaton");
  growth->add_option("--automaton", ga.automaton, "Automaton JSON")->required();
  growth->add_flag("--series", ga.series, "Fit rational generating functions");
  growth->add_flag("--pf", ga.pf, "Perron-Frobenius growth rate");
  growth->add_option("--terms", ga.terms, "Count to this length")->capture_default_str();
  add_common(growth, ga.common, false);

  GapArgs gp;
  auto* gap = app.add_subcommand("gap", "Strict growth-rate gap between two automata");
  gap->add_option("--sub", gp.sub, "Smaller language (JSON)")->required();
  gap->add_option("--sup", gp.sup, "Larger language (JSON)")->required();
  gap->add_option("--margin", gp.margin, "Required gap")->capture_default_str();
  add_common(gap, gp.common, false);

  PumpArgs pa;
  auto* pump = app.add_subcommand("pump", "Repeated-state split of an accepted prefix");
  pump->add_option("--automaton", pa.automaton, "Automaton JSON")->required();
  pump->add_option("--prefix", pa.prefix, "Accepted word, e.g. \"(a b)^5\"")->required();
  pump->add_option("--i", pa.i, "Shortest allowed u")->capture_default_str();
  pump->add_option("--n", pa.n, "Power of v in the printed word")->capture_default_str();
  pump->add_option("--group", pa.group, "Group, for geodesic and power-growth checks");
  pump->add_option("--max-power", pa.max_power, "Powers checked for the candidate")->capture_default_str();
  add_common(pump, pa.common, false);

  std::string scenario_name;
  bool list = false;
  Common sc;
  auto* scenario = app.add_subcommand("scenario", "Run a named end-to-end pipeline");
  scenario->add_option("name", scenario_name, "Scenario name");
  scenario->add_flag("--list", list, "List scenario names");
  add_common(scenario, sc, false);

  ValidateConfig vc = default_validate_config();
  std::vector<std::string> entries;
  bool no_escalate = false;
  Common vcommon;
  auto* validate = app.add_subcommand("validate", "Cross-check every model/filter pair against brute force");
  validate->add_option("--depth", vc.depth, "Language equality depth")->capture_default_str();
  validate->add_option("--shortlex-depth", vc.shortlex_depth, "Bijection check depth")->capture_default_str();
  validate->add_option("--threads", vc.threads, "Worker threads (0: all cores)")->capture_default_str();
  validate->add_option("--entry", entries, "Replace the matrix with model:filter:m entries");
  validate->add_flag("--no-escalate", no_escalate, "Do not raise m on inconsistent locality");
  add_common(validate, vcommon, false);

  std::string fsa_in, fsa_out, fsa_format;
  auto* fsa_cmd = app.add_subcommand("fsa", "Automaton utilities");
  auto* fsa_export = fsa_cmd->add_subcommand("export", "Convert an automaton to DOT or JSON");
  fsa_export->add_option("--automaton", fsa_in, "Automaton JSON")->required();
  fsa_export->add_option("--format", fsa_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->default_val("dot");
  fsa_export->add_option("--output", fsa_out, "Output path (default stdout)");
  fsa_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*build_cone) return run_build_cone(cone_args);
    if (*cone_build) return run_build_cone(cone_args2);
    if (*shortlex) return run_shortlex(sl);
    if (*sublang) return run_sublang(sub);
    if (*growth) return run_growth(ga);
    if (*gap) return run_gap(gp);
    if (*pump) return run_pump(pa);
    if (*scenario) {
      if (list || scenario_name.empty()) {
        for (const auto& n : scenario_names()) std::cout << n << "\n";
        return 0;
      }
      return emit(run_scenario(scenario_name), sc);
    }
    if (*validate) {
      if (!entries.empty()) {
        vc.entries.clear();
        for (const std::string& e : entries) {
          auto first = e.find(':');
          auto last = e.rfind(':');
          if (first == std::string::npos || first == last) {
            throw Error(ErrorKind::InvalidInput, "entry '" + e + "' is not model:filter:m");
          }
          vc.entries.push_back({e.substr(0, first), e.substr(first + 1, last - first - 1),
                                std::stoul(e.substr(last + 1))});
        }
      }
      vc.auto_escalate = !no_escalate;
      Report r = validate_all(vc);
      int code = emit(r, vcommon);
      // A stage error outranks a plain expectation failure.
      if (!r.failures.empty()) return static_cast<int>(r.failures.front().kind);
      return code;
    }
    if (*fsa_export) {
      std::string text = render(load_fsa(fsa_in), fsa_format, fsa_out);
      if (fsa_out.empty()) {
        std::cout << text;
      } else {
        write_file(fsa_out, text);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::InvalidInput);
  }
  return kUsage;
}
