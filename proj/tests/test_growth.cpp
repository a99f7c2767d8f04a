#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "geolang/cone.hpp"
#include "geolang/error.hpp"
#include "geolang/growth.hpp"
#include "geolang/series.hpp"
#include "geolang/shortlex.hpp"

using namespace geolang;

namespace {

double eigen_spectral_radius(const CountMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = static_cast<double>(m[i][j]);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  double best = 0;
  for (Eigen::Index i = 0; i < n; ++i) best = std::max(best, std::abs(solver.eigenvalues()[i]));
  return best;
}

Fsa loops(std::size_t labels) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  FsaBuilder b(names);
  State s = b.add_state(true);
  for (Letter x = 0; x < labels; ++x) b.add_transition(s, x, s);
  return std::move(b).build();
}

std::vector<Count> to_counts(std::initializer_list<long> xs) {
  std::vector<Count> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("count matrices") {
  CHECK(count_matrix(loops(2)) == CountMatrix{{2}});
  ConeAutomaton f2 = build_cone_automaton(*builtin_model("f2"), 1);
  CountMatrix m = count_matrix(f2.fsa());
  REQUIRE(m.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    std::uint64_t row = 0;
    for (auto x : m[i]) row += x;
    CHECK(row == (i == f2.fsa().initial() ? 4u : 3u));
  }
  CHECK(count_matrix(trim(empty_fsa({"a"}))).empty());
  FsaBuilder b({"a"});
  State s = b.add_state(true), dead = b.add_state();
  b.add_transition(s, 0, dead);
  try {
    count_matrix(std::move(b).build());
    FAIL("expected NotTrimmed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTrimmed);
  }
  CHECK(adjacency_matrix01(loops(3)) == CountMatrix{{1}});
}

TEST_CASE("count matrix powers reproduce word counts") {
  ConeAutomaton cone = build_cone_automaton(*builtin_model("z2*z"), 2);
  Fsa m = trim(cone.fsa());
  CountMatrix a = count_matrix(m);
  auto counts = count_words(m, 20);
  std::vector<Count> v(a.size(), 0);
  v[m.initial()] = 1;
  for (std::size_t n = 0; n <= 20; ++n) {
    Count total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (m.is_accept(static_cast<State>(i))) total += v[i];
    }
    CHECK(total == counts.sphere[n]);
    std::vector<Count> next(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) next[j] += v[i] * a[i][j];
    }
    v = std::move(next);
  }
}

TEST_CASE("Perron-Frobenius eigenvalues") {
  CHECK(pf_eigenvalue({{2}}).value == doctest::Approx(2.0).epsilon(1e-12));
  ConeAutomaton f2 = build_cone_automaton(*builtin_model("f2"), 1);
  PfEstimate pf = pf_eigenvalue(count_matrix(f2.fsa()));
  CHECK(std::fabs(pf.value - 3.0) <= 1e-9);
  CHECK(pf.lower <= pf.value);
  CHECK(pf.value <= pf.upper);
  // Periodic matrix.
  CHECK(std::fabs(pf_eigenvalue({{0, 2}, {2, 0}}).value - 2.0) <= 1e-9);
  // Reducible matrix with a larger downstream component.
  CHECK(std::fabs(pf_eigenvalue({{1, 1}, {0, 3}}).value - 3.0) <= 1e-9);
  CHECK(pf_eigenvalue({}).value == 0.0);

  ShortlexOptions o;
  o.cone.m = 2;
  ShortlexResult j = unique_rep_language(*builtin_model("z2"), o);
  CHECK(std::fabs(growth_rate(j.language).value - 1.0) <= 1e-6);

  // n-th root of the sphere count at n = 30.
  auto c = count_words(f2.fsa(), 30);
  double root = std::pow(c.sphere[30].convert_to<double>(), 1.0 / 30);
  CHECK(std::fabs(root - pf.value) < 0.05);
}

TEST_CASE("Perron-Frobenius agrees with Eigen on shipped machines") {
  for (const char* name : {"f2", "f3", "z2", "z3", "z2*z", "f2xz"}) {
    CAPTURE(name);
    ModelPtr g = builtin_model(name);
    CountMatrix m = count_matrix(trim(build_cone_automaton(*g, 2).fsa()));
    double pf = pf_eigenvalue(m).value;
    CHECK(pf >= 1.0);
    CHECK(std::fabs(pf - eigen_spectral_radius(m)) < 1e-7);
  }
}

TEST_CASE("rational series") {
  std::vector<Count> naturals;
  for (int n = 1; n <= 20; ++n) naturals.emplace_back(n);
  RationalSeries s = rational_series(naturals, 3);
  CHECK(s.numerator == to_counts({1}));
  CHECK(s.denominator == to_counts({1, -2, 1}));
  CHECK(s.to_string() == "(1) / (1 - 2x + x^2)");

  std::vector<Count> f2;
  Count p = 1;
  for (int n = 0; n < 20; ++n, p *= 3) f2.push_back(2 * p - 1);
  RationalSeries sf = rational_series(f2, 5);
  CHECK(sf.numerator == to_counts({1, 1}));
  CHECK(sf.denominator == to_counts({1, -4, 3}));
  CHECK(sf.expand(19) == f2);

  std::vector<Count> z2;
  for (long n = 0; n <= 30; ++n) z2.emplace_back(2 * n * n + 2 * n + 1);
  RationalSeries sz = rational_series(z2, 9);
  CHECK(sz.denominator == to_counts({1, -3, 3, -1}));
  CHECK(sz.numerator == to_counts({1, 2, 1}));
  CHECK(sz.expand(30) == z2);

  // Held-out mispredictions are refused.
  std::vector<Count> squares;
  for (long n = 0; n < 16; ++n) squares.emplace_back(n * n * n * n * n);
  CHECK_THROWS_AS(rational_series(squares, 3), Error);
  CHECK_THROWS_AS(rational_series(to_counts({1, 2, 3}), 2), Error);
  std::vector<Count> bumped = f2;
  bumped.back() += 1;
  try {
    rational_series(bumped, 5);
    FAIL("expected NoRecurrence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRecurrence);
  }
}

TEST_CASE("free factor extensions") {
  FsaBuilder one({"a", "b"});
  one.add_state(true);
  Fsa eps = std::move(one).build();
  Fsa bstar = extend_with_free_factor(eps, Word{1});
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(accepts(bstar, Word(n, 1)));
    CHECK_FALSE(accepts(bstar, concat(Word(n, 1), Word{0})));
  }
  Fsa astar = loops(2);
  FsaBuilder ab({"a", "b"});
  State s = ab.add_state(true);
  ab.add_transition(s, 0, s);
  Fsa everything = extend_with_free_factor(std::move(ab).build(), Word{1});
  CHECK(std::fabs(growth_rate(everything).value - 2.0) < 1e-9);
  auto counts = count_words(determinize(everything), 6);
  CHECK(counts.sphere[6] == 64);
  try {
    extend_with_free_factor(astar, {});
    FAIL("expected EmptyWord");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyWord);
  }
  // Multi-letter words become chains of letters.
  Fsa chain = extend_with_free_factor(eps, Word{1, 0});
  CHECK(accepts(chain, Word{1, 0, 1, 0}));
  CHECK_FALSE(accepts(chain, Word{1}));
}

TEST_CASE("growth gaps") {
  ModelPtr f2 = builtin_model("f2");
  ConeAutomaton cone = build_cone_automaton(*f2, 1);
  GapVerdict same = strict_gap_check(cone.fsa(), cone.fsa(), 0.1);
  CHECK_FALSE(same.pass);
  CHECK(same.sub_rate == doctest::Approx(3.0));
  SubgroupOracle ha = SubgroupOracle::cyclic(f2, f2->alphabet().parse("a"));
  SubgroupLanguageResult j = unique_rep_subgroup_language(*f2, ha, {});
  Fsa ext = extend_with_free_factor(j.language, f2->alphabet().parse("b"));
  GapVerdict v = strict_gap_check(j.language, ext, 0.1);
  CHECK(v.pass);
  CHECK(v.sub_rate == doctest::Approx(1.0));
  CHECK(v.sup_rate > 1.1);
  CHECK(v.sup_rate < 3.0);
}

TEST_CASE("subgroup growth counts") {
  ModelPtr f2 = builtin_model("f2");
  const Alphabet& a = f2->alphabet();
  auto fa = subgroup_growth_counts(*f2, SubgroupOracle::cyclic(f2, a.parse("a")), 10);
  auto fa2 = subgroup_growth_counts(*f2, SubgroupOracle::cyclic(f2, a.parse("a a")), 10);
  auto ft = subgroup_growth_counts(*f2, SubgroupOracle::trivial(f2), 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(fa[n] == 2 * n + 1);
    CHECK(fa2[n] == 2 * (n / 2) + 1);
    CHECK(ft[n] == 1);
  }
}

TEST_CASE("growth reports") {
  ConeAutomaton cone = build_cone_automaton(*builtin_model("z2"), 2);
  GrowthReport r = growth_report(cone.fsa(), 20, true, true);
  CHECK(r.states == 9);
  REQUIRE(r.pf);
  CHECK(std::fabs(r.pf->value - 2.0) < 1e-9);
  REQUIRE(r.sphere_series);
  CHECK(r.series_error.empty());
  CHECK(r.sphere_series->expand(20) == r.counts.sphere);
  REQUIRE(r.cumulative_series);
  CHECK(r.cumulative_series->expand(20) == r.counts.cumulative);
}
