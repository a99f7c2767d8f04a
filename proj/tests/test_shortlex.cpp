#include "doctest.h"
#include "geolang/ball.hpp"
#include "geolang/error.hpp"
#include "geolang/shortlex.hpp"

using namespace geolang;

namespace {

// Brute-force pair counts: per length, the sum over elements of (geodesic words)^2.
std::vector<Count> pair_counts(const GroupModel& g, const Fsa& language, std::size_t n) {
  std::map<std::pair<Word, std::size_t>, std::size_t> multiplicity;
  for (const Word& w : enumerate_words(language, n)) ++multiplicity[{g.normal_form(w), w.size()}];
  std::vector<Count> out(n + 1, 0);
  for (const auto& [key, c] : multiplicity) out[key.second] += Count(c) * c;
  return out;
}

}  // namespace

TEST_CASE("equality recognizer on F2 is the diagonal") {
  ModelPtr f2 = builtin_model("f2");
  ConeAutomaton cone = build_cone_automaton(*f2, 1);
  PairFsa q = equality_recognizer(cone.fsa(), *f2, 2);
  CHECK(count_words(q.fsa, 6).cumulative == count_words(cone.fsa(), 6).cumulative);
  for (const Word& p : enumerate_words(q.fsa, 4)) {
    for (Letter x : p) CHECK(q.first(x) == q.second(x));
  }
}

TEST_CASE("equality recognizer on Z2") {
  ModelPtr z2 = builtin_model("z2");
  ConeAutomaton cone = build_cone_automaton(*z2, 2);
  PairFsa q = equality_recognizer(cone.fsa(), *z2, 6);
  auto counts = count_words(q.fsa, 6);
  CHECK(counts.sphere[2] == 20);
  CHECK(counts.sphere[3] == 76);
  CHECK(counts.sphere == pair_counts(*z2, cone.fsa(), 6));

  // Symmetry and diagonal containment.
  for (const Word& p : enumerate_words(q.fsa, 4)) {
    Word swapped;
    for (Letter x : p) swapped.push_back(q.pair(q.second(x), q.first(x)));
    CHECK(accepts(q.fsa, swapped));
  }
  for (const Word& w : enumerate_words(cone.fsa(), 4)) {
    Word diag;
    for (Letter x : w) diag.push_back(q.pair(x, x));
    CHECK(accepts(q.fsa, diag));
  }

  try {
    equality_recognizer(cone.fsa(), *z2, 0, 2);
    FAIL("expected BoundTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundTooSmall);
  }
}

TEST_CASE("equality recognizer input checks") {
  ModelPtr z2 = builtin_model("z2"), f2 = builtin_model("f2");
  ConeAutomaton cone = build_cone_automaton(*z2, 2);
  CHECK_THROWS_AS(equality_recognizer(cone.fsa(), *f2, 2), Error);
  try {
    equality_recognizer(universal_fsa(z2->alphabet().names()), *z2, 2);
    FAIL("expected NotGeodesic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGeodesic);
  }
}

TEST_CASE("discrepancy grows without bound on Z2") {
  ModelPtr z2 = builtin_model("z2");
  ConeAutomaton cone = build_cone_automaton(*z2, 2);
  DiscrepancyWitness w = max_equal_pair_discrepancy(cone.fsa(), *z2, 6);
  CHECK(w.value == 6);
  CHECK(w.up_to[2] == 2);
  CHECK(w.up_to[4] == 4);
}

TEST_CASE("lex least languages") {
  ModelPtr z2 = builtin_model("z2");
  ShortlexOptions o;
  o.cone.m = 2;
  ShortlexResult j = unique_rep_language(*z2, o);
  auto counts = count_words(j.language, 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(counts.cumulative[n] == 2 * n * n + 2 * n + 1);
  const Alphabet& a = z2->alphabet();
  CHECK(accepts(j.language, a.parse("x y")));
  CHECK_FALSE(accepts(j.language, a.parse("y x")));
  CHECK(accepts(j.language, {}));
  CHECK_FALSE(j.stabilized);

  o.order = {"y", "Y", "x", "X"};
  ShortlexResult k = unique_rep_language(*z2, o);
  CHECK(accepts(k.language, a.parse("y x")));
  CHECK_FALSE(accepts(k.language, a.parse("x y")));

  ModelPtr f2 = builtin_model("f2");
  ShortlexResult jf = unique_rep_language(*f2, {});
  auto fc = count_words(jf.language, 8);
  Count p = 1;
  for (std::size_t n = 0; n <= 8; ++n, p *= 3) CHECK(fc.cumulative[n] == 2 * p - 1);
  CHECK(jf.stabilized);
}

TEST_CASE("lex least is idempotent") {
  ModelPtr z2 = builtin_model("z2");
  ShortlexOptions o;
  o.cone.m = 2;
  ShortlexResult j = unique_rep_language(*z2, o);
  PairFsa q = equality_recognizer(j.language, *z2, 2);
  Fsa again = lex_least(q, symbol_ranks(z2->alphabet(), {}));
  CHECK(count_words(again, 8).cumulative == count_words(j.language, 8).cumulative);
  for (const Word& w : enumerate_words(again, 6)) CHECK(accepts(j.language, w));
}

TEST_CASE("bijection with elements across models") {
  for (const char* name : {"f2", "z3", "z2*z", "f2xz", "s3"}) {
    CAPTURE(name);
    ModelPtr g = builtin_model(name);
    ShortlexOptions o;
    o.cone.m = 2;
    ShortlexResult j = unique_rep_language(*g, o);
    Ball ball = enumerate_ball(*g, 5);
    auto counts = count_words(j.language, 5);
    CHECK(counts.cumulative[5] == ball.size());
    std::set<Word> seen;
    for (const Word& w : enumerate_words(j.language, 5)) CHECK(seen.insert(g->normal_form(w)).second);
  }
}

TEST_CASE("comparator") {
  std::vector<std::string> base{"a", "b"};
  std::vector<std::size_t> rank{0, 1};
  Fsa c = second_smaller_comparator(base, rank);
  CHECK(c.state_count() == 3);
  PairFsa p{c, base};
  CHECK(accepts(c, Word{p.pair(1, 0)}));
  CHECK_FALSE(accepts(c, Word{p.pair(0, 1)}));
  CHECK(accepts(c, Word{p.pair(0, 0), p.pair(1, 0), p.pair(0, 1)}));
  CHECK_FALSE(accepts(c, Word{p.pair(0, 0)}));
}
