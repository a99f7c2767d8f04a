#include "doctest.h"
#include "geolang/ball.hpp"
#include "geolang/cone.hpp"
#include "geolang/error.hpp"
#include "geolang/pump.hpp"

using namespace geolang;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("F2 pumping") {
  ModelPtr f2 = builtin_model("f2");
  const Alphabet& a = f2->alphabet();
  ConeAutomaton cone = build_cone_automaton(*f2, 1);
  PumpDecomposition d = pump_decomposition(cone.fsa(), a.parse("(a b)^5"), 1);
  CHECK(a.format(d.u) == "a");
  CHECK(a.format(d.v) == "b a");
  CHECK(concat(concat(d.u, d.v), d.q) == a.parse("(a b)^5"));
  CHECK(cone.fsa().run(d.u) == d.state);
  CHECK(cone.fsa().run(concat(d.u, d.v)) == d.state);
  CHECK(a.format(periodic_word(d, 2)) == "a b a b a");
  CHECK(periodic_word(d, 0) == d.u);
  for (std::size_t n = 0; n <= 50; ++n) {
    Word w = periodic_word(d, n);
    CHECK(accepts(cone.fsa(), w));
    CHECK(is_geodesic(*f2, w));
  }
  MorseCandidate c = morse_element_candidate(*f2, d);
  CHECK(a.format(c.element) == "a b");
  CHECK(c.linear_growth());
  CHECK(c.checked_powers == 50);
}

TEST_CASE("single-state machine") {
  FsaBuilder b({"a"});
  State s = b.add_state(true);
  b.add_transition(s, 0, s);
  Fsa m = std::move(b).build();
  PumpDecomposition d = pump_decomposition(m, Word{0, 0, 0}, 1);
  CHECK(d.u == Word{0});
  CHECK(d.v == Word{0});
}

TEST_CASE("Z2 pumping") {
  ModelPtr z2 = builtin_model("z2");
  const Alphabet& a = z2->alphabet();
  ConeAutomaton cone = build_cone_automaton(*z2, 2);
  PumpDecomposition d = pump_decomposition(cone.fsa(), a.parse("x^12"), 1);
  CHECK(a.format(d.u) == "x");
  CHECK(a.format(d.v) == "x");
  CHECK(periodic_word(d, 50) == a.parse("x^51"));
}

TEST_CASE("filtered pumping in Z2 * Z") {
  ModelPtr g = builtin_model("z2*z");
  const Alphabet& a = g->alphabet();
  ConeAutomaton cone = build_cone_automaton(*g, 2, WindowFilter::syllable_bound(*g, 1));
  PumpDecomposition d = pump_decomposition(cone.fsa(), a.parse("a (c a)^6"), 1);
  CHECK(a.format(d.v) == "c a");
  MorseCandidate c = morse_element_candidate(*g, d);
  CHECK(c.linear_growth());
}

TEST_CASE("candidate of an empty prefix") {
  ModelPtr f2 = builtin_model("f2");
  PumpDecomposition d;
  d.v = f2->alphabet().parse("a");
  CHECK(f2->alphabet().format(morse_element_candidate(*f2, d).element) == "a");
}

TEST_CASE("pumping errors") {
  ModelPtr f2 = builtin_model("f2");
  const Alphabet& a = f2->alphabet();
  ConeAutomaton cone = build_cone_automaton(*f2, 1);
  CHECK(kind_of([&] { pump_decomposition(cone.fsa(), a.parse("a b"), 1); }) == ErrorKind::PrefixTooShort);
  CHECK(kind_of([&] { pump_decomposition(cone.fsa(), a.parse("a A a b a b a b"), 1); }) ==
        ErrorKind::NotAccepted);
  // Linear growth fails for a torsion-like candidate in a finite group.
  ModelPtr s3 = builtin_model("s3");
  ConeBuildOptions o;
  o.m = 2;
  ConeAutomaton finite = build_cone_automaton(*s3, o);
  CHECK(kind_of([&] { pump_decomposition(finite.fsa(), s3->alphabet().parse("s t s t s t s t"), 1); }) ==
        ErrorKind::NotAccepted);
}
