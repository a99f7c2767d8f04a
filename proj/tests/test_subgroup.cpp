#include "doctest.h"
#include "geolang/ball.hpp"
#include "geolang/error.hpp"
#include "geolang/growth.hpp"
#include "geolang/subgroup.hpp"

using namespace geolang;

namespace {

std::vector<Word> words_up_to(const Alphabet& a, std::size_t n) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == n) continue;
    for (Letter x = 0; x < a.size(); ++x) {
      Word w = out[i];
      w.push_back(x);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("membership oracles") {
  ModelPtr f2 = builtin_model("f2"), g = builtin_model("z2*z");
  const Alphabet& a = f2->alphabet();
  SubgroupOracle ha = SubgroupOracle::cyclic(f2, a.parse("a"));
  CHECK(ha.contains({}));
  CHECK(ha.contains(a.parse("a a A a")));
  CHECK_FALSE(ha.contains(a.parse("b")));
  SubgroupOracle hab = SubgroupOracle::cyclic(f2, a.parse("a b"));
  CHECK(hab.contains(a.parse("B A B A")));
  CHECK_FALSE(hab.contains(a.parse("b a")));
  SubgroupOracle gen = SubgroupOracle::generated(f2, {a.parse("a a"), a.parse("b")});
  CHECK(gen.contains(a.parse("a a b")));
  CHECK_FALSE(gen.contains(a.parse("a")));
  SubgroupOracle fac = SubgroupOracle::factor(g, {"a", "c"});
  CHECK(fac.contains(g->alphabet().parse("a c A")));
  CHECK_FALSE(fac.contains(g->alphabet().parse("b")));
  CHECK(SubgroupOracle::trivial(f2).elements_within(5).size() == 1);
  CHECK(SubgroupOracle::whole(f2).contains(a.parse("b a")));
  CHECK(ha.elements_within(3).size() == 7);
  CHECK(ha.distance(a.parse("a a b")) == 1);
  CHECK(ha.describe().find("distortion 3") != std::string::npos);
  // Closed under inverses on samples.
  for (const Word& w : words_up_to(a, 4)) {
    CHECK(hab.contains(w) == hab.contains(a.inverse_word(w)));
  }
}

TEST_CASE("neighborhood automata") {
  ModelPtr f2 = builtin_model("f2"), g = builtin_model("z2*z");
  const Alphabet& a = f2->alphabet();
  SubgroupOracle whole = SubgroupOracle::whole(f2);
  Fsa all = neighborhood_automaton(*f2, whole, 0);
  for (const Word& w : words_up_to(a, 4)) CHECK(accepts(all, w));

  SubgroupOracle ha = SubgroupOracle::cyclic(f2, a.parse("a"));
  Fsa n0 = neighborhood_automaton(*f2, ha, 0);
  for (const Word& w : words_up_to(a, 4)) {
    bool only_a = std::all_of(w.begin(), w.end(), [&](Letter x) { return x / 2 == 0; });
    CHECK(accepts(n0, w) == only_a);
  }

  const Alphabet& b = g->alphabet();
  SubgroupOracle diag = SubgroupOracle::cyclic(g, b.parse("a b"));
  Fsa n1 = neighborhood_automaton(*g, diag, 1);
  CHECK(accepts(n1, b.parse("a b")));
  CHECK_FALSE(accepts(n1, b.parse("a a b b")));
}

TEST_CASE("subgroup word automata") {
  ModelPtr f2 = builtin_model("f2"), g = builtin_model("z2*z");
  const Alphabet& a = f2->alphabet();
  SubgroupOracle ha = SubgroupOracle::cyclic(f2, a.parse("a"));
  Fsa w0 = subgroup_word_automaton(*f2, ha, 0);
  CHECK(accepts(w0, {}));
  CHECK(accepts(w0, a.parse("a a")));
  CHECK_FALSE(accepts(w0, a.parse("a b")));

  const Alphabet& b = g->alphabet();
  SubgroupOracle diag = SubgroupOracle::cyclic(g, b.parse("a b"));
  Word a5b5 = b.parse("a^5 b^5");
  CHECK_FALSE(accepts(subgroup_word_automaton(*g, diag, 3), a5b5));
  CHECK(diag.contains(a5b5));
  CHECK(is_geodesic(*g, a5b5));

  // Sandwich, monotonicity in k, endpoint soundness.
  SubgroupOracle hab = SubgroupOracle::cyclic(f2, a.parse("a b"));
  for (std::size_t k = 0; k <= 2; ++k) {
    Fsa wk = subgroup_word_automaton(*f2, hab, k), nk = neighborhood_automaton(*f2, hab, k);
    Fsa wk1 = subgroup_word_automaton(*f2, hab, k + 1);
    for (const Word& w : enumerate_words(wk, 6)) {
      CHECK(accepts(nk, w));
      CHECK(accepts(wk1, w));
      CHECK(hab.contains(w));
    }
  }
}

TEST_CASE("stable languages") {
  ModelPtr f2 = builtin_model("f2"), g = builtin_model("z2*z");
  const Alphabet& a = f2->alphabet();
  SubgroupOracle ha = SubgroupOracle::cyclic(f2, a.parse("a"));
  SubgroupLanguageResult r = stable_language(*f2, ha, {});
  CHECK(r.outcome == SubgroupOutcome::Unchecked);
  auto words = enumerate_words(r.language, 4);
  CHECK(words.size() == 9);
  for (const Word& w : words) CHECK(std::all_of(w.begin(), w.end(), [&](Letter x) { return x / 2 == 0; }));

  SubgroupOracle hab = SubgroupOracle::cyclic(f2, a.parse("a b"));
  SubgroupLanguageOptions o;
  o.k = 2;
  o.validation_depth = 8;
  SubgroupLanguageResult rab = stable_language(*f2, hab, o);
  CHECK(rab.outcome == SubgroupOutcome::Matched);
  CHECK(rab.missing_count == 0);
  CHECK(count_words(rab.language, 8).cumulative.back() == oracle_subgroup_words(*f2, hab, 8).size());

  const Alphabet& b = g->alphabet();
  SubgroupOracle diag = SubgroupOracle::cyclic(g, b.parse("a b"));
  for (std::size_t k = 0; k <= 4; ++k) {
    SubgroupLanguageOptions ok;
    ok.k = k;
    ok.validation_depth = 2 * (k + 2);
    SubgroupLanguageResult rk = stable_language(*g, diag, ok);
    CHECK(rk.missing_count > 0);
    CHECK_FALSE(accepts(rk.language, b.parse("a^" + std::to_string(k + 2) + " b^" + std::to_string(k + 2))));
  }
}

TEST_CASE("escalation") {
  ModelPtr f2 = builtin_model("f2"), g = builtin_model("z2*z");
  SubgroupLanguageOptions o;
  o.escalate = true;
  o.k_cap = 3;
  SubgroupLanguageResult r = stable_language(*f2, SubgroupOracle::cyclic(f2, f2->alphabet().parse("a b")), o);
  CHECK(r.outcome == SubgroupOutcome::Matched);
  SubgroupOracle diag = SubgroupOracle::cyclic(g, g->alphabet().parse("a b"));
  o.k_cap = 2;
  SubgroupLanguageResult bad = stable_language(*g, diag, o);
  CHECK(bad.outcome == SubgroupOutcome::Inconclusive);
  CHECK(to_string(bad.outcome) == "inconclusive");
  CHECK(bad.k_tried == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("unique representative subgroup languages") {
  ModelPtr f2 = builtin_model("f2");
  const Alphabet& a = f2->alphabet();
  auto counts = [&](const SubgroupOracle& h, std::size_t k) {
    SubgroupLanguageOptions o;
    o.k = k;
    return count_words(unique_rep_subgroup_language(*f2, h, o).language, 9).cumulative;
  };
  auto ca = counts(SubgroupOracle::cyclic(f2, a.parse("a")), 0);
  auto cab = counts(SubgroupOracle::cyclic(f2, a.parse("a b")), 2);
  auto triv = counts(SubgroupOracle::trivial(f2), 0);
  for (std::size_t n = 0; n <= 9; ++n) {
    CHECK(ca[n] == 2 * n + 1);
    CHECK(cab[n] == 2 * (n / 2) + 1);
    CHECK(triv[n] == 1);
  }
  auto brute = subgroup_growth_counts(*f2, SubgroupOracle::cyclic(f2, a.parse("a b")), 9);
  for (std::size_t n = 0; n <= 9; ++n) CHECK(cab[n] == brute[n]);
}

TEST_CASE("neighborhood bound") {
  ModelPtr f2 = builtin_model("f2"), z2 = builtin_model("z2");
  const Alphabet& a = f2->alphabet();
  SubgroupOracle ha = SubgroupOracle::cyclic(f2, a.parse("a"));
  SubgroupLanguageResult r = stable_language(*f2, ha, {});
  NeighborhoodReport rep = regularity_neighborhood_bound(r.language, *f2, ha, 8);
  CHECK(rep.passed());
  CHECK(rep.max_distance == 0);

  // A machine accepting "b a B" claims membership in <b>.
  SubgroupOracle hb = SubgroupOracle::cyclic(f2, a.parse("b"));
  FsaBuilder b(a.names());
  State s0 = b.add_state(true), s1 = b.add_state(), s2 = b.add_state(), s3 = b.add_state(true);
  b.add_transition(s0, a.letter("a"), s1);
  b.add_transition(s1, a.letter("b"), s2);
  b.add_transition(s2, a.letter("A"), s3);
  NeighborhoodReport bad = regularity_neighborhood_bound(std::move(b).build(), *f2, hb, 4);
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.outside_h.empty());

  SubgroupOracle hx = SubgroupOracle::cyclic(z2, z2->alphabet().parse("x"));
  SubgroupLanguageOptions o;
  o.k = 1;
  o.cone.m = 2;
  SubgroupLanguageResult rz = stable_language(*z2, hx, o);
  CHECK(regularity_neighborhood_bound(rz.language, *z2, hx, 8).passed());
}
