#include "doctest.h"
#include "geolang/error.hpp"
#include "geolang/group_spec.hpp"
#include "geolang/scenario.hpp"

using namespace geolang;

TEST_CASE("group specs from JSON") {
  GroupSpec spec = group_spec_from_json(R"({
    "name": "pentagon-ish",
    "kind": "raag",
    "generators": ["a", "b", "c"],
    "commutations": [["a", "b"]],
    "order": ["c", "C", "a", "A", "b", "B"],
    "subgroups": {
      "diag": {"kind": "cyclic", "words": ["a b"]},
      "ac": {"kind": "factor", "generators": ["a", "c"]}
    }
  })");
  CHECK(spec.name == "pentagon-ish");
  const Alphabet& a = spec.model->alphabet();
  CHECK(a.rank(a.letter("c")) == 0);
  CHECK(spec.model->normal_form(a.parse("a b A")) == a.parse("b"));
  CHECK(spec.subgroup("diag").contains(a.parse("b a")));
  CHECK_FALSE(spec.subgroup("ac").contains(a.parse("b")));
  CHECK(spec.subgroup("cyclic:c@2").distortion() == 2);

  GroupSpec prod = group_spec_from_json(R"({"kind": "free_product", "factors": [
    {"kind": "abelian", "generators": ["a", "b"]}, {"kind": "free", "generators": ["c"]}]})");
  CHECK(prod.model->alphabet().size() == 6);

  GroupSpec fin = group_spec_from_json(R"({"kind": "finite", "table": [[0, 1], [1, 0]],
                                           "elements": {"s": 1}})");
  CHECK(fin.model->normal_form(fin.model->alphabet().parse("s s s")).size() == 1);

  CHECK(load_group_spec("builtin:z2").model->alphabet().size() == 4);
  CHECK(load_group_spec("f2xz").model->alphabet().size() == 6);
  for (const char* bad : {"{", R"({"kind": "klein"})", R"({"kind": "free_product"})"}) {
    try {
      group_spec_from_json(bad);
      FAIL("accepted a bad spec");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidInput);
    }
  }
  CHECK_THROWS_AS(load_group_spec("no-such-group"), Error);
  CHECK_THROWS_AS(parse_subgroup(builtin_model("f2"), "sideways:a"), Error);
}

TEST_CASE("every shipped scenario passes") {
  for (const std::string& name : scenario_names()) {
    CAPTURE(name);
    Report r = run_scenario(name);
    CHECK(r.passed());
    if (!r.passed()) MESSAGE(r.text());
  }
  try {
    run_scenario("nope");
    FAIL("expected UnknownScenario");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownScenario);
  }
}

TEST_CASE("reports are deterministic") {
  CHECK(run_scenario("z2-shortlex").json() == run_scenario("z2-shortlex").json());
  ValidateConfig c;
  c.entries = {{"f2", "trivial", 1}, {"z2", "trivial", 2}, {"z2*z", "syllable:1", 2}};
  c.depth = 6;
  c.threads = 3;
  Report a = validate_all(c);
  c.threads = 1;
  Report b = validate_all(c);
  CHECK(a.passed());
  CHECK(a.json() == b.json());
  CHECK(a.text() == b.text());
}

TEST_CASE("validation surfaces stage errors") {
  ValidateConfig c;
  c.entries = {{"s3", "trivial", 1}, {"f2", "trivial", 1}};
  c.auto_escalate = false;
  c.depth = 6;
  Report r = validate_all(c);
  CHECK_FALSE(r.passed());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].kind == ErrorKind::InconsistentLocality);
  CHECK(r.failures[0].stage.find("cone build") != std::string::npos);
  CHECK(r.failures[0].message.find("'") != std::string::npos);  // witness words

  c.entries = {{"f3", "trivial", 1}};
  c.depth = 30;
  Report over = validate_all(c);
  REQUIRE(over.failures.size() == 1);
  CHECK(over.failures[0].kind == ErrorKind::BudgetExceeded);
  CHECK(over.failures[0].stage.find("oracle enumeration") != std::string::npos);
}
