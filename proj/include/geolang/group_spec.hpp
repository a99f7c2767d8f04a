// Loading groups and subgroups from JSON files or built-in names.
//
// Schema (all keys except "kind" optional where it makes sense):
//
//   {
//     "name": "z2*z",
//     "kind": "free" | "abelian" | "raag" | "free_product" | "direct_product" | "finite"
//             | "builtin",
//     "builtin": "f2",                          // kind builtin
//     "generators": ["a", "b", "c"],            // free, abelian, raag
//     "inverses": ["A", "B", "C"],              // default: upper-cased name
//     "commutations": [["a", "b"]],             // raag
//     "factors": [ <group spec>, ... ],         // products
//     "table": [[0, 1], [1, 0]],                // finite; element 0 is e
//     "elements": {"s": 1},                     // finite: generator -> element
//     "order": ["a", "A", "b", "B"],            // symbol order for lex comparisons
//     "subgroups": {
//       "diag": {"kind": "cyclic", "words": ["a b"], "distortion": 3},
//       "ab":   {"kind": "factor", "generators": ["a", "b"]},
//       "h":    {"kind": "generated", "words": ["a b", "c"], "distortion": 3},
//       "one":  {"kind": "trivial"}
//     }
//   }

#ifndef GEOLANG_GROUP_SPEC_HPP_
#define GEOLANG_GROUP_SPEC_HPP_

#include <map>
#include <string>

#include "geolang/group.hpp"
#include "geolang/subgroup.hpp"

namespace geolang {

struct GroupSpec {
  std::string name;
  ModelPtr model;
  std::map<std::string, SubgroupOracle> subgroups;

  //! A named subgroup, or an inline expression (see parse_subgroup).
  SubgroupOracle subgroup(const std::string& name_or_expression) const;
};

GroupSpec group_spec_from_json(const std::string& text);

//! A path to a JSON file, "builtin:<name>", or a bare built-in name.
GroupSpec load_group_spec(const std::string& source);

//! "trivial", "whole", "cyclic:<word>", "factor:<gen>,<gen>",
//! "generated:<word>;<word>", optionally followed by "@<distortion>".
SubgroupOracle parse_subgroup(ModelPtr model, const std::string& expression);

}  // namespace geolang

#endif  // GEOLANG_GROUP_SPEC_HPP_
