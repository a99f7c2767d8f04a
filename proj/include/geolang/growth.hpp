// Growth of regular languages: transition-count matrices, Perron-Frobenius
// rates, the free-factor extension of a subgroup machine and growth-gap
// verdicts.

#ifndef GEOLANG_GROWTH_HPP_
#define GEOLANG_GROWTH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geolang/fsa.hpp"
#include "geolang/series.hpp"
#include "geolang/subgroup.hpp"

namespace geolang {

//! Row-major square matrix indexed by states.
using CountMatrix = std::vector<std::vector<std::uint64_t>>;

//! Entry (i, j) is the number of labelled transitions i -> j.  An empty
//! language gives the 0 x 0 matrix.  Throws NotTrimmed,
//! NondeterministicInput.
CountMatrix count_matrix(const Fsa& fsa);

//! The 0/1 variant: entry is 1 when some transition i -> j exists.
CountMatrix adjacency_matrix01(const Fsa& fsa);

struct PfEstimate {
  double value = 0;  // midpoint of the final bracket
  double lower = 0;
  double upper = 0;
  std::size_t iterations = 0;
};

//! Spectral radius.  Each strongly connected component is handled
//! separately by power iteration on B + I with Collatz-Wielandt bounds, so
//! periodic and reducible matrices converge.  Throws NoConvergence (with the
//! best bracket) after `max_iterations` on some component.
PfEstimate pf_eigenvalue(const CountMatrix& m, double tol = 1e-9,
                         std::size_t max_iterations = 100'000);

//! pf_eigenvalue(count_matrix(trim(fsa))).
PfEstimate growth_rate(const Fsa& fsa, double tol = 1e-9);

//! For every accept state s a fresh chain spelling w from s back to the
//! initial state; the initial state becomes accepting.  Throws EmptyWord.
Fsa extend_with_free_factor(const Fsa& j, const Word& w);

struct GapVerdict {
  bool pass = false;
  double sub_rate = 0;
  double sup_rate = 0;
  double margin = 0;
};

//! pass iff pf(sub) + margin <= pf(sup).
GapVerdict strict_gap_check(const Fsa& sub, const Fsa& sup, double margin);

//! |B(e, n) ∩ H| for n = 0..max_n (brute force).
std::vector<std::size_t> subgroup_growth_counts(const GroupModel& model, const SubgroupOracle& h,
                                                std::size_t max_n);

struct GrowthReport {
  std::size_t states = 0;  // after trimming
  GrowthCounts counts;
  std::optional<PfEstimate> pf;
  std::optional<RationalSeries> sphere_series;
  std::optional<RationalSeries> cumulative_series;
  std::string series_error;  // set when a requested fit failed
};

//! Counts up to `terms`; the series fits use order caps of the state count
//! (sphere) and state count + 1 (cumulative).
GrowthReport growth_report(const Fsa& fsa, std::size_t terms, bool with_pf, bool with_series);

}  // namespace geolang

#endif  // GEOLANG_GROWTH_HPP_
