// Rational generating functions fitted exactly to integer count sequences.

#ifndef GEOLANG_SERIES_HPP_
#define GEOLANG_SERIES_HPP_

#include <string>
#include <vector>

#include "geolang/fsa.hpp"

namespace geolang {

//! sum f(n) x^n = P(x) / Q(x), integer coefficients, Q(0) > 0, lowest terms
//! in the sense that the recurrence order is minimal.
struct RationalSeries {
  std::vector<Count> numerator;    // P, constant term first
  std::vector<Count> denominator;  // Q, constant term first
  std::size_t order = 0;           // recurrence order

  //! First n + 1 coefficients of P / Q.
  std::vector<Count> expand(std::size_t n) const;
  std::string to_string() const;
};

std::string format_polynomial(const std::vector<Count>& coefficients, const std::string& var = "x");

//! Minimal linear recurrence (Berlekamp-Massey over the rationals) fitted to
//! all but the last `holdout` terms, then checked exactly against every
//! term.  Throws NoRecurrence when the order would exceed `max_order`, the
//! fit is underdetermined, or a held-out term is mispredicted; InvalidInput
//! when fewer than holdout + 2 terms are given.
RationalSeries rational_series(const std::vector<Count>& counts, std::size_t max_order,
                               std::size_t holdout = 10);

}  // namespace geolang

#endif  // GEOLANG_SERIES_HPP_
