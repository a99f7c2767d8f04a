#include "geolang/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <sstream>

#include "geolang/error.hpp"

namespace geolang {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Connection polynomial C (C[0] = 1) and length L with
// sum_{i=0..L} C[i] s[n-i] = 0 for all L <= n < s.size().
std::pair<std::vector<Rational>, std::size_t> berlekamp_massey(const std::vector<Rational>& s) {
  std::vector<Rational> c{1}, b{1};
  std::size_t length = 0;
  std::size_t shift = 1;
  Rational last_discrepancy = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational d = s[n];
    for (std::size_t i = 1; i <= length && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    std::vector<Rational> t = c;
    Rational coef = d / last_discrepancy;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= coef * b[i];
    if (2 * length <= n) {
      length = n + 1 - length;
      b = std::move(t);
      last_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(length + 1, Rational(0));
  return {c, length};
}


void strip(std::vector<Count>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<Count> RationalSeries::expand(std::size_t n) const {
  // Q f = P with Q[0] dividing every step for integer sequences.
  std::vector<Count> f(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    Count acc = k < numerator.size() ? numerator[k] : Count(0);
    for (std::size_t i = 1; i < denominator.size() && i <= k; ++i) acc -= denominator[i] * f[k - i];
    if (acc % denominator[0] != 0) {
      throw Error(ErrorKind::NoRecurrence, "series does not expand to integers");
    }
    f[k] = acc / denominator[0];
  }
  return f;
}

std::string format_polynomial(const std::vector<Count>& coefficients, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    Count c = coefficients[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Count mag = negative ? Count(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string RationalSeries::to_string() const {
  return "(" + format_polynomial(numerator) + ") / (" + format_polynomial(denominator) + ")";
}

RationalSeries rational_series(const std::vector<Count>& counts, std::size_t max_order,
                               std::size_t holdout) {
  if (counts.size() < holdout + 2) {
    throw Error(ErrorKind::InvalidInput, "need at least " + std::to_string(holdout + 2) +
                                             " terms, got " + std::to_string(counts.size()));
  }
  const std::size_t fit = counts.size() - holdout;
  std::vector<Rational> s;
  for (std::size_t i = 0; i < fit; ++i) s.emplace_back(counts[i]);
  auto [c, length] = berlekamp_massey(s);
  if (length > max_order) {
    throw Error(ErrorKind::NoRecurrence, "no recurrence of order <= " + std::to_string(max_order) +
                                             " (needs " + std::to_string(length) + ")");
  }
  if (2 * length > fit) {
    throw Error(ErrorKind::NoRecurrence, "order " + std::to_string(length) +
                                             " is underdetermined by " + std::to_string(fit) +
                                             " fitted terms");
  }

  // Clear denominators of Q, then P = (Q * f) truncated below degree L.
  Count scale = 1;
  for (const Rational& q : c) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
  std::vector<Count> q;
  for (const Rational& x : c) q.push_back(boost::multiprecision::numerator(x) * (scale / boost::multiprecision::denominator(x)));
  Count g = 0;
  for (const Count& x : q) g = boost::multiprecision::gcd(g, x < 0 ? Count(-x) : x);
  if (g > 1) {
    for (Count& x : q) x /= g;
  }
  if (q[0] < 0) {
    for (Count& x : q) x = -x;
  }
  std::vector<Count> p(std::max<std::size_t>(length, 1), 0);
  for (std::size_t k = 0; k < p.size() && k < counts.size(); ++k) {
    for (std::size_t i = 0; i <= k && i < q.size(); ++i) p[k] += q[i] * counts[k - i];
  }
  strip(p);
  strip(q);

  RationalSeries out{std::move(p), std::move(q), length};
  std::vector<Count> predicted;
  try {
    predicted = out.expand(counts.size() - 1);
  } catch (const Error&) {
    throw Error(ErrorKind::NoRecurrence, "fitted series is not integral");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (predicted[i] != counts[i]) {
      throw Error(ErrorKind::NoRecurrence,
                  "fitted recurrence mispredicts term " + std::to_string(i) + " (" +
                      predicted[i].str() + " vs " + counts[i].str() + ")");
    }
  }
  return out;
}

}  // namespace geolang
