// Test-only oracles that do not share code with the library's group models.
//
// RAAG word problem by pilings: one stack per generator.  Pushing x^e onto a
// piling either cancels against an x^-e on top of x's stack (popping the
// blockers it left on the stacks of generators not commuting with x) or
// pushes x^e and a blocker on each such stack.  Two words are equal iff
// their pilings are equal, and a word is geodesic iff no push cancels.

#ifndef GEOLANG_TESTS_ORACLE_HPP_
#define GEOLANG_TESTS_ORACLE_HPP_

#include <Eigen/Core>
#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "geolang/word.hpp"

namespace oracle {

struct Raag {
  std::vector<std::string> gens;
  std::vector<std::vector<bool>> commute;

  Raag(std::vector<std::string> g, const std::vector<std::pair<std::string, std::string>>& edges)
      : gens(std::move(g)), commute(gens.size(), std::vector<bool>(gens.size(), false)) {
    for (const auto& [x, y] : edges) {
      std::size_t i = index(x), j = index(y);
      commute[i][j] = commute[j][i] = true;
    }
  }

  static Raag free(std::vector<std::string> g) { return Raag(std::move(g), {}); }
  static Raag abelian(std::vector<std::string> g) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) edges.emplace_back(g[i], g[j]);
    }
    return Raag(std::move(g), edges);
  }

  std::size_t index(const std::string& name) const {
    return static_cast<std::size_t>(std::find(gens.begin(), gens.end(), name) - gens.begin());
  }
};

// (generator, +1 | -1)
using Letter = std::pair<std::size_t, int>;
using Piling = std::vector<std::vector<int>>;

// Lower-case names are generators, upper-case their inverses.
inline Letter decode(const Raag& g, const std::string& name) {
  std::string lower = name;
  for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  int sign = std::islower(static_cast<unsigned char>(name[0])) ? 1 : -1;
  return {g.index(lower), sign};
}

inline std::vector<Letter> decode(const Raag& g, const geolang::Alphabet& a, const geolang::Word& w) {
  std::vector<Letter> out;
  for (geolang::Letter x : w) out.push_back(decode(g, a.name(x)));
  return out;
}

// Returns false when the push cancelled.
inline bool push(const Raag& g, Piling& p, Letter x) {
  auto& own = p[x.first];
  if (!own.empty() && own.back() == -x.second) {
    own.pop_back();
    for (std::size_t y = 0; y < g.gens.size(); ++y) {
      if (y != x.first && !g.commute[x.first][y]) p[y].pop_back();
    }
    return false;
  }
  own.push_back(x.second);
  for (std::size_t y = 0; y < g.gens.size(); ++y) {
    if (y != x.first && !g.commute[x.first][y]) p[y].push_back(0);
  }
  return true;
}

inline Piling pile(const Raag& g, const std::vector<Letter>& w, bool* geodesic = nullptr) {
  Piling p(g.gens.size());
  bool ok = true;
  for (Letter x : w) ok = push(g, p, x) && ok;
  if (geodesic) *geodesic = ok;
  return p;
}

inline std::size_t length(const Piling& p) {
  std::size_t n = 0;
  for (const auto& s : p) n += static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](int v) { return v != 0; }));
  return n;
}

inline std::vector<Letter> all_letters(const Raag& g) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < g.gens.size(); ++i) {
    out.push_back({i, 1});
    out.push_back({i, -1});
  }
  return out;
}

// |S(e, n)| for n = 0..r by BFS over pilings.
inline std::vector<std::size_t> sphere_sizes(const Raag& g, std::size_t r) {
  std::set<Piling> seen{Piling(g.gens.size())};
  std::vector<Piling> frontier{Piling(g.gens.size())};
  std::vector<std::size_t> out{1};
  for (std::size_t n = 1; n <= r; ++n) {
    std::vector<Piling> next;
    for (const Piling& p : frontier) {
      for (Letter x : all_letters(g)) {
        Piling q = p;
        push(g, q, x);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    out.push_back(next.size());
    frontier = std::move(next);
  }
  return out;
}

// Number of geodesic words of each length 0..n.
inline std::vector<std::size_t> geodesic_word_counts(const Raag& g, std::size_t n) {
  std::vector<std::size_t> out(n + 1, 0);
  auto letters = all_letters(g);
  auto rec = [&](auto&& self, Piling& p, std::size_t len) -> void {
    ++out[len];
    if (len == n) return;
    for (Letter x : letters) {
      Piling q = p;
      if (push(g, q, x)) self(self, q, len + 1);
    }
  };
  Piling p(g.gens.size());
  rec(rec, p, 0);
  return out;
}

// Sanov's faithful representation of F2 = <a, b> in SL(2, Z).
using Mat2 = Eigen::Matrix<long long, 2, 2>;

inline Mat2 sanov(const std::string& name) {
  Mat2 m;
  if (name == "a") m << 1, 2, 0, 1;
  if (name == "A") m << 1, -2, 0, 1;
  if (name == "b") m << 1, 0, 2, 1;
  if (name == "B") m << 1, 0, -2, 1;
  return m;
}

inline Mat2 sanov(const geolang::Alphabet& a, const geolang::Word& w) {
  Mat2 m = Mat2::Identity();
  for (geolang::Letter x : w) m = m * sanov(a.name(x));
  return m;
}

// Reduced words in a free group of rank r: 1, 2r, 2r(2r-1), ...
inline std::vector<unsigned long long> reduced_word_counts(std::size_t rank, std::size_t n) {
  std::vector<unsigned long long> out{1};
  unsigned long long c = 2 * rank;
  for (std::size_t k = 1; k <= n; ++k, c *= 2 * rank - 1) out.push_back(c);
  return out;
}

}  // namespace oracle

#endif  // GEOLANG_TESTS_ORACLE_HPP_
