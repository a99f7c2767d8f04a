// Alphabets with an inverse pairing and a total order, and words over them.

#ifndef GEOLANG_WORD_HPP_
#define GEOLANG_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geolang {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w) {
      h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h ^ w.size();
  }
};

//! Shortlex comparison of two words given the rank of each letter.
bool shortlex_less(const Word& u, const Word& v, std::span<const std::size_t> rank);

//! A finite symmetric generating set.
//!
//! Symbols are indexed 0..size()-1.  Every symbol has an inverse symbol
//! (possibly itself, for elements of order two).  The total order used for
//! lexicographic comparisons is stored as a rank per symbol; it defaults to
//! the index order.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> names, std::vector<Letter> inverse);

  //! Generators with formal inverses named by `inverse_names`; the symbol
  //! order is g0, g0^-1, g1, g1^-1, ...
  static Alphabet with_inverses(const std::vector<std::string>& generators,
                                const std::vector<std::string>& inverse_names);

  //! Default inverse name: upper case for single lower-case letters,
  //! otherwise `name^-1`.
  static std::string default_inverse_name(const std::string& name);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  Letter inverse(Letter a) const { return inverse_.at(a); }
  std::size_t rank(Letter a) const { return rank_.at(a); }
  std::span<const std::size_t> ranks() const noexcept { return rank_; }

  std::optional<Letter> find(std::string_view name) const;
  Letter letter(std::string_view name) const;  // throws UnknownSymbol

  //! Letters sorted by the total order.
  std::vector<Letter> ordered_letters() const;

  //! Replace the total order; `order` must list every symbol exactly once.
  void set_order(const std::vector<std::string>& order);

  //! Parse a word.  Tokens are whitespace separated symbol names, `x^k` for
  //! integer powers (negative powers use the inverse symbol), and
  //! parenthesised groups `(a b)^k`.  "" and "e" denote the empty word.
  Word parse(std::string_view text) const;

  //! Space separated symbol names; the empty word prints as "e".
  std::string format(const Word& w) const;

  Word inverse_word(const Word& w) const;

  bool operator==(const Alphabet& other) const {
    return names_ == other.names_ && inverse_ == other.inverse_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Letter> inverse_;
  std::vector<std::size_t> rank_;
};

Word concat(const Word& u, const Word& v);

}  // namespace geolang

#endif  // GEOLANG_WORD_HPP_
