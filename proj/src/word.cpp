#include "geolang/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "geolang/error.hpp"

namespace geolang {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InconsistentLocality: return "InconsistentLocality";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::NoRecurrence: return "NoRecurrence";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::NondeterministicInput: return "NondeterministicInput";
    case ErrorKind::NotTrimmed: return "NotTrimmed";
    case ErrorKind::NotGeodesic: return "NotGeodesic";
    case ErrorKind::FilterRejected: return "FilterRejected";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::PrefixTooShort: return "PrefixTooShort";
    case ErrorKind::NotAccepted: return "NotAccepted";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::NonStabilization: return "NonStabilization";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

bool shortlex_less(const Word& u, const Word& v, std::span<const std::size_t> rank) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return rank[u[i]] < rank[v[i]];
  }
  return false;
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<Letter> inverse)
    : names_(std::move(names)), inverse_(std::move(inverse)), rank_(names_.size()) {
  if (names_.size() != inverse_.size()) {
    throw Error(ErrorKind::InvalidInput, "inverse pairing size differs from symbol count");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty() || !seen.insert(names_[i]).second) {
      throw Error(ErrorKind::InvalidInput, "symbol names must be distinct and nonempty");
    }
    if (inverse_[i] >= names_.size() || inverse_[inverse_[i]] != i) {
      throw Error(ErrorKind::InvalidInput, "inverse pairing is not an involution at " + names_[i]);
    }
  }
  std::iota(rank_.begin(), rank_.end(), std::size_t{0});
}

std::string Alphabet::default_inverse_name(const std::string& name) {
  if (name.size() == 1 && std::islower(static_cast<unsigned char>(name[0]))) {
    return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))));
  }
  return name + "^-1";
}

Alphabet Alphabet::with_inverses(const std::vector<std::string>& generators,
                                 const std::vector<std::string>& inverse_names) {
  std::vector<std::string> names;
  std::vector<Letter> inverse;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto idx = static_cast<Letter>(names.size());
    names.push_back(generators[i]);
    names.push_back(i < inverse_names.size() ? inverse_names[i]
                                             : default_inverse_name(generators[i]));
    inverse.push_back(idx + 1);
    inverse.push_back(idx);
  }
  return Alphabet(std::move(names), std::move(inverse));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw Error(ErrorKind::UnknownSymbol, "'" + std::string(name) + "' is not in the alphabet");
}

std::vector<Letter> Alphabet::ordered_letters() const {
  std::vector<Letter> out(size());
  std::iota(out.begin(), out.end(), Letter{0});
  std::sort(out.begin(), out.end(), [&](Letter a, Letter b) { return rank_[a] < rank_[b]; });
  return out;
}

void Alphabet::set_order(const std::vector<std::string>& order) {
  if (order.size() != size()) {
    throw Error(ErrorKind::InvalidInput, "order must list every symbol exactly once");
  }
  std::vector<std::size_t> rank(size(), size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Letter a = letter(order[i]);
    if (rank[a] != size()) throw Error(ErrorKind::InvalidInput, "symbol repeated in order");
    rank[a] = i;
  }
  rank_ = std::move(rank);
}

Word Alphabet::inverse_word(const Word& w) const {
  Word out(w.rbegin(), w.rend());
  for (Letter& a : out) a = inverse(a);
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(const Alphabet& alphabet, std::string_view text) : alphabet_(alphabet), text_(text) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return w;
  }

 private:
  Word sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      Word item;
      if (text_[pos_] == '(') {
        ++pos_;
        item = sequence();
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
        if (auto p = power()) item = raise(item, *p);
      } else {
        item = symbol();
      }
      out.insert(out.end(), item.begin(), item.end());
    }
  }

  Word symbol() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    std::string_view token = text_.substr(start, pos_ - start);
    if (token == "e" && !alphabet_.find("e")) return {};
    if (auto a = alphabet_.find(token)) return {*a};
    // Split off a trailing power "^k".
    auto caret = token.rfind('^');
    if (caret == std::string_view::npos || caret == 0) {
      throw Error(ErrorKind::UnknownSymbol, "'" + std::string(token) + "' is not in the alphabet");
    }
    Letter a = alphabet_.letter(token.substr(0, caret));
    long k = to_int(token.substr(caret + 1));
    return raise(Word{a}, k);
  }

  std::optional<long> power() {
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return to_int(text_.substr(start, pos_ - start));
    }
    return std::nullopt;
  }

  long to_int(std::string_view s) const {
    try {
      std::size_t used = 0;
      long k = std::stol(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
      return k;
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad exponent '" + std::string(s) + "'");
    }
  }

  Word raise(const Word& w, long k) const {
    Word base = k < 0 ? alphabet_.inverse_word(w) : w;
    Word out;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InvalidInput, "cannot parse word '" + std::string(text_) + "': " + what);
  }

  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Alphabet::parse(std::string_view text) const { return WordParser(*this, text).parse(); }

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace geolang
