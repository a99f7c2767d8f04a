#include "geolang/filter.hpp"

#include <algorithm>

#include "geolang/error.hpp"

namespace geolang {

WindowFilter WindowFilter::syllable_bound(const GroupModel& model, std::size_t s) {
  if (s == 0) throw Error(ErrorKind::InvalidInput, "syllable bound must be positive");
  WindowFilter f;
  f.kind_ = FilterKind::SyllableBound;
  f.parameter_ = s;
  f.factor_ = model.free_factor_of_letters();
  const Alphabet& alphabet = model.alphabet();
  std::vector<int> generators_in_factor;
  f.generator_.resize(alphabet.size());
  for (Letter a = 0; a < alphabet.size(); ++a) {
    f.generator_[a] = std::min(a, alphabet.inverse(a));
    if (f.generator_[a] != a) continue;
    std::size_t k = static_cast<std::size_t>(f.factor_[a]);
    if (generators_in_factor.size() <= k) generators_in_factor.resize(k + 1, 0);
    ++generators_in_factor[k];
  }
  // A run with every generator at most s times has length at most k * s.
  int widest = *std::max_element(generators_in_factor.begin(), generators_in_factor.end());
  f.scale_ = static_cast<std::size_t>(widest) * s + 1;
  return f;
}

WindowFilter WindowFilter::commuting_block(const GroupModel& model, std::size_t s) {
  if (s == 0) throw Error(ErrorKind::InvalidInput, "commuting block bound must be positive");
  WindowFilter f;
  f.kind_ = FilterKind::CommutingBlock;
  f.parameter_ = s;
  f.scale_ = s + 1;
  std::size_t n = model.alphabet().size();
  f.commute_.assign(n, std::vector<bool>(n, false));
  for (Letter a = 0; a < n; ++a) {
    for (Letter b = 0; b < n; ++b) f.commute_[a][b] = model.generators_commute(a, b);
  }
  return f;
}

WindowFilter WindowFilter::parse(const GroupModel& model, const std::string& spec) {
  if (spec.empty() || spec == "trivial") return trivial();
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::size_t s = 0;
  if (colon != std::string::npos) {
    try {
      s = std::stoul(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad filter parameter in '" + spec + "'");
    }
  }
  if (name == "syllable") return syllable_bound(model, s);
  if (name == "commuting") return commuting_block(model, s);
  throw Error(ErrorKind::InvalidInput,
              "unknown filter '" + spec + "' (expected trivial, syllable:<s>, commuting:<s>)");
}

std::string WindowFilter::name() const {
  switch (kind_) {
    case FilterKind::Trivial: return "trivial";
    case FilterKind::SyllableBound: return "syllable:" + std::to_string(parameter_);
    case FilterKind::CommutingBlock: return "commuting:" + std::to_string(parameter_);
  }
  return "trivial";
}

bool WindowFilter::accepts_window(std::span<const Letter> window) const {
  switch (kind_) {
    case FilterKind::Trivial:
      return true;
    case FilterKind::SyllableBound: {
      std::size_t start = 0;
      for (std::size_t i = 0; i < window.size(); ++i) {
        if (i > 0 && factor_[window[i]] != factor_[window[i - 1]]) start = i;
        std::size_t uses = 0;
        for (std::size_t j = start; j <= i; ++j) uses += generator_[window[j]] == generator_[window[i]];
        if (uses > parameter_) return false;
      }
      return true;
    }
    case FilterKind::CommutingBlock: {
      for (std::size_t i = 0; i < window.size(); ++i) {
        std::size_t j = i + 1;
        for (; j < window.size(); ++j) {
          bool all = std::all_of(window.begin() + static_cast<std::ptrdiff_t>(i),
                                 window.begin() + static_cast<std::ptrdiff_t>(j),
                                 [&](Letter b) { return commute_[window[j]][b]; });
          if (!all) break;
        }
        if (j - i > parameter_) return false;
      }
      return true;
    }
  }
  return true;
}

bool WindowFilter::passes(const Word& w) const {
  if (scale_ == 0) return true;
  std::size_t len = std::min(scale_, w.size());
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    if (!accepts_window(std::span<const Letter>(w).subspan(i, len))) return false;
  }
  return true;
}

bool WindowFilter::passes_last(const Word& w) const {
  if (scale_ == 0 || w.empty()) return true;
  std::size_t len = std::min(scale_, w.size());
  return accepts_window(std::span<const Letter>(w).subspan(w.size() - len, len));
}

}  // namespace geolang
