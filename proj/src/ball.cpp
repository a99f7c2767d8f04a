#include "geolang/ball.hpp"

#include <cstdlib>
#include <functional>
#include <string>
#include <unordered_set>

#include "geolang/error.hpp"

namespace geolang {

std::size_t env_budget(const char* name, std::size_t fallback) {
  if (const char* env = std::getenv(name)) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, std::string(name) + " is not a number");
    }
  }
  return fallback;
}

std::size_t default_ball_budget() { return env_budget("GEOLANG_BALL_BUDGET", 2'000'000); }

std::size_t geodesic_length(const GroupModel& model, const Word& w) {
  return model.normal_form(w).size();
}

bool is_geodesic(const GroupModel& model, const Word& w) {
  return geodesic_length(model, w) == w.size();
}

std::optional<std::size_t> Ball::length_of(const Word& normal_form) const {
  auto it = index_.find(normal_form);
  if (it == index_.end()) return std::nullopt;
  return length_[it->second];
}

std::optional<std::size_t> Ball::index_of(const Word& normal_form) const {
  auto it = index_.find(normal_form);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
  std::vector<std::size_t> out(radius_ + 1, 0);
  for (std::size_t len : length_) ++out[len];
  return out;
}

Ball enumerate_ball(const GroupModel& model, std::size_t radius, std::size_t budget) {
  Ball ball;
  ball.radius_ = radius;
  ball.elements_.push_back({});
  ball.length_.push_back(0);
  ball.index_.emplace(Word{}, 0);
  std::size_t sphere_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    std::size_t sphere_end = ball.elements_.size();
    for (std::size_t i = sphere_begin; i < sphere_end; ++i) {
      for (Letter a = 0; a < model.alphabet().size(); ++a) {
        Word next = ball.elements_[i];
        next.push_back(a);
        next = model.normal_form(next);
        if (ball.index_.count(next)) continue;
        if (ball.elements_.size() >= budget) {
          throw Error(ErrorKind::BudgetExceeded,
                      "ball of radius " + std::to_string(radius) + " exceeds " +
                          std::to_string(budget) + " elements");
        }
        ball.index_.emplace(next, ball.elements_.size());
        ball.elements_.push_back(std::move(next));
        ball.length_.push_back(r);
      }
    }
    sphere_begin = sphere_end;
  }
  return ball;
}

namespace {

// Depth-first extension of geodesic, filter-passing words; `keep_prefix`
// prunes subtrees and `emit` decides which visited words are reported.
void extend_geodesics(const GroupModel& model, std::size_t n, const WindowFilter& filter,
                      std::size_t budget, const std::function<bool(const Word&)>& keep_prefix,
                      const std::function<bool(const Word&)>& emit,
                      std::vector<std::vector<Word>>& by_length) {
  std::size_t count = 0;
  Word current;
  std::function<void()> visit = [&]() {
    if (emit(current)) {
      if (++count > budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    "more than " + std::to_string(budget) + " geodesic words of length <= " +
                        std::to_string(n));
      }
      by_length[current.size()].push_back(current);
    }
    if (current.size() == n) return;
    for (Letter a : model.alphabet().ordered_letters()) {
      current.push_back(a);
      if (filter.passes_last(current) && is_geodesic(model, current) && keep_prefix(current)) {
        visit();
      }
      current.pop_back();
    }
  };
  visit();
}

std::vector<Word> flatten(std::vector<std::vector<Word>>& by_length) {
  std::vector<Word> out;
  for (auto& layer : by_length) {
    for (auto& w : layer) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::vector<Word> enumerate_geodesic_words(const GroupModel& model, std::size_t n,
                                           const WindowFilter& filter, std::size_t budget) {
  // DFS in symbol order visits each length stratum in lexicographic order.
  std::vector<std::vector<Word>> by_length(n + 1);
  extend_geodesics(
      model, n, filter, budget, [](const Word&) { return true; },
      [](const Word&) { return true; }, by_length);
  return flatten(by_length);
}

std::vector<Word> enumerate_geodesic_words_to(const GroupModel& model,
                                              const std::vector<Word>& targets, std::size_t n,
                                              const WindowFilter& filter, std::size_t budget) {
  const Alphabet& alphabet = model.alphabet();
  std::unordered_set<Word, WordHash> goals;
  // layers[l]: elements of length l lying on a geodesic from e to some goal.
  std::vector<std::unordered_set<Word, WordHash>> layers(n + 1);
  for (const Word& t : targets) {
    Word nf = model.normal_form(t);
    if (nf.size() > n) continue;
    goals.insert(nf);
    layers[nf.size()].insert(nf);
  }
  if (goals.empty()) return {};
  for (std::size_t l = n; l > 0; --l) {
    for (const Word& x : layers[l]) {
      for (Letter a = 0; a < alphabet.size(); ++a) {
        Word y = x;
        y.push_back(a);
        y = model.normal_form(y);
        if (y.size() + 1 == l) layers[l - 1].insert(std::move(y));
      }
    }
  }
  auto on_some_geodesic = [&](const Word& prefix) {
    return layers[prefix.size()].count(model.normal_form(prefix)) != 0;
  };
  auto at_goal = [&](const Word& w) { return goals.count(model.normal_form(w)) != 0; };
  std::vector<std::vector<Word>> by_length(n + 1);
  extend_geodesics(model, n, filter, budget, on_some_geodesic, at_goal, by_length);
  return flatten(by_length);
}

}  // namespace geolang
