#include "geolang/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "geolang/error.hpp"

namespace geolang {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Free: return "free";
    case ModelKind::Abelian: return "abelian";
    case ModelKind::Raag: return "raag";
    case ModelKind::FreeProduct: return "free_product";
    case ModelKind::DirectProduct: return "direct_product";
    case ModelKind::Finite: return "finite";
  }
  return "unknown";
}

void GroupModel::check_letters(const Word& w) const {
  for (Letter a : w) {
    if (a >= alphabet_.size()) {
      throw Error(ErrorKind::UnknownSymbol, "letter index " + std::to_string(a) +
                                                " is outside an alphabet of size " +
                                                std::to_string(alphabet_.size()));
    }
  }
}

Word GroupModel::normal_form(const Word& w) const {
  check_letters(w);
  return reduce(w);
}

std::vector<int> GroupModel::free_factor_of_letters() const {
  return std::vector<int>(alphabet_.size(), 0);
}

bool GroupModel::generators_commute(Letter, Letter) const { return false; }

namespace {

std::string join_generators(const Alphabet& alphabet) {
  std::string out;
  for (Letter a = 0; a < alphabet.size(); a += 2) {
    if (!out.empty()) out += ",";
    out += alphabet.name(a);
  }
  return out;
}

}  // namespace

// --- free -------------------------------------------------------------------

FreeGroup::FreeGroup(const std::vector<std::string>& generators,
                     const std::vector<std::string>& inverse_names)
    : GroupModel(Alphabet::with_inverses(generators, inverse_names)) {}

std::string FreeGroup::describe() const { return "free<" + join_generators(alphabet()) + ">"; }

std::vector<int> FreeGroup::free_factor_of_letters() const {
  std::vector<int> out(alphabet().size());
  for (Letter a = 0; a < out.size(); ++a) out[a] = static_cast<int>(a / 2);
  return out;
}

Word FreeGroup::reduce(const Word& w) const {
  Word out;
  for (Letter a : w) {
    if (!out.empty() && out.back() == alphabet().inverse(a)) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

// --- abelian ----------------------------------------------------------------

AbelianGroup::AbelianGroup(const std::vector<std::string>& generators,
                           const std::vector<std::string>& inverse_names)
    : GroupModel(Alphabet::with_inverses(generators, inverse_names)) {}

std::string AbelianGroup::describe() const {
  return "abelian<" + join_generators(alphabet()) + ">";
}

std::vector<int> AbelianGroup::free_factor_of_letters() const {
  return std::vector<int>(alphabet().size(), 0);
}

bool AbelianGroup::generators_commute(Letter a, Letter b) const { return a / 2 != b / 2; }

Word AbelianGroup::reduce(const Word& w) const {
  std::vector<long> exponent(alphabet().size() / 2, 0);
  for (Letter a : w) exponent[a / 2] += (a % 2 == 0) ? 1 : -1;
  Word out;
  for (std::size_t g = 0; g < exponent.size(); ++g) {
    auto letter = static_cast<Letter>(2 * g + (exponent[g] < 0 ? 1 : 0));
    out.insert(out.end(), static_cast<std::size_t>(std::labs(exponent[g])), letter);
  }
  return out;
}

// --- raag -------------------------------------------------------------------

RaagGroup::RaagGroup(const std::vector<std::string>& generators,
                     const std::vector<std::pair<std::string, std::string>>& commuting,
                     const std::vector<std::string>& inverse_names)
    : GroupModel(Alphabet::with_inverses(generators, inverse_names)),
      adjacent_(generators.size(), std::vector<bool>(generators.size(), false)) {
  for (const auto& [x, y] : commuting) {
    auto gx = std::find(generators.begin(), generators.end(), x);
    auto gy = std::find(generators.begin(), generators.end(), y);
    if (gx == generators.end() || gy == generators.end()) {
      throw Error(ErrorKind::UnknownSymbol, "commutation " + x + "," + y + " names a non-generator");
    }
    if (gx == gy) throw Error(ErrorKind::InvalidInput, "commutation graph has a loop at " + x);
    auto i = static_cast<std::size_t>(gx - generators.begin());
    auto j = static_cast<std::size_t>(gy - generators.begin());
    adjacent_[i][j] = adjacent_[j][i] = true;
  }
}

std::string RaagGroup::describe() const {
  std::string out = "raag<" + join_generators(alphabet()) + " |";
  for (std::size_t i = 0; i < adjacent_.size(); ++i) {
    for (std::size_t j = i + 1; j < adjacent_.size(); ++j) {
      if (adjacent_[i][j]) {
        out += " [" + alphabet().name(static_cast<Letter>(2 * i)) + "," +
               alphabet().name(static_cast<Letter>(2 * j)) + "]";
      }
    }
  }
  return out + ">";
}

std::vector<int> RaagGroup::free_factor_of_letters() const {
  std::size_t n = adjacent_.size();
  std::vector<int> component(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    std::deque<std::size_t> queue{s};
    component[s] = next;
    while (!queue.empty()) {
      std::size_t g = queue.front();
      queue.pop_front();
      for (std::size_t h = 0; h < n; ++h) {
        if (adjacent_[g][h] && component[h] < 0) {
          component[h] = next;
          queue.push_back(h);
        }
      }
    }
    ++next;
  }
  std::vector<int> out(alphabet().size());
  for (Letter a = 0; a < out.size(); ++a) out[a] = component[generator(a)];
  return out;
}

bool RaagGroup::generators_commute(Letter a, Letter b) const {
  return adjacent_[generator(a)][generator(b)];
}

Word RaagGroup::reduce(const Word& w) const {
  // Cancellation: a new letter cancels the last occurrence of its inverse if
  // every letter after that occurrence commutes with it.
  Word reduced;
  for (Letter a : w) {
    bool cancelled = false;
    for (std::size_t i = reduced.size(); i-- > 0;) {
      Letter b = reduced[i];
      if (b == alphabet().inverse(a)) {
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
        cancelled = true;
        break;
      }
      if (!generators_commute(a, b)) break;
    }
    if (!cancelled) reduced.push_back(a);
  }
  // Lexicographically least shuffle (by letter index): repeatedly take the
  // smallest letter that commutes with everything before it.
  Word out;
  out.reserve(reduced.size());
  std::vector<bool> used(reduced.size(), false);
  for (std::size_t step = 0; step < reduced.size(); ++step) {
    // Candidates are unused letters commuting with all earlier unused ones.
    std::size_t best = reduced.size();
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (used[i]) continue;
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j) {
        if (!used[j] && !generators_commute(reduced[i], reduced[j])) free = false;
      }
      if (free && (best == reduced.size() || reduced[i] < reduced[best])) best = i;
    }
    used[best] = true;
    out.push_back(reduced[best]);
  }
  return out;
}

// --- free product -------------------------------------------------------------

namespace {

template <typename Factors>
Alphabet combined_alphabet(const Factors& factors) {
  std::vector<std::string> names;
  std::vector<Letter> inverse;
  for (const auto& f : factors) {
    auto offset = static_cast<Letter>(names.size());
    const Alphabet& a = f->alphabet();
    for (Letter x = 0; x < a.size(); ++x) {
      names.push_back(a.name(x));
      inverse.push_back(static_cast<Letter>(offset + a.inverse(x)));
    }
  }
  return Alphabet(std::move(names), std::move(inverse));
}

template <typename Factors>
void index_factors(const Factors& factors, std::vector<std::size_t>& factor_of,
                   std::vector<Letter>& offset) {
  Letter next = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    offset.push_back(next);
    for (Letter x = 0; x < factors[f]->alphabet().size(); ++x) factor_of.push_back(f);
    next = static_cast<Letter>(next + factors[f]->alphabet().size());
  }
}

std::string describe_factors(const std::vector<ModelPtr>& factors, const std::string& op) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += op;
    out += f->describe();
  }
  return out;
}

}  // namespace

FreeProduct::FreeProduct(std::vector<ModelPtr> factors)
    : GroupModel(combined_alphabet(factors)), factors_(std::move(factors)) {
  index_factors(factors_, factor_of_, offset_);
}

std::string FreeProduct::describe() const { return describe_factors(factors_, " * "); }

std::vector<int> FreeProduct::free_factor_of_letters() const {
  std::vector<int> out;
  for (Letter a = 0; a < alphabet().size(); ++a) out.push_back(static_cast<int>(factor_of_[a]));
  return out;
}

bool FreeProduct::generators_commute(Letter a, Letter b) const {
  std::size_t f = factor_of_[a];
  if (f != factor_of_[b]) return false;
  return factors_[f]->generators_commute(static_cast<Letter>(a - offset_[f]),
                                         static_cast<Letter>(b - offset_[f]));
}

bool FreeProduct::special_subgroups_visible() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const ModelPtr& f) { return f->special_subgroups_visible(); });
}

Word FreeProduct::reduce(const Word& w) const {
  struct Syllable {
    std::size_t factor;
    Word local;
  };
  std::vector<Syllable> stack;
  for (Letter a : w) {
    std::size_t f = factor_of_[a];
    auto local = static_cast<Letter>(a - offset_[f]);
    if (!stack.empty() && stack.back().factor == f) {
      Word& s = stack.back().local;
      s.push_back(local);
      s = factors_[f]->normal_form(s);
      if (s.empty()) stack.pop_back();
    } else {
      Word s = factors_[f]->normal_form(Word{local});
      if (!s.empty()) stack.push_back({f, std::move(s)});
    }
  }
  Word out;
  for (const auto& s : stack) {
    for (Letter x : s.local) out.push_back(static_cast<Letter>(x + offset_[s.factor]));
  }
  return out;
}

// --- direct product -----------------------------------------------------------

DirectProduct::DirectProduct(std::vector<ModelPtr> factors)
    : GroupModel(combined_alphabet(factors)), factors_(std::move(factors)) {
  index_factors(factors_, factor_of_, offset_);
}

std::string DirectProduct::describe() const { return describe_factors(factors_, " x "); }

std::vector<int> DirectProduct::free_factor_of_letters() const {
  return std::vector<int>(alphabet().size(), 0);
}

bool DirectProduct::generators_commute(Letter a, Letter b) const {
  std::size_t f = factor_of_[a];
  if (f != factor_of_[b]) return true;
  return factors_[f]->generators_commute(static_cast<Letter>(a - offset_[f]),
                                         static_cast<Letter>(b - offset_[f]));
}

bool DirectProduct::special_subgroups_visible() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const ModelPtr& f) { return f->special_subgroups_visible(); });
}

Word DirectProduct::reduce(const Word& w) const {
  std::vector<Word> local(factors_.size());
  for (Letter a : w) {
    std::size_t f = factor_of_[a];
    local[f].push_back(static_cast<Letter>(a - offset_[f]));
  }
  Word out;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    for (Letter x : factors_[f]->normal_form(local[f])) {
      out.push_back(static_cast<Letter>(x + offset_[f]));
    }
  }
  return out;
}

// --- finite -------------------------------------------------------------------

Alphabet FiniteGroup::make_alphabet(const std::vector<std::vector<std::size_t>>& table,
                                    const std::vector<std::pair<std::string, std::size_t>>& gens) {
  std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "multiplication table is not square");
    for (std::size_t x : row) {
      if (x >= n) throw Error(ErrorKind::InvalidInput, "multiplication table entry out of range");
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[0][g] != g || table[g][0] != g) {
      throw Error(ErrorKind::InvalidInput, "element 0 is not the identity");
    }
  }
  auto inverse_element = [&](std::size_t g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] == 0) return h;
    }
    throw Error(ErrorKind::InvalidInput, "element without inverse in table");
  };
  std::vector<std::string> names;
  std::vector<Letter> inverse;
  for (const auto& [name, element] : gens) {
    if (element >= n || element == 0) {
      throw Error(ErrorKind::InvalidInput, "generator " + name + " names an invalid element");
    }
    names.push_back(name);
  }
  for (const auto& [name, element] : gens) {
    std::size_t inv = inverse_element(element);
    auto it = std::find_if(gens.begin(), gens.end(),
                           [&](const auto& g) { return g.second == inv; });
    if (it == gens.end()) {
      throw Error(ErrorKind::InvalidInput, "generating set is not symmetric at " + name);
    }
    inverse.push_back(static_cast<Letter>(it - gens.begin()));
  }
  return Alphabet(std::move(names), std::move(inverse));
}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table,
                         const std::vector<std::pair<std::string, std::size_t>>& generators)
    : GroupModel(make_alphabet(table, generators)), table_(std::move(table)) {
  for (const auto& g : generators) element_of_.push_back(g.second);
  // BFS in letter index order yields shortlex-least geodesics.
  geodesic_.assign(table_.size(), Word{});
  std::vector<bool> seen(table_.size(), false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t g = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < element_of_.size(); ++a) {
      std::size_t h = table_[g][element_of_[a]];
      if (!seen[h]) {
        seen[h] = true;
        geodesic_[h] = geodesic_[g];
        geodesic_[h].push_back(a);
        queue.push_back(h);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::InvalidInput, "generators do not generate the finite group");
  }
}

std::string FiniteGroup::describe() const {
  std::string out = "finite<order " + std::to_string(table_.size()) + ";";
  for (const auto& n : alphabet().names()) out += " " + n;
  return out + ">";
}

bool FiniteGroup::generators_commute(Letter a, Letter b) const {
  std::size_t x = element_of_[a];
  std::size_t y = element_of_[b];
  if (x == y || table_[x][y] == 0) return false;
  return table_[x][y] == table_[y][x];
}

std::size_t FiniteGroup::evaluate(const Word& w) const {
  std::size_t g = 0;
  for (Letter a : w) g = table_[g][element_of_[a]];
  return g;
}

Word FiniteGroup::reduce(const Word& w) const { return geodesic_[evaluate(w)]; }

// --- built-ins ----------------------------------------------------------------

namespace {

std::vector<std::string> letters_from(char first, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(1, static_cast<char>(first + i));
  return out;
}

}  // namespace

ModelPtr make_free_group(std::size_t rank) {
  return std::make_shared<FreeGroup>(letters_from('a', rank));
}

ModelPtr make_free_abelian(std::size_t rank) {
  return std::make_shared<AbelianGroup>(letters_from('x', rank));
}

ModelPtr make_z2_free_z() {
  return std::make_shared<RaagGroup>(std::vector<std::string>{"a", "b", "c"},
                                     std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
}

ModelPtr make_symmetric_group_s3() {
  // Elements as permutations of {0,1,2} in a fixed enumeration.
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                               {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::vector<int> p(3);
      for (int k = 0; k < 3; ++k) p[k] = perms[j][perms[i][k]];  // apply i then j
      table[i][j] = index_of(p);
    }
  }
  return std::make_shared<FiniteGroup>(std::move(table),
                                       std::vector<std::pair<std::string, std::size_t>>{
                                           {"s", 1}, {"t", 2}});
}

ModelPtr builtin_model(const std::string& name) {
  if (name.size() == 2 && name[0] == 'f' && name[1] >= '1' && name[1] <= '4') {
    return make_free_group(static_cast<std::size_t>(name[1] - '0'));
  }
  if (name.size() == 2 && name[0] == 'z' && name[1] >= '1' && name[1] <= '3') {
    return make_free_abelian(static_cast<std::size_t>(name[1] - '0'));
  }
  if (name == "z2*z") return make_z2_free_z();
  if (name == "z2*z-product") {
    return std::make_shared<FreeProduct>(std::vector<ModelPtr>{
        std::make_shared<AbelianGroup>(std::vector<std::string>{"a", "b"}),
        std::make_shared<FreeGroup>(std::vector<std::string>{"c"})});
  }
  if (name == "f2xz") {
    return std::make_shared<DirectProduct>(std::vector<ModelPtr>{
        make_free_group(2), std::make_shared<FreeGroup>(std::vector<std::string>{"t"})});
  }
  if (name == "s3") return make_symmetric_group_s3();
  return nullptr;
}

std::vector<std::string> builtin_model_names() {
  return {"f1", "f2", "f3", "f4", "z1", "z2", "z3", "z2*z", "z2*z-product", "f2xz", "s3"};
}

}  // namespace geolang
