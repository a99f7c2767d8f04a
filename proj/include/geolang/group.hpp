// Group models: canonical geodesic normal forms over a symmetric generating
// set.  Every model hosts its Cayley graph implicitly; ball enumeration and
// geodesic tests live in ball.hpp.

#ifndef GEOLANG_GROUP_HPP_
#define GEOLANG_GROUP_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "geolang/word.hpp"

namespace geolang {

enum class ModelKind { Free, Abelian, Raag, FreeProduct, DirectProduct, Finite };

std::string to_string(ModelKind kind);

//! Interface to a finitely generated group with solvable word problem.
//!
//! Implementations are immutable after construction and may be shared
//! between threads.  `normal_form` returns a geodesic word; two words have
//! equal normal forms iff they represent the same element.
class GroupModel {
 public:
  virtual ~GroupModel() = default;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  virtual ModelKind kind() const noexcept = 0;
  virtual std::string describe() const = 0;

  //! Canonical geodesic representative.  Throws UnknownSymbol on letters
  //! outside the alphabet.
  Word normal_form(const Word& w) const;

  //! Free factor containing each letter (connected components of the
  //! commutation graph for RAAGs, factor index for free products).
  virtual std::vector<int> free_factor_of_letters() const;

  //! True iff the generators of `a` and `b` are distinct and commute.
  virtual bool generators_commute(Letter a, Letter b) const;

  //! True when the normal form of every element of the subgroup generated by
  //! a set of generators uses only those generators (RAAG special
  //! subgroups).
  virtual bool special_subgroups_visible() const noexcept { return false; }

  //! Replace the symbol order used for lexicographic comparisons.  Normal
  //! forms do not depend on it.
  void set_order(const std::vector<std::string>& order) { alphabet_.set_order(order); }

 protected:
  explicit GroupModel(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  void check_letters(const Word& w) const;
  virtual Word reduce(const Word& w) const = 0;

 private:
  Alphabet alphabet_;
};

using ModelPtr = std::shared_ptr<const GroupModel>;

//! Free group on the given generators; normal form is free reduction.
class FreeGroup final : public GroupModel {
 public:
  explicit FreeGroup(const std::vector<std::string>& generators,
                     const std::vector<std::string>& inverse_names = {});
  ModelKind kind() const noexcept override { return ModelKind::Free; }
  std::string describe() const override;
  std::vector<int> free_factor_of_letters() const override;
  bool special_subgroups_visible() const noexcept override { return true; }

 protected:
  Word reduce(const Word& w) const override;
};

//! Free abelian group; normal form lists exponents in generator order.
class AbelianGroup final : public GroupModel {
 public:
  explicit AbelianGroup(const std::vector<std::string>& generators,
                        const std::vector<std::string>& inverse_names = {});
  ModelKind kind() const noexcept override { return ModelKind::Abelian; }
  std::string describe() const override;
  std::vector<int> free_factor_of_letters() const override;
  bool generators_commute(Letter a, Letter b) const override;
  bool special_subgroups_visible() const noexcept override { return true; }

 protected:
  Word reduce(const Word& w) const override;
};

//! Right-angled Artin group given by a commutation graph on the generators.
//!
//! Reduction cancels a letter against a later inverse when every letter in
//! between commutes with it; the reduced word is then rewritten to the
//! lexicographically least (by symbol order) commutation-equivalent word.
class RaagGroup final : public GroupModel {
 public:
  RaagGroup(const std::vector<std::string>& generators,
            const std::vector<std::pair<std::string, std::string>>& commuting,
            const std::vector<std::string>& inverse_names = {});
  ModelKind kind() const noexcept override { return ModelKind::Raag; }
  std::string describe() const override;
  std::vector<int> free_factor_of_letters() const override;
  bool generators_commute(Letter a, Letter b) const override;
  bool special_subgroups_visible() const noexcept override { return true; }

  std::size_t generator_count() const noexcept { return adjacent_.size(); }
  bool adjacent(std::size_t g, std::size_t h) const { return adjacent_[g][h]; }

 protected:
  Word reduce(const Word& w) const override;

 private:
  std::size_t generator(Letter a) const { return a / 2; }

  std::vector<std::vector<bool>> adjacent_;
};

//! Free product of models; symbols of distinct factors must be distinct.
//! The normal form is the sequence of reduced syllables.
class FreeProduct final : public GroupModel {
 public:
  explicit FreeProduct(std::vector<ModelPtr> factors);
  ModelKind kind() const noexcept override { return ModelKind::FreeProduct; }
  std::string describe() const override;
  std::vector<int> free_factor_of_letters() const override;
  bool generators_commute(Letter a, Letter b) const override;
  bool special_subgroups_visible() const noexcept override;

  const std::vector<ModelPtr>& factors() const noexcept { return factors_; }

 protected:
  Word reduce(const Word& w) const override;

 private:
  std::vector<ModelPtr> factors_;
  std::vector<std::size_t> factor_of_;
  std::vector<Letter> offset_;
};

//! Direct product of models.  The canonical form concatenates the factor
//! normal forms in factor order.
class DirectProduct final : public GroupModel {
 public:
  explicit DirectProduct(std::vector<ModelPtr> factors);
  ModelKind kind() const noexcept override { return ModelKind::DirectProduct; }
  std::string describe() const override;
  std::vector<int> free_factor_of_letters() const override;
  bool generators_commute(Letter a, Letter b) const override;
  bool special_subgroups_visible() const noexcept override;

  const std::vector<ModelPtr>& factors() const noexcept { return factors_; }

 protected:
  Word reduce(const Word& w) const override;

 private:
  std::vector<ModelPtr> factors_;
  std::vector<std::size_t> factor_of_;
  std::vector<Letter> offset_;
};

//! Finite group from a multiplication table.  Element 0 must be the
//! identity.  Generators name elements; the generating set must be
//! symmetric.  Normal forms are shortlex-least geodesics.
class FiniteGroup final : public GroupModel {
 public:
  FiniteGroup(std::vector<std::vector<std::size_t>> table,
              const std::vector<std::pair<std::string, std::size_t>>& generators);
  ModelKind kind() const noexcept override { return ModelKind::Finite; }
  std::string describe() const override;
  bool generators_commute(Letter a, Letter b) const override;

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t evaluate(const Word& w) const;

 protected:
  Word reduce(const Word& w) const override;

 private:
  static Alphabet make_alphabet(const std::vector<std::vector<std::size_t>>& table,
                                const std::vector<std::pair<std::string, std::size_t>>& gens);

  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> element_of_;
  std::vector<Word> geodesic_;
};

// Built-in models used by tests, scenarios and the command line.
ModelPtr make_free_group(std::size_t rank);          // a, b, c, ...
ModelPtr make_free_abelian(std::size_t rank);        // x, y, z, ...
ModelPtr make_z2_free_z();                           // <a,b,c | [a,b]>
ModelPtr make_symmetric_group_s3();                  // two involutions s, t
//! Look up a built-in model by name: f1..f4, z1..z3, z2*z, z2*z-product,
//! f2xz, s3.  Returns nullptr for unknown names.
ModelPtr builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();

}  // namespace geolang

#endif  // GEOLANG_GROUP_HPP_
