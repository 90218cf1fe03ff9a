#ifndef WCLIE_FREE_LIE_HPP
#define WCLIE_FREE_LIE_HPP

#include "wclie/bracket_expr.hpp"
#include "wclie/lie_algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wclie {

using Word = std::vector<std::uint8_t>;

// Default cap on basis sizes of truncated free algebras and covering spaces.
// CHI_LIE_BUDGET in the environment overrides it.
std::size_t dimension_budget();
inline constexpr std::size_t kDefaultDimensionBudget = 5000;

bool is_lyndon(const Word& w);

// Lyndon words over m letters of length <= max_degree, ordered by (degree, lex).
std::vector<Word> lyndon_words(std::size_t m, std::size_t max_degree);

std::int64_t mobius(std::int64_t n);
// (1/d) sum_{e | d} mu(e) m^(d/e)
std::size_t witt_dim(std::size_t m, std::size_t d);

struct LyndonElement {
  Word word;
  std::size_t degree;
  // Standard factorization w = uv, v the longest proper Lyndon suffix.
  // Both indices refer to the basis; unset for letters.
  std::optional<std::size_t> left, right;
};

// Free Lie algebra on m generators modulo terms of degree > c, in the
// Lyndon basis.
class FreeNilpotentAlgebra {
 public:
  std::size_t generators() const { return generators_; }
  std::size_t nilpotency_class() const { return class_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<LyndonElement>& basis() const { return basis_; }
  const LieAlgebra& table() const { return table_; }

  std::optional<std::size_t> index_of(const Word& w) const;
  Vector generator(std::size_t i) const;
  // First basis index of each degree d = 1..c, plus dim() at the end.
  const std::vector<std::size_t>& degree_offsets() const { return offsets_; }
  std::size_t degree(std::size_t basis_index) const { return basis_[basis_index].degree; }

  // Bracket in the Lyndon basis; degrees above the class vanish.
  Vector normal_form(std::span<const Rational> a, std::span<const Rational> b) const;
  // Throws Error(IndexOutOfRange) for leaves beyond the generator count.
  Vector eval(const BracketExpr& e) const;

  // Associative expansion of the standard bracketing of a basis element.
  const std::map<Word, Rational>& expansion(std::size_t basis_index) const { return expansions_[basis_index]; }

 private:
  friend FreeNilpotentAlgebra build_free_nilpotent(std::size_t, std::size_t, std::optional<std::size_t>);

  std::size_t generators_ = 0;
  std::size_t class_ = 0;
  std::vector<LyndonElement> basis_;
  std::vector<std::size_t> offsets_;
  std::map<Word, std::size_t> index_;
  std::vector<std::map<Word, Rational>> expansions_;
  LieAlgebra table_;
};

std::string generator_label(std::size_t i, std::size_t count);

// Throws Error(BadParams) for m = 0 or c = 0 and Error(BudgetExceeded) when
// the basis would exceed the budget (default: dimension_budget()).
FreeNilpotentAlgebra build_free_nilpotent(std::size_t m, std::size_t c,
                                          std::optional<std::size_t> budget = std::nullopt);

}  // namespace wclie

#endif
