#ifndef WCLIE_NILPOTENT_QUOTIENT_HPP
#define WCLIE_NILPOTENT_QUOTIENT_HPP

#include "wclie/bracket_expr.hpp"
#include "wclie/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wclie {

struct Presentation {
  std::size_t generators = 0;
  std::vector<std::string> gen_labels;
  std::vector<BracketExpr> relators;

  // Throws Error(IndexOutOfRange) if a relator uses a missing generator.
  void check() const;
};

struct QuotientResult {
  LieAlgebra algebra;
  std::size_t class_used = 0;
  std::vector<Vector> generator_images;
  bool stabilized = false;
  std::vector<std::size_t> history;  // dim of the class-k quotient, k = 1, 2, ...
  // Weight of each basis element: b has weight w when it is a w-fold bracket
  // of generator images.
  std::vector<std::size_t> weights;
};

// Class-c nilpotent quotient F/(I + gamma_{c+1} F) of a finitely presented
// Lie algebra. Built one class at a time: each step forms the covering
// algebra of the previous quotient (central tails, Jacobi consistency) and
// factors out the relator values.
QuotientResult class_quotient(const Presentation& p, std::size_t c,
                              std::optional<std::size_t> budget = std::nullopt);

// Raises the class until two consecutive quotients agree (stabilized) or
// max_class is reached.
QuotientResult stable_quotient(const Presentation& p, std::size_t max_class,
                               std::optional<std::size_t> budget = std::nullopt);

// The same quotient computed directly inside the truncated free algebra:
// ideal closure of the relator values, then the quotient. Much more
// expensive; used to cross-check the class-by-class engine.
QuotientResult free_class_quotient(const Presentation& p, std::size_t c,
                                   std::optional<std::size_t> budget = std::nullopt);

// Values of every relator under the result's generator images.
std::vector<Vector> relator_values(const QuotientResult& q, const Presentation& p);

// Presentation of g on its basis: [x_i, x_j] - sum_k c_ij^k x_k for i < j.
Presentation structure_presentation(const LieAlgebra& g);

}  // namespace wclie

#endif
