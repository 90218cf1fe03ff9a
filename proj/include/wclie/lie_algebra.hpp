#ifndef WCLIE_LIE_ALGEBRA_HPP
#define WCLIE_LIE_ALGEBRA_HPP

#include "wclie/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wclie {

struct Term {
  std::size_t k;
  Rational c;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

SparseVector to_sparse(std::span<const Rational> v);
Vector to_dense(const SparseVector& v, std::size_t n);

// [e_i, e_j] = sum_k c_k e_k, stored for i < j only.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  SparseVector terms;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vector defect;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

// Finite-dimensional Lie algebra over Q given by structure constants.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Throws Error(InvalidAlgebra) on bad indices, duplicate or unordered
  // pairs, or a Jacobi violation.
  LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<BracketEntry> brackets);

  // Skips the Jacobi check; index checks still apply. Used for fault injection
  // and for diagnosing broken input.
  static LieAlgebra unchecked(std::string name, std::vector<std::string> labels,
                              std::vector<BracketEntry> brackets);
  static LieAlgebra abelian(std::size_t n, std::string name = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Structure constants of [e_i, e_j] for i < j.
  const SparseVector& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  // Nonzero brackets in (i, j) lexicographic order.
  std::vector<BracketEntry> brackets() const;

  Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  // Adds into out the bracket [e_i, v] scaled by a.
  void add_ad(Vector& out, const Rational& a, std::size_t i, std::span<const Rational> v) const;

  LieAlgebra renamed(std::string name) const;
  // Copy with one structure constant replaced, bypassing validation.
  LieAlgebra with_structure_constant(std::size_t i, std::size_t j, std::size_t k, Rational c) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  void fill(std::vector<BracketEntry> brackets);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // dim*dim, only i<j used
};

std::optional<JacobiViolation> validate(const LieAlgebra& g);

Vector bracket(const LieAlgebra& g, std::span<const Rational> u, std::span<const Rational> v);

Subspace subalgebra_closure(const LieAlgebra& g, const std::vector<Vector>& seed);
Subspace ideal_closure(const LieAlgebra& g, const std::vector<Vector>& seed);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

// g' = span of all [e_i, e_j].
Subspace derived_algebra(const LieAlgebra& g);
// [s, t] = span of brackets of basis vectors.
Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t);
Subspace center(const LieAlgebra& g);
// g = gamma_1 > gamma_2 = g' > ... ending in the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
// Smallest c with gamma_{c+1} = 0, or nullopt when g is not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);
bool is_perfect(const LieAlgebra& g);

struct HomViolation {
  std::size_t i, j;
  Vector defect;  // h[e_i,e_j] - [h e_i, h e_j]
};

class LieHom {
 public:
  LieHom() = default;
  // Throws Error(NotWellDefined) if the matrix does not respect brackets.
  LieHom(LieAlgebra domain, LieAlgebra codomain, Matrix matrix);
  static LieHom unchecked(LieAlgebra domain, LieAlgebra codomain, Matrix matrix);

  const LieAlgebra& domain() const { return domain_; }
  const LieAlgebra& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }

  Vector operator()(std::span<const Rational> v) const { return matrix_.apply(v); }
  Subspace kernel() const { return wclie::kernel(matrix_); }
  Subspace image() const { return wclie::image(matrix_); }

 private:
  LieAlgebra domain_;
  LieAlgebra codomain_;
  Matrix matrix_;
};

std::optional<HomViolation> check_homomorphism(const LieAlgebra& domain, const LieAlgebra& codomain,
                                               const Matrix& matrix);

struct Quotient {
  LieAlgebra algebra;
  LieHom projection;
  std::vector<std::size_t> coords;  // ambient coordinates kept as the quotient basis
};

// Throws Error(NotAnIdeal).
Quotient quotient(const LieAlgebra& g, const Subspace& ideal, std::string name = {});

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts, std::string name = {});

// Extends gens -> images to a homomorphism by walking bracket words.
// Throws Error(NotGenerating) or Error(NotWellDefined).
LieHom hom_from_generator_images(const LieAlgebra& domain, const std::vector<Vector>& gens,
                                 const std::vector<Vector>& images, const LieAlgebra& codomain);

}  // namespace wclie

#endif
