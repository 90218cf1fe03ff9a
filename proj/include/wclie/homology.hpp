#ifndef WCLIE_HOMOLOGY_HPP
#define WCLIE_HOMOLOGY_HPP

#include "wclie/free_lie.hpp"
#include "wclie/lie_algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wclie {

// Lambda^2 and Lambda^3 bases: index tuples i<j(<k) in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> wedge2_basis(std::size_t n);
std::size_t wedge2_index(std::size_t n, std::size_t i, std::size_t j);  // i < j
// u ^ v in Lambda^2 coordinates
Vector wedge(std::span<const Rational> u, std::span<const Rational> v);

// d2(e_i ^ e_j) = [e_i, e_j]
Matrix boundary2(const LieAlgebra& g);
// d3(e_i ^ e_j ^ e_k) = [e_i,e_j] ^ e_k - [e_i,e_k] ^ e_j + [e_j,e_k] ^ e_i
Matrix boundary3(const LieAlgebra& g);

std::size_t h1(const LieAlgebra& g);

struct H2Ce {
  std::size_t dim = 0;
  Subspace cycles;                       // ker d2
  Subspace boundaries;                   // im d3
  std::vector<Vector> representatives;   // cycles lifting a basis of H2
};

// Throws ConsistencyFailure if d2 o d3 != 0 (g not a Lie algebra).
H2Ce h2_ce(const LieAlgebra& g);

// Hopf formula in the class-(c+1) free nilpotent algebra on a minimal
// generating set of g. Errors: NotNilpotent, BudgetExceeded.
std::size_t h2_hopf(const LieAlgebra& g, std::optional<std::size_t> budget = std::nullopt);

struct ExteriorSquare {
  LieAlgebra base;
  std::size_t dim = 0;
  Subspace relations;               // inside Lambda^2
  std::vector<Vector> generators;   // e_i ^ e_j (i<j) in quotient coordinates
  LieAlgebra table;
  LieHom phi;                       // x ^ y -> [x, y]
};

// Errors: ConsistencyFailure if the bracket or phi is not well defined.
ExteriorSquare exterior_square(const LieAlgebra& g);
std::size_t schur_via_exterior(const LieAlgebra& g);

struct StemExtension {
  LieAlgebra cover;
  Subspace kernel;     // Z, inside cover
  LieHom projection;   // cover -> g
};

// Errors: NotNilpotent; ConsistencyFailure if a stem property fails.
StemExtension stem_extension(const LieAlgebra& g, std::optional<std::size_t> budget = std::nullopt);

struct HomologyReport {
  std::string algebra;
  std::size_t h1 = 0;
  std::size_t h2_ce = 0;
  std::optional<std::size_t> h2_hopf;
  std::optional<std::size_t> h2_exterior;
  bool agree = true;
};

HomologyReport homology_report(const LieAlgebra& g, std::optional<std::size_t> budget = std::nullopt);

}  // namespace wclie

#endif
