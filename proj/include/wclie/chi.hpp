#ifndef WCLIE_CHI_HPP
#define WCLIE_CHI_HPP

#include "wclie/lie_algebra.hpp"
#include "wclie/nilpotent_quotient.hpp"

#include <optional>
#include <string>

namespace wclie {

enum class ChiMethod { NilpotentQuotient, Superperfect, AbelianClosedForm };

const char* to_string(ChiMethod m);

// chi(g): the free Lie sum of g and a copy g^psi modulo all [x, x^psi],
// together with alpha, beta, rho and the ideal chain R <= W <= L, D.
struct ChiAlgebra {
  LieAlgebra base;
  LieAlgebra chi;
  // Images of x_1..x_n followed by x_1^psi..x_n^psi.
  std::vector<Vector> gen_images;
  LieHom alpha;  // x, x^psi -> x
  LieHom beta;   // x -> (x,0), x^psi -> (0,x)
  LieHom rho;    // x -> (x,x,0), x^psi -> (0,x,x)
  Subspace L, D, W, R;
  ChiMethod method = ChiMethod::NilpotentQuotient;
  std::size_t class_used = 0;
  std::size_t max_class = 0;
  bool stabilized = true;

  std::size_t n() const { return base.dim(); }
  const Vector& x(std::size_t i) const { return gen_images[i]; }
  const Vector& psi(std::size_t i) const { return gen_images[base.dim() + i]; }
};

// 2n generators (x_i, then x_i^psi) and relators
//   [x_i,x_j] - sum c_ij^k x_k,  the same on the psi copy   (i < j)
//   [x_i, x_i^psi]
//   [x_i, x_j^psi] + [x_j, x_i^psi]                          (i < j)
// The last two families span all [x, x^psi] by polarization.
// Throws Error(InvalidAlgebra) if g fails the Jacobi check.
Presentation chi_presentation(const LieAlgebra& g);

// 2 * class(g) + 2.
std::size_t default_max_class(const LieAlgebra& g);

// Nilpotent g via the nilpotent quotient of chi_presentation(g).
// Errors: NotNilpotent, NotStabilized, ConsistencyFailure (dim W - dim R
// differs from dim H2(g)).
ChiAlgebra compute_chi(const LieAlgebra& g, std::optional<std::size_t> max_class = std::nullopt,
                       std::optional<std::size_t> budget = std::nullopt);

// Runs an arbitrary presentation on the 2n generators of chi(g) through the
// quotient engine and assembles maps and ideals, without the H2 guard.
ChiAlgebra chi_from_presentation(const LieAlgebra& g, const Presentation& p, std::size_t max_class,
                                 std::optional<std::size_t> budget = std::nullopt);

// Perfect g with H2(g) = 0: chi(g) = g + g + g. Errors: NotPerfect, NonvanishingH2.
ChiAlgebra compute_chi_superperfect(const LieAlgebra& g);

// Abelian g: basis x_i, x_i^psi, w_ij = [x_i, x_j^psi] (i < j), w central.
ChiAlgebra compute_chi_abelian(const LieAlgebra& g);

// Abelian -> closed form, nilpotent -> quotient engine, perfect -> direct sum.
// Other classes throw Error(Unsupported).
ChiAlgebra compute_chi_auto(const LieAlgebra& g, std::optional<std::size_t> max_class = std::nullopt,
                            std::optional<std::size_t> budget = std::nullopt);

Subspace image_rho_subspace(const ChiAlgebra& c);
// {(x,y,z) in g+g+g : x - y + z in g'}
Subspace expected_image_rho(const LieAlgebra& g);

// Builds alpha, beta, rho and L, D, W, R for a chi algebra given the images
// of the 2n generators.
ChiAlgebra assemble_chi(const LieAlgebra& g, LieAlgebra chi, std::vector<Vector> gen_images, ChiMethod method);

}  // namespace wclie

#endif
