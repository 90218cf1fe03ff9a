#ifndef WCLIE_BRACKET_EXPR_HPP
#define WCLIE_BRACKET_EXPR_HPP

#include "wclie/error.hpp"
#include "wclie/linalg.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace wclie {

// Lie polynomial in generator symbols: leaves, scalar multiples, sums and brackets.
namespace expr {
struct Gen;
struct Scale;
struct Sum;
struct Br;
}  // namespace expr

class BracketExpr {
 public:
  using Gen = expr::Gen;
  using Scale = expr::Scale;
  using Sum = expr::Sum;
  using Br = expr::Br;
  using Node = std::variant<Gen, Scale, Sum, Br>;

  static BracketExpr gen(std::size_t index);
  static BracketExpr scale(Rational factor, BracketExpr of);
  static BracketExpr sum(std::vector<BracketExpr> terms);
  static BracketExpr br(BracketExpr left, BracketExpr right);

  const Node& node() const;
  // Largest generator index used, or nullopt for an empty sum.
  std::optional<std::size_t> max_generator() const;

  friend BracketExpr operator+(BracketExpr a, BracketExpr b) { return sum({std::move(a), std::move(b)}); }
  friend BracketExpr operator-(BracketExpr a, BracketExpr b) {
    return sum({std::move(a), scale(-1, std::move(b))});
  }
  friend BracketExpr operator*(Rational c, BracketExpr e) { return scale(std::move(c), std::move(e)); }

 private:
  explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

namespace expr {
struct Gen { std::size_t index; };
struct Scale { Rational factor; BracketExpr of; };
struct Sum { std::vector<BracketExpr> terms; };
struct Br { BracketExpr left; BracketExpr right; };
}  // namespace expr

inline const BracketExpr::Node& BracketExpr::node() const { return *node_; }

// Evaluates e in any algebra given generator images and a bilinear bracket.
template <typename BracketFn>
Vector evaluate(const BracketExpr& e, const std::vector<Vector>& images, std::size_t dim, BracketFn&& bracket) {
  return std::visit(
      [&](const auto& n) -> Vector {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BracketExpr::Gen>) {
          if (n.index >= images.size())
            throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(n.index) + " out of range");
          return images[n.index];
        } else if constexpr (std::is_same_v<T, BracketExpr::Scale>) {
          return n.factor * evaluate(n.of, images, dim, bracket);
        } else if constexpr (std::is_same_v<T, BracketExpr::Sum>) {
          Vector acc(dim);
          for (const auto& t : n.terms) axpy(acc, 1, evaluate(t, images, dim, bracket));
          return acc;
        } else {
          return bracket(evaluate(n.left, images, dim, bracket), evaluate(n.right, images, dim, bracket));
        }
      },
      e.node());
}

}  // namespace wclie

#endif
