#include "wclie/free_lie.hpp"

#include <algorithm>
#include <cstdlib>

namespace wclie {

BracketExpr BracketExpr::gen(std::size_t index) { return BracketExpr(std::make_shared<const Node>(Gen{index})); }

BracketExpr BracketExpr::scale(Rational factor, BracketExpr of) {
  return BracketExpr(std::make_shared<const Node>(Scale{std::move(factor), std::move(of)}));
}

BracketExpr BracketExpr::sum(std::vector<BracketExpr> terms) {
  return BracketExpr(std::make_shared<const Node>(Sum{std::move(terms)}));
}

BracketExpr BracketExpr::br(BracketExpr left, BracketExpr right) {
  return BracketExpr(std::make_shared<const Node>(Br{std::move(left), std::move(right)}));
}

std::optional<std::size_t> BracketExpr::max_generator() const {
  return std::visit(
      [](const auto& n) -> std::optional<std::size_t> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Gen>) {
          return n.index;
        } else if constexpr (std::is_same_v<T, Scale>) {
          return n.of.max_generator();
        } else if constexpr (std::is_same_v<T, Sum>) {
          std::optional<std::size_t> m;
          for (const auto& t : n.terms)
            if (auto x = t.max_generator(); x && (!m || *x > *m)) m = x;
          return m;
        } else {
          auto a = n.left.max_generator(), b = n.right.max_generator();
          if (!a) return b;
          if (!b) return a;
          return std::max(*a, *b);
        }
      },
      *node_);
}

std::size_t dimension_budget() {
  if (const char* env = std::getenv("CHI_LIE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultDimensionBudget;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(std::size_t m, std::size_t max_degree) {
  std::vector<Word> out;
  if (m == 0 || max_degree == 0) return out;
  // Duval's generation: all Lyndon words of length <= max_degree in lex order.
  Word w{0};
  while (!w.empty()) {
    out.push_back(w);
    Word next;
    next.reserve(max_degree);
    while (next.size() < max_degree) next.push_back(w[next.size() % w.size()]);
    while (!next.empty() && next.back() == m - 1) next.pop_back();
    if (!next.empty()) ++next.back();
    w = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
  return out;
}

std::int64_t mobius(std::int64_t n) {
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::size_t witt_dim(std::size_t m, std::size_t d) {
  using big = Rational::integer_type;
  big total = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    big power = 1;
    for (std::size_t i = 0; i < d / e; ++i) power *= m;
    total += mobius(static_cast<std::int64_t>(e)) * power;
  }
  return static_cast<std::size_t>(big(total / d));
}

std::string generator_label(std::size_t i, std::size_t count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

std::optional<std::size_t> FreeNilpotentAlgebra::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vector FreeNilpotentAlgebra::generator(std::size_t i) const {
  if (i >= generators_) throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(i) + " out of range");
  return unit_vector(dim(), i);
}

Vector FreeNilpotentAlgebra::normal_form(std::span<const Rational> a, std::span<const Rational> b) const {
  return table_.bracket(a, b);
}

Vector FreeNilpotentAlgebra::eval(const BracketExpr& e) const {
  std::vector<Vector> images;
  for (std::size_t i = 0; i < generators_; ++i) images.push_back(generator(i));
  return evaluate(e, images, dim(), [this](const Vector& x, const Vector& y) { return normal_form(x, y); });
}

namespace {

using Poly = std::map<Word, Rational>;

void add_product(Poly& out, const Poly& a, const Poly& b, const Rational& sign) {
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto& slot = out[w];
      slot += sign * ca * cb;
      if (slot.is_zero()) out.erase(w);
    }
}

std::string bracketing_label(const std::vector<LyndonElement>& basis, std::size_t i, std::size_t m) {
  const auto& e = basis[i];
  if (!e.left) return generator_label(e.word[0], m);
  return "[" + bracketing_label(basis, *e.left, m) + "," + bracketing_label(basis, *e.right, m) + "]";
}

}  // namespace

FreeNilpotentAlgebra build_free_nilpotent(std::size_t m, std::size_t c, std::optional<std::size_t> budget) {
  if (m == 0 || c == 0) throw Error(ErrorKind::BadParams, "free nilpotent algebra needs m >= 1 and c >= 1");
  if (m > 255) throw Error(ErrorKind::BadParams, "at most 255 generators supported");
  const std::size_t cap = budget.value_or(dimension_budget());
  std::size_t total = 0;
  for (std::size_t d = 1; d <= c; ++d) {
    total += witt_dim(m, d);
    if (total > cap)
      throw Error(ErrorKind::BudgetExceeded, "free nilpotent (" + std::to_string(m) + "," + std::to_string(c) +
                                                 ") exceeds dimension budget " + std::to_string(cap));
  }

  FreeNilpotentAlgebra f;
  f.generators_ = m;
  f.class_ = c;
  for (auto& w : lyndon_words(m, c)) {
    std::size_t idx = f.basis_.size();
    f.index_.emplace(w, idx);
    LyndonElement e{w, w.size(), std::nullopt, std::nullopt};
    if (w.size() > 1) {
      for (std::size_t s = 1; s < w.size(); ++s) {
        Word suffix(w.begin() + s, w.end());
        if (is_lyndon(suffix)) {
          e.left = f.index_.at(Word(w.begin(), w.begin() + s));
          e.right = f.index_.at(suffix);
          break;
        }
      }
    }
    f.basis_.push_back(std::move(e));
  }
  f.offsets_.assign(c + 1, f.basis_.size());
  for (std::size_t i = f.basis_.size(); i-- > 0;) f.offsets_[f.basis_[i].degree - 1] = i;
  for (std::size_t d = c; d-- > 0;) f.offsets_[d] = std::min(f.offsets_[d], f.offsets_[d + 1]);

  f.expansions_.resize(f.basis_.size());
  for (std::size_t i = 0; i < f.basis_.size(); ++i) {
    const auto& e = f.basis_[i];
    if (!e.left) {
      f.expansions_[i][e.word] = 1;
      continue;
    }
    Poly p;
    add_product(p, f.expansions_[*e.left], f.expansions_[*e.right], 1);
    add_product(p, f.expansions_[*e.right], f.expansions_[*e.left], -1);
    f.expansions_[i] = std::move(p);
  }

  // The expansion of a basis element is its Lyndon word plus lexicographically
  // larger words, so peeling off the smallest word rewrites any Lie polynomial.
  std::vector<BracketEntry> entries;
  const std::size_t n = f.basis_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (f.basis_[a].degree + f.basis_[b].degree > c) continue;
      Poly p;
      add_product(p, f.expansions_[a], f.expansions_[b], 1);
      add_product(p, f.expansions_[b], f.expansions_[a], -1);
      Vector coords(n);
      while (!p.empty()) {
        auto [w, coef] = *p.begin();
        auto idx = f.index_of(w);
        if (!idx) throw std::logic_error("leading word of a Lie polynomial is not Lyndon");
        coords[*idx] += coef;
        Rational neg = -coef;
        for (const auto& [v, cv] : f.expansions_[*idx]) {
          auto& slot = p[v];
          slot += neg * cv;
          if (slot.is_zero()) p.erase(v);
        }
      }
      auto terms = to_sparse(coords);
      if (!terms.empty()) entries.push_back({a, b, std::move(terms)});
    }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(bracketing_label(f.basis_, i, m));
  f.table_ = LieAlgebra::unchecked("free_nilpotent(" + std::to_string(m) + "," + std::to_string(c) + ")",
                                   std::move(labels), std::move(entries));
  return f;
}

}  // namespace wclie
