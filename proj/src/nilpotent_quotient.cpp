#include "wclie/nilpotent_quotient.hpp"

#include "wclie/free_lie.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace wclie {

void Presentation::check() const {
  if (!gen_labels.empty() && gen_labels.size() != generators)
    throw Error(ErrorKind::DimensionMismatch, "generator label count differs from generator count");
  for (const auto& r : relators)
    if (auto m = r.max_generator(); m && *m >= generators)
      throw Error(ErrorKind::IndexOutOfRange, "relator uses generator " + std::to_string(*m) + " of " +
                                                  std::to_string(generators));
}

namespace {

struct Definition {
  // Either a generator (weight 1) or the bracket [b_left, b_right].
  std::optional<std::size_t> generator;
  std::size_t left = 0, right = 0;
};

// Nilpotent presentation of the current quotient: basis b_0..b_{n-1} with
// weights, definitions and structure constants that only involve basis
// elements of weight >= w_i + w_j.
class NilpotentState {
 public:
  explicit NilpotentState(const Presentation& p) : p_(p), images_(p.generators) {}

  std::size_t dim() const { return weights_.size(); }
  std::size_t cls() const { return class_; }

  // Computes the class (c+1) quotient from the class c one.
  void extend(std::size_t budget);

  QuotientResult result(bool stabilized, std::vector<std::size_t> history) const;

 private:
  const SparseVector& entry(std::size_t i, std::size_t j) const {
    static const SparseVector empty;
    auto it = table_.find({i, j});
    return it == table_.end() ? empty : it->second;
  }

  std::string label(std::size_t k) const;

  const Presentation& p_;
  std::size_t class_ = 0;
  std::vector<std::size_t> weights_;
  std::vector<Definition> defs_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> table_;  // i < j
  std::vector<SparseVector> images_;
};

std::string NilpotentState::label(std::size_t k) const {
  const auto& d = defs_[k];
  if (d.generator) {
    if (!p_.gen_labels.empty()) return p_.gen_labels[*d.generator];
    return generator_label(*d.generator, p_.generators);
  }
  return "[" + label(d.left) + "," + label(d.right) + "]";
}

void add_sparse(std::map<std::size_t, Rational>& acc, const SparseVector& v, const Rational& f) {
  for (const auto& t : v) {
    auto& slot = acc[t.k];
    slot += f * t.c;
    if (slot.is_zero()) acc.erase(t.k);
  }
}

void NilpotentState::extend(std::size_t budget) {
  const std::size_t n = dim();
  const std::size_t target = class_ + 1;

  // Tails: new central unknowns attached to every non-defining product of
  // weight <= target and to every generator that is not a defining one.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_tail;
  std::vector<std::size_t> gen_tail(p_.generators, SIZE_MAX);
  std::vector<bool> nice;  // tails that may become new basis elements
  std::vector<std::pair<std::size_t, std::size_t>> tail_pair;
  std::vector<std::size_t> tail_gen;

  std::vector<bool> is_defining_gen(p_.generators, false);
  std::map<std::pair<std::size_t, std::size_t>, bool> is_definition;
  for (const auto& d : defs_) {
    if (d.generator)
      is_defining_gen[*d.generator] = true;
    else
      is_definition[{d.left, d.right}] = true;
  }
  for (std::size_t g = 0; g < p_.generators; ++g) {
    if (is_defining_gen[g]) continue;
    gen_tail[g] = nice.size();
    nice.push_back(class_ == 0);
    tail_gen.push_back(g);
    tail_pair.push_back({SIZE_MAX, SIZE_MAX});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (weights_[i] + weights_[j] > target || is_definition.count({i, j})) continue;
      pair_tail[{i, j}] = nice.size();
      bool top = (weights_[i] == class_ && weights_[j] == 1) || (weights_[j] == class_ && weights_[i] == 1);
      nice.push_back(top);
      tail_gen.push_back(SIZE_MAX);
      tail_pair.push_back({i, j});
    }
  const std::size_t tails = nice.size();
  if (n + tails > budget)
    throw Error(ErrorKind::BudgetExceeded, "covering algebra at class " + std::to_string(target) + " needs " +
                                               std::to_string(n + tails) + " coordinates, budget " +
                                               std::to_string(budget));

  // Column order for elimination: nice tails last, so the non-pivot columns
  // (the surviving tails) are all nice ones.
  std::vector<std::size_t> column(tails);
  {
    std::size_t next = 0;
    for (std::size_t t = 0; t < tails; ++t)
      if (!nice[t]) column[t] = next++;
    for (std::size_t t = 0; t < tails; ++t)
      if (nice[t]) column[t] = next++;
  }

  // Raw bracket of basis elements in the covering algebra: coordinates
  // 0..n-1 for the basis, n + column(t) for tail t.
  auto raw_basis_bracket = [&](std::size_t a, std::size_t b, const Rational& f,
                               std::map<std::size_t, Rational>& acc) {
    if (a == b || f.is_zero()) return;
    std::size_t i = std::min(a, b), j = std::max(a, b);
    Rational s = a < b ? f : -f;
    add_sparse(acc, entry(i, j), s);
    if (auto it = pair_tail.find({i, j}); it != pair_tail.end()) {
      auto& slot = acc[n + column[it->second]];
      slot += s;
      if (slot.is_zero()) acc.erase(n + column[it->second]);
    }
  };

  EchelonBuilder relations(tails);
  auto absorb = [&](const std::map<std::size_t, Rational>& value, const char* what) {
    Vector row(tails);
    for (const auto& [k, c] : value) {
      if (k < n) throw std::logic_error(std::string(what) + " has a component outside the tail space");
      row[k - n] = c;
    }
    relations.insert(std::move(row));
  };

  // Jacobi consistency on triples whose total weight can still be nonzero.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (weights_[i] + weights_[j] >= target) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (weights_[i] + weights_[j] + weights_[k] > target) continue;
        std::map<std::size_t, Rational> acc;
        // [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]; tails are central.
        for (const auto& t : entry(i, j)) raw_basis_bracket(t.k, k, t.c, acc);
        for (const auto& t : entry(j, k)) raw_basis_bracket(t.k, i, t.c, acc);
        for (const auto& t : entry(i, k)) raw_basis_bracket(t.k, j, -t.c, acc);
        if (!acc.empty()) absorb(acc, "Jacobi defect");
      }
    }

  // Relators, evaluated with generator images lifted into the covering.
  const std::size_t raw_dim = n + tails;
  std::vector<Vector> lifted;
  for (std::size_t g = 0; g < p_.generators; ++g) {
    Vector v = to_dense(images_[g], raw_dim);
    if (gen_tail[g] != SIZE_MAX) v[n + column[gen_tail[g]]] += 1;
    lifted.push_back(std::move(v));
  }
  auto raw_bracket = [&](const Vector& u, const Vector& v) {
    std::map<std::size_t, Rational> acc;
    for (std::size_t a = 0; a < n; ++a) {
      if (u[a].is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (!v[b].is_zero()) raw_basis_bracket(a, b, u[a] * v[b], acc);
    }
    Vector out(raw_dim);
    for (auto& [k, c] : acc) out[k] = c;
    return out;
  };
  for (const auto& r : p_.relators) {
    Vector value = evaluate(r, lifted, raw_dim, raw_bracket);
    std::map<std::size_t, Rational> acc;
    for (std::size_t k = 0; k < raw_dim; ++k)
      if (!value[k].is_zero()) acc[k] = value[k];
    if (!acc.empty()) absorb(acc, "relator value");
  }

  // Surviving tails become the new basis elements of weight target.
  Subspace rel = relations.subspace();
  auto survivors = complement_coords(rel);
  std::vector<std::size_t> tail_at_column(tails);
  for (std::size_t t = 0; t < tails; ++t) tail_at_column[column[t]] = t;
  std::vector<std::ptrdiff_t> new_index(tails, -1);
  for (std::size_t s = 0; s < survivors.size(); ++s) {
    std::size_t t = tail_at_column[survivors[s]];
    if (!nice[t]) throw std::logic_error("surviving tail is not a top-weight product");
    new_index[survivors[s]] = static_cast<std::ptrdiff_t>(n + s);
  }
  std::vector<std::ptrdiff_t> pivot_row(tails, -1);
  for (std::size_t r = 0; r < rel.dim(); ++r) pivot_row[rel.pivots()[r]] = static_cast<std::ptrdiff_t>(r);
  auto reduced = [&](std::size_t t) {
    SparseVector out;
    std::size_t col = column[t];
    if (new_index[col] >= 0) {
      out.push_back({static_cast<std::size_t>(new_index[col]), Rational(1)});
      return out;
    }
    auto r = static_cast<std::size_t>(pivot_row[col]);
    for (auto s : survivors) {
      const auto& c = rel.basis()(r, s);
      if (!c.is_zero()) out.push_back({static_cast<std::size_t>(new_index[s]), -c});
    }
    return out;
  };

  for (const auto& [ij, t] : pair_tail) {
    auto add = reduced(t);
    if (add.empty()) continue;
    auto& e = table_[ij];
    e.insert(e.end(), add.begin(), add.end());
  }
  for (std::size_t g = 0; g < p_.generators; ++g) {
    if (gen_tail[g] == SIZE_MAX) continue;
    auto add = reduced(gen_tail[g]);
    images_[g].insert(images_[g].end(), add.begin(), add.end());
  }
  for (auto s : survivors) {
    std::size_t t = tail_at_column[s];
    Definition d;
    if (tail_gen[t] != SIZE_MAX) {
      d.generator = tail_gen[t];
      images_[tail_gen[t]] = {{weights_.size(), Rational(1)}};
    } else {
      d.left = tail_pair[t].first;
      d.right = tail_pair[t].second;
    }
    defs_.push_back(d);
    weights_.push_back(target);
  }
  class_ = target;
}

QuotientResult NilpotentState::result(bool stabilized, std::vector<std::size_t> history) const {
  const std::size_t n = dim();
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(label(k));
  std::vector<BracketEntry> entries;
  for (const auto& [ij, v] : table_)
    if (!v.empty()) entries.push_back({ij.first, ij.second, v});
  QuotientResult q;
  q.algebra = LieAlgebra("nq(class " + std::to_string(class_) + ")", std::move(labels), std::move(entries));
  q.class_used = class_;
  for (const auto& img : images_) q.generator_images.push_back(to_dense(img, n));
  q.stabilized = stabilized;
  q.history = std::move(history);
  q.weights = weights_;
  return q;
}

}  // namespace

QuotientResult class_quotient(const Presentation& p, std::size_t c, std::optional<std::size_t> budget) {
  p.check();
  const std::size_t cap = budget.value_or(dimension_budget());
  NilpotentState state(p);
  std::vector<std::size_t> history;
  bool stable = false;
  for (std::size_t k = 1; k <= c; ++k) {
    std::size_t before = state.dim();
    state.extend(cap);
    if (k > 1 && state.dim() == before) stable = true;
    history.push_back(state.dim());
  }
  return state.result(stable, std::move(history));
}

QuotientResult stable_quotient(const Presentation& p, std::size_t max_class, std::optional<std::size_t> budget) {
  p.check();
  const std::size_t cap = budget.value_or(dimension_budget());
  NilpotentState state(p);
  std::vector<std::size_t> history;
  for (std::size_t k = 1; k <= max_class; ++k) {
    std::size_t before = state.dim();
    state.extend(cap);
    history.push_back(state.dim());
    if (k > 1 && state.dim() == before) {
      // Nothing new in weight k: every further quotient coincides.
      auto q = state.result(true, std::move(history));
      q.class_used = k - 1;
      return q;
    }
  }
  return state.result(false, std::move(history));
}

QuotientResult free_class_quotient(const Presentation& p, std::size_t c, std::optional<std::size_t> budget) {
  p.check();
  if (p.generators == 0) {
    QuotientResult q;
    q.algebra = LieAlgebra::abelian(0, "free quotient");
    q.class_used = c;
    q.history.assign(c, 0);
    return q;
  }
  auto f = build_free_nilpotent(p.generators, c, budget);
  const auto& table = f.table();
  EchelonBuilder span(f.dim());
  std::deque<Vector> pending;
  for (const auto& r : p.relators) pending.push_back(f.eval(r));
  while (!pending.empty()) {
    Vector v = std::move(pending.front());
    pending.pop_front();
    if (!span.insert(v)) continue;
    for (std::size_t g = 0; g < p.generators; ++g) {
      Vector w(f.dim());
      table.add_ad(w, 1, g, v);
      if (!is_zero(w)) pending.push_back(std::move(w));
    }
  }
  auto quot = quotient(table, span.subspace(), "free quotient (class " + std::to_string(c) + ")");
  QuotientResult q;
  q.class_used = c;
  for (std::size_t g = 0; g < p.generators; ++g) q.generator_images.push_back(quot.projection(f.generator(g)));
  q.history.push_back(quot.algebra.dim());
  for (auto k : quot.coords) q.weights.push_back(f.degree(k));
  q.algebra = std::move(quot.algebra);
  return q;
}

std::vector<Vector> relator_values(const QuotientResult& q, const Presentation& p) {
  std::vector<Vector> out;
  for (const auto& r : p.relators)
    out.push_back(evaluate(r, q.generator_images, q.algebra.dim(),
                           [&](const Vector& a, const Vector& b) { return q.algebra.bracket(a, b); }));
  return out;
}

Presentation structure_presentation(const LieAlgebra& g) {
  Presentation p;
  p.generators = g.dim();
  p.gen_labels = g.labels();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      std::vector<BracketExpr> terms{BracketExpr::br(BracketExpr::gen(i), BracketExpr::gen(j))};
      for (const auto& t : g.structure(i, j)) terms.push_back(BracketExpr::scale(-t.c, BracketExpr::gen(t.k)));
      p.relators.push_back(BracketExpr::sum(std::move(terms)));
    }
  return p;
}

}  // namespace wclie
