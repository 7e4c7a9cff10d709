#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadix/quadratic.hpp"

namespace operadix {

namespace detail {

// Echelonize a list of elements, keyed by leading (greatest) tree.  Rows
// come out monic and fully inter-reduced, so every tail term is a
// non-leading monomial.
template <class S>
std::map<planar_tree, element<S>, path_glex_greater> echelonize(
    const std::vector<element<S>>& rows) {
  std::map<planar_tree, element<S>, path_glex_greater> pivots;
  for (const auto& input : rows) {
    element<S> r = input;
    while (!r.is_zero()) {
      auto it = pivots.find(r.leading_tree());
      if (it == pivots.end()) break;
      r -= it->second * r.leading_coeff();
    }
    if (r.is_zero()) continue;
    r *= S(1) / r.leading_coeff();
    pivots.emplace(r.leading_tree(), std::move(r));
  }
  // clear pivot monomials from the tails; ascending leading order makes one
  // pass sufficient
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    element<S>& row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [t, c] : row.terms()) {
        if (t == it->first) continue;
        auto p = pivots.find(t);
        if (p != pivots.end()) {
          row -= p->second * c;
          changed = true;
          break;
        }
      }
    }
  }
  return pivots;
}

}  // namespace detail

// Spanning set of the weight-w layer of the operad ideal generated by the
// relations: the relations themselves at w = 2, then one-step compositions
// g o_i x and x o_i g against the previous layer, Koszul signs included.
template <class S>
std::vector<element<S>> ideal_span(const quadratic_presentation<S>& p, int w) {
  if (w < 2) throw std::invalid_argument("ideal_span: weight must be >= 2");
  int n = p.gen.arity_n;
  element<S> g = element<S>::from_monomial(p.gen, planar_tree::corolla(n));
  std::vector<element<S>> layer = p.relation_elements();
  if (layer.empty()) return layer;
  for (int cur = 3; cur <= w; ++cur) {
    std::vector<element<S>> next;
    next.reserve(layer.size() * static_cast<std::size_t>(n + layer[0].arity()));
    for (const auto& x : layer) {
      for (int i = 1; i <= n; ++i) next.push_back(compose(g, i, x));
      for (int i = 1; i <= x.arity(); ++i) next.push_back(compose(x, i, g));
    }
    layer = std::move(next);
  }
  return layer;
}

// Weight-w component of the quadratic quotient: the standard monomials
// (those not occurring as a leading term of the ideal layer) and, for every
// weight-w tree, its coordinate row over the standard basis.
template <class S>
struct component_basis {
  quadratic_presentation<S> presentation;
  int weight = 0;
  std::vector<planar_tree> standard;  // ascending path glex
  std::map<planar_tree, std::vector<S>, path_glex_less> reduction;

  std::vector<S> reduce(const element<S>& e) const {
    if (e.gen() != presentation.gen)
      throw std::invalid_argument("reduce: generator mismatch");
    if (e.weight() != weight)
      throw std::invalid_argument("reduce: weight mismatch");
    std::vector<S> out(standard.size(), S(0));
    for (const auto& [t, c] : e.terms()) {
      const auto& row = reduction.at(t);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * row[j];
    }
    return out;
  }
};

template <class S>
component_basis<S> make_component_basis(const quadratic_presentation<S>& p, int w) {
  if (w < 0) throw std::invalid_argument("component_basis: weight must be >= 0");
  component_basis<S> cb{p, w, {}, {}};
  auto trees = enumerate_trees(p.gen.arity_n, w);
  if (w < 2) {
    cb.standard = trees;
    cb.reduction.emplace(trees[0], std::vector<S>{S(1)});
    return cb;
  }
  auto pivots = detail::echelonize(ideal_span(p, w));
  for (const auto& t : trees)
    if (!pivots.contains(t)) cb.standard.push_back(t);
  std::map<planar_tree, std::size_t, path_glex_less> index;
  for (std::size_t j = 0; j < cb.standard.size(); ++j) index.emplace(cb.standard[j], j);
  for (const auto& t : trees) {
    std::vector<S> row(cb.standard.size(), S(0));
    auto it = index.find(t);
    if (it != index.end()) {
      row[it->second] = S(1);
    } else {
      // leading term of a monic echelon row: t = -(tail)
      for (const auto& [u, c] : pivots.at(t).terms()) {
        if (u == t) continue;
        row[index.at(u)] = -c;
      }
    }
    cb.reduction.emplace(t, std::move(row));
  }
  return cb;
}

// Dimension of each weight component 0..w_max of the quadratic quotient.
template <class S>
std::vector<long long> dims(const quadratic_presentation<S>& p, int w_max) {
  if (w_max < 0) throw std::invalid_argument("dims: weight must be >= 0");
  std::vector<long long> out;
  for (int w = 0; w <= w_max; ++w)
    out.push_back(static_cast<long long>(make_component_basis(p, w).standard.size()));
  return out;
}

// Count of weight-w trees in which no internal node sits in the first slot
// of its parent (every node's first child is a leaf); these biject with
// (n-1)-ary trees.
inline long long first_slot_forbidden_count(int n, int w) {
  long long cnt = 0;
  for (const auto& t : enumerate_trees(n, w)) {
    const auto& word = t.word();
    bool ok = true;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (word[i] == planar_tree::kNode && word[i + 1] == planar_tree::kNode) {
        ok = false;
        break;
      }
    cnt += ok;
  }
  return cnt;
}

struct groebner_weight_verdict {
  int weight = 0;
  long long standard_count = 0;
  long long forbidden_pattern_count = 0;
  long long catalan_count = 0;
  bool ok = false;
};

struct groebner_report {
  bool all_ok = true;
  std::vector<groebner_weight_verdict> verdicts;
};

// For even arity the partial-associativity relation is a Groebner basis, so
// the quotient dimensions must match both the count of trees avoiding
// first-slot composition and the (n-1)-ary Catalan numbers, weight by weight.
template <class S>
groebner_report groebner_check_even(const quadratic_presentation<S>& p, int w_max) {
  int n = p.gen.arity_n;
  if (n % 2 != 0)
    throw std::invalid_argument(
        "groebner_check_even: odd arity; the normal-form description only "
        "applies to even arity");
  groebner_report report;
  for (int w = 0; w <= w_max; ++w) {
    groebner_weight_verdict v;
    v.weight = w;
    v.standard_count =
        static_cast<long long>(make_component_basis(p, w).standard.size());
    v.forbidden_pattern_count = first_slot_forbidden_count(n, w);
    v.catalan_count = static_cast<long long>(catalan(n - 1, w));
    v.ok = v.standard_count == v.forbidden_pattern_count &&
           v.standard_count == v.catalan_count;
    report.all_ok = report.all_ok && v.ok;
    report.verdicts.push_back(v);
  }
  return report;
}

// Every standard monomial at weight w+1 should factor as s o_i mu for a
// standard s at weight w; returns the factorization (first in standard
// order) or nullopt where the pattern fails.
template <class S>
std::optional<std::pair<planar_tree, int>> standard_factorization(
    const component_basis<S>& lower, const planar_tree& t) {
  auto cor = planar_tree::corolla(t.arity_n());
  for (const auto& s : lower.standard)
    for (int i = 1; i <= s.leaf_count(); ++i)
      if (s.graft(i, cor) == t) return std::make_pair(s, i);
  return std::nullopt;
}

}  // namespace operadix
