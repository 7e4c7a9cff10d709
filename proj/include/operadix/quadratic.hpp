#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadix/element.hpp"

namespace operadix {

namespace linalg {

// Reduced row echelon form over an exact field, leftmost-pivot convention.
// Returns the rank; zero rows are dropped.
template <class S>
std::size_t rref(std::vector<std::vector<S>>& rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    S inv = S(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      S f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

// Basis of the right nullspace of `rows`, returned in rref.
template <class S>
std::vector<std::vector<S>> nullspace(std::vector<std::vector<S>> rows,
                                      std::size_t cols) {
  rref(rows);
  std::vector<std::size_t> pivot_col(rows.size());
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t c = 0;
    while (c < cols && rows[i][c].is_zero()) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<std::vector<S>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(cols, S(0));
    v[f] = S(1);
    for (std::size_t i = 0; i < rows.size(); ++i) v[pivot_col[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

}  // namespace linalg

// A quadratic presentation: one generator plus the subspace of relations in
// arity 2n-1, stored as rref rows over the weight-2 monomial basis
// mu o_1 mu, ..., mu o_n mu.  The row space, not a spanning set, is the
// datum, so equal presentations have equal rows.
template <class S>
struct quadratic_presentation {
  generator_spec gen;
  std::vector<std::vector<S>> relations;

  quadratic_presentation(generator_spec g, std::vector<std::vector<S>> rels)
      : gen(std::move(g)), relations(std::move(rels)) {
    for (const auto& row : relations)
      if (static_cast<int>(row.size()) != gen.arity_n)
        throw std::invalid_argument("presentation: relation row has wrong length");
    linalg::rref(relations);
  }

  std::size_t relation_rank() const { return relations.size(); }

  // the relation rows as elements of the free operad at arity 2n-1
  std::vector<element<S>> relation_elements() const {
    int n = gen.arity_n;
    auto cor = planar_tree::corolla(n);
    std::vector<element<S>> out;
    for (const auto& row : relations) {
      element<S> e(gen, 2 * n - 1);
      for (int i = 1; i <= n; ++i)
        e.add_term(cor.graft(i, cor), row[static_cast<std::size_t>(i - 1)]);
      out.push_back(std::move(e));
    }
    return out;
  }

  friend bool operator==(const quadratic_presentation& a,
                         const quadratic_presentation& b) = default;
};

// Totally associative presentation: rows mu o_i mu - mu o_{i+1} mu for
// 1 <= i <= n-1.
template <class S>
quadratic_presentation<S> ta_presentation(int n, int d,
                                          const std::string& symbol = "mu") {
  if (n < 2) throw std::invalid_argument("ta_presentation: arity must be >= 2");
  std::vector<std::vector<S>> rows;
  for (int i = 1; i < n; ++i) {
    std::vector<S> row(static_cast<std::size_t>(n), S(0));
    row[static_cast<std::size_t>(i - 1)] = S(1);
    row[static_cast<std::size_t>(i)] = S(-1);
    rows.push_back(std::move(row));
  }
  return quadratic_presentation<S>(generator_spec(symbol, n, d), std::move(rows));
}

// Partially associative presentation: the single row
// sum_i (-1)^{(i+1)(n-1)} mu o_i mu.
template <class S>
quadratic_presentation<S> pa_presentation(int n, int d,
                                          const std::string& symbol = "mu") {
  if (n < 2) throw std::invalid_argument("pa_presentation: arity must be >= 2");
  std::vector<S> row(static_cast<std::size_t>(n), S(0));
  for (int i = 1; i <= n; ++i)
    row[static_cast<std::size_t>(i - 1)] = ((i + 1) * (n - 1)) % 2 != 0 ? S(-1) : S(1);
  return quadratic_presentation<S>(generator_spec(symbol, n, d), {std::move(row)});
}

// Koszul dual: the presentation on the dual generator (degree -d+n-2)
// whose relations are the orthogonal complement of the input relations
// under the signed pairing, computed as the nullspace of the matrix
// M[r][i] = (-1)^{(i+1)(n+1)} R[r][i].
template <class S>
quadratic_presentation<S> koszul_dual(const quadratic_presentation<S>& p) {
  int n = p.gen.arity_n;
  std::vector<std::vector<S>> m = p.relations;
  for (auto& row : m)
    for (int i = 1; i <= n; ++i)
      if (pairing_sign(n, i) < 0) row[static_cast<std::size_t>(i - 1)] =
          -row[static_cast<std::size_t>(i - 1)];
  auto dual_rows = linalg::nullspace(std::move(m), static_cast<std::size_t>(n));
  generator_spec dual_gen(p.gen.symbol + "*", n, -p.gen.degree_d + n - 2);
  return quadratic_presentation<S>(std::move(dual_gen), std::move(dual_rows));
}

}  // namespace operadix
