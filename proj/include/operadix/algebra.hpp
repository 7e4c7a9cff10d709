#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadix/tree.hpp"

namespace operadix {

template <class S>
using algebra_element = std::vector<S>;

// Finite-dimensional n-ary algebra given by structure constants:
// c[(i_1,...,i_n)][j] is the coefficient of basis vector j in
// mu(b_{i_1}, ..., b_{i_n}).  Indices are 1-based at the API surface.
template <class S>
class nary_algebra {
public:
  nary_algebra(int n, int dim, std::vector<std::string> basis = {})
      : n_(n), dim_(dim), basis_(std::move(basis)) {
    if (n < 2) throw std::invalid_argument("nary_algebra: arity must be >= 2");
    if (dim < 1) throw std::invalid_argument("nary_algebra: dimension must be >= 1");
    if (basis_.empty())
      for (int i = 1; i <= dim; ++i) basis_.push_back("b" + std::to_string(i));
    if (static_cast<int>(basis_.size()) != dim)
      throw std::invalid_argument("nary_algebra: basis label count mismatch");
    std::size_t cells = 1;
    for (int k = 0; k < n; ++k) cells *= static_cast<std::size_t>(dim);
    c_.assign(cells * static_cast<std::size_t>(dim), S(0));
  }

  int arity() const { return n_; }
  int dimension() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return basis_; }

  void set_product(const std::vector<int>& tuple, std::vector<S> row) {
    if (static_cast<int>(row.size()) != dim_)
      throw std::invalid_argument("nary_algebra: product row has wrong length");
    std::size_t base = flat(tuple) * static_cast<std::size_t>(dim_);
    for (int j = 0; j < dim_; ++j) c_[base + static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)];
  }

  const S& structure_constant(const std::vector<int>& tuple, int j) const {
    if (j < 1 || j > dim_) throw std::out_of_range("nary_algebra: bad basis index");
    return c_[flat(tuple) * static_cast<std::size_t>(dim_) +
              static_cast<std::size_t>(j - 1)];
  }

  std::vector<S> basis_product(const std::vector<int>& tuple) const {
    std::size_t base = flat(tuple) * static_cast<std::size_t>(dim_);
    return {c_.begin() + static_cast<long>(base),
            c_.begin() + static_cast<long>(base + static_cast<std::size_t>(dim_))};
  }

  // multilinear product of n coordinate vectors
  algebra_element<S> product(const std::vector<algebra_element<S>>& factors) const {
    if (static_cast<int>(factors.size()) != n_)
      throw std::invalid_argument("nary_algebra: product needs n factors");
    for (const auto& f : factors)
      if (static_cast<int>(f.size()) != dim_)
        throw std::invalid_argument("nary_algebra: factor has wrong dimension");
    algebra_element<S> out(static_cast<std::size_t>(dim_), S(0));
    std::vector<int> idx(static_cast<std::size_t>(n_), 0);
    expand(factors, 0, S(1), idx, out);
    return out;
  }

  friend bool operator==(const nary_algebra& a, const nary_algebra& b) = default;

private:
  std::size_t flat(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != n_)
      throw std::invalid_argument("nary_algebra: tuple has wrong length");
    std::size_t f = 0;
    for (int i : tuple) {
      if (i < 1 || i > dim_) throw std::out_of_range("nary_algebra: bad basis index");
      f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i - 1);
    }
    return f;
  }

  void expand(const std::vector<algebra_element<S>>& factors, int pos, S coeff,
              std::vector<int>& idx, algebra_element<S>& out) const {
    if (pos == n_) {
      std::size_t f = 0;
      for (int i : idx) f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
      std::size_t base = f * static_cast<std::size_t>(dim_);
      for (int j = 0; j < dim_; ++j) {
        const S& c = c_[base + static_cast<std::size_t>(j)];
        if (!c.is_zero()) out[static_cast<std::size_t>(j)] += coeff * c;
      }
      return;
    }
    const auto& v = factors[static_cast<std::size_t>(pos)];
    for (int i = 0; i < dim_; ++i) {
      if (v[static_cast<std::size_t>(i)].is_zero()) continue;
      idx[static_cast<std::size_t>(pos)] = i;
      expand(factors, pos + 1, coeff * v[static_cast<std::size_t>(i)], idx, out);
    }
  }

  int n_;
  int dim_;
  std::vector<std::string> basis_;
  std::vector<S> c_;
};

// Evaluate a tree monomial on algebra elements: leaves take the arguments
// left to right, internal nodes apply the structure constants.
template <class S>
algebra_element<S> evaluate_tree(const nary_algebra<S>& a, const planar_tree& t,
                                 const std::vector<algebra_element<S>>& args) {
  if (t.arity_n() != a.arity())
    throw std::invalid_argument("evaluate_tree: arity mismatch");
  if (static_cast<int>(args.size()) != t.leaf_count())
    throw std::invalid_argument("evaluate_tree: argument count mismatch");
  const auto& word = t.word();
  std::size_t pos = 0, arg = 0;
  auto rec = [&](auto&& self) -> algebra_element<S> {
    if (word[pos++] == planar_tree::kLeaf) return args[arg++];
    std::vector<algebra_element<S>> children;
    children.reserve(static_cast<std::size_t>(a.arity()));
    for (int c = 0; c < a.arity(); ++c) children.push_back(self(self));
    return a.product(children);
  };
  return rec(rec);
}

template <class S>
struct associativity_verdict {
  bool ok = true;
  std::vector<int> args;  // 1-based basis tuple where two types disagree
  int type_a = 0;
  int type_b = 0;
  algebra_element<S> lhs, rhs;
};

// Check all n weight-2 association types against each other on every
// (2n-1)-tuple of basis vectors; multilinearity makes basis tuples
// sufficient.  Returns the first counterexample if the check fails.
template <class S>
associativity_verdict<S> check_total_associativity(const nary_algebra<S>& a) {
  int n = a.arity();
  int m = a.dimension();
  int slots = 2 * n - 1;
  auto cor = planar_tree::corolla(n);
  std::vector<planar_tree> types;
  for (int i = 1; i <= n; ++i) types.push_back(cor.graft(i, cor));

  std::vector<algebra_element<S>> units;
  for (int i = 0; i < m; ++i) {
    algebra_element<S> e(static_cast<std::size_t>(m), S(0));
    e[static_cast<std::size_t>(i)] = S(1);
    units.push_back(std::move(e));
  }

  std::vector<int> tuple(static_cast<std::size_t>(slots), 0);
  while (true) {
    std::vector<algebra_element<S>> args;
    args.reserve(static_cast<std::size_t>(slots));
    for (int i : tuple) args.push_back(units[static_cast<std::size_t>(i)]);
    auto first = evaluate_tree(a, types[0], args);
    for (int k = 1; k < n; ++k) {
      auto other = evaluate_tree(a, types[static_cast<std::size_t>(k)], args);
      if (other != first) {
        associativity_verdict<S> v;
        v.ok = false;
        for (int i : tuple) v.args.push_back(i + 1);
        v.type_a = 1;
        v.type_b = k + 1;
        v.lhs = std::move(first);
        v.rhs = std::move(other);
        return v;
      }
    }
    int pos = slots - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == m - 1) {
      tuple[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  return {};
}

namespace detail {
template <class S>
nary_algebra<S> validated(nary_algebra<S> a, const char* what) {
  auto v = check_total_associativity(a);
  if (!v.ok)
    throw std::logic_error(std::string(what) + ": not totally associative");
  return a;
}
}  // namespace detail

// 1-dimensional algebra with mu = product of scalars.
template <class S>
nary_algebra<S> scalar_algebra(int n) {
  nary_algebra<S> a(n, 1, {"e"});
  a.set_product(std::vector<int>(static_cast<std::size_t>(n), 1), {S(1)});
  return detail::validated(std::move(a), "scalar_algebra");
}

// Span of the odd powers x, x^3, x^5, ... inside F[x]/(x^T), with the
// truncated triple product; closed because a sum of three odd exponents is
// odd.
template <class S>
nary_algebra<S> odd_poly_algebra(int truncation) {
  if (truncation < 2)
    throw std::invalid_argument("odd_poly_algebra: truncation must be >= 2");
  std::vector<int> powers;
  for (int e = 1; e < truncation; e += 2) powers.push_back(e);
  std::vector<std::string> labels;
  for (int e : powers) labels.push_back(e == 1 ? "x" : "x^" + std::to_string(e));
  int m = static_cast<int>(powers.size());
  nary_algebra<S> a(3, m, labels);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k) {
        int e = powers[static_cast<std::size_t>(i - 1)] +
                powers[static_cast<std::size_t>(j - 1)] +
                powers[static_cast<std::size_t>(k - 1)];
        if (e >= truncation) continue;
        std::vector<S> row(static_cast<std::size_t>(m), S(0));
        for (int t = 1; t <= m; ++t)
          if (powers[static_cast<std::size_t>(t - 1)] == e) row[static_cast<std::size_t>(t - 1)] = S(1);
        a.set_product({i, j, k}, std::move(row));
      }
  return detail::validated(std::move(a), "odd_poly_algebra");
}

// p x p matrices with the triple product mu(a,b,c) = abc of the matrix
// ring.  Only the square shape carries this totally associative product;
// genuinely rectangular shapes are rejected.
template <class S>
nary_algebra<S> rect_matrix_algebra(int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("rect_matrix_algebra: sizes must be >= 1");
  if (p != q)
    throw std::invalid_argument(
        "rect_matrix_algebra: p x q with p != q has no totally associative "
        "triple product on pq dimensions; use p == q");
  int m = p * q;
  std::vector<std::string> labels;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j)
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
  nary_algebra<S> a(3, m, labels);
  auto idx = [&](int i, int j) { return (i - 1) * q + j; };  // 1-based
  // E_{ij} E_{kl} E_{uv} = delta_{jk} delta_{lu} E_{iv}
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j)
      for (int l = 1; l <= q; ++l)
        for (int v = 1; v <= q; ++v) {
          std::vector<S> row(static_cast<std::size_t>(m), S(0));
          row[static_cast<std::size_t>(idx(i, v) - 1)] = S(1);
          a.set_product({idx(i, j), idx(j, l), idx(l, v)}, std::move(row));
        }
  return detail::validated(std::move(a), "rect_matrix_algebra");
}

// Componentwise product on a diagonal basis; a validated sample for any
// arity, in particular the quaternary case.
template <class S>
nary_algebra<S> diagonal_algebra(int n, int dim) {
  nary_algebra<S> a(n, dim);
  for (int i = 1; i <= dim; ++i) {
    std::vector<S> row(static_cast<std::size_t>(dim), S(0));
    row[static_cast<std::size_t>(i - 1)] = S(1);
    a.set_product(std::vector<int>(static_cast<std::size_t>(n), i), std::move(row));
  }
  return detail::validated(std::move(a), "diagonal_algebra");
}

}  // namespace operadix
