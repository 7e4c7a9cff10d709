#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "operadix/tree.hpp"

namespace operadix {

// The single generating operation of a free ns operad: a printable symbol,
// its arity n >= 2, and its homological degree.
struct generator_spec {
  std::string symbol;
  int arity_n = 2;
  int degree_d = 0;

  generator_spec() = default;
  generator_spec(std::string sym, int n, int d)
      : symbol(std::move(sym)), arity_n(n), degree_d(d) {
    if (n < 2) throw std::invalid_argument("generator_spec: arity must be >= 2");
  }

  friend bool operator==(const generator_spec&, const generator_spec&) = default;
};

struct monomial {
  generator_spec gen;
  planar_tree tree;

  friend bool operator==(const monomial&, const monomial&) = default;
};

// Formal linear combination of tree monomials over one generator, all of
// the same arity.  Terms are kept in ascending path glex order with no
// explicit zeros, so equal elements compare equal term by term.
template <class S>
class element {
public:
  element(generator_spec gen, int arity) : gen_(std::move(gen)), arity_(arity) {
    int step = gen_.arity_n - 1;
    if (arity < 1 || (arity - 1) % step != 0)
      throw std::invalid_argument("element: arity not of the form 1 + w(n-1)");
  }

  static element from_monomial(const generator_spec& gen, const planar_tree& tree,
                               S coeff = S(1)) {
    if (tree.arity_n() != gen.arity_n)
      throw std::invalid_argument("element: tree arity does not match generator");
    element e(gen, tree.leaf_count());
    e.add_term(tree, std::move(coeff));
    return e;
  }

  const generator_spec& gen() const { return gen_; }
  int arity() const { return arity_; }
  int weight() const { return (arity_ - 1) / (gen_.arity_n - 1); }
  int degree() const { return weight() * gen_.degree_d; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<planar_tree, S, path_glex_less>& terms() const { return terms_; }

  S coeff(const planar_tree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? S(0) : it->second;
  }

  // greatest monomial under path glex
  const planar_tree& leading_tree() const {
    if (terms_.empty()) throw std::logic_error("element: leading term of zero");
    return terms_.rbegin()->first;
  }
  const S& leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("element: leading term of zero");
    return terms_.rbegin()->second;
  }

  void add_term(const planar_tree& t, S c) {
    if (t.leaf_count() != arity_)
      throw std::invalid_argument("element: term arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  element& operator+=(const element& o) {
    require_compatible(o);
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
  }
  element& operator-=(const element& o) {
    require_compatible(o);
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
  }
  element& operator*=(const S& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }

  friend element operator+(element a, const element& b) { return a += b; }
  friend element operator-(element a, const element& b) { return a -= b; }
  friend element operator*(element a, const S& s) { return a *= s; }
  friend element operator*(const S& s, element a) { return a *= s; }
  element operator-() const {
    element r(*this);
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const element& a, const element& b) {
    return a.gen_ == b.gen_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

private:
  void require_compatible(const element& o) const {
    if (gen_ != o.gen_) throw std::invalid_argument("element: generator mismatch");
    if (arity_ != o.arity_) throw std::invalid_argument("element: arity mismatch");
  }

  generator_spec gen_;
  int arity_;
  std::map<planar_tree, S, path_glex_less> terms_;
};

namespace detail {
// Koszul sign of grafting a weight-w block of degree-d generators past the
// t internal nodes of the outer word that follow the grafted leaf.
inline bool koszul_negates(int degree_d, int nodes_after, int inner_weight) {
  return (degree_d % 2 != 0) && (nodes_after % 2 != 0) && (inner_weight % 2 != 0);
}
}  // namespace detail

// Partial composition a o_slot b: bilinear extension of grafting, with the
// Koszul sign taken in the preorder ordering of generators.
template <class S>
element<S> compose(const element<S>& a, int slot, const element<S>& b) {
  if (a.gen() != b.gen())
    throw std::invalid_argument("compose: generator mismatch");
  if (slot < 1 || slot > a.arity())
    throw std::out_of_range("compose: slot out of range");
  int d = a.gen().degree_d;
  element<S> out(a.gen(), a.arity() + b.arity() - 1);
  for (const auto& [ta, ca] : a.terms()) {
    int after = ta.nodes_after_leaf(slot);
    for (const auto& [tb, cb] : b.terms()) {
      S c = ca * cb;
      if (detail::koszul_negates(d, after, tb.weight())) c = -c;
      out.add_term(ta.graft(slot, tb), std::move(c));
    }
  }
  return out;
}

// Slot of a weight-2 monomial: which child of the root carries the inner
// node, so the tree is corolla o_slot corolla.
inline int weight2_slot(const planar_tree& t) {
  if (t.weight() != 2) throw std::invalid_argument("weight2_slot: weight != 2");
  const auto& w = t.word();
  int n = t.arity_n();
  int child_start = 1;
  for (int c = 1; c <= n; ++c) {
    if (w[static_cast<std::size_t>(child_start)] == planar_tree::kNode) return c;
    ++child_start;
  }
  throw std::logic_error("weight2_slot: malformed weight-2 tree");
}

// Signed pairing between weight-2 components of the dual and primal free
// operads: <mu* o_i mu*, mu o_j mu> = (-1)^{(i+1)(n+1)} delta_ij, extended
// bilinearly.
template <class S>
S pairing(const element<S>& dual, const element<S>& primal) {
  int n = dual.gen().arity_n;
  if (primal.gen().arity_n != n)
    throw std::invalid_argument("pairing: arity mismatch");
  if (dual.arity() != 2 * n - 1 || primal.arity() != 2 * n - 1)
    throw std::invalid_argument("pairing: elements must have arity 2n-1");
  S out(0);
  for (const auto& [t, cd] : dual.terms()) {
    S cp = primal.coeff(t);
    if (cp.is_zero()) continue;
    int i = weight2_slot(t);
    S term = cd * cp;
    if (((i + 1) * (n + 1)) % 2 != 0) term = -term;
    out += term;
  }
  return out;
}

inline int pairing_sign(int n, int i) {
  return ((i + 1) * (n + 1)) % 2 != 0 ? -1 : 1;
}

}  // namespace operadix
