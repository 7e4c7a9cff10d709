#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "operadix/algebra.hpp"
#include "operadix/components.hpp"

namespace operadix {

template <class S>
using endomorphism = std::vector<std::vector<S>>;  // row-major dim x dim

template <class S>
algebra_element<S> apply_endo(const endomorphism<S>& f, const algebra_element<S>& v) {
  if (f.size() != v.size()) throw std::invalid_argument("apply_endo: size mismatch");
  algebra_element<S> out(v.size(), S(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].size() != v.size()) throw std::invalid_argument("apply_endo: ragged matrix");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += f[i][j] * v[j];
  }
  return out;
}

template <class S>
endomorphism<S> identity_endo(int dim) {
  endomorphism<S> f(static_cast<std::size_t>(dim),
                    std::vector<S>(static_cast<std::size_t>(dim), S(0)));
  for (int i = 0; i < dim; ++i)
    f[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = S(1);
  return f;
}

// Operadic cochain of decomposable type: a degree together with the ordered
// tuple of endomorphisms that determine its values on dual-operad
// monomials.  A primitive degree-k cochain has 1 + k(n-1) components; cup
// products of quaternary cochains carry the shorter concatenated tuple and
// are evaluated through a context monomial instead.
template <class S>
struct decomposable_cochain {
  int degree = 0;
  std::vector<endomorphism<S>> components;
  const nary_algebra<S>* algebra = nullptr;

  bool fully_decomposed() const {
    return algebra != nullptr &&
           static_cast<int>(components.size()) ==
               1 + degree * (algebra->arity() - 1);
  }
};

template <class S>
decomposable_cochain<S> make_cochain(const nary_algebra<S>& a, int degree,
                                     std::vector<endomorphism<S>> components) {
  if (degree < 0) throw std::invalid_argument("cochain: degree must be >= 0");
  int expected = 1 + degree * (a.arity() - 1);
  if (static_cast<int>(components.size()) != expected)
    throw std::invalid_argument("cochain: degree-" + std::to_string(degree) +
                                " cochain needs " + std::to_string(expected) +
                                " components");
  for (const auto& f : components)
    if (static_cast<int>(f.size()) != a.dimension())
      throw std::invalid_argument("cochain: component has wrong dimension");
  return {degree, std::move(components), &a};
}

// n-ary cup product: degrees add plus (n-2), components concatenate in
// order.
template <class S>
decomposable_cochain<S> cup(const std::vector<decomposable_cochain<S>>& factors) {
  if (factors.empty()) throw std::invalid_argument("cup: no factors");
  const nary_algebra<S>* a = factors[0].algebra;
  if (a == nullptr) throw std::invalid_argument("cup: factor without algebra");
  int n = a->arity();
  if (static_cast<int>(factors.size()) != n)
    throw std::invalid_argument("cup: expected n factors");
  decomposable_cochain<S> out;
  out.algebra = a;
  out.degree = n - 2;
  for (const auto& f : factors) {
    if (f.algebra != a) throw std::invalid_argument("cup: mixed algebras");
    out.degree += f.degree;
    out.components.insert(out.components.end(), f.components.begin(),
                          f.components.end());
  }
  return out;
}

// Value of a cochain on a dual-operad monomial: apply component i to
// argument i, then evaluate the tree in the algebra.  Degree 0 evaluates on
// the identity tree as plain endomorphism application.
template <class S>
algebra_element<S> evaluate_cochain(const decomposable_cochain<S>& c,
                                    const planar_tree& gamma,
                                    const std::vector<algebra_element<S>>& args) {
  const nary_algebra<S>& a = *c.algebra;
  if (gamma.weight() != c.degree)
    throw std::invalid_argument("evaluate_cochain: monomial weight != degree");
  if (static_cast<int>(c.components.size()) != gamma.leaf_count())
    throw std::invalid_argument(
        "evaluate_cochain: cochain is not fully decomposed at this arity");
  if (args.size() != c.components.size())
    throw std::invalid_argument("evaluate_cochain: argument count mismatch");
  std::vector<algebra_element<S>> vals;
  vals.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    vals.push_back(apply_endo(c.components[i], args[i]));
  return evaluate_tree(a, gamma, vals);
}

// A dual-operad monomial recorded as a composition chain: the weight-2
// monomial m_seed at the top, then right extensions o_slot mu* applied in
// order.  Keeping the chain (not just the expanded tree) is what makes the
// seed substitution m_q -> m_p of the partial-associativity proofs well
// defined.
struct context_monomial {
  int seed = 1;
  std::vector<int> extensions;

  int weight() const { return 2 + static_cast<int>(extensions.size()); }

  planar_tree expand(int n) const {
    if (seed < 1 || seed > n) throw std::out_of_range("context_monomial: bad seed");
    auto cor = planar_tree::corolla(n);
    planar_tree t = cor.graft(seed, cor);
    for (int s : extensions) t = t.graft(s, cor);
    return t;
  }

  std::string str() const {
    std::string out = "m" + std::to_string(seed);
    for (int s : extensions) out = "(" + out + " o_" + std::to_string(s) + " mu*)";
    return out;
  }

  friend bool operator==(const context_monomial&, const context_monomial&) = default;
};

// Expression tree of nested cup products; leaves stand for cochain factors.
struct cup_expression {
  bool is_cup = false;
  int leaf_degree = 0;
  std::vector<cup_expression> children;

  static cup_expression leaf(int degree = 0) { return {false, degree, {}}; }
  static cup_expression cup_of(std::vector<cup_expression> ch) {
    return {true, 0, std::move(ch)};
  }

  int degree(int n) const {
    if (!is_cup) return leaf_degree;
    if (static_cast<int>(children.size()) != n)
      throw std::invalid_argument("cup_expression: cup node needs n children");
    int d = n - 2;
    for (const auto& c : children) d += c.degree(n);
    return d;
  }
};

// For a two-level nesting (an outer cup with exactly one cup child, at slot
// p), evaluation against a context monomial replaces the seed index by p and
// keeps the extension word.  Deeper nestings are rejected here; the theorem
// check handles them by induction over the extension word.
inline context_monomial nested_symbolic_eval(const cup_expression& e, int n,
                                             const context_monomial& beta) {
  if (!e.is_cup || static_cast<int>(e.children.size()) != n)
    throw std::invalid_argument("nested_symbolic_eval: outer node must be an n-ary cup");
  int slot = 0;
  for (int i = 0; i < n; ++i) {
    const auto& child = e.children[static_cast<std::size_t>(i)];
    if (!child.is_cup) continue;
    if (slot != 0)
      throw std::invalid_argument("nested_symbolic_eval: more than one inner cup");
    if (static_cast<int>(child.children.size()) != n)
      throw std::invalid_argument("nested_symbolic_eval: inner node must be an n-ary cup");
    for (const auto& g : child.children)
      if (g.is_cup)
        throw std::invalid_argument("nested_symbolic_eval: nesting deeper than two levels");
    slot = i + 1;
  }
  if (slot == 0)
    throw std::invalid_argument("nested_symbolic_eval: no inner cup");
  context_monomial out = beta;
  out.seed = slot;
  return out;
}

// Evaluate a component tuple against a context monomial.  Walking the chain
// from the root, a step whose slot lands while the components exactly cover
// the current tree duplicates the slot's component n-fold (the inner mu*
// reuses it, as in the quaternary worked examples); otherwise the
// components already provide for the deeper structure and pass through
// positionally.
template <class S>
algebra_element<S> evaluate_on_context(const nary_algebra<S>& a,
                                       std::vector<endomorphism<S>> comps,
                                       const context_monomial& beta,
                                       const std::vector<algebra_element<S>>& args) {
  int n = a.arity();
  planar_tree tree = planar_tree::corolla(n);
  std::vector<int> chain;
  chain.push_back(beta.seed);
  chain.insert(chain.end(), beta.extensions.begin(), beta.extensions.end());
  for (int s : chain) {
    if (static_cast<int>(comps.size()) == tree.leaf_count()) {
      if (s < 1 || s > static_cast<int>(comps.size()))
        throw std::out_of_range("evaluate_on_context: slot out of range");
      endomorphism<S> dup = comps[static_cast<std::size_t>(s - 1)];
      comps.insert(comps.begin() + (s - 1), static_cast<std::size_t>(n - 1), dup);
    }
    tree = tree.graft(s, planar_tree::corolla(n));
  }
  if (static_cast<int>(comps.size()) != tree.leaf_count())
    throw std::invalid_argument(
        "evaluate_on_context: components do not cover the monomial");
  if (args.size() != comps.size())
    throw std::invalid_argument("evaluate_on_context: argument count mismatch");
  std::vector<algebra_element<S>> vals;
  vals.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    vals.push_back(apply_endo(comps[i], args[i]));
  return evaluate_tree(a, tree, vals);
}

// The A-valued residual of the partial-associativity identity at a context
// monomial: sum over seed substitutions with signs (-1)^{(p+1)(n-1)},
// evaluated literally in A with no homological signs.
template <class S>
algebra_element<S> pa_defect_numeric(const nary_algebra<S>& a,
                                     const std::vector<decomposable_cochain<S>>& factors,
                                     const context_monomial& beta,
                                     const std::vector<algebra_element<S>>& args) {
  int n = a.arity();
  if (static_cast<int>(factors.size()) != 2 * n - 1)
    throw std::invalid_argument("pa_defect_numeric: expected 2n-1 cochain factors");
  std::vector<endomorphism<S>> comps;
  for (const auto& f : factors) {
    if (f.algebra != &a) throw std::invalid_argument("pa_defect_numeric: mixed algebras");
    comps.insert(comps.end(), f.components.begin(), f.components.end());
  }
  algebra_element<S> out(static_cast<std::size_t>(a.dimension()), S(0));
  for (int p = 1; p <= n; ++p) {
    context_monomial sub = beta;
    sub.seed = p;
    auto val = evaluate_on_context(a, comps, sub, args);
    bool negate = ((p + 1) * (n - 1)) % 2 != 0;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] += negate ? -val[j] : val[j];
  }
  return out;
}

template <class S>
struct theorem_certificate_entry {
  context_monomial beta;
  std::vector<S> reduced_row;
  bool zero = false;
};

template <class S>
struct theorem_report {
  bool ok = false;
  int n = 0;
  int weight = 0;
  std::vector<theorem_certificate_entry<S>> entries;
  std::string stability_issue;  // nonempty if a standard monomial had no
                                // standard right-extension parent
};

// Machine verification of the partial associativity of the cup product on
// the dual operad: for every standard basis monomial of the result weight,
// written as a right-extension chain from a weight-2 seed, the signed sum
// over seed substitutions must reduce to the zero row in the quotient.
template <class S>
theorem_report<S> theorem_check_symbolic(int n, const std::vector<int>& degrees,
                                         int w_cap) {
  if (n < 3) throw std::invalid_argument("theorem_check_symbolic: arity must be >= 3");
  if (static_cast<int>(degrees.size()) != 2 * n - 1)
    throw std::invalid_argument("theorem_check_symbolic: expected 2n-1 degrees");
  int total = 0;
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("theorem_check_symbolic: negative degree");
    total += d;
  }
  int weight = total + 2 * (n - 2);
  if (weight > w_cap)
    throw std::invalid_argument("theorem_check_symbolic: result weight exceeds cap");

  theorem_report<S> report;
  report.n = n;
  report.weight = weight;

  auto pres = pa_presentation<S>(n, n - 2, "mu*");
  std::vector<component_basis<S>> bases;  // bases[w] for w = 0..weight
  for (int w = 0; w <= weight; ++w) bases.push_back(make_component_basis(pres, w));

  // right-extension chain for every standard monomial, built weight by weight
  std::map<planar_tree, context_monomial, path_glex_less> chains;
  for (const auto& t : bases[2].standard)
    chains.emplace(t, context_monomial{weight2_slot(t), {}});
  for (int w = 3; w <= weight; ++w) {
    std::map<planar_tree, context_monomial, path_glex_less> next;
    for (const auto& t : bases[static_cast<std::size_t>(w)].standard) {
      auto fact = standard_factorization(bases[static_cast<std::size_t>(w - 1)], t);
      if (!fact) {
        report.stability_issue = "standard monomial at weight " + std::to_string(w) +
                                 " with no standard parent: " + t.sexpr();
        return report;
      }
      context_monomial c = chains.at(fact->first);
      c.extensions.push_back(fact->second);
      next.emplace(t, std::move(c));
    }
    chains = std::move(next);
  }

  element<S> gen = element<S>::from_monomial(pres.gen, planar_tree::corolla(n));
  auto cor = planar_tree::corolla(n);
  bool all_zero = true;
  for (const auto& t : bases[static_cast<std::size_t>(weight)].standard) {
    const context_monomial& beta = chains.at(t);
    element<S> sum(pres.gen, 1 + weight * (n - 1));
    for (int p = 1; p <= n; ++p) {
      S c = ((p + 1) * (n - 1)) % 2 != 0 ? S(-1) : S(1);
      element<S> e = element<S>::from_monomial(pres.gen, cor.graft(p, cor), c);
      for (int slot : beta.extensions) e = compose(e, slot, gen);
      sum += e;
    }
    auto row = bases[static_cast<std::size_t>(weight)].reduce(sum);
    bool zero = true;
    for (const auto& x : row) zero = zero && x.is_zero();
    all_zero = all_zero && zero;
    report.entries.push_back({beta, std::move(row), zero});
  }
  report.ok = all_zero && report.stability_issue.empty();
  return report;
}

}  // namespace operadix
