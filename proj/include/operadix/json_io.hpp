#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "operadix/algebra.hpp"
#include "operadix/element.hpp"
#include "operadix/quadratic.hpp"

namespace operadix {

using json = nlohmann::ordered_json;

inline json gen_to_json(const generator_spec& g) {
  return json{{"symbol", g.symbol}, {"arity", g.arity_n}, {"degree", g.degree_d}};
}

inline generator_spec gen_from_json(const json& j) {
  return generator_spec(j.at("symbol").get<std::string>(), j.at("arity").get<int>(),
                        j.at("degree").get<int>());
}

// Element: { "gen": {...}, "terms": [{"coeff": "...", "tree": "(m ...)"}] },
// terms ascending in path glex order.
template <class S>
json element_to_json(const element<S>& e) {
  json terms = json::array();
  for (const auto& [t, c] : e.terms())
    terms.push_back(json{{"coeff", c.str()}, {"tree", t.sexpr()}});
  return json{{"gen", gen_to_json(e.gen())}, {"terms", terms}};
}

template <class S>
element<S> element_from_json(const json& j, int arity_hint = 0) {
  generator_spec gen = gen_from_json(j.at("gen"));
  const json& terms = j.at("terms");
  int arity = arity_hint;
  std::vector<std::pair<planar_tree, S>> parsed;
  for (const auto& term : terms) {
    planar_tree t =
        planar_tree::parse_sexpr(gen.arity_n, term.at("tree").template get<std::string>());
    parsed.emplace_back(std::move(t), S::parse(term.at("coeff").template get<std::string>()));
    arity = parsed.back().first.leaf_count();
  }
  if (arity == 0)
    throw std::invalid_argument("element json: zero element needs an arity hint");
  element<S> e(gen, arity);
  for (auto& [t, c] : parsed) e.add_term(t, std::move(c));
  return e;
}

// Presentation: { "gen": {...}, "relations": [[row of scalars]] } with rows
// echelon-normalized.
template <class S>
json presentation_to_json(const quadratic_presentation<S>& p) {
  json rows = json::array();
  for (const auto& row : p.relations) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.str());
    rows.push_back(std::move(r));
  }
  return json{{"gen", gen_to_json(p.gen)}, {"relations", rows}};
}

template <class S>
quadratic_presentation<S> presentation_from_json(const json& j) {
  generator_spec gen = gen_from_json(j.at("gen"));
  std::vector<std::vector<S>> rows;
  for (const auto& jr : j.at("relations")) {
    std::vector<S> row;
    for (const auto& c : jr) row.push_back(S::parse(c.template get<std::string>()));
    rows.push_back(std::move(row));
  }
  return quadratic_presentation<S>(std::move(gen), std::move(rows));
}

namespace detail {
inline std::string tuple_key(const std::vector<int>& tuple) {
  std::string key = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(tuple[i]);
  }
  key += ')';
  return key;
}

inline std::vector<int> tuple_from_key(const std::string& key, int n) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')')
    throw std::invalid_argument("algebra json: bad tuple key '" + key + "'");
  std::vector<int> tuple;
  std::size_t pos = 1;
  while (pos < key.size() - 1) {
    std::size_t next = key.find(',', pos);
    if (next == std::string::npos || next > key.size() - 1) next = key.size() - 1;
    tuple.push_back(std::stoi(key.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (static_cast<int>(tuple.size()) != n)
    throw std::invalid_argument("algebra json: tuple key has wrong length");
  return tuple;
}
}  // namespace detail

// Algebra: { "n": 3, "dim": 2, "field": "q", "basis": [...],
//            "c": { "(i1,...,in)": [row] } }, zero rows omitted.
template <class S>
json algebra_to_json(const nary_algebra<S>& a) {
  int n = a.arity(), m = a.dimension();
  json c = json::object();
  std::vector<int> tuple(static_cast<std::size_t>(n), 1);
  while (true) {
    auto row = a.basis_product(tuple);
    bool nonzero = false;
    for (const auto& x : row) nonzero = nonzero || !x.is_zero();
    if (nonzero) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(x.str());
      c[detail::tuple_key(tuple)] = std::move(jr);
    }
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == m) {
      tuple[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  return json{{"n", n},
              {"dim", m},
              {"field", field_name<S>()},
              {"basis", a.basis_labels()},
              {"c", c}};
}

template <class S>
nary_algebra<S> algebra_from_json(const json& j) {
  int n = j.at("n").get<int>();
  int m = j.at("dim").get<int>();
  std::vector<std::string> basis;
  if (j.contains("basis")) basis = j.at("basis").get<std::vector<std::string>>();
  nary_algebra<S> a(n, m, std::move(basis));
  for (const auto& [key, jr] : j.at("c").items()) {
    std::vector<S> row;
    for (const auto& c : jr) row.push_back(S::parse(c.template get<std::string>()));
    a.set_product(detail::tuple_from_key(key, n), std::move(row));
  }
  return a;
}

inline field_spec algebra_json_field(const json& j) {
  return field_spec::parse(j.at("field").get<std::string>());
}

}  // namespace operadix
