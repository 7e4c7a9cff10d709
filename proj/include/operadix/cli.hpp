#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "operadix/cochain.hpp"
#include "operadix/json_io.hpp"

namespace operadix::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kTheoremFailed = 3;

namespace detail {

template <class F>
int with_field(const field_spec& fs, F&& fn) {
  if (fs.rational) return fn(std::type_identity<rat>{});
  gf::scoped_modulus guard(fs.p);
  return fn(std::type_identity<gf>{});
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
    out.push_back(std::stoi(item));
  }
  return out;
}

template <class S>
quadratic_presentation<S> family_presentation(const std::string& family, int n,
                                              int d,
                                              const std::string& symbol = "mu") {
  if (family == "ta") return ta_presentation<S>(n, d, symbol);
  if (family == "pa") return pa_presentation<S>(n, d, symbol);
  throw std::invalid_argument("unknown family '" + family + "'");
}

template <class S>
json scalar_row_json(const std::vector<S>& row) {
  json out = json::array();
  for (const auto& x : row) out.push_back(x.str());
  return out;
}

template <class S>
std::string scalar_row_str(const std::vector<S>& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += row[i].str();
  }
  return out + "]";
}

inline void emit(std::ostream& out, const json& payload, bool as_json,
                 const std::string& human) {
  if (as_json)
    out << payload.dump(2) << "\n";
  else
    out << human;
}

template <class S, class Rng>
S random_scalar(Rng& rng) {
  if constexpr (std::is_same_v<S, gf>) {
    std::uniform_int_distribution<long long> d(0, static_cast<long long>(gf::modulus()) - 1);
    return gf(d(rng));
  } else {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    return rat(bigint(num(rng)), bigint(den(rng)));
  }
}

template <class S, class Rng>
endomorphism<S> random_endo(int dim, Rng& rng) {
  endomorphism<S> f(static_cast<std::size_t>(dim));
  for (auto& row : f) {
    row.reserve(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) row.push_back(random_scalar<S>(rng));
  }
  return f;
}

template <class S, class Rng>
algebra_element<S> random_vector(int dim, Rng& rng) {
  algebra_element<S> v;
  v.reserve(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) v.push_back(random_scalar<S>(rng));
  return v;
}

template <class Rng>
context_monomial random_context(int n, int max_extensions, Rng& rng) {
  context_monomial beta;
  std::uniform_int_distribution<int> seed(1, n);
  beta.seed = seed(rng);
  std::uniform_int_distribution<int> len(0, max_extensions);
  int count = len(rng);
  int leaves = 2 * n - 1;
  for (int k = 0; k < count; ++k) {
    std::uniform_int_distribution<int> slot(1, leaves);
    beta.extensions.push_back(slot(rng));
    leaves += n - 1;
  }
  return beta;
}

}  // namespace detail

// Dispatches one invocation.  Returns the process exit code; output is
// deterministic for identical inputs.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact operadic calculus for n-ary associative structures",
               "operadix"};
  app.require_subcommand(1);

  // catalan
  auto* c_cat = app.add_subcommand("catalan", "n-ary Catalan number");
  int cat_n = 0, cat_w = 0;
  bool cat_json = false;
  c_cat->add_option("--n", cat_n, "generator arity")->required();
  c_cat->add_option("--w", cat_w, "weight (internal nodes)")->required();
  c_cat->add_flag("--json", cat_json, "emit JSON");

  // trees
  auto* c_trees = app.add_subcommand("trees", "enumerate trees in path glex order");
  int tr_n = 0, tr_w = 0;
  bool tr_json = false;
  c_trees->add_option("--n", tr_n, "generator arity")->required();
  c_trees->add_option("--w", tr_w, "weight (internal nodes)")->required();
  c_trees->add_flag("--json", tr_json, "emit JSON");

  // dual
  auto* c_dual = app.add_subcommand("dual", "Koszul dual of a quadratic presentation");
  std::string du_family = "ta", du_field = "q";
  int du_n = 0, du_d = 0;
  bool du_json = false;
  c_dual->add_option("--family", du_family, "ta or pa")->required();
  c_dual->add_option("--n", du_n, "generator arity")->required();
  c_dual->add_option("--d", du_d, "generator degree")->required();
  c_dual->add_option("--field", du_field, "q or fp:<prime>");
  c_dual->add_flag("--json", du_json, "emit JSON");

  // dims
  auto* c_dims = app.add_subcommand("dims", "dimension series of the quotient operad");
  std::string dm_family = "ta", dm_field = "q";
  int dm_n = 0, dm_d = 0, dm_wmax = 0;
  bool dm_json = false;
  c_dims->add_option("--family", dm_family, "ta or pa")->required();
  c_dims->add_option("--n", dm_n, "generator arity")->required();
  c_dims->add_option("--d", dm_d, "generator degree")->required();
  c_dims->add_option("--wmax", dm_wmax, "maximum weight")->required();
  c_dims->add_option("--field", dm_field, "q or fp:<prime>");
  c_dims->add_flag("--json", dm_json, "emit JSON");

  // normal-form
  auto* c_nf = app.add_subcommand("normal-form",
                                  "reduce an element to quotient coordinates");
  std::string nf_family = "ta", nf_field = "q", nf_element;
  int nf_n = 0, nf_d = 0;
  bool nf_json = false;
  c_nf->add_option("--family", nf_family, "ta or pa")->required();
  c_nf->add_option("--n", nf_n, "generator arity")->required();
  c_nf->add_option("--d", nf_d, "generator degree")->required();
  c_nf->add_option("--element", nf_element, "element JSON file")->required();
  c_nf->add_option("--field", nf_field, "q or fp:<prime>");
  c_nf->add_flag("--json", nf_json, "emit JSON");

  // pair
  auto* c_pair = app.add_subcommand(
      "pair", "signed pairing of dual against primal weight-2 elements");
  std::string pr_dual, pr_primal, pr_field = "q";
  int pr_n = 0;
  bool pr_json = false;
  c_pair->add_option("--n", pr_n, "emit the diagonal pairing matrix for arity n");
  c_pair->add_option("--dual", pr_dual, "dual element JSON file");
  c_pair->add_option("--primal", pr_primal, "primal element JSON file");
  c_pair->add_option("--field", pr_field, "q or fp:<prime>");
  c_pair->add_flag("--json", pr_json, "emit JSON");

  // check-algebra
  auto* c_chk = app.add_subcommand("check-algebra",
                                   "validate total associativity of an algebra");
  std::string ck_file, ck_field;
  bool ck_json = false;
  c_chk->add_option("file", ck_file, "algebra JSON file")->required();
  c_chk->add_option("--field", ck_field, "override the file's field tag");
  c_chk->add_flag("--json", ck_json, "emit JSON");

  // verify
  auto* c_ver = app.add_subcommand(
      "verify", "symbolic partial-associativity certificate for the cup product");
  std::string ve_degrees, ve_field = "q";
  int ve_n = 0, ve_wcap = 0;
  bool ve_json = false;
  c_ver->add_option("--n", ve_n, "generator arity")->required();
  c_ver->add_option("--degrees", ve_degrees, "comma list of 2n-1 cochain degrees")
      ->required();
  c_ver->add_option("--wcap", ve_wcap, "weight cap")->required();
  c_ver->add_option("--field", ve_field, "q or fp:<prime>");
  c_ver->add_flag("--json", ve_json, "emit JSON");

  // defect
  auto* c_def = app.add_subcommand(
      "defect", "numeric partial-associativity residual on random probes");
  std::string df_field = "q", df_algebra;
  int df_n = 0, df_trials = 100;
  unsigned long long df_seed = 12345;
  bool df_json = false;
  c_def->add_option("--n", df_n, "generator arity")->required();
  c_def->add_option("--algebra", df_algebra, "algebra JSON file")->required();
  c_def->add_option("--trials", df_trials, "number of random probes");
  c_def->add_option("--rng-seed", df_seed, "probe generator seed");
  c_def->add_option("--field", df_field, "q or fp:<prime>");
  c_def->add_flag("--json", df_json, "emit JSON");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_cat->parsed()) {
      bigint v = catalan(cat_n, cat_w);
      json payload{{"command", "catalan"}, {"n", cat_n}, {"w", cat_w},
                   {"value", v.str()}};
      detail::emit(out, payload, cat_json, v.str() + "\n");
      return kOk;
    }

    if (c_trees->parsed()) {
      auto trees = enumerate_trees(tr_n, tr_w);
      json list = json::array();
      std::string human;
      for (const auto& t : trees) {
        list.push_back(t.sexpr());
        human += t.sexpr() + "\n";
      }
      json payload{{"command", "trees"},
                   {"n", tr_n},
                   {"w", tr_w},
                   {"count", trees.size()},
                   {"trees", list}};
      detail::emit(out, payload, tr_json, human);
      return kOk;
    }

    if (c_dual->parsed()) {
      auto fs = field_spec::parse(du_field);
      return detail::with_field(fs, [&](auto tag) {
        using S = typename decltype(tag)::type;
        auto dual = koszul_dual(
            detail::family_presentation<S>(du_family, du_n, du_d));
        json payload{{"command", "dual"},
                     {"field", fs.str()},
                     {"family", du_family},
                     {"n", du_n},
                     {"d", du_d},
                     {"dual", presentation_to_json(dual)}};
        std::string human = "generator " + dual.gen.symbol + ": arity " +
                            std::to_string(dual.gen.arity_n) + ", degree " +
                            std::to_string(dual.gen.degree_d) + "\n";
        for (const auto& row : dual.relations)
          human += "relation " + detail::scalar_row_str(row) + "\n";
        detail::emit(out, payload, du_json, human);
        return kOk;
      });
    }

    if (c_dims->parsed()) {
      auto fs = field_spec::parse(dm_field);
      return detail::with_field(fs, [&](auto tag) {
        using S = typename decltype(tag)::type;
        auto p = detail::family_presentation<S>(dm_family, dm_n, dm_d);
        auto series = dims(p, dm_wmax);
        json catalan_check;  // null unless the even-arity pa check applies
        std::string check_text = "n/a";
        if (dm_family == "pa" && dm_n % 2 == 0) {
          auto report = groebner_check_even(p, dm_wmax);
          catalan_check = report.all_ok;
          check_text = report.all_ok ? "ok" : "FAILED";
        }
        json payload{{"command", "dims"}, {"field", fs.str()},
                     {"family", dm_family}, {"n", dm_n},     {"d", dm_d},
                     {"dims", series},      {"catalan_check", catalan_check}};
        std::string human = "dims = [";
        for (std::size_t i = 0; i < series.size(); ++i) {
          if (i) human += ", ";
          human += std::to_string(series[i]);
        }
        human += "]\ncatalan check: " + check_text + "\n";
        detail::emit(out, payload, dm_json, human);
        return kOk;
      });
    }

    if (c_nf->parsed()) {
      auto fs = field_spec::parse(nf_field);
      return detail::with_field(fs, [&](auto tag) {
        using S = typename decltype(tag)::type;
        auto e = element_from_json<S>(detail::load_json_file(nf_element));
        if (e.gen().arity_n != nf_n)
          throw std::invalid_argument("element arity does not match --n");
        if (e.gen().degree_d != nf_d)
          throw std::invalid_argument("element degree does not match --d");
        auto p = detail::family_presentation<S>(nf_family, nf_n, nf_d,
                                                e.gen().symbol);
        auto cb = make_component_basis(p, e.weight());
        auto coords = cb.reduce(e);
        json std_list = json::array();
        for (const auto& t : cb.standard) std_list.push_back(t.sexpr());
        json payload{{"command", "normal-form"}, {"field", fs.str()},
                     {"family", nf_family},      {"n", nf_n},
                     {"d", nf_d},                {"weight", e.weight()},
                     {"standard", std_list},
                     {"coords", detail::scalar_row_json(coords)}};
        std::string human;
        for (std::size_t i = 0; i < cb.standard.size(); ++i)
          human += coords[i].str() + "  " + cb.standard[i].sexpr() + "\n";
        detail::emit(out, payload, nf_json, human);
        return kOk;
      });
    }

    if (c_pair->parsed()) {
      auto fs = field_spec::parse(pr_field);
      if (!pr_dual.empty() || !pr_primal.empty()) {
        if (pr_dual.empty() || pr_primal.empty())
          throw std::invalid_argument("pair: need both --dual and --primal");
        return detail::with_field(fs, [&](auto tag) {
          using S = typename decltype(tag)::type;
          auto d = element_from_json<S>(detail::load_json_file(pr_dual));
          auto p = element_from_json<S>(detail::load_json_file(pr_primal));
          S v = pairing(d, p);
          json payload{{"command", "pair"}, {"field", fs.str()}, {"value", v.str()}};
          detail::emit(out, payload, pr_json, v.str() + "\n");
          return kOk;
        });
      }
      if (pr_n < 2) throw std::invalid_argument("pair: need --n or element files");
      json diag = json::array();
      std::string human = "[";
      for (int i = 1; i <= pr_n; ++i) {
        diag.push_back(pairing_sign(pr_n, i) < 0 ? "-1" : "1");
        if (i > 1) human += ", ";
        human += pairing_sign(pr_n, i) < 0 ? "-1" : "1";
      }
      human += "]\n";
      json payload{{"command", "pair"}, {"n", pr_n}, {"diag", diag}};
      detail::emit(out, payload, pr_json, human);
      return kOk;
    }

    if (c_chk->parsed()) {
      json j = detail::load_json_file(ck_file);
      auto fs = ck_field.empty() ? algebra_json_field(j) : field_spec::parse(ck_field);
      return detail::with_field(fs, [&](auto tag) {
        using S = typename decltype(tag)::type;
        auto a = algebra_from_json<S>(j);
        auto v = check_total_associativity(a);
        json payload{{"command", "check-algebra"},
                     {"field", fs.str()},
                     {"ok", v.ok}};
        std::string human;
        if (v.ok) {
          payload["counterexample"] = nullptr;
          human = "totally associative: yes\n";
        } else {
          payload["counterexample"] =
              json{{"args", v.args},
                   {"types", json::array({v.type_a, v.type_b})},
                   {"lhs", detail::scalar_row_json(v.lhs)},
                   {"rhs", detail::scalar_row_json(v.rhs)}};
          human = "totally associative: no\ncounterexample args: ";
          for (std::size_t i = 0; i < v.args.size(); ++i) {
            if (i) human += ",";
            human += std::to_string(v.args[i]);
          }
          human += "\ntypes " + std::to_string(v.type_a) + " vs " +
                   std::to_string(v.type_b) + ": " + detail::scalar_row_str(v.lhs) +
                   " != " + detail::scalar_row_str(v.rhs) + "\n";
        }
        detail::emit(out, payload, ck_json, human);
        return v.ok ? kOk : kCheckFailed;
      });
    }

    if (c_ver->parsed()) {
      auto fs = field_spec::parse(ve_field);
      auto degrees = detail::parse_int_list(ve_degrees);
      return detail::with_field(fs, [&](auto tag) {
        using S = typename decltype(tag)::type;
        auto report = theorem_check_symbolic<S>(ve_n, degrees, ve_wcap);
        json certs = json::array();
        std::string human;
        for (const auto& entry : report.entries) {
          certs.push_back(json{{"beta", entry.beta.str()},
                               {"reduced_row", detail::scalar_row_json(entry.reduced_row)},
                               {"ok", entry.zero}});
          human += entry.beta.str() + " -> " +
                   (entry.zero ? "zero" : detail::scalar_row_str(entry.reduced_row)) +
                   "\n";
        }
        json payload{{"command", "verify"},
                     {"field", fs.str()},
                     {"n", ve_n},
                     {"degrees", degrees},
                     {"weight", report.weight},
                     {"ok", report.ok},
                     {"certificates", certs}};
        if (!report.stability_issue.empty())
          payload["stability_issue"] = report.stability_issue;
        human += report.ok ? "verified: all reductions zero\n"
                           : "VERIFICATION FAILED\n";
        if (!report.stability_issue.empty())
          human += "stability: " + report.stability_issue + "\n";
        detail::emit(out, payload, ve_json, human);
        return report.ok ? kOk : kTheoremFailed;
      });
    }

    if (c_def->parsed()) {
      auto fs = field_spec::parse(df_field);
      if (df_trials < 1) throw std::invalid_argument("defect: trials must be >= 1");
      json j = detail::load_json_file(df_algebra);
      return detail::with_field(fs, [&](auto tag) {
        using S = typename decltype(tag)::type;
        auto a = algebra_from_json<S>(j);
        if (a.arity() != df_n)
          throw std::invalid_argument("algebra arity does not match --n");
        int n = a.arity(), m = a.dimension();
        std::mt19937_64 rng(df_seed);
        int failures = 0;
        for (int trial = 0; trial < df_trials; ++trial) {
          std::vector<decomposable_cochain<S>> factors;
          std::vector<endomorphism<S>> comps;
          for (int k = 0; k < 2 * n - 1; ++k) {
            auto f = make_cochain(a, 0, {detail::random_endo<S>(m, rng)});
            comps.push_back(f.components[0]);
            factors.push_back(std::move(f));
          }
          auto beta = detail::random_context(n, 2, rng);
          int arity = 2 * n - 1 + static_cast<int>(beta.extensions.size()) * (n - 1);
          std::vector<algebra_element<S>> probe;
          for (int k = 0; k < arity; ++k) probe.push_back(detail::random_vector<S>(m, rng));
          auto defect = pa_defect_numeric(a, factors, beta, probe);
          context_monomial first = beta;
          first.seed = 1;
          auto common = evaluate_on_context(a, comps, first, probe);
          bool ok;
          if (n % 2 == 0) {
            ok = true;
            for (const auto& x : defect) ok = ok && x.is_zero();
          } else {
            ok = true;
            for (std::size_t k = 0; k < defect.size(); ++k)
              ok = ok && defect[k] == S(n) * common[k];
          }
          if (!ok) ++failures;
        }
        json payload{{"command", "defect"},
                     {"field", fs.str()},
                     {"n", df_n},
                     {"algebra", df_algebra},
                     {"trials", df_trials},
                     {"expected", n % 2 == 0 ? "zero" : std::to_string(n) + " * common value"},
                     {"failures", failures},
                     {"ok", failures == 0}};
        std::string human = "trials: " + std::to_string(df_trials) +
                            ", failures: " + std::to_string(failures) + "\n" +
                            (failures == 0 ? "defect law holds\n" : "DEFECT LAW VIOLATED\n");
        detail::emit(out, payload, df_json, human);
        return failures == 0 ? kOk : kCheckFailed;
      });
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace operadix::cli
