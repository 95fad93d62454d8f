#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fgi/diagrams/composition.hpp"
#include "fgi/diagrams/trees.hpp"
#include "fgi/errors.hpp"
#include "fgi/inversion/composition.hpp"
#include "fgi/inversion/lagrange_good.hpp"
#include "fgi/inversion/reversion.hpp"
#include "fgi/series_json.hpp"
#include "fgi/wick.hpp"

namespace fgi::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string in = "-";
  std::string format = "json";
  std::optional<unsigned> degree;
  std::optional<unsigned> bound;
  std::string flavor = "reversion";
  bool circuits = false;
};

// Everything the front end accepts must stay evaluable at desk scale.
void require_desk_scale(std::size_t n, unsigned degree) {
  if (n > 8) throw resource_error("at most 8 variables are supported, got " + std::to_string(n));
  if (degree > 40) throw resource_error("degree " + std::to_string(degree) + " exceeds the limit 40");
  double monomials = 1;
  for (unsigned k = 1; k <= n; ++k) monomials = monomials * (degree + k) / k;
  if (monomials > 100000) throw resource_error("too many monomials for n and degree");
}

const json& member(const json& doc, const char* key) {
  if (!doc.is_object()) throw parse_error("$: expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw parse_error(std::string("$.") + key + ": missing field");
  return *it;
}

SeriesSystem read_system(const json& doc, const char* key) {
  SeriesSystem s = doc.is_object() && doc.contains("components") ? system_from_json(doc, "$")
                                                                  : system_from_json(member(doc, key), std::string("$.") + key);
  require_desk_scale(s.n_vars(), s.trunc_degree());
  return s;
}

MultiIndex read_index(const json& doc, const char* key, std::size_t n, bool required) {
  if (!doc.contains(key)) {
    if (required) throw parse_error(std::string("$.") + key + ": missing field");
    return MultiIndex(n);
  }
  MultiIndex m = multi_index_from_json(doc.at(key), std::string("$.") + key);
  if (m.size() != n) throw parse_error(std::string("$.") + key + ": length must equal n");
  return m;
}

json per_degree(const std::vector<DegreeDiagnostics>& diags) {
  json out = json::array();
  for (const auto& d : diags) {
    json row = {{"degree", d.degree}, {"terms", d.terms}};
    if (d.classes > 0) {
      row["classes"] = d.classes;
      row["inverse_aut_sum"] = to_string(d.inverse_aut_sum);
    }
    out.push_back(std::move(row));
  }
  return out;
}

json envelope(json result, json diagnostics) { return {{"result", std::move(result)}, {"diagnostics", std::move(diagnostics)}}; }

json cmd_compose(const json& doc, const Options& opt) {
  SeriesSystem f = read_system(member(doc, "F"), "F");
  SeriesSystem g = read_system(member(doc, "G"), "G");
  if (opt.degree) {
    if (*opt.degree > f.trunc_degree() || *opt.degree > g.trunc_degree())
      throw std::invalid_argument("--degree exceeds the truncation of the inputs");
    f = f.truncated(*opt.degree);
    g = g.truncated(*opt.degree);
  }
  const InversionResult r = compose_diagrammatic(f, g);
  return envelope(to_json(r.series),
                  {{"per_degree", per_degree(r.diagnostics)}, {"matches_direct", r.series == compose_direct(f, g)}});
}

json cmd_revert(const json& doc, const Options& opt) {
  const SeriesSystem f = read_system(doc, "F");
  const unsigned degree = opt.degree.value_or(f.trunc_degree());
  const InversionResult r = revert(f, degree);
  json diag = {{"per_degree", per_degree(r.diagnostics)}, {"matches_oracle", r.series == revert_oracle(f, degree)}};
  if (degree <= 8) diag["matches_trees"] = r.series == revert_by_trees(f, degree).series;
  return envelope(to_json(r.series), std::move(diag));
}

json cmd_lg_solve(const json& doc, const Options& opt) {
  const SeriesSystem g = read_system(doc, "G");
  const unsigned degree = opt.degree.value_or(g.trunc_degree() + 1);
  const SeriesSystem f = lg_solve(g, degree);
  json diag = {{"matches_oracle", f == lg_solve_oracle(g, degree)}};
  if (degree <= 8) {
    const InversionResult trees = lg_solve_by_trees(g, degree);
    diag["per_degree"] = per_degree(trees.diagnostics);
    diag["matches_trees"] = trees.series == f;
  } else {
    diag["per_degree"] = per_degree(term_diagnostics(f));
  }
  return envelope(to_json(f), std::move(diag));
}

json cmd_lg_check(const json& doc, const Options& opt) {
  const SeriesSystem g = read_system(member(doc, "G"), "G");
  const std::size_t n = g.size();
  const MultiIndex omega = read_index(doc, "omega", n, false);
  std::vector<MultiIndex> ms;
  if (doc.contains("M")) {
    ms.push_back(read_index(doc, "M", n, true));
  } else {
    const unsigned top = opt.degree.value_or(g.trunc_degree());
    for (unsigned d = 0; d <= top; ++d)
      for (const auto& m : multi_indices_of_degree(n, d)) ms.push_back(m);
  }
  unsigned top = 1;
  for (const auto& m : ms) top = std::max(top, m.degree());
  json checks = json::array();
  bool all = true;
  for (const auto& m : ms) {
    const LGIdentityReport rep = lg_identity_check(g, omega, m);
    all = all && rep.holds;
    checks.push_back({{"M", to_json(m)}, {"lhs", to_string(rep.lhs)}, {"rhs", to_string(rep.rhs)}, {"holds", rep.holds}});
  }
  return envelope(to_json(lg_solve(g, top)), {{"omega", to_json(omega)}, {"checks", std::move(checks)}, {"all_hold", all}});
}

json cmd_zw_check(const json& doc, const Options& opt) {
  if (opt.flavor == "lagrange-good") {
    const SeriesSystem g = read_system(doc, "G");
    const unsigned degree = opt.degree.value_or(g.trunc_degree());
    const LGPartitionRoutes z = lg_partition_Z(g, degree);
    const Series w = log_series(z.det);
    return envelope(to_json(SeriesSystem({z.det, w})),
                    {{"flavor", "lagrange-good"},
                     {"routes_agree", z.agree()},
                     {"trace_matches_det", z.trace == z.det},
                     {"diagram_matches_det", z.diagram == z.det},
                     {"gaussian_matches_det", z.gaussian == z.det}});
  }
  if (opt.flavor != "reversion") throw std::invalid_argument("zw-check supports the reversion and lagrange-good flavors");
  const SeriesSystem f = read_system(doc, "F");
  if (f.trunc_degree() < 2 && !opt.degree) throw std::invalid_argument("F must be known through degree 2 at least");
  const unsigned degree = opt.degree.value_or(f.trunc_degree() - 1);
  const Series w = free_energy_W(f, degree);
  const Series z = exp_series(w);
  const Series z_det = partition_function_Z_det(f, degree);
  const Series z_gauss = partition_function_Z_gaussian(f, degree);
  return envelope(to_json(SeriesSystem({z, w})), {{"flavor", "reversion"},
                                                  {"routes_agree", z == z_det && z == z_gauss},
                                                  {"det_matches_diagram", z_det == z},
                                                  {"gaussian_matches_diagram", z_gauss == z},
                                                  {"log_Z_equals_W", log_series(z_det) == w}});
}

json cmd_lg_matrix_check(const json& doc, const Options& opt) {
  const SeriesSystem g = read_system(member(doc, "G"), "G");
  const MultiIndex omega = read_index(doc, "omega", g.size(), false);
  const unsigned k = opt.degree.value_or(2);
  const LGMatrixReport rep = lg_matrix_identity_check(g, omega, k);
  return envelope(to_json(lg_matrix_solve(g, std::max(k, 1u))), {{"holds", rep.holds},
                                                                  {"max_degree", k},
                                                                  {"sequences", rep.sequences},
                                                                  {"lhs", to_json(rep.lhs)},
                                                                  {"rhs", to_json(rep.rhs)}});
}

json cmd_wick(const json& doc, const Options&) {
  const Matrix a = matrix_from_json(member(doc, "A"), "$.A");
  if (a.rows() > 16) throw resource_error("covariance limited to 16x16");
  const MultiIndex a1 = multi_index_from_json(member(doc, "alpha1"), "$.alpha1");
  const MultiIndex a2 = multi_index_from_json(member(doc, "alpha2"), "$.alpha2");
  if (a1.size() != a.rows()) throw parse_error("$.alpha1: length must equal the size of A");
  if (a2.size() != a.rows()) throw parse_error("$.alpha2: length must equal the size of A");
  if (a1.degree() > 16 || a2.degree() > 16) throw resource_error("at most 16 pairings are supported");
  const CovarianceSpec cov(a);
  return {{"value", to_string(gaussian_integral_monomial(cov, a1, a2))}};
}

json cmd_diagrams(const Options& opt) {
  const std::optional<unsigned> bound = opt.bound ? opt.bound : opt.degree;
  if (!bound) throw parse_error("--bound: required for diagrams");
  json out = json::array();
  auto push = [&](const std::string& cls, std::uint64_t aut, unsigned deg) {
    out.push_back({{"class", cls}, {"aut", aut}, {"degree", deg}});
  };
  if (opt.flavor == "composition") {
    if (*bound > 24) throw resource_error("composition classes limited to degree 24");
    for (unsigned d = 1; d <= *bound; ++d)
      for (const auto& c : enumerate_composition_classes(d)) push(c.encoding(), aut_order_composition(c), d);
  } else if (opt.flavor == "reversion") {
    if (opt.circuits) {
      for (const auto& c : enumerate_reversion_circuits(*bound)) push(encode(c), aut_order(c), leaf_count(c));
    } else {
      for (const auto& t : enumerate_reversion_trees(*bound)) push(encode(t), aut_order(t), leaf_count(t));
    }
  } else {
    if (opt.circuits) {
      for (const auto& c : enumerate_lg_circuits(*bound)) push(encode(c), aut_order(c), degree(c));
    } else {
      for (const auto& t : enumerate_lg_trees(*bound)) push(encode(t), aut_order(t), node_count(t));
    }
  }
  return out;
}

void print_series_rows(std::ostream& out, const std::string& label, const json& series) {
  for (const auto& term : series.at("terms")) {
    std::string exp = "(";
    for (std::size_t k = 0; k < term.at("exp").size(); ++k) exp += (k ? "," : "") + term.at("exp")[k].dump();
    out << label << '\t' << exp << ")\t" << term.at("coeff").get<std::string>() << '\n';
  }
}

void print_table(std::ostream& out, const std::string& command, const json& doc) {
  if (command == "diagrams") {
    out << "class\taut\tdegree\n";
    for (const auto& row : doc) out << row.at("class").get<std::string>() << '\t' << row.at("aut") << '\t' << row.at("degree") << '\n';
    return;
  }
  if (command == "wick") {
    out << "value\t" << doc.at("value").get<std::string>() << '\n';
    return;
  }
  out << "component\texponent\tcoefficient\n";
  const auto& comps = doc.at("result").at("components");
  for (std::size_t i = 0; i < comps.size(); ++i) print_series_rows(out, std::to_string(i), comps[i]);
  for (const auto& [key, value] : doc.at("diagnostics").items()) out << "# " << key << ": " << value.dump() << '\n';
}

json read_document(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.in == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(opt.in);
    if (!file) throw parse_error("--in: cannot open '" + opt.in + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("$: invalid JSON: ") + e.what());
  }
}

json dispatch(const Options& opt, std::istream& in) {
  if (opt.command == "diagrams") return cmd_diagrams(opt);
  const json doc = read_document(opt, in);
  if (opt.command == "compose") return cmd_compose(doc, opt);
  if (opt.command == "revert") return cmd_revert(doc, opt);
  if (opt.command == "lg-solve") return cmd_lg_solve(doc, opt);
  if (opt.command == "lg-check") return cmd_lg_check(doc, opt);
  if (opt.command == "zw-check") return cmd_zw_check(doc, opt);
  if (opt.command == "lg-matrix-check") return cmd_lg_matrix_check(doc, opt);
  return cmd_wick(doc, opt);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact formal power series composition, reversion and Lagrange-Good inversion", "fgi"};
  app.require_subcommand(1, 1);
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"compose", "F o G by the diagram sum, checked against direct substitution"},
      {"revert", "compositional inverse of F"},
      {"lg-solve", "solve F_i = X_i G_i(F)"},
      {"lg-check", "Lagrange-Good coefficient identity"},
      {"zw-check", "partition function Z and free energy W by several routes"},
      {"diagrams", "list diagram classes with automorphism orders"},
      {"wick", "formal Gaussian integral of one monomial"},
      {"lg-matrix-check", "matrix-X generalized Lagrange-Good identity"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--in", opt.in, "input JSON file, '-' for stdin");
    sub->add_option("--out-format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--degree", opt.degree, "truncation degree")->check(CLI::Range(1u, 1000000u));
    sub->add_option("--bound", opt.bound, "enumeration bound")->check(CLI::Range(1u, 1000000u));
    sub->add_option("--flavor", opt.flavor, "composition, reversion or lagrange-good")
        ->check(CLI::IsMember({"composition", "reversion", "lagrange-good"}));
    sub->add_flag("--circuits", opt.circuits, "diagrams: list vacuum circuits instead of trees");
    sub->callback([&opt, sub] { opt.command = sub->get_name(); });
  }

  std::vector<std::string> argv_storage{"fgi"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return parse_failure;
  }

  try {
    const json doc = dispatch(opt, in);
    if (opt.format == "table") {
      print_table(out, opt.command, doc);
    } else {
      out << doc.dump(2) << '\n';
    }
    return ok;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return resource_failure;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return resource_failure;
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return domain_failure;
  } catch (const std::exception& e) {
    err << "domain error: " << e.what() << '\n';
    return domain_failure;
  }
}

}  // namespace fgi::cli
