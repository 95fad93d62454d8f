#include "fgi/series_json.hpp"

#include <limits>

#include "fgi/errors.hpp"

namespace fgi {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw parse_error(path + ": " + what); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

std::uint64_t read_uint(const json& j, const std::string& path, std::uint64_t max) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > max) fail(path, "value too large");
    return v;
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0) fail(path, "expected a nonnegative integer");
  if (static_cast<std::uint64_t>(v) > max) fail(path, "value too large");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

MultiIndex multi_index_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of nonnegative integers");
  std::vector<unsigned> e;
  for (std::size_t k = 0; k < j.size(); ++k) {
    e.push_back(static_cast<unsigned>(read_uint(j[k], path + "[" + std::to_string(k) + "]", 1u << 20)));
  }
  return MultiIndex(std::move(e));
}

Series series_from_json(const json& j, const std::string& path) {
  const auto n = read_uint(field(j, "n", path), path + ".n", std::numeric_limits<std::uint32_t>::max());
  if (n == 0) fail(path + ".n", "must be positive");
  const auto degree =
      read_uint(field(j, "degree", path), path + ".degree", std::numeric_limits<std::uint32_t>::max());
  const json& terms = field(j, "terms", path);
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  Series s(n, static_cast<unsigned>(degree));
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string tp = path + ".terms[" + std::to_string(k) + "]";
    const MultiIndex exp = multi_index_from_json(field(terms[k], "exp", tp), tp + ".exp");
    if (exp.size() != n) fail(tp + ".exp", "length must equal n");
    if (exp.degree() > degree) fail(tp + ".exp", "total degree exceeds the series degree");
    s.add_term(exp, rational_from_json(field(terms[k], "coeff", tp), tp + ".coeff"));
  }
  return s;
}

SeriesSystem system_from_json(const json& j, const std::string& path) {
  const json& comps = field(j, "components", path);
  if (!comps.is_array() || comps.empty()) fail(path + ".components", "expected a nonempty array");
  std::vector<Series> out;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    out.push_back(series_from_json(comps[k], path + ".components[" + std::to_string(k) + "]"));
  }
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k].n_vars() != out[0].n_vars() || out[k].trunc_degree() != out[0].trunc_degree()) {
      fail(path + ".components[" + std::to_string(k) + "]", "n and degree must match the first component");
    }
  }
  return SeriesSystem(std::move(out));
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != j.size()) fail(rp, "expected a row of length " + std::to_string(j.size()));
    std::vector<Rational> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) row.push_back(rational_from_json(j[r][c], rp + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  return Matrix(std::move(rows));
}

json to_json(const MultiIndex& m) { return json(m.exponents()); }

json to_json(const Series& s) {
  json terms = json::array();
  for (const auto& [a, c] : s.terms()) terms.push_back({{"exp", to_json(a)}, {"coeff", to_string(c)}});
  return {{"n", s.n_vars()}, {"degree", s.trunc_degree()}, {"terms", std::move(terms)}};
}

json to_json(const SeriesSystem& s) {
  json comps = json::array();
  for (const Series& c : s.components()) comps.push_back(to_json(c));
  return {{"components", std::move(comps)}};
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fgi
