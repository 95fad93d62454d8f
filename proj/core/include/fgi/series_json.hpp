#ifndef FGI_SERIES_JSON_HPP
#define FGI_SERIES_JSON_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "fgi/matrix.hpp"
#include "fgi/multi_index.hpp"
#include "fgi/series.hpp"
#include "fgi/series_system.hpp"

namespace fgi {

// Wire format:
//   series: {"n": int, "degree": int, "terms": [{"exp": [int, ...], "coeff": "p/q"}, ...]}
//   system: {"components": [series, ...]}
// Every reader throws fgi::parse_error whose message starts with the JSON path
// of the offending field (e.g. "components[1].terms[0].coeff").

Series series_from_json(const nlohmann::json& j, const std::string& path = "$");
SeriesSystem system_from_json(const nlohmann::json& j, const std::string& path = "$");
Matrix matrix_from_json(const nlohmann::json& j, const std::string& path = "$");
MultiIndex multi_index_from_json(const nlohmann::json& j, const std::string& path = "$");
Rational rational_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json to_json(const Series& s);
nlohmann::json to_json(const SeriesSystem& s);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const MultiIndex& m);

}  // namespace fgi

#endif  // FGI_SERIES_JSON_HPP
