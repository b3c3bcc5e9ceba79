#ifndef HYPERPOT_POLY_IO_HPP
#define HYPERPOT_POLY_IO_HPP

#include <string>

#include <json.hpp>

#include "hyperpot/multipoly.hpp"

namespace hyperpot {

// Schema: { "nvars": int, "terms": [ { "exp": [int...], "coeff": "p/q" } ] }.
// Coefficients may be JSON numbers, "p/q" strings, or decimal strings.
MultiPoly poly_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const MultiPoly& p);

MultiPoly poly_from_file(const std::string& path);

} // namespace hyperpot

#endif
