#include "hyperpot/poly_io.hpp"

#include <fstream>

#include "hyperpot/error.hpp"

namespace hyperpot {

namespace {

Rat coeff_from_json(const nlohmann::json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    if (j.is_number_float()) return rat_from_double(j.get<double>());
    raise("bad-json", "coefficient must be a number or a rational string");
}

} // namespace

MultiPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        raise("bad-json", "polynomial JSON needs 'nvars' and 'terms'");
    int nvars = j.at("nvars").get<int>();
    MultiPoly p(nvars);
    for (const auto& term : j.at("terms")) {
        if (!term.contains("exp") || !term.contains("coeff"))
            raise("bad-json", "each term needs 'exp' and 'coeff'");
        std::vector<int> exps = term.at("exp").get<std::vector<int>>();
        p.add_term(std::move(exps), coeff_from_json(term.at("coeff")));
    }
    return p;
}

nlohmann::json poly_to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["exp"] = e;
        t["coeff"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    nlohmann::json j;
    j["nvars"] = p.nvars();
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise("io-error", "cannot open polynomial file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise("bad-json", std::string("malformed JSON in '") + path + "': " + e.what());
    }
    return poly_from_json(j);
}

} // namespace hyperpot
