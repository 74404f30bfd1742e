#include "relalt/constants.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relalt/errors.hpp"

namespace relalt {

namespace {

double positive_number(const nlohmann::json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number()) {
        throw InvalidInput(std::string("constant \"") + key + "\" must be a number");
    }
    return v.get<double>();
}

}  // namespace

void Constants::validate() const {
    if (!(G > 0.0) || !std::isfinite(G))
        throw InvalidInput("G must be strictly positive");
    if (!(c > 0.0) || !std::isfinite(c))
        throw InvalidInput("c must be strictly positive");
    if (!(h_planck > 0.0) || !std::isfinite(h_planck))
        throw InvalidInput("h_planck must be strictly positive");
}

Constants Constants::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("constants JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInput("constants JSON must be an object");

    Constants k;
    k.G = positive_number(j, "G", k.G);
    k.c = positive_number(j, "c", k.c);
    k.h_planck = positive_number(j, "h_planck", k.h_planck);
    k.validate();
    return k;
}

Constants Constants::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open constants file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

}  // namespace relalt
