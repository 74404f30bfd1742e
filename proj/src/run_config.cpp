#include "relalt/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relalt/errors.hpp"

namespace relalt {

namespace {

double positive_tolerance(const nlohmann::json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number())
        throw InvalidInput(std::string("tolerance \"") + key + "\" must be a number");
    return v.get<double>();
}

}  // namespace

void Tolerances::validate() const {
    const struct { const char* name; double value; } entries[] = {
        {"eigen_residual", eigen_residual},
        {"frame_scaling", frame_scaling},
        {"hj_residual", hj_residual},
        {"fd_agreement", fd_agreement},
    };
    for (const auto& e : entries)
        if (!(e.value > 0.0) || !std::isfinite(e.value))
            throw InvalidInput(std::string("tolerance \"") + e.name +
                               "\" must be strictly positive");
}

RunConfig RunConfig::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("config JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInput("config JSON must be an object");

    RunConfig cfg;
    if (j.contains("constants")) {
        if (!j.at("constants").is_object())
            throw InvalidInput("config key \"constants\" must be an object");
        cfg.constants = Constants::from_json_text(j.at("constants").dump());
    }
    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (!t.is_object())
            throw InvalidInput("config key \"tolerances\" must be an object");
        cfg.tolerances.eigen_residual =
            positive_tolerance(t, "eigen_residual", cfg.tolerances.eigen_residual);
        cfg.tolerances.frame_scaling =
            positive_tolerance(t, "frame_scaling", cfg.tolerances.frame_scaling);
        cfg.tolerances.hj_residual =
            positive_tolerance(t, "hj_residual", cfg.tolerances.hj_residual);
        cfg.tolerances.validate();
    }
    return cfg;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

}  // namespace relalt
