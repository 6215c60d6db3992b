// Run configuration: a flat JSON document with model/boundary/chain
// parameters, seeds, tolerances and the suite selection.
#pragma once

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "blob/params.hpp"
#include "blob/report.hpp"

namespace blob {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s = {"algebra",  "ybe",      "re",       "conditions", "transfer",
                                               "symmetry", "exchange", "duality",  "spectrum"};
    return s;
}

struct RunConfig {
    Model model = Model::xxz;
    Boundary boundary = Boundary::trivial;
    int num_sites = 2;
    double mu = 0.7;
    cplx Q{2.0, 0.0};
    cplx zeta{0.3, 0.0};
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    int lambda_samples = 10;
    std::vector<std::string> suites;

    std::string canonical_string() const {
        std::string s = "model=" + to_string(model) + ";boundary=" + to_string(boundary) +
                        ";N=" + std::to_string(num_sites) + ";mu=" + detail::format_real(mu) +
                        ";Q=" + detail::format_real(Q.real()) + "," + detail::format_real(Q.imag()) +
                        ";zeta=" + detail::format_real(zeta.real()) + "," + detail::format_real(zeta.imag()) +
                        ";seed=" + std::to_string(seed) + ";tolerance=" + detail::format_real(tolerance) +
                        ";lambda_samples=" + std::to_string(lambda_samples) + ";suites=";
        for (const auto& name : suites) s += name + ",";
        return s;
    }
    std::string digest() const {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(canonical_string())));
        return buf;
    }
};

namespace detail {

inline Model parse_model(const std::string& s) {
    if (s == "xxz") return Model::xxz;
    if (s == "twin") return Model::twin;
    throw ConfigError("config error: unknown model \"" + s + "\"");
}

inline Boundary parse_boundary(const std::string& s) {
    if (s == "trivial") return Boundary::trivial;
    if (s == "xxz-m") return Boundary::xxz_m;
    if (s == "i") return Boundary::type_i;
    if (s == "ii") return Boundary::type_ii;
    if (s == "plus" || s == "+") return Boundary::type_plus;
    if (s == "iii") return Boundary::type_iii;
    throw ConfigError("config error: unknown boundary \"" + s + "\"");
}

inline cplx parse_complex(const nlohmann::json& v, const std::string& key) {
    if (v.is_number()) return cplx(v.get<double>(), 0.0);
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const auto comma = s.find(',');
        try {
            if (comma == std::string::npos) return cplx(std::stod(s), 0.0);
            return cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
        } catch (const std::exception&) {
            throw ConfigError("config error: key \"" + key + "\" is not a \"re,im\" complex value");
        }
    }
    throw ConfigError("config error: key \"" + key + "\" must be a number or a \"re,im\" string");
}

} // namespace detail

inline RunConfig parse_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config error: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config error: document must be a JSON object");

    static const std::set<std::string> allowed = {"model", "boundary", "N",    "mu",       "Q",
                                                  "zeta",  "seed",     "tolerance", "lambda_samples", "suites"};
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw ConfigError("config error: unknown key \"" + key + "\"");
    for (const char* req : {"model", "boundary", "N", "mu", "Q"})
        if (!j.contains(req)) throw ConfigError(std::string("config error: missing key \"") + req + "\"");

    RunConfig c;
    c.model = detail::parse_model(j.at("model").get<std::string>());
    c.boundary = detail::parse_boundary(j.at("boundary").get<std::string>());
    if (!boundary_compatible(c.model, c.boundary))
        throw ConfigError("config error: boundary incompatible with model");
    if (!j.at("N").is_number_integer()) throw ConfigError("config error: key \"N\" must be an integer");
    c.num_sites = j.at("N").get<int>();
    if (c.num_sites < 2) throw ConfigError("config error: key \"N\" out of range (need N >= 2)");
    if (!j.at("mu").is_number()) throw ConfigError("config error: key \"mu\" must be a number");
    c.mu = j.at("mu").get<double>();
    if (std::abs(std::sin(c.mu)) < 1e-12)
        throw ConfigError("config error: key \"mu\" out of range (multiples of pi are degenerate)");
    c.Q = detail::parse_complex(j.at("Q"), "Q");
    if (std::abs(c.Q + 1.0 / c.Q) < 1e-10)
        throw ConfigError("config error: key \"Q\" out of range (Q + 1/Q vanishes)");
    if (j.contains("zeta")) c.zeta = detail::parse_complex(j.at("zeta"), "zeta");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            throw ConfigError("config error: key \"seed\" must be a nonnegative integer");
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("tolerance")) {
        if (!j.at("tolerance").is_number()) throw ConfigError("config error: key \"tolerance\" must be a number");
        c.tolerance = j.at("tolerance").get<double>();
        if (!(c.tolerance > 0.0 && c.tolerance < 1.0))
            throw ConfigError("config error: key \"tolerance\" out of range (0, 1)");
    }
    if (j.contains("lambda_samples")) {
        if (!j.at("lambda_samples").is_number_integer())
            throw ConfigError("config error: key \"lambda_samples\" must be an integer");
        c.lambda_samples = j.at("lambda_samples").get<int>();
        if (c.lambda_samples < 1) throw ConfigError("config error: key \"lambda_samples\" out of range (need >= 1)");
    }
    if (j.contains("suites")) {
        if (!j.at("suites").is_array()) throw ConfigError("config error: key \"suites\" must be an array");
        for (const auto& v : j.at("suites")) {
            const std::string name = v.get<std::string>();
            if (std::find(known_suites().begin(), known_suites().end(), name) == known_suites().end())
                throw ConfigError("config error: unknown suite \"" + name + "\"");
            c.suites.push_back(name);
        }
    } else {
        for (const auto& name : known_suites())
            if (name != "spectrum") c.suites.push_back(name);
    }
    return c;
}

} // namespace blob
