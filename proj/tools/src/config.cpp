#include "rotvac_cli/config.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rotvac::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where)
{
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key)) {
            throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
        }
    }
}

double positive(const json& j, const char* key)
{
    const double v = j.at(key).get<double>();
    if (!(v > 0.0)) {
        throw std::invalid_argument(std::string("config: ") + key + " must be positive");
    }
    return v;
}

std::vector<double> ladder(const json& j, const char* key)
{
    std::vector<double> v = j.at(key).get<std::vector<double>>();
    if (v.size() < 3) {
        throw std::invalid_argument(std::string("config: ") + key + " needs at least 3 values");
    }
    return v;
}

} // namespace

Units parse_units(const std::string& s)
{
    if (s == "natural") {
        return Units::natural;
    }
    if (s == "si") {
        return Units::si;
    }
    throw std::invalid_argument("units must be 'natural' or 'si'");
}

DiscreteNormalization parse_normalization(const std::string& s)
{
    if (s == "literal") {
        return DiscreteNormalization::literal;
    }
    if (s == "riemann") {
        return DiscreteNormalization::riemann;
    }
    throw std::invalid_argument("normalization must be 'literal' or 'riemann'");
}

BraceConvention parse_brace_convention(const std::string& s)
{
    if (s == "standard") {
        return BraceConvention::standard;
    }
    if (s == "printed") {
        return BraceConvention::printed;
    }
    throw std::invalid_argument("brace_convention must be 'standard' or 'printed'");
}

std::string to_string(Units u)
{
    return u == Units::si ? "si" : "natural";
}

std::string to_string(DiscreteNormalization n)
{
    return n == DiscreteNormalization::riemann ? "riemann" : "literal";
}

RunConfig RunConfig::from_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("config: top level must be an object");
    }
    reject_unknown(j,
                   {"units", "constants", "quadrature", "epsilon_ladder", "eta_ladder",
                    "discrete_normalization", "scalar_normalization", "brace_convention",
                    "seed"},
                   "config");
    RunConfig cfg;
    try {
        if (j.contains("units")) {
            cfg.units = parse_units(j["units"].get<std::string>());
        }
        if (j.contains("constants")) {
            const json& k = j["constants"];
            reject_unknown(k, {"hbar", "c", "k_b"}, "constants");
            if (k.contains("hbar")) {
                cfg.hbar = positive(k, "hbar");
            }
            if (k.contains("c")) {
                cfg.c = positive(k, "c");
            }
            if (k.contains("k_b")) {
                cfg.k_b = positive(k, "k_b");
            }
        }
        if (j.contains("quadrature")) {
            const json& q = j["quadrature"];
            reject_unknown(q, {"rel_tol", "abs_tol", "max_depth"}, "quadrature");
            if (q.contains("rel_tol")) {
                cfg.quadrature.rel_tol = positive(q, "rel_tol");
            }
            if (q.contains("abs_tol")) {
                cfg.quadrature.abs_tol = q["abs_tol"].get<double>();
            }
            if (q.contains("max_depth")) {
                cfg.quadrature.max_depth = q["max_depth"].get<unsigned>();
            }
        }
        if (j.contains("epsilon_ladder")) {
            cfg.epsilon_ladder = ladder(j, "epsilon_ladder");
        }
        if (j.contains("eta_ladder")) {
            cfg.eta_ladder = ladder(j, "eta_ladder");
        }
        if (j.contains("discrete_normalization")) {
            cfg.discrete_normalization =
                parse_normalization(j["discrete_normalization"].get<std::string>());
        }
        if (j.contains("scalar_normalization")) {
            cfg.scalar_normalization =
                parse_normalization(j["scalar_normalization"].get<std::string>());
        }
        if (j.contains("brace_convention")) {
            cfg.brace_convention =
                parse_brace_convention(j["brace_convention"].get<std::string>());
        }
        if (j.contains("seed")) {
            cfg.seed = j["seed"].get<std::uint64_t>();
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config: cannot open " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return from_json_text(text.str());
}

PhysicalConstants RunConfig::constants() const
{
    const PhysicalConstants base =
        units == Units::si ? PhysicalConstants::si() : PhysicalConstants::natural();
    if (!hbar && !c && !k_b) {
        return base;
    }
    return PhysicalConstants::custom(hbar.value_or(base.hbar()), c.value_or(base.c()),
                                     k_b.value_or(base.k_b()));
}

} // namespace rotvac::cli
