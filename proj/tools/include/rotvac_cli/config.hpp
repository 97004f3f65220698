#pragma once

#include "rotvac/constants.hpp"
#include "rotvac/em_correlations.hpp"
#include "rotvac/quadrature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rotvac::cli {

enum class Units { natural, si };

/// Settings shared by every subcommand. Loaded from JSON (--config), then
/// overridden by explicit flags.
///
/// {
///   "units": "natural" | "si",                       default "natural"
///   "constants": {"hbar": x, "c": x, "k_b": x},      default: the unit system's
///   "quadrature": {"rel_tol": 1e-10, "abs_tol": 0, "max_depth": 18},
///   "epsilon_ladder": [0.1, 0.05, 0.025],            units of c·dt·(1 − β)
///   "eta_ladder": [...],                             absolute η values
///   "discrete_normalization": "literal" | "riemann",
///   "scalar_normalization": "literal" | "riemann",
///   "brace_convention": "standard" | "printed",
///   "seed": 20240611
/// }
struct RunConfig {
    Units units = Units::natural;
    std::optional<double> hbar;
    std::optional<double> c;
    std::optional<double> k_b;
    QuadratureOptions quadrature{1e-10, 0.0, 18};
    std::vector<double> epsilon_ladder;
    std::vector<double> eta_ladder;
    DiscreteNormalization discrete_normalization = DiscreteNormalization::literal;
    DiscreteNormalization scalar_normalization = DiscreteNormalization::literal;
    BraceConvention brace_convention = BraceConvention::standard;
    std::uint64_t seed = 20240611ULL;

    /// Throws std::invalid_argument on unknown keys or bad values.
    static RunConfig from_json_text(const std::string& text);
    static RunConfig from_file(const std::string& path);

    PhysicalConstants constants() const;
};

Units parse_units(const std::string& s);
DiscreteNormalization parse_normalization(const std::string& s);
BraceConvention parse_brace_convention(const std::string& s);
std::string to_string(Units u);
std::string to_string(DiscreteNormalization n);

} // namespace rotvac::cli
