#pragma once

#include "rotvac/constants.hpp"
#include "rotvac/kinematics.hpp"
#include "rotvac/quadrature.hpp"

#include <complex>
#include <functional>

namespace rotvac {

/// Σ_{n≥0} nᵖ cos(nF) split by the Abel–Plana formula into the formal
/// vacuum integral ∫₀^∞ xᵖ cos(xF) dx and a finite thermal remainder.
struct AbelPlanaSplit {
    int p = 3;
    double vacuum_coefficient = 1.0; ///< multiplier of ∫₀^∞ xᵖ cos(xF) dx
    double vacuum_value = 0.0;       ///< Abel value of that integral: 6/F⁴ or −1/F²
    double thermal_sign = 1.0;       ///< +1 for p = 3, −1 for p = 1
    double thermal_value = 0.0;      ///< 6Σ'(F−2πm)^{-4} or Σ'(F−2πm)^{-2}, m ≠ 0
    double total_closed_form = 0.0;

    double regularized_total() const noexcept
    {
        return vacuum_value + thermal_sign * thermal_value;
    }
};

/// Closed forms of the regularized sums; both 2π-periodic with poles at F = 2πm.
double sum_n3_cos(double F);
double sum_n1_cos(double F);

/// Thermal remainders, finite on (−2π, 2π) and regular at F = 0:
/// 6Σ_{m≠0}(F − 2πm)^{-4} → 1/120 and Σ_{m≠0}(F − 2πm)^{-2} → 1/12.
double thermal_n3(double F);
double thermal_n1(double F);

/// p ∈ {1, 3}. Throws DomainError at the poles F = 2πm.
AbelPlanaSplit regularized_sum(int p, double F);

/// ∫₀^∞ 2ωᵖ cosh(ωF̃) / (e^{ħω/k_B T} − 1) dω by adaptive quadrature.
/// Converges only for |F̃| k_B T/ħ < 1, i.e. |F| < 2π at T = T_rot; outside
/// that range throws DivergenceError. T = 0 gives 0.
double thermal_integral(int p, double T, double F_tilde,
                        const PhysicalConstants& constants = PhysicalConstants::natural(),
                        const QuadratureOptions& opts = {});

struct RotationTemperature {
    double t_rot = 0.0;
};

/// ħΩ/(2π k_B). Throws DomainError for Ω < 0.
RotationTemperature t_rot(double omega,
                          const PhysicalConstants& constants = PhysicalConstants::natural());

struct EnergyDensity {
    double value = 0.0;      ///< anisotropy × w_rad
    double w_rad = 0.0;      ///< (4σ/c) T_rot⁴
    double anisotropy = 0.0; ///< 2(4γ² − 1)/3
    double t_rot = 0.0;
};

EnergyDensity reg_energy_density(const RotationKinematics& kin,
                                 const PhysicalConstants& constants =
                                     PhysicalConstants::natural());

/// Same quantity from the thermal spectral integral:
/// anisotropy × (ħ/(π²c³)) × ½ ∫₀^∞ 2ω³/(e^{ħω/k_B T_rot} − 1) dω.
double reg_energy_density_spectral(const RotationKinematics& kin,
                                   const PhysicalConstants& constants =
                                       PhysicalConstants::natural(),
                                   const QuadratureOptions& opts = {});

struct PlanckComparison {
    double lhs = 0.0; ///< ½∫ω³ coth(ħω/2k_BT) cos(ωt) e^{−εω} dω
    double rhs = 0.0; ///< ½[∫ω³ cos(ωt) e^{−εω} dω + ∫2ω³ cos(ωt) e^{−εω}/(e^{ħω/k_BT} − 1) dω]
    double vacuum = 0.0;
    double thermal = 0.0;
};

/// Both sides of the zero-point-plus-Planck spectral identity with a common
/// exponential regulator ε > 0 (units of time). The vacuum piece on the right
/// uses its closed form Re[6/(ε − it)⁴]; everything else is quadrature.
PlanckComparison planck_comparison(double T, double t, double epsilon,
                                   const PhysicalConstants& constants =
                                       PhysicalConstants::natural(),
                                   const QuadratureOptions& opts = {});

/// Right-hand side of the Abel–Plana formula for an f analytic in Re z ≥ 0:
/// ∫₀^∞ f + f(0)/2 + i∫₀^∞ (f(it) − f(−it))/(e^{2πt} − 1) dt.
double abel_plana_rhs(const std::function<std::complex<double>(std::complex<double>)>& f,
                      const QuadratureOptions& opts = {});

} // namespace rotvac
