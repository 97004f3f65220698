#pragma once

#include "rotvac/em_correlations.hpp"

namespace rotvac {

/// ∫₀^{2π} dφ (E sinφ − B)^{-2} = 2πB/(B² − E²)^{3/2}. Throws DomainError
/// unless B > |E|.
double scalar_phi_reduction(double E_val, double B_val);

/// γ²c²dτ² − 4r² sin²(Ωγdτ/2), positive for dτ ≠ 0 and β < 1.
double scalar_interval(double dtau, const RotationKinematics& kin);

/// −(ħc/π) / [γ²c²dτ² − 4r² sin²(Ωγdτ/2)]. Throws DivergenceError at dτ = 0.
CorrelationResult scalar_cf_continuous(double tau1, double tau2,
                                       const RotationKinematics& kin,
                                       const PhysicalConstants& constants =
                                           PhysicalConstants::natural());

/// literal: k0²ħc/(2π²); riemann: k0²ħc/(4π²), the Riemann-sum weight
/// under which the vacuum part equals scalar_cf_continuous.
double scalar_discrete_weight(const RotationKinematics& kin, DiscreteNormalization norm,
                              const PhysicalConstants& constants);

/// weight × ∫do Σ n cos(nF), split as in cf_discrete (p = 1).
DiscreteCFResult scalar_cf_discrete(double tau1, double tau2, const RotationKinematics& kin,
                                    const DiscreteOptions& opts = {},
                                    const PhysicalConstants& constants =
                                        PhysicalConstants::natural());

} // namespace rotvac
