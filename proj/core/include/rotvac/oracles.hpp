#pragma once

#include "rotvac/bogolubov.hpp"
#include "rotvac/em_correlations.hpp"
#include "rotvac/quadrature.hpp"
#include "rotvac/sphere_grid.hpp"

#include <complex>
#include <variant>
#include <vector>

namespace rotvac {

/// Descending positive regulator values (ε or η) for extrapolation to zero.
class RegulatorLadder {
public:
    /// Throws DomainError unless strictly decreasing, positive and at least
    /// three values long.
    RegulatorLadder(std::vector<double> values, int extrapolation_order = 2);

    /// ratio^j · first for j = 0 .. count−1.
    static RegulatorLadder geometric(double first, double ratio, int count,
                                     int extrapolation_order = 2);

    const std::vector<double>& values() const noexcept { return values_; }
    int extrapolation_order() const noexcept { return order_; }

private:
    std::vector<double> values_;
    int order_;
};

struct Extrapolated {
    double value = 0.0;
    double error = 0.0; ///< |last − previous| of the Neville tableau diagonal
};

/// Polynomial (Neville) extrapolation of y(x) to x = 0 using every point.
Extrapolated neville_to_zero(const std::vector<double>& x, const std::vector<double>& y);

/// Massless scalar target for the regulated oracle.
struct ScalarField {};

using OracleTarget = std::variant<CFComponentSpec, ScalarField>;

/// Default ladder {0.1, 0.05, 0.025}·c·dt·(1 − β); the (1 − β) keeps ε well
/// inside the smallest optical path |X| ≥ c·dt(1 − β).
RegulatorLadder default_epsilon_ladder(double dt, const RotationKinematics& kin);

/// Two-point function from mode synthesis: for each ε the angular integral
/// of ½Σ_λ A·B times the damped radial integral (Re 6/(ε − iX)⁴ for EM,
/// Re 1/(ε − iX)² for the scalar), then Richardson in ε². The ladder, if
/// given, is in units of c·dt(1 − β).
CorrelationResult regulated_cf_quadrature(const OracleTarget& target, double tau1,
                                          double tau2, const RotationKinematics& kin,
                                          const RegulatorLadder* ladder = nullptr,
                                          const PhysicalConstants& constants =
                                              PhysicalConstants::natural(),
                                          const QuadratureOptions& opts = {1e-9, 0.0, 18});

/// Σ_{n≥1} nᵖ e^{−ηn} cos(nF) summed directly for each η, extrapolated to
/// η → 0. The default ladder is η_j = ½d·2^{−j}, j = 0..7, with d the
/// distance from F to the nearest pole 2πm.
Extrapolated abel_summed_series(int p, double F, const RegulatorLadder* ladder = nullptr);

/// Discrete-spectrum two-point function from η-damped mode sums on a fixed
/// Gauss–Legendre direction grid, extrapolated to η → 0.
Extrapolated mode_sum_cf(const OracleTarget& target, double tau1, double tau2,
                         const RotationKinematics& kin, const DiscreteOptions& opts = {},
                         const PhysicalConstants& constants = PhysicalConstants::natural(),
                         std::size_t n_theta = 20, std::size_t n_phi = 40);

struct GaussianDeltaOracle {
    std::complex<double> integral;  ///< ∫d³k B0 B3 (2π)³ Π_i g_σ(A_i(k))
    double jacobian = 0.0;          ///< |det ∂A/∂k| at the support
};

/// β_{kk′} before the x-integrations, with the three delta functions replaced
/// by normalized Gaussians of width σ and integrated over a k box around the
/// support. Should approach beta_prefactor/|det J| as σ → 0.
GaussianDeltaOracle gaussian_delta_beta(const ModeVector& kprime, double delta_t, double t,
                                        const RotationKinematics& kin, double sigma = 1e-3,
                                        int points_per_axis = 25);

} // namespace rotvac
