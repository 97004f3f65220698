#pragma once

#include "rotvac/angular_reduction.hpp"
#include "rotvac/constants.hpp"
#include "rotvac/kinematics.hpp"
#include "rotvac/quadrature.hpp"
#include "rotvac/sphere_grid.hpp"

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace rotvac {

enum class FieldKind { E, H };

/// ⟨A_a(τ1) B_b(τ2)⟩ with A, B ∈ {E, H} and a, b ∈ {1, 2, 3} along the
/// (radial, tangential, normal) axes of the detector rest frame.
struct CFComponentSpec {
    FieldKind field_a = FieldKind::E;
    int index_a = 1;
    FieldKind field_b = FieldKind::E;
    int index_b = 1;

    /// "E1E1", "E1E2", "H1H1", ... Throws UnsupportedError on malformed text.
    static CFComponentSpec parse(std::string_view text);
    std::string name() const;

    bool operator==(const CFComponentSpec&) const = default;
};

enum class CorrelationMethod { closed_form, quadrature, monte_carlo };

std::string_view to_string(CorrelationMethod m) noexcept;

struct CorrelationMetadata {
    double omega = 0.0;
    double radius = 0.0;
    double beta = 0.0;
    double gamma = 1.0;
    double tau1 = 0.0;
    double tau2 = 0.0;
    std::vector<std::string> warnings;
};

struct CorrelationResult {
    double value = 0.0;
    CorrelationMethod method = CorrelationMethod::closed_form;
    double error_estimate = 0.0;
    CorrelationMetadata metadata;
};

/// Spectral densities of the random-phase fields.
struct SpectralAmplitude {
    /// ħω/(2π²), electromagnetic
    static double h0sq(double omega,
                       const PhysicalConstants& k = PhysicalConstants::natural());
    /// ħc²/(2π²ω), massless scalar
    static double fsq(double omega,
                      const PhysicalConstants& k = PhysicalConstants::natural());
};

/// Which H1H1 brace to use. `standard` is the brace obtained from the mode
/// expansion (identical to E1E1 by E → H, H → −E duality); `printed` is the
/// alternative brace read term by term from the monomial table.
enum class BraceConvention { standard, printed };

/// prefactor × brace(k̂), with k̂ in the frame whose second axis bisects the
/// detector velocities at the two events.
struct IntegrandCoefficients {
    double prefactor = 0.0;
    MonomialCoefficients brace;
};

/// Throws UnsupportedError for components without an integrand.
IntegrandCoefficients cf_integrand_coefficients(const CFComponentSpec& spec, double delta,
                                                const RotationKinematics& kin,
                                                BraceConvention convention =
                                                    BraceConvention::standard);

/// True when the component vanishes identically.
bool cf_is_zero(const CFComponentSpec& spec);

/// Continuous-spectrum two-point function, closed form
/// 3ħc/(π²(c·dt)⁴) × prefactor × reduce_angular(brace, −β sinc(δ/2)).
/// Throws DivergenceError at τ1 = τ2.
CorrelationResult cf_continuous(const CFComponentSpec& spec, double tau1, double tau2,
                                const RotationKinematics& kin,
                                const PhysicalConstants& constants =
                                    PhysicalConstants::natural(),
                                BraceConvention convention = BraceConvention::standard);

/// E1E1 from its explicit expansion over the three θ-moments (independent of
/// the monomial pipeline).
CorrelationResult cf_e11_explicit(double tau1, double tau2, const RotationKinematics& kin,
                                  const PhysicalConstants& constants =
                                      PhysicalConstants::natural());

/// δ → 0 form of E1E1 with k = −β and the (c·dt)^{-4} factor kept.
CorrelationResult cf_e11_coincident(const RotationKinematics& kin, double dt,
                                    const PhysicalConstants& constants =
                                        PhysicalConstants::natural());

/// Mode-density normalization of the discrete (n·Ω/c) spectrum.
/// literal: K = 2a²k0³ with a = cΩ. riemann: K = k0⁴, the Riemann-sum
/// weight under which the vacuum part equals the continuous-spectrum result.
enum class DiscreteNormalization { literal, riemann };

struct DiscreteOptions {
    DiscreteNormalization normalization = DiscreteNormalization::literal;
    BraceConvention convention = BraceConvention::standard;
    QuadratureOptions quadrature{1e-10, 0.0, 18};
};

/// The divergent vacuum piece, never returned as a bare number:
/// coefficient × ∫do brace(k̂) ∫₀^∞ xᵖ cos(xF(k̂)) dx. abel_value is the same
/// expression with the Abel value of the inner integral (6/F⁴ or −1/F²).
struct VacuumPart {
    std::string formal_integral;
    double coefficient = 0.0;
    double abel_value = 0.0;
};

struct DiscreteCFResult {
    VacuumPart vacuum;
    CorrelationResult thermal; ///< finite Abel–Plana remainder
    CorrelationResult total;   ///< vacuum.abel_value + thermal
};

/// Discrete-spectrum two-point function, 2-D adaptive quadrature of the
/// thermal remainder plus the closed-form vacuum part.
DiscreteCFResult cf_discrete(const CFComponentSpec& spec, double tau1, double tau2,
                             const RotationKinematics& kin,
                             const DiscreteOptions& opts = {},
                             const PhysicalConstants& constants =
                                 PhysicalConstants::natural());

/// Mode normalization K and the overall ħc/(2π²) factor of the discrete sum.
double discrete_mode_weight(const RotationKinematics& kin, DiscreteNormalization norm,
                            const PhysicalConstants& constants);

/// Truncated mode sum on a fixed direction grid:
/// K ħc/(2π²) × prefactor × Σ_j w_j brace(k̂_j) Σ_{n=1}^{n_max} n³ cos(nF_j).
double cf_discrete_truncated(const CFComponentSpec& spec, double tau1, double tau2,
                             const RotationKinematics& kin, const SphereGrid& grid,
                             int n_max, const DiscreteOptions& opts = {},
                             const PhysicalConstants& constants =
                                 PhysicalConstants::natural());

/// F(k̂) = 2β sin(δ/2) k̂_y − δ.
inline double discrete_phase(double delta, double beta, double ky) noexcept
{
    return 2.0 * beta * std::sin(0.5 * delta) * ky - delta;
}

} // namespace rotvac
