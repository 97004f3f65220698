#include "rotvac/scalar_correlations.hpp"

#include "rotvac/errors.hpp"
#include "rotvac/spectral_regularization.hpp"

#include <cmath>

namespace rotvac {

double scalar_phi_reduction(double E_val, double B_val)
{
    if (!(B_val - std::abs(E_val) > 0.0)) {
        throw DomainError("scalar_phi_reduction: require B > |E|");
    }
    const double d = (B_val - E_val) * (B_val + E_val);
    return two_pi * B_val / (d * std::sqrt(d));
}

double scalar_interval(double dtau, const RotationKinematics& kin)
{
    const double ct = kin.c() * kin.lab_interval(dtau);
    const double chord = 2.0 * kin.radius() * std::sin(0.5 * kin.rotation_angle(dtau));
    return (ct - chord) * (ct + chord);
}

CorrelationResult scalar_cf_continuous(double tau1, double tau2,
                                       const RotationKinematics& kin,
                                       const PhysicalConstants& constants)
{
    if (kin.c() != constants.c()) {
        throw DomainError("kinematics and constants disagree on c");
    }
    if (tau1 == tau2) {
        throw DivergenceError("scalar_cf_continuous: coincident proper times");
    }
    CorrelationResult out;
    out.metadata = {kin.omega(), kin.radius(), kin.beta(), kin.gamma(), tau1, tau2, {}};
    out.value = -constants.hbar() * constants.c() / pi / scalar_interval(tau2 - tau1, kin);
    return out;
}

double scalar_discrete_weight(const RotationKinematics& kin, DiscreteNormalization norm,
                              const PhysicalConstants& constants)
{
    const double k0 = kin.omega() / constants.c();
    const double denom = norm == DiscreteNormalization::riemann ? 4.0 : 2.0;
    return k0 * k0 * constants.hbar() * constants.c() / (denom * pi * pi);
}

DiscreteCFResult scalar_cf_discrete(double tau1, double tau2, const RotationKinematics& kin,
                                    const DiscreteOptions& opts,
                                    const PhysicalConstants& constants)
{
    if (kin.c() != constants.c()) {
        throw DomainError("kinematics and constants disagree on c");
    }
    if (!(kin.omega() > 0.0)) {
        throw DomainError("scalar_cf_discrete: discrete spectrum needs omega > 0");
    }
    const double delta = kin.rotation_angle(tau2 - tau1);
    if (tau1 == tau2 || std::abs(std::sin(0.5 * delta)) < 1e-300) {
        throw DivergenceError(
            "scalar_cf_discrete: delta is a multiple of 2π, every mode is in phase");
    }
    const double beta = kin.beta();
    const double weight = scalar_discrete_weight(kin, opts.normalization, constants);

    DiscreteCFResult out;
    out.vacuum.formal_integral = "int_0^inf x cos(x F) dx";
    out.vacuum.coefficient = weight;
    // ∫do (1 + k k̂_y)^{-2} = 4π/(1 − k²)
    const double k = angular_kparam(delta, beta);
    out.vacuum.abel_value = -weight * 4.0 * pi / (delta * delta * (1.0 - k * k));

    auto integrand = [&](double theta, double phi) {
        const double st = std::sin(theta);
        return st * thermal_n1(discrete_phase(delta, beta, st * std::sin(phi)));
    };
    QuadratureOptions q = opts.quadrature;
    const QuadratureResult r = integrate_angles(integrand, q);

    out.thermal.method = CorrelationMethod::quadrature;
    out.thermal.metadata = {kin.omega(), kin.radius(), beta, kin.gamma(), tau1, tau2, {}};
    out.thermal.value = -weight * r.value;
    out.thermal.error_estimate = weight * r.error;
    out.total = out.thermal;
    out.total.value = out.vacuum.abel_value + out.thermal.value;
    return out;
}

} // namespace rotvac
