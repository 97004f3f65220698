#include "rotvac/bogolubov.hpp"

#include "rotvac/errors.hpp"

#include <cmath>

namespace rotvac {

double ModeVector::norm() const noexcept
{
    return std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
}

Vec3 bogolubov_constraints(const ModeVector& k, const ModeVector& kp, double delta_t,
                           const RotationKinematics& kin)
{
    const double cd = std::cos(delta_t);
    const double sd = std::sin(delta_t);
    const ModeVector kappa = boost_image(k, kin);
    return {kp.k1 + k.k1 * cd - kappa.k2 * sd, kp.k2 + k.k1 * sd + kappa.k2 * cd,
            kp.k3 + k.k3};
}

ModeVector boost_image(const ModeVector& k, const RotationKinematics& kin)
{
    const double c = kin.c();
    return {k.k1, kin.gamma() * (k.k2 + k.omega(c) * kin.v() / (c * c)), k.k3};
}

ModeVector support_momentum(const ModeVector& kp, double delta_t,
                            const RotationKinematics& kin)
{
    if (!(kp.norm() > 0.0)) {
        throw DomainError("support_momentum: |k'| must be positive");
    }
    const double cd = std::cos(delta_t);
    const double sd = std::sin(delta_t);
    // −k′ = R(δ)κ in the (1, 2) plane, so κ = −R(δ)ᵀk′.
    const double kappa1 = -(cd * kp.k1 + sd * kp.k2);
    const double kappa2 = -(-sd * kp.k1 + cd * kp.k2);
    const double c = kin.c();
    const double omega_kappa = kp.omega(c);
    const double g = kin.gamma();
    const double v = kin.v();
    return {kappa1, g * (kappa2 - omega_kappa * v / (c * c)), -kp.k3};
}

std::complex<double> beta_prefactor(const ModeVector& kp, double delta_t, double t,
                                    const RotationKinematics& kin)
{
    const ModeVector k = support_momentum(kp, delta_t, kin);
    const double c = kin.c();
    const double wk = k.omega(c);
    const double wp = kp.omega(c);
    const double g = kin.gamma();
    const double r = kin.radius();
    const std::complex<double> i(0.0, 1.0);
    const double phase = -t * (wp + wk / g) + r * (-k.k1 - kp.k1);
    const std::complex<double> bracket =
        i * r * kin.omega() * kp.k2 + i * (wp - wk / g);
    return -i / (2.0 * std::sqrt(wk * wp)) * std::polar(1.0, phase) * bracket;
}

double particle_number(const ModeVector& kp, double delta_t, const RotationKinematics& kin)
{
    if (kin.c() != 1.0) {
        throw UnsupportedError("particle_number: defined in natural units only (c = 1)");
    }
    const double wp = kp.omega();
    if (!(wp > 0.0)) {
        throw DomainError("particle_number: |k'| must be positive");
    }
    const double v = kin.v();
    const double sd = std::sin(delta_t);
    const double cd = std::cos(delta_t);
    const double energy = wp - v * (kp.k1 * sd - kp.k2 * cd);
    const double shift = kp.k2 + kp.k1 * sd - kp.k2 * cd;
    return v * v * kin.gamma() * energy * shift * shift / (4.0 * wp * wp * wp);
}

} // namespace rotvac
