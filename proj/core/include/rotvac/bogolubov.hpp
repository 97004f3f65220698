#pragma once

#include "rotvac/kinematics.hpp"

#include <complex>

namespace rotvac {

/// Wave vector of a massless mode; ω = c|k|.
struct ModeVector {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;

    double norm() const noexcept;
    double omega(double c = 1.0) const noexcept { return c * norm(); }
};

/// The three arguments of the delta functions in β_{kk′}:
///   A1 = k1′ + k1 cos δ − (k2 + ω_k v/c²)γ sin δ
///   A2 = k2′ + k1 sin δ + (k2 + ω_k v/c²)γ cos δ
///   A3 = k3′ + k3
/// β_{kk′} is supported where all three vanish.
Vec3 bogolubov_constraints(const ModeVector& k, const ModeVector& kprime, double delta_t,
                           const RotationKinematics& kin);

/// The k on which β_{kk′} is supported: κ = −R(−δ)k′ followed by the inverse
/// boost ω_k = γ(ω_κ − vκ2), k2 = γ(κ2 − ω_κ v/c²). Throws DomainError for k′ = 0.
ModeVector support_momentum(const ModeVector& kprime, double delta_t,
                            const RotationKinematics& kin);

/// κ = (k1, γ(k2 + ω_k v/c²), k3), the boost image of k.
ModeVector boost_image(const ModeVector& k, const RotationKinematics& kin);

/// Non-delta factor of β_{kk′} evaluated on the support:
/// −i/(2√(ω_k ω_k′)) exp{−it[ω_k′ + ω_k/γ] + ir[−k1 − k1′]} [irΩk2′ + i(ω_k′ − ω_k/γ)].
std::complex<double> beta_prefactor(const ModeVector& kprime, double delta_t, double t,
                                    const RotationKinematics& kin);

/// ⟨0^μ|N_k′|0^μ⟩ = v²γ[ω′ − v(k1′ sin δ − k2′ cos δ)](k2′ + k1′ sin δ − k2′ cos δ)²/(4ω′³).
/// The expression carries squared delta functions and is only meaningful in
/// natural units; throws UnsupportedError when c ≠ 1.
double particle_number(const ModeVector& kprime, double delta_t,
                       const RotationKinematics& kin);

} // namespace rotvac
