#pragma once

#include "rotvac/constants.hpp"

#include <array>

namespace rotvac {

using Vec3 = std::array<double, 3>;

/// Lorentz factor (1 − β²)^{−1/2}; throws DomainError unless 0 ≤ β < 1.
double gamma_factor(double beta);

/// Uniform circular motion of the detector: angular velocity Ω and orbit
/// radius r, with v = Ωr, β = v/c and γ derived once at construction.
class RotationKinematics {
public:
    /// Throws DomainError for Ω < 0, r < 0, non-finite input or Ωr ≥ c.
    static RotationKinematics make(double omega, double radius,
                                   const PhysicalConstants& constants =
                                       PhysicalConstants::natural());

    double omega() const noexcept { return omega_; }
    double radius() const noexcept { return radius_; }
    double c() const noexcept { return c_; }
    double v() const noexcept { return omega_ * radius_; }
    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }

    /// Lab time elapsed over a proper-time interval: γ·dτ.
    double lab_interval(double dtau) const noexcept { return gamma_ * dtau; }
    /// Rotation angle of the detector over a proper-time interval: Ωγ·dτ.
    double rotation_angle(double dtau) const noexcept { return omega_ * gamma_ * dtau; }

private:
    RotationKinematics(double omega, double radius, double c, double beta,
                       double gamma) noexcept
        : omega_(omega), radius_(radius), c_(c), beta_(beta), gamma_(gamma) {}

    double omega_;
    double radius_;
    double c_;
    double beta_;
    double gamma_;
};

enum class FrameKind { lab, lambda, mu };

/// Which frame an event's coordinates live in. λ and μ frames are labelled
/// by the detector proper time at which they agree with it.
struct FrameTag {
    FrameKind kind = FrameKind::lab;
    double tau = 0.0;

    static FrameTag lab() noexcept { return {FrameKind::lab, 0.0}; }
    static FrameTag lambda(double tau) noexcept { return {FrameKind::lambda, tau}; }
    static FrameTag mu(double tau) noexcept { return {FrameKind::mu, tau}; }

    bool operator==(const FrameTag&) const = default;
};

struct SpacetimeEvent {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double t = 0.0;
    FrameTag frame;
};

/// Two detector proper times and the derived lab interval and rotation angle.
class ProperTimePair {
public:
    ProperTimePair(double tau1, double tau2, const RotationKinematics& kin) noexcept
        : tau1_(tau1), tau2_(tau2), dt_(kin.lab_interval(tau2 - tau1)),
          delta_(kin.omega() * dt_) {}

    double tau1() const noexcept { return tau1_; }
    double tau2() const noexcept { return tau2_; }
    double dtau() const noexcept { return tau2_ - tau1_; }
    /// t2 − t1 = γ(τ2 − τ1)
    double dt() const noexcept { return dt_; }
    /// δ = Ω(t2 − t1)
    double delta() const noexcept { return delta_; }

private:
    double tau1_;
    double tau2_;
    double dt_;
    double delta_;
};

/// μ(τ) → λ(τ) along the second axis with the per-τ shift a_τ:
///   x2^λ = (x2^μ + v t^μ)γ + a_τ,   t^λ = (t^μ + v x2^μ / c²)γ.
/// With a_τ = −vγτ the detector event (0, τ) lands on (0, γτ).
SpacetimeEvent modified_lorentz_to_lab(const SpacetimeEvent& event_mu, double v,
                                       double a_tau, double c = 1.0);

/// Inverse of modified_lorentz_to_lab; the result is tagged μ(τ).
SpacetimeEvent modified_lorentz_from_lab(const SpacetimeEvent& event_lambda,
                                         double v, double a_tau, double c = 1.0);

/// Shift a lab event to the detector position at lab time t_frame and rotate
/// onto the λ axes (radial, tangential, normal). Time is unchanged.
SpacetimeEvent lambda_frame_coords(const SpacetimeEvent& event_lab, double t_frame,
                                   const RotationKinematics& kin);

/// Coordinates (ξ1, ξ2, ξ3, η) of a lab event in the instantaneous rest frame
/// μ_t of the detector at lab time t_frame, with δ_t = Ω t_frame and
/// a_τ = −v t_frame.
SpacetimeEvent mu_frame_coords(const SpacetimeEvent& event_lab, double t_frame,
                               const RotationKinematics& kin);

/// Detector position at lab time t. The orbit centre sits at (−r, 0, 0) so
/// that the detector is at the lab origin at t = 0.
SpacetimeEvent detector_worldline_lab(double t, const RotationKinematics& kin);

/// Position and time of the detector at proper time tau1, expressed in the
/// λ frame attached to proper time tau2.
SpacetimeEvent detector_in_lambda_frame(double tau1, double tau2,
                                        const RotationKinematics& kin);

struct ElectromagneticField {
    Vec3 e{};
    Vec3 h{};
};

/// Field components seen from a frame moving with speed βc along the second
/// axis (Gaussian units, H in place of B).
ElectromagneticField boost_fields_along_axis2(const ElectromagneticField& field,
                                              double beta);

struct HyperbolicCoords {
    double x_star;     ///< (c²/a)(cosh(aτ/c) − 1), the lab worldline
    double t_star;     ///< (c/a) sinh(aτ/c)
    double x_star_tau; ///< cτ sinh(aτ/c), boost of (0, τ) with v_τ
    double t_star_tau; ///< τ cosh(aτ/c)
};

/// Uniform acceleration a > 0: the lab worldline against the boost image of
/// the instantaneous-frame origin event.
HyperbolicCoords hyperbolic_coords(double tau, double accel, double c = 1.0);

/// X*(τ2) − X*(τ1), the offset between the lab-rest frames at τ1 and τ2.
double hyperbolic_shift_distance(double tau1, double tau2, double accel,
                                 double c = 1.0);

} // namespace rotvac
