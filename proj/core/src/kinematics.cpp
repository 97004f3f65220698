#include "rotvac/kinematics.hpp"

#include "rotvac/errors.hpp"

#include <cmath>
#include <string>

namespace rotvac {

double gamma_factor(double beta)
{
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw DomainError("gamma_factor: require 0 <= beta < 1, got " +
                          std::to_string(beta));
    }
    // (1-β)(1+β) keeps precision as β → 1.
    return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

RotationKinematics RotationKinematics::make(double omega, double radius,
                                            const PhysicalConstants& constants)
{
    if (!std::isfinite(omega) || !std::isfinite(radius) || omega < 0.0 ||
        radius < 0.0) {
        throw DomainError("rotation kinematics: omega and radius must be finite "
                          "and non-negative");
    }
    const double c = constants.c();
    const double beta = omega * radius / c;
    if (beta >= 1.0) {
        throw DomainError("rotation kinematics: orbital speed must stay below c "
                          "(beta = " + std::to_string(beta) + ")");
    }
    return {omega, radius, c, beta, gamma_factor(beta)};
}

namespace {

void check_boost_speed(double v, double c)
{
    if (!(std::abs(v) < c)) {
        throw DomainError("modified Lorentz transform: |v| must be below c");
    }
}

} // namespace

SpacetimeEvent modified_lorentz_to_lab(const SpacetimeEvent& event_mu, double v,
                                       double a_tau, double c)
{
    if (event_mu.frame.kind != FrameKind::mu) {
        throw DomainError("modified_lorentz_to_lab: event must be tagged mu(tau)");
    }
    check_boost_speed(v, c);
    const double g = gamma_factor(std::abs(v) / c);
    SpacetimeEvent out = event_mu;
    out.x2 = (event_mu.x2 + v * event_mu.t) * g + a_tau;
    out.t = (event_mu.t + v * event_mu.x2 / (c * c)) * g;
    out.frame = FrameTag::lambda(event_mu.frame.tau);
    return out;
}

SpacetimeEvent modified_lorentz_from_lab(const SpacetimeEvent& event_lambda,
                                         double v, double a_tau, double c)
{
    if (event_lambda.frame.kind != FrameKind::lambda) {
        throw DomainError(
            "modified_lorentz_from_lab: event must be tagged lambda(tau)");
    }
    check_boost_speed(v, c);
    const double g = gamma_factor(std::abs(v) / c);
    const double x2 = event_lambda.x2 - a_tau;
    SpacetimeEvent out = event_lambda;
    out.x2 = (x2 - v * event_lambda.t) * g;
    out.t = (event_lambda.t - v * x2 / (c * c)) * g;
    out.frame = FrameTag::mu(event_lambda.frame.tau);
    return out;
}

SpacetimeEvent lambda_frame_coords(const SpacetimeEvent& event_lab, double t_frame,
                                   const RotationKinematics& kin)
{
    if (event_lab.frame.kind != FrameKind::lab) {
        throw DomainError("lambda_frame_coords: event must be tagged lab");
    }
    const SpacetimeEvent origin = detector_worldline_lab(t_frame, kin);
    const double d = kin.omega() * t_frame;
    const double cd = std::cos(d);
    const double sd = std::sin(d);
    const double y1 = event_lab.x1 - origin.x1;
    const double y2 = event_lab.x2 - origin.x2;
    return {y1 * cd + y2 * sd, -y1 * sd + y2 * cd, event_lab.x3, event_lab.t,
            FrameTag::lambda(t_frame / kin.gamma())};
}

SpacetimeEvent mu_frame_coords(const SpacetimeEvent& event_lab, double t_frame,
                               const RotationKinematics& kin)
{
    if (event_lab.frame.kind != FrameKind::lab) {
        throw DomainError("mu_frame_coords: event must be tagged lab");
    }
    const double d = kin.omega() * t_frame;
    const double cd = std::cos(d);
    const double sd = std::sin(d);
    const double half = std::sin(0.5 * d);
    const double r = kin.radius();
    const double v = kin.v();
    const double g = kin.gamma();
    const double c2 = kin.c() * kin.c();
    const double a_tau = -v * t_frame;
    const auto& [x1, x2, x3, t, frame] = event_lab;

    SpacetimeEvent out;
    out.x1 = x1 * cd + x2 * sd - 2.0 * r * half * half;
    out.x2 = -x1 * g * sd + x2 * g * cd - t * v * g - (r * sd + a_tau) * g;
    out.x3 = x3;
    out.t = x1 * (v / c2) * g * sd - x2 * (v / c2) * g * cd + t * g +
            (r * sd + a_tau) * (v / c2) * g;
    out.frame = FrameTag::mu(t_frame / g);
    return out;
}

SpacetimeEvent detector_worldline_lab(double t, const RotationKinematics& kin)
{
    const double phase = kin.omega() * t;
    const double r = kin.radius();
    return {r * (std::cos(phase) - 1.0), r * std::sin(phase), 0.0, t,
            FrameTag::lab()};
}

SpacetimeEvent detector_in_lambda_frame(double tau1, double tau2,
                                        const RotationKinematics& kin)
{
    const SpacetimeEvent first = detector_worldline_lab(kin.lab_interval(tau1), kin);
    return lambda_frame_coords(first, kin.lab_interval(tau2), kin);
}

ElectromagneticField boost_fields_along_axis2(const ElectromagneticField& f,
                                              double beta)
{
    const double g = gamma_factor(std::abs(beta));
    const auto& [e1, e2, e3] = f.e;
    const auto& [h1, h2, h3] = f.h;
    return {{g * (e1 + beta * h3), e2, g * (e3 - beta * h1)},
            {g * (h1 - beta * e3), h2, g * (h3 + beta * e1)}};
}

HyperbolicCoords hyperbolic_coords(double tau, double accel, double c)
{
    if (!(accel > 0.0)) {
        throw DomainError("hyperbolic_coords: acceleration must be positive");
    }
    const double x = accel * tau / c;
    const double ch = std::cosh(x);
    const double sh = std::sinh(x);
    return {c * c / accel * (ch - 1.0), c / accel * sh, c * tau * sh, tau * ch};
}

double hyperbolic_shift_distance(double tau1, double tau2, double accel, double c)
{
    return hyperbolic_coords(tau2, accel, c).x_star -
           hyperbolic_coords(tau1, accel, c).x_star;
}

} // namespace rotvac
