#include "doctest.h"

#include "rotvac/errors.hpp"
#include "rotvac/kinematics.hpp"

#include <cmath>
#include <random>

using namespace rotvac;

namespace {

double interval(const SpacetimeEvent& a, const SpacetimeEvent& b, double c = 1.0)
{
    const double dx = a.x1 - b.x1;
    const double dy = a.x2 - b.x2;
    const double dz = a.x3 - b.x3;
    const double dt = a.t - b.t;
    return c * c * dt * dt - dx * dx - dy * dy - dz * dz;
}

} // namespace

TEST_CASE("gamma factor")
{
    CHECK(gamma_factor(0.0) == 1.0);
    CHECK(gamma_factor(0.6) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_factor(1.0), DomainError);
    CHECK_THROWS_AS(gamma_factor(-0.1), DomainError);
}

TEST_CASE("rotation kinematics validates input")
{
    const auto kin = RotationKinematics::make(1.0, 0.5);
    CHECK(kin.beta() == 0.5);
    CHECK(kin.gamma() == doctest::Approx(1.0 / std::sqrt(0.75)));
    CHECK(kin.rotation_angle(2.0) == doctest::Approx(2.0 * kin.gamma()));
    CHECK_THROWS_AS(RotationKinematics::make(2.0, 0.5), DomainError);
    CHECK_THROWS_AS(RotationKinematics::make(-1.0, 0.1), DomainError);
    CHECK_THROWS_AS(RotationKinematics::make(NAN, 0.1), DomainError);

    const auto si = PhysicalConstants::si();
    const auto fast = RotationKinematics::make(1e8, 1.0, si);
    CHECK(fast.beta() == doctest::Approx(1e8 / 299792458.0));
}

TEST_CASE("proper time pair")
{
    const auto kin = RotationKinematics::make(2.0, 0.3);
    const ProperTimePair p(0.5, 1.5, kin);
    CHECK(p.dtau() == 1.0);
    CHECK(p.dt() == doctest::Approx(kin.gamma()));
    CHECK(p.delta() == doctest::Approx(2.0 * kin.gamma()));
}

TEST_CASE("modified Lorentz transform maps the detector event onto the lab time axis")
{
    const double v = 0.4;
    const double g = gamma_factor(v);
    const double tau = 1.7;
    const SpacetimeEvent origin{0.0, 0.0, 0.0, tau, FrameTag::mu(tau)};
    const SpacetimeEvent lab = modified_lorentz_to_lab(origin, v, -v * g * tau);
    CHECK(lab.x2 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(lab.t == doctest::Approx(g * tau));
    CHECK(lab.frame == FrameTag::lambda(tau));
}

TEST_CASE("modified Lorentz round trip and frame tags")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double v = 0.3 * u(rng);
        const double a = u(rng);
        const SpacetimeEvent e{u(rng), u(rng), u(rng), u(rng), FrameTag::mu(0.3)};
        const SpacetimeEvent back =
            modified_lorentz_from_lab(modified_lorentz_to_lab(e, v, a), v, a);
        CHECK(back.x2 == doctest::Approx(e.x2).epsilon(1e-12));
        CHECK(back.t == doctest::Approx(e.t).epsilon(1e-12));
        CHECK(back.frame == e.frame);
    }
    const SpacetimeEvent lab_event{0, 0, 0, 0, FrameTag::lab()};
    CHECK_THROWS_AS(modified_lorentz_to_lab(lab_event, 0.1, 0.0), DomainError);
    CHECK_THROWS_AS(modified_lorentz_from_lab(lab_event, 0.1, 0.0), DomainError);
    CHECK_THROWS_AS(modified_lorentz_to_lab({0, 0, 0, 0, FrameTag::mu(0)}, 1.0, 0.0),
                    DomainError);
}

TEST_CASE("mu frame: worldline fixpoint and interval invariance")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double omega = 0.1 + 2.0 * (u(rng) + 1.0);
        const double beta = 0.45 * (u(rng) + 1.0);
        const auto kin = RotationKinematics::make(omega, beta / omega);
        const double t = 4.0 * u(rng);
        const SpacetimeEvent w = mu_frame_coords(detector_worldline_lab(t, kin), t, kin);
        CHECK(std::abs(w.x1) < 1e-9);
        CHECK(std::abs(w.x2) < 1e-9);
        CHECK(std::abs(w.t - t / kin.gamma()) < 1e-9);
        CHECK(w.frame == FrameTag::mu(t / kin.gamma()));

        const SpacetimeEvent p{u(rng), u(rng), u(rng), u(rng), FrameTag::lab()};
        const SpacetimeEvent q{u(rng), u(rng), u(rng), u(rng), FrameTag::lab()};
        CHECK(interval(mu_frame_coords(p, t, kin), mu_frame_coords(q, t, kin)) ==
              doctest::Approx(interval(p, q)).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("mu frame equals lambda frame followed by the inverse modified boost")
{
    const auto kin = RotationKinematics::make(1.3, 0.4);
    const double t = 0.9;
    const SpacetimeEvent p{0.2, -0.4, 0.7, 0.3, FrameTag::lab()};
    const SpacetimeEvent lam = lambda_frame_coords(p, t, kin);
    // λ_t shares the lab time axis; the μ_t boost parameter is a_τ = −v t.
    SpacetimeEvent lam_tagged = lam;
    lam_tagged.frame = FrameTag::lambda(lam.frame.tau);
    const SpacetimeEvent via = modified_lorentz_from_lab(lam_tagged, kin.v(), -kin.v() * t);
    const SpacetimeEvent direct = mu_frame_coords(p, t, kin);
    CHECK(via.x1 == doctest::Approx(direct.x1).epsilon(1e-12));
    CHECK(via.x2 == doctest::Approx(direct.x2).epsilon(1e-12));
    CHECK(via.t == doctest::Approx(direct.t).epsilon(1e-12));
}

TEST_CASE("detector in the later lambda frame")
{
    const auto kin = RotationKinematics::make(1.0, 0.5);
    const double tau1 = 0.2;
    const double tau2 = 1.1;
    const double delta = kin.rotation_angle(tau2 - tau1);
    const SpacetimeEvent a = detector_in_lambda_frame(tau1, tau2, kin);
    CHECK(a.x1 == doctest::Approx(-0.5 * (1.0 - std::cos(delta))));
    CHECK(a.x2 == doctest::Approx(-0.5 * std::sin(delta)));
    CHECK(a.x3 == 0.0);
    // The later detector event is the λ origin.
    const SpacetimeEvent b = detector_in_lambda_frame(tau2, tau2, kin);
    CHECK(std::abs(b.x1) < 1e-15);
    CHECK(std::abs(b.x2) < 1e-15);
}

TEST_CASE("field boost along the tangential axis")
{
    const ElectromagneticField f{{1.0, 2.0, 3.0}, {-1.0, 0.5, 0.25}};
    const double beta = 0.6;
    const ElectromagneticField g = boost_fields_along_axis2(f, beta);
    CHECK(g.e[0] == doctest::Approx(1.25 * (1.0 + 0.6 * 0.25)));
    CHECK(g.e[1] == 2.0);
    CHECK(g.e[2] == doctest::Approx(1.25 * (3.0 + 0.6)));
    CHECK(g.h[0] == doctest::Approx(1.25 * (-1.0 - 0.6 * 3.0)));
    CHECK(g.h[2] == doctest::Approx(1.25 * (0.25 + 0.6)));
    // E² − H² is invariant.
    auto inv = [](const ElectromagneticField& x) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) {
            s += x.e[i] * x.e[i] - x.h[i] * x.h[i];
        }
        return s;
    };
    CHECK(inv(g) == doctest::Approx(inv(f)).epsilon(1e-13));
    // Boosting back undoes it.
    const ElectromagneticField back = boost_fields_along_axis2(g, -beta);
    for (int i = 0; i < 3; ++i) {
        CHECK(back.e[i] == doctest::Approx(f.e[i]).epsilon(1e-13));
        CHECK(back.h[i] == doctest::Approx(f.h[i]).epsilon(1e-13));
    }
}

TEST_CASE("uniform acceleration: lab-rest shift differs from the boosted origin")
{
    for (double tau : {-1.5, -0.2, 0.4, 2.0}) {
        const HyperbolicCoords h = hyperbolic_coords(tau, 0.8);
        CHECK(std::abs(h.x_star - h.x_star_tau) > 1e-6);
    }
    const HyperbolicCoords zero = hyperbolic_coords(0.0, 0.8);
    CHECK(zero.x_star == zero.x_star_tau);
    CHECK(hyperbolic_shift_distance(0.0, 1.0, 0.8) == doctest::Approx(
              (std::cosh(0.8) - 1.0) / 0.8));
    CHECK_THROWS_AS(hyperbolic_coords(1.0, 0.0), DomainError);
}

TEST_CASE("modified transform preserves the shifted interval")
{
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (double beta : {0.0, 0.3, 0.9}) {
        const double g = gamma_factor(beta);
        for (int i = 0; i < 1000; ++i) {
            const double tau = u(rng);
            const SpacetimeEvent m{u(rng), u(rng), u(rng), u(rng), FrameTag::mu(tau)};
            const SpacetimeEvent l = modified_lorentz_to_lab(m, beta, -beta * g * tau);
            const double lhs = l.x2 * l.x2 - (l.t - tau * g) * (l.t - tau * g);
            const double rhs = m.x2 * m.x2 - (m.t - tau) * (m.t - tau);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("modified transform examples")
{
    const SpacetimeEvent e{0.1, 0.3, -0.2, 1.0, FrameTag::mu(1.0)};
    const SpacetimeEvent same = modified_lorentz_to_lab(e, 0.0, 0.0);
    CHECK(same.x1 == e.x1);
    CHECK(same.x2 == e.x2);
    CHECK(same.t == e.t);
    // β = 0.5, τ = 1: explicit 2×2 boost plus the shift.
    const double g = 1.0 / std::sqrt(0.75);
    const SpacetimeEvent l = modified_lorentz_to_lab(e, 0.5, -0.5 * g);
    CHECK(l.x2 == doctest::Approx(g * (0.3 + 0.5) - 0.5 * g));
    CHECK(l.t == doctest::Approx(g * (1.0 + 0.15)));
}

TEST_CASE("gamma at high speed")
{
    const long double b = 0.99L;
    const double ref = static_cast<double>(1.0L / std::sqrt(1.0L - b * b));
    CHECK(gamma_factor(0.99) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(gamma_factor(0.5) == doctest::Approx(1.1547005383792517));
}

TEST_CASE("detector worldline")
{
    const auto kin = RotationKinematics::make(2.0, 0.3);
    const SpacetimeEvent o = detector_worldline_lab(0.0, kin);
    CHECK(o.x1 == 0.0);
    CHECK(o.x2 == 0.0);
    const SpacetimeEvent half = detector_worldline_lab(pi / 2.0, kin);
    CHECK(half.x1 == doctest::Approx(-0.6));
    CHECK(std::abs(half.x2) < 1e-15);
    const double h = 1e-6;
    const SpacetimeEvent a = detector_worldline_lab(0.7 - h, kin);
    const SpacetimeEvent b = detector_worldline_lab(0.7 + h, kin);
    const double speed = std::hypot(b.x1 - a.x1, b.x2 - a.x2) / (2.0 * h);
    CHECK(speed == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("mu frame at t = 0 with v -> 0 is the identity")
{
    const auto kin = RotationKinematics::make(1.0, 0.0);
    const SpacetimeEvent p{0.4, -0.2, 0.9, 0.3, FrameTag::lab()};
    const SpacetimeEvent q = mu_frame_coords(p, 0.0, kin);
    CHECK(q.x1 == doctest::Approx(p.x1));
    CHECK(q.x2 == doctest::Approx(p.x2));
    CHECK(q.x3 == doctest::Approx(p.x3));
    CHECK(q.t == doctest::Approx(p.t));
}

TEST_CASE("mu frame equals shift, rotation and boost applied stepwise")
{
    const auto kin = RotationKinematics::make(1.0, 0.5);
    const double t = pi / 2.0;
    const SpacetimeEvent p{1.0, 0.0, 0.0, 0.0, FrameTag::lab()};
    // Shift to the detector position, rotate by Ωt onto (radial, tangential).
    const SpacetimeEvent d = detector_worldline_lab(t, kin);
    const double sx = p.x1 - d.x1;
    const double sy = p.x2 - d.x2;
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double y1 = c * sx + s * sy;
    const double y2 = -s * sx + c * sy;
    const double v = kin.v();
    const double g = kin.gamma();
    const double a = -v * t;
    // Inverse modified boost with shift a.
    const double y2s = y2 - a;
    const double xi2 = g * (y2s - v * p.t);
    const double eta = g * (p.t - v * y2s);
    const SpacetimeEvent m = mu_frame_coords(p, t, kin);
    CHECK(m.x1 == doctest::Approx(y1).epsilon(1e-12));
    CHECK(m.x2 == doctest::Approx(xi2).epsilon(1e-12));
    CHECK(m.t == doctest::Approx(eta).epsilon(1e-12));
}

TEST_CASE("hyperbolic examples")
{
    const HyperbolicCoords z = hyperbolic_coords(0.0, 1.0);
    CHECK(z.x_star == 0.0);
    CHECK(z.t_star == 0.0);
    CHECK(z.x_star_tau == 0.0);
    CHECK(z.t_star_tau == 0.0);
    const HyperbolicCoords one = hyperbolic_coords(1.0, 1.0);
    CHECK(one.x_star == doctest::Approx(0.543081).epsilon(1e-6));
    CHECK(one.t_star == doctest::Approx(1.175201).epsilon(1e-6));
    CHECK(one.x_star_tau == doctest::Approx(1.175201).epsilon(1e-6));
    CHECK(one.t_star_tau == doctest::Approx(1.543081).epsilon(1e-6));
    CHECK(hyperbolic_shift_distance(0.0, 1.0, 1.0) == doctest::Approx(0.543081).epsilon(1e-6));
}
