#include "doctest.h"

#include "rotvac/angular_reduction.hpp"
#include "rotvac/errors.hpp"
#include "rotvac/quadrature.hpp"

#include <cmath>
#include <random>

using namespace rotvac;

TEST_CASE("phi moments against quadrature")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    for (int i = 0; i < 50; ++i) {
        const double b = u(rng);
        for (int p = 0; p <= 2; ++p) {
            const double num = integrate(
                [&](double phi) {
                    const double w = 1.0 + b * std::sin(phi);
                    return std::pow(std::sin(phi), p) / (w * w * w * w);
                },
                0.0, two_pi, {1e-13, 0.0, 20}).value;
            CHECK(phi_moment(p, b) == doctest::Approx(num).epsilon(1e-10));
        }
    }
    CHECK(phi_moment(0, 0.0) == doctest::Approx(two_pi));
    CHECK_THROWS_AS(phi_moment(0, 1.0), DomainError);
    CHECK_THROWS_AS(phi_moment(3, 0.1), UnsupportedError);
}

TEST_CASE("theta moments against quadrature")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    for (int i = 0; i < 50; ++i) {
        const double k = u(rng);
        for (int m : {1, 3, 5, 7}) {
            const double num = integrate(
                [&](double th) {
                    const double s = std::sin(th);
                    return std::pow(s, m) * std::pow(1.0 - k * k * s * s, -3.5);
                },
                0.0, pi, {1e-13, 0.0, 20}).value;
            CHECK(theta_moment(m, k) == doctest::Approx(num).epsilon(1e-10));
        }
    }
    // k = 0: Wallis integrals 2, 4/3, 16/15, 32/35.
    CHECK(theta_moment(1, 0.0) == doctest::Approx(2.0));
    CHECK(theta_moment(3, 0.0) == doctest::Approx(4.0 / 3.0));
    CHECK(theta_moment(5, 0.0) == doctest::Approx(16.0 / 15.0));
    CHECK(theta_moment(7, 0.0) == doctest::Approx(32.0 / 35.0));
    CHECK_THROWS_AS(theta_moment(2, 0.1), UnsupportedError);
    CHECK_THROWS_AS(theta_moment(1, -1.0), DomainError);
}

TEST_CASE("reduce_angular matches 2-D quadrature monomial by monomial")
{
    for (double k : {-0.9, -0.4, 0.0, 0.3, 0.95}) {
        for (std::size_t mi = 0; mi < monomial_count; ++mi) {
            MonomialCoefficients c;
            c[static_cast<Monomial>(mi)] = 1.0;
            const double num = integrate_angles(
                [&](double th, double phi) {
                    const double st = std::sin(th);
                    const Vec3 khat{st * std::cos(phi), st * std::sin(phi), std::cos(th)};
                    const double w = 1.0 + k * khat[1];
                    return st * c.evaluate(khat) / (w * w * w * w);
                },
                {1e-11, 1e-13, 20}).value;
            CAPTURE(k);
            CAPTURE(monomial_name(static_cast<Monomial>(mi)));
            CHECK(reduce_angular(c, k) == doctest::Approx(num).epsilon(1e-10).scale(1e-30));
        }
    }
}

TEST_CASE("reduce_angular is linear and sees odd k_y terms with the sign of k")
{
    const MonomialCoefficients a{{Monomial::one, 1.0}, {Monomial::ky, 2.0}};
    const MonomialCoefficients b{{Monomial::kz2, -0.5}, {Monomial::ky2_kz2, 3.0}};
    const double k = 0.37;
    CHECK(reduce_angular(a + b, k) ==
          doctest::Approx(reduce_angular(a, k) + reduce_angular(b, k)).epsilon(1e-14));
    const MonomialCoefficients ky{{Monomial::ky, 1.0}};
    CHECK(reduce_angular(ky, k) == doctest::Approx(-reduce_angular(ky, -k)));
    CHECK(reduce_angular(ky, k) < 0.0);
    // k = 0: ∫do = 4π, ∫do k̂_y² = 4π/3.
    CHECK(reduce_angular({{Monomial::one, 1.0}}, 0.0) == doctest::Approx(4.0 * pi));
    CHECK(reduce_angular({{Monomial::ky2, 1.0}}, 0.0) == doctest::Approx(4.0 * pi / 3.0));
}

TEST_CASE("monomial coefficients from names")
{
    const auto c = MonomialCoefficients::from_names({{"1", 1.0}, {"kx^2", -1.0}});
    CHECK(c[Monomial::one] == 1.0);
    CHECK(c[Monomial::kx2] == -1.0);
    CHECK_THROWS_AS(MonomialCoefficients::from_names({{"kx", 1.0}}), UnsupportedError);
    CHECK(MonomialCoefficients{}.empty());
}

TEST_CASE("radial wave integral")
{
    const auto kin = RotationKinematics::make(1.0, 0.5);
    const double dt = 1.15470;
    const double delta = 1.15470;
    const double x = 2.0 * 0.5 * std::sin(0.5 * delta) - dt;
    CHECK(radial_wave_integral(delta, pi / 2, pi / 2, dt, kin) ==
          doctest::Approx(6.0 / std::pow(x, 4)));
    // Independent check: damped k-integral over whole periods, Richardson in ε².
    auto damped = [&](double eps) {
        const double period = two_pi / std::abs(x);
        double sum = 0.0;
        for (double a = 0.0; a < 60.0 / eps; a += period) {
            sum += integrate(
                       [&](double k) { return k * k * k * std::exp(-eps * k) * std::cos(k * x); },
                       a, a + period, {1e-13, 0.0, 20})
                       .value;
        }
        return sum;
    };
    const double e = 0.02;
    const double r1 = damped(e);
    const double r2 = damped(e / 2);
    const double extrap = (4.0 * r2 - r1) / 3.0;
    CHECK(radial_wave_integral(delta, pi / 2, pi / 2, dt, kin) ==
          doctest::Approx(extrap).epsilon(1e-5));
    CHECK(radial_wave_integral(delta, pi / 2, pi / 2, dt, kin) == doctest::Approx(43.654).epsilon(1e-4));
    CHECK_THROWS_AS(radial_wave_integral(delta, 0.3, 0.2, 0.0, kin), DomainError);
}

TEST_CASE("angular parameter")
{
    CHECK(angular_kparam(0.0, 0.5) == -0.5);
    CHECK(angular_kparam(pi, 0.5) == doctest::Approx(-0.5 * 2.0 / pi));
}
