#include "rotvac/spectral_regularization.hpp"

#include "rotvac/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace rotvac {

namespace {

constexpr double taylor_radius = 3.0;

double half_sine_squared(double F, const char* where)
{
    const double pole = two_pi * std::round(F / two_pi);
    if (std::abs(F - pole) <= 8.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(1.0, std::abs(F))) {
        throw DomainError(std::string(where) + ": F on a pole (F = 2πm)");
    }
    const double s = std::sin(0.5 * F);
    return s * s;
}

constexpr int series_terms = 60;

// Taylor coefficients of the m ≠ 0 pole sums in powers of F²:
// 6Σ(F − 2πm)^{-4} = Σ_j 12·C(2j+3, 3) ζ(2j+4) F^{2j}/(2π)^{2j+4}
// Σ(F − 2πm)^{-2}  = Σ_j 2(2j+1) ζ(2j+2) F^{2j}/(2π)^{2j+2}
struct PoleSeries {
    std::array<double, series_terms> n3{};
    std::array<double, series_terms> n1{};

    PoleSeries()
    {
        for (int j = 0; j < series_terms; ++j) {
            const double n = 2.0 * j;
            n3[j] = 2.0 * (n + 3.0) * (n + 2.0) * (n + 1.0) * std::riemann_zeta(n + 4.0) /
                    std::pow(two_pi, n + 4.0);
            n1[j] = 2.0 * (n + 1.0) * std::riemann_zeta(n + 2.0) / std::pow(two_pi, n + 2.0);
        }
    }
};

const PoleSeries& pole_series()
{
    static const PoleSeries table;
    return table;
}

double horner(const std::array<double, series_terms>& c, double x2) noexcept
{
    double acc = 0.0;
    for (int j = series_terms - 1; j >= 0; --j) {
        acc = acc * x2 + c[j];
    }
    return acc;
}

} // namespace

double sum_n3_cos(double F)
{
    const double s2 = half_sine_squared(F, "sum_n3_cos");
    return (3.0 - 2.0 * s2) / (8.0 * s2 * s2);
}

double sum_n1_cos(double F)
{
    const double s2 = half_sine_squared(F, "sum_n1_cos");
    return -1.0 / (4.0 * s2);
}

double thermal_n3(double F)
{
    if (std::abs(F) <= taylor_radius) {
        return horner(pole_series().n3, F * F);
    }
    const double F2 = F * F;
    return sum_n3_cos(F) - 6.0 / (F2 * F2);
}

double thermal_n1(double F)
{
    if (std::abs(F) <= taylor_radius) {
        return horner(pole_series().n1, F * F);
    }
    return -1.0 / (F * F) - sum_n1_cos(F);
}

AbelPlanaSplit regularized_sum(int p, double F)
{
    AbelPlanaSplit out;
    out.p = p;
    if (p == 3) {
        out.total_closed_form = sum_n3_cos(F);
        const double F2 = F * F;
        out.vacuum_value = 6.0 / (F2 * F2);
        out.thermal_sign = 1.0;
        out.thermal_value = thermal_n3(F);
    } else if (p == 1) {
        out.total_closed_form = sum_n1_cos(F);
        out.vacuum_value = -1.0 / (F * F);
        out.thermal_sign = -1.0;
        out.thermal_value = thermal_n1(F);
    } else {
        throw UnsupportedError("regularized_sum: p must be 1 or 3");
    }
    return out;
}

double thermal_integral(int p, double T, double F_tilde,
                        const PhysicalConstants& constants,
                        const QuadratureOptions& opts)
{
    if (p != 1 && p != 3) {
        throw UnsupportedError("thermal_integral: p must be 1 or 3");
    }
    if (!(T >= 0.0)) {
        throw DomainError("thermal_integral: temperature must be non-negative");
    }
    if (T == 0.0) {
        return 0.0;
    }
    const double beta_t = constants.hbar() / (constants.k_b() * T);
    if (std::abs(F_tilde) >= beta_t) {
        throw DivergenceError("thermal_integral: requires |F| < 2π (|F~| < ħ/k_B T)");
    }
    // Substitute ω = x/β_t so the Bose factor is e^x − 1.
    const double f = std::abs(F_tilde) / beta_t;
    auto integrand = [p, f](double x) {
        if (x == 0.0) {
            return p == 1 ? 2.0 : 0.0;
        }
        // 2xᵖ cosh(fx)/(e^x − 1) written with decaying exponentials only.
        const double num = std::exp(-(1.0 - f) * x) + std::exp(-(1.0 + f) * x);
        return std::pow(x, p) * num / (-std::expm1(-x));
    };
    const double scaled = integrate_to_infinity(integrand, 0.0, opts).value;
    return scaled / std::pow(beta_t, p + 1);
}

RotationTemperature t_rot(double omega, const PhysicalConstants& constants)
{
    if (!(omega >= 0.0)) {
        throw DomainError("t_rot: omega must be non-negative");
    }
    return {constants.hbar() * omega / (two_pi * constants.k_b())};
}

EnergyDensity reg_energy_density(const RotationKinematics& kin,
                                 const PhysicalConstants& constants)
{
    EnergyDensity out;
    out.t_rot = t_rot(kin.omega(), constants).t_rot;
    const double t2 = out.t_rot * out.t_rot;
    out.w_rad = 4.0 * constants.sigma() / constants.c() * t2 * t2;
    const double g2 = kin.gamma() * kin.gamma();
    out.anisotropy = 2.0 * (4.0 * g2 - 1.0) / 3.0;
    out.value = out.anisotropy * out.w_rad;
    return out;
}

double reg_energy_density_spectral(const RotationKinematics& kin,
                                   const PhysicalConstants& constants,
                                   const QuadratureOptions& opts)
{
    const double T = t_rot(kin.omega(), constants).t_rot;
    const double g2 = kin.gamma() * kin.gamma();
    const double c = constants.c();
    return 2.0 * (4.0 * g2 - 1.0) / 3.0 * constants.hbar() / (pi * pi * c * c * c) *
           0.5 * thermal_integral(3, T, 0.0, constants, opts);
}

PlanckComparison planck_comparison(double T, double t, double epsilon,
                                   const PhysicalConstants& constants,
                                   const QuadratureOptions& opts)
{
    if (!(epsilon > 0.0)) {
        throw DomainError("planck_comparison: regulator epsilon must be positive");
    }
    if (!(T >= 0.0)) {
        throw DomainError("planck_comparison: temperature must be non-negative");
    }
    const double hbar_over_kt =
        T > 0.0 ? constants.hbar() / (constants.k_b() * T) : 0.0;

    auto coth_part = [&](double w) {
        if (w == 0.0) {
            return 0.0;
        }
        const double damp = std::exp(-epsilon * w) * std::cos(w * t);
        if (T == 0.0) {
            return w * w * w * damp;
        }
        const double x = 0.5 * hbar_over_kt * w;
        return w * w * w * damp / std::tanh(x);
    };
    auto bose_part = [&](double w) {
        if (w == 0.0 || T == 0.0) {
            return 0.0;
        }
        return 2.0 * w * w * w * std::cos(w * t) * std::exp(-epsilon * w) /
               std::expm1(hbar_over_kt * w);
    };

    PlanckComparison out;
    out.lhs = 0.5 * integrate_to_infinity(coth_part, 0.0, opts).value;
    const std::complex<double> z(epsilon, -t);
    out.vacuum = std::real(6.0 / (z * z * z * z));
    out.thermal = integrate_to_infinity(bose_part, 0.0, opts).value;
    out.rhs = 0.5 * (out.vacuum + out.thermal);
    return out;
}

double abel_plana_rhs(const std::function<std::complex<double>(std::complex<double>)>& f,
                      const QuadratureOptions& opts)
{
    auto real_part = [&](double x) { return std::real(f({x, 0.0})); };
    auto kernel = [&](double t) {
        if (t == 0.0) {
            return 0.0;
        }
        const std::complex<double> diff = f({0.0, t}) - f({0.0, -t});
        // i·diff is real for real-on-the-axis f.
        return std::real(std::complex<double>(0.0, 1.0) * diff) / std::expm1(two_pi * t);
    };
    return integrate_to_infinity(real_part, 0.0, opts).value +
           0.5 * std::real(f({0.0, 0.0})) + integrate_to_infinity(kernel, 0.0, opts).value;
}

} // namespace rotvac
