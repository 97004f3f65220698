#pragma once

#include "rotvac/kinematics.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace rotvac {

/// Monomials in the unit wave-vector components that occur in the
/// correlation-function integrands. Odd powers of k̂_x integrate to zero
/// against the (1 + b sinφ)^{-4} weight and are not representable.
enum class Monomial : std::size_t {
    one,
    ky,
    kx2,
    ky2,
    kz2,
    ky_kz2,
    kx2_kz2,
    ky2_kz2,
};

inline constexpr std::size_t monomial_count = 8;

std::string_view monomial_name(Monomial m) noexcept;

/// Coefficients of a polynomial over the Monomial table.
class MonomialCoefficients {
public:
    MonomialCoefficients() = default;
    MonomialCoefficients(std::initializer_list<std::pair<Monomial, double>> terms);

    /// Build from textual names ("1", "ky", "kx^2", "ky*kz^2", ...). Throws
    /// UnsupportedError on any name outside the table.
    static MonomialCoefficients from_names(const std::map<std::string, double>& terms);

    double operator[](Monomial m) const noexcept { return c_[static_cast<std::size_t>(m)]; }
    double& operator[](Monomial m) noexcept { return c_[static_cast<std::size_t>(m)]; }

    bool empty() const noexcept;
    /// Σ c_m · monomial_m(k̂)
    double evaluate(const Vec3& khat) const noexcept;

    MonomialCoefficients& operator+=(const MonomialCoefficients& other) noexcept;
    MonomialCoefficients& operator*=(double s) noexcept;
    friend MonomialCoefficients operator+(MonomialCoefficients a,
                                          const MonomialCoefficients& b) noexcept
    {
        return a += b;
    }
    friend MonomialCoefficients operator*(double s, MonomialCoefficients a) noexcept
    {
        return a *= s;
    }

    const std::array<double, monomial_count>& values() const noexcept { return c_; }

private:
    std::array<double, monomial_count> c_{};
};

/// k ≡ −β sin(δ/2)/(δ/2); the φ-weight parameter is b = k sinθ.
double angular_kparam(double delta, double beta) noexcept;

/// ∫₀^∞ dk k³ cos{k(2r sin(δ/2) sinθ sinφ − c·dt)} = 6/[2r sin(δ/2) sinθ sinφ − c·dt]⁴.
double radial_wave_integral(double delta, double theta, double phi, double dt,
                            const RotationKinematics& kin);

/// ∫₀^{2π} sin^p φ (1 + b sinφ)^{-4} dφ for p ∈ {0, 1, 2}.
double phi_moment(int p, double b);

/// ∫₀^π sin^m θ (1 − k² sin²θ)^{-7/2} dθ for m ∈ {1, 3, 5, 7}.
/// m = 1, 3, 5 use rational closed forms in (1 − k²)^{-1}; m = 7 carries a
/// logarithmic part and is summed from its hypergeometric series in k².
double theta_moment(int m, double kparam);

/// ∫ do Σ c_m monomial_m (1 + k sinθ sinφ)^{-4} over the unit sphere, in
/// closed form through phi_moment and theta_moment.
double reduce_angular(const MonomialCoefficients& coeffs, double kparam);

/// Above this |k| the (1 − b²)^{-7/2} factors amplify rounding noticeably.
inline constexpr double near_singular_kparam = 0.95;

} // namespace rotvac
