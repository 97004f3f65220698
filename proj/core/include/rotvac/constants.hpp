#pragma once

#include <numbers>

namespace rotvac {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// ħ, c and k_B. The Stefan–Boltzmann constant is always derived from them.
class PhysicalConstants {
public:
    /// ħ = c = k_B = 1.
    static PhysicalConstants natural() noexcept { return {1.0, 1.0, 1.0}; }
    /// CODATA 2018 exact SI values.
    static PhysicalConstants si() noexcept
    {
        return {1.054571817e-34, 299792458.0, 1.380649e-23};
    }
    /// Throws DomainError unless all three are finite and strictly positive.
    static PhysicalConstants custom(double hbar, double c, double k_b);

    double hbar() const noexcept { return hbar_; }
    double c() const noexcept { return c_; }
    double k_b() const noexcept { return k_b_; }
    /// σ = π² k_B⁴ / (60 ħ³ c²)
    double sigma() const noexcept;

    bool operator==(const PhysicalConstants&) const = default;

private:
    constexpr PhysicalConstants(double hbar, double c, double k_b) noexcept
        : hbar_(hbar), c_(c), k_b_(k_b) {}

    double hbar_;
    double c_;
    double k_b_;
};

} // namespace rotvac
