#include "rotvac/constants.hpp"

#include "rotvac/errors.hpp"

#include <cmath>

namespace rotvac {

PhysicalConstants PhysicalConstants::custom(double hbar, double c, double k_b)
{
    auto ok = [](double x) { return std::isfinite(x) && x > 0.0; };
    if (!ok(hbar) || !ok(c) || !ok(k_b)) {
        throw DomainError("physical constants must be finite and positive");
    }
    return {hbar, c, k_b};
}

double PhysicalConstants::sigma() const noexcept
{
    const double k2 = k_b_ * k_b_;
    return pi * pi * k2 * k2 / (60.0 * hbar_ * hbar_ * hbar_ * c_ * c_);
}

} // namespace rotvac
