#pragma once

#include "rotvac/kinematics.hpp"

#include <cstddef>
#include <vector>

namespace rotvac {

/// Product rule on the unit sphere: Gauss–Legendre in cosθ times the
/// periodic trapezoid rule in φ. Weights sum to 4π.
struct SphereGrid {
    std::vector<Vec3> nodes;
    std::vector<double> weights;

    static SphereGrid gauss_product(std::size_t n_theta, std::size_t n_phi);

    std::size_t size() const noexcept { return nodes.size(); }
};

} // namespace rotvac
