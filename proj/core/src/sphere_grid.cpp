#include "rotvac/sphere_grid.hpp"

#include "rotvac/constants.hpp"
#include "rotvac/errors.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <cmath>

namespace rotvac {

SphereGrid SphereGrid::gauss_product(std::size_t n_theta, std::size_t n_phi)
{
    if (n_theta < 1 || n_phi < 1) {
        throw DomainError("SphereGrid: need at least one node per direction");
    }
    const int n = static_cast<int>(n_theta);
    // Non-negative Legendre zeros; mirror them for the full rule.
    const auto zeros = boost::math::legendre_p_zeros<double>(n);
    std::vector<double> x;
    std::vector<double> w;
    for (double z : zeros) {
        const double dp = boost::math::legendre_p_prime(n, z);
        const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
        x.push_back(z);
        w.push_back(weight);
        if (z != 0.0) {
            x.push_back(-z);
            w.push_back(weight);
        }
    }

    SphereGrid grid;
    grid.nodes.reserve(x.size() * n_phi);
    grid.weights.reserve(x.size() * n_phi);
    const double dphi = two_pi / static_cast<double>(n_phi);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ct = x[i];
        const double st = std::sqrt((1.0 - ct) * (1.0 + ct));
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double phi = (static_cast<double>(j) + 0.5) * dphi;
            grid.nodes.push_back({st * std::cos(phi), st * std::sin(phi), ct});
            grid.weights.push_back(w[i] * dphi);
        }
    }
    return grid;
}

} // namespace rotvac
