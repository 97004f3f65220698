#pragma once

#include "rotvac/em_correlations.hpp"
#include "rotvac/sphere_grid.hpp"

#include <cstdint>

namespace rotvac {

/// Counter-based generator: splitmix64 finalizer chained over
/// (seed, ensemble, mode, polarization). Any sample can be regenerated from
/// its indices alone, independent of evaluation order.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t phase_hash(std::uint64_t seed, std::uint64_t ensemble, std::uint64_t mode,
                         std::uint64_t polarization) noexcept;
/// Uniform phase in [0, 2π) from the top 53 bits of phase_hash.
double random_phase(std::uint64_t seed, std::uint64_t ensemble, std::uint64_t mode,
                    std::uint64_t polarization) noexcept;

inline constexpr std::uint64_t default_seed = 20240611ULL;

struct McFieldSpec {
    int n_max = 64;
    SphereGrid direction_grid = SphereGrid::gauss_product(8, 16);
    std::int64_t ensembles = 10000;
    std::uint64_t seed = default_seed;

    /// Throws DomainError on n_max < 1, ensembles < 1 or grid weights not
    /// summing to 4π within 1e−12.
    void validate() const;
};

/// Random-phase discrete zero-point field sampled at the two detector events.
/// Mode (n, j, λ) has wave vector n·k0·n̂_j with n̂_j = R_z(−δ/2)·node_j, so
/// that the grid nodes are the bisector-frame directions used by
/// cf_discrete_truncated, and squared amplitude K ħc/(2π²)·n³·w_j.
/// value = ensemble mean of A_a(τ1)B_b(τ2); error_estimate = standard error.
CorrelationResult mc_zero_point_cf(const CFComponentSpec& spec, double tau1, double tau2,
                                   const RotationKinematics& kin, const McFieldSpec& mc,
                                   DiscreteNormalization normalization =
                                       DiscreteNormalization::literal,
                                   const PhysicalConstants& constants =
                                       PhysicalConstants::natural());

struct PhaseCorrelator {
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Sample average of cos Θ_i cos Θ_j over ensembles for two mode indices;
/// ½ on the diagonal, 0 off it.
PhaseCorrelator mc_phase_correlator(std::uint64_t seed, std::int64_t ensembles,
                                    std::uint64_t mode_i, std::uint64_t mode_j);

} // namespace rotvac
