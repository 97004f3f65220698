#include "rotvac/monte_carlo.hpp"

#include "rotvac/errors.hpp"
#include "rotvac/mode_synthesis.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace rotvac {

namespace {

constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

// Fixed-order pairwise sum.
double pairwise_sum(const double* x, std::size_t n) noexcept
{
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += x[i];
        }
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

struct MeanAndError {
    double mean;
    double standard_error;
};

MeanAndError summarize(std::vector<double>& samples)
{
    const std::size_t n = samples.size();
    const double mean = pairwise_sum(samples.data(), n) / static_cast<double>(n);
    for (double& s : samples) {
        s = (s - mean) * (s - mean);
    }
    const double var =
        n > 1 ? pairwise_sum(samples.data(), n) / static_cast<double>(n - 1) : 0.0;
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

} // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += golden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t phase_hash(std::uint64_t seed, std::uint64_t ensemble, std::uint64_t mode,
                         std::uint64_t polarization) noexcept
{
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ ensemble);
    h = splitmix64(h ^ mode);
    return splitmix64(h ^ polarization);
}

double random_phase(std::uint64_t seed, std::uint64_t ensemble, std::uint64_t mode,
                    std::uint64_t polarization) noexcept
{
    const std::uint64_t bits = phase_hash(seed, ensemble, mode, polarization) >> 11;
    return two_pi * static_cast<double>(bits) * 0x1.0p-53;
}

void McFieldSpec::validate() const
{
    if (n_max < 1) {
        throw DomainError("McFieldSpec: n_max must be at least 1");
    }
    if (ensembles < 1) {
        throw DomainError("McFieldSpec: ensembles must be at least 1");
    }
    if (direction_grid.size() == 0 ||
        direction_grid.nodes.size() != direction_grid.weights.size()) {
        throw DomainError("McFieldSpec: malformed direction grid");
    }
    const double total = std::accumulate(direction_grid.weights.begin(),
                                         direction_grid.weights.end(), 0.0);
    if (std::abs(total - 4.0 * pi) > 1e-12 * 4.0 * pi) {
        throw DomainError("McFieldSpec: direction weights must sum to 4π");
    }
}

CorrelationResult mc_zero_point_cf(const CFComponentSpec& spec, double tau1, double tau2,
                                   const RotationKinematics& kin, const McFieldSpec& mc,
                                   DiscreteNormalization normalization,
                                   const PhysicalConstants& constants)
{
    mc.validate();
    if (kin.c() != constants.c()) {
        throw DomainError("kinematics and constants disagree on c");
    }
    const double dtau = tau2 - tau1;
    const double dt = kin.lab_interval(dtau);
    const double delta = kin.rotation_angle(dtau);
    const double k0 = kin.omega() / constants.c();
    const double weight = discrete_mode_weight(kin, normalization, constants);

    // Deterministic per-mode data: amplitude, rest-frame components at both
    // events and the phase k·x − ωt at each event (event 2 at the λ origin).
    const std::size_t n_dir = mc.direction_grid.size();
    const std::size_t n_modes = n_dir * static_cast<std::size_t>(mc.n_max);
    struct ModeData {
        double amp_first[2];
        double amp_second[2];
        double cos1, sin1, cos2, sin2;
    };
    std::vector<ModeData> modes(n_modes);
    const double x1 = -kin.radius() * (1.0 - std::cos(delta));
    const double y1 = -kin.radius() * std::sin(delta);
    for (std::size_t j = 0; j < n_dir; ++j) {
        const Vec3 n = bisector_to_lambda(mc.direction_grid.nodes[j], delta);
        const auto fields = mode_fields(n, delta, kin.beta());
        for (int m = 1; m <= mc.n_max; ++m) {
            const double dm = m;
            ModeData& md = modes[j * static_cast<std::size_t>(mc.n_max) +
                                 static_cast<std::size_t>(m - 1)];
            const double amp = std::sqrt(weight * dm * dm * dm * mc.direction_grid.weights[j]);
            for (int l = 0; l < 2; ++l) {
                md.amp_first[l] =
                    amp * field_component(fields[l].first, spec.field_a, spec.index_a);
                md.amp_second[l] =
                    amp * field_component(fields[l].second, spec.field_b, spec.index_b);
            }
            const double kk = dm * k0;
            const double phase1 = kk * (n[0] * x1 + n[1] * y1 + constants.c() * dt);
            md.cos1 = std::cos(phase1);
            md.sin1 = std::sin(phase1);
            md.cos2 = 1.0;
            md.sin2 = 0.0;
        }
    }

    std::vector<double> samples(static_cast<std::size_t>(mc.ensembles));
    for (std::int64_t e = 0; e < mc.ensembles; ++e) {
        double f1 = 0.0;
        double f2 = 0.0;
        for (std::size_t mode = 0; mode < n_modes; ++mode) {
            const ModeData& md = modes[mode];
            for (int l = 0; l < 2; ++l) {
                const double theta = random_phase(mc.seed, static_cast<std::uint64_t>(e),
                                                  mode, static_cast<std::uint64_t>(l));
                const double ct = std::cos(theta);
                const double st = std::sin(theta);
                // cos(φ − Θ) = cos φ cos Θ + sin φ sin Θ
                f1 += md.amp_first[l] * (md.cos1 * ct + md.sin1 * st);
                f2 += md.amp_second[l] * (md.cos2 * ct + md.sin2 * st);
            }
        }
        samples[static_cast<std::size_t>(e)] = f1 * f2;
    }
    const MeanAndError s = summarize(samples);

    CorrelationResult out;
    out.method = CorrelationMethod::monte_carlo;
    out.value = s.mean;
    out.error_estimate = s.standard_error;
    out.metadata = {kin.omega(), kin.radius(), kin.beta(), kin.gamma(), tau1, tau2, {}};
    return out;
}

PhaseCorrelator mc_phase_correlator(std::uint64_t seed, std::int64_t ensembles,
                                    std::uint64_t mode_i, std::uint64_t mode_j)
{
    if (ensembles < 2) {
        throw DomainError("mc_phase_correlator: need at least two ensembles");
    }
    std::vector<double> samples(static_cast<std::size_t>(ensembles));
    for (std::int64_t e = 0; e < ensembles; ++e) {
        const auto ue = static_cast<std::uint64_t>(e);
        samples[static_cast<std::size_t>(e)] = std::cos(random_phase(seed, ue, mode_i, 0)) *
                                               std::cos(random_phase(seed, ue, mode_j, 0));
    }
    const MeanAndError s = summarize(samples);
    return {s.mean, s.standard_error};
}

} // namespace rotvac
