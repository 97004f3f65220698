#include "doctest.h"

#include "rotvac/em_correlations.hpp"
#include "rotvac/errors.hpp"
#include "rotvac/monte_carlo.hpp"

#include <cmath>
#include <set>

using namespace rotvac;

namespace {

McFieldSpec small_spec(std::int64_t ensembles)
{
    McFieldSpec mc;
    mc.n_max = 8;
    mc.direction_grid = SphereGrid::gauss_product(4, 8);
    mc.ensembles = ensembles;
    return mc;
}

const auto kin = RotationKinematics::make(1.0, 0.5);

} // namespace

TEST_CASE("hash and phases")
{
    CHECK(phase_hash(1, 2, 3, 0) != phase_hash(1, 2, 3, 1));
    CHECK(phase_hash(1, 2, 3, 0) == phase_hash(1, 2, 3, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t e = 0; e < 1000; ++e) {
        seen.insert(phase_hash(default_seed, e, 7, 1));
        const double p = random_phase(default_seed, e, 7, 1);
        CHECK(p >= 0.0);
        CHECK(p < two_pi);
    }
    CHECK(seen.size() == 1000);
}

TEST_CASE("spec validation")
{
    McFieldSpec bad = small_spec(10);
    bad.n_max = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = small_spec(0);
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = small_spec(10);
    bad.direction_grid.weights[0] *= 1.01;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("determinism")
{
    const auto spec = CFComponentSpec::parse("E1E1");
    const CorrelationResult a = mc_zero_point_cf(spec, 0.0, 0.4, kin, small_spec(300));
    const CorrelationResult b = mc_zero_point_cf(spec, 0.0, 0.4, kin, small_spec(300));
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.method == CorrelationMethod::monte_carlo);
    McFieldSpec other = small_spec(300);
    other.seed = 99;
    CHECK(mc_zero_point_cf(spec, 0.0, 0.4, kin, other).value != a.value);
}

TEST_CASE("matches the truncated discrete sum at low n_max")
{
    const McFieldSpec mc = small_spec(4000);
    for (const char* n : {"E1E1", "E2E2", "E3E3", "E1E2"}) {
        const auto spec = CFComponentSpec::parse(n);
        const CorrelationResult r = mc_zero_point_cf(spec, 0.0, 0.4, kin, mc);
        const double exact =
            cf_discrete_truncated(spec, 0.0, 0.4, kin, mc.direction_grid, mc.n_max);
        CAPTURE(n);
        CHECK(std::abs(r.value - exact) < 3.0 * r.error_estimate);
    }
    const CorrelationResult z = mc_zero_point_cf(CFComponentSpec::parse("E1E3"), 0.0, 0.4, kin, mc);
    CHECK(std::abs(z.value) < 3.0 * z.error_estimate + 1e-12);
    const CorrelationResult e12 =
        mc_zero_point_cf(CFComponentSpec::parse("E1E2"), 0.0, 0.4, kin, mc);
    const CorrelationResult e21 =
        mc_zero_point_cf(CFComponentSpec::parse("E2E1"), 0.0, 0.4, kin, mc);
    const double se = std::hypot(e12.error_estimate, e21.error_estimate);
    CHECK(std::abs(e12.value + e21.value) < 3.0 * se + 1e-12);
}

TEST_CASE("standard error scales as one over root N")
{
    const auto spec = CFComponentSpec::parse("E1E1");
    const double se1 = mc_zero_point_cf(spec, 0.0, 0.4, kin, small_spec(1000)).error_estimate;
    const double se4 = mc_zero_point_cf(spec, 0.0, 0.4, kin, small_spec(4000)).error_estimate;
    CHECK(se1 / se4 == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("phase correlator")
{
    const std::int64_t n = 20000;
    const PhaseCorrelator diag = mc_phase_correlator(default_seed, n, 5, 5);
    CHECK(std::abs(diag.mean - 0.5) < 3.0 * diag.standard_error);
    for (std::uint64_t j : {6ULL, 17ULL, 1000ULL}) {
        const PhaseCorrelator off = mc_phase_correlator(default_seed, n, 5, j);
        CHECK(std::abs(off.mean) < 3.0 * off.standard_error);
    }
}
