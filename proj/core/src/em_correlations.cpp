#include "rotvac/em_correlations.hpp"

#include "rotvac/errors.hpp"
#include "rotvac/spectral_regularization.hpp"

#include <cmath>
#include <sstream>

namespace rotvac {

namespace {

CorrelationMetadata make_metadata(const RotationKinematics& kin, double tau1, double tau2)
{
    return {kin.omega(), kin.radius(), kin.beta(), kin.gamma(), tau1, tau2, {}};
}

void check_constants(const RotationKinematics& kin, const PhysicalConstants& k)
{
    if (kin.c() != k.c()) {
        throw DomainError("kinematics and constants disagree on c");
    }
}

void check_separated(double tau1, double tau2, const char* where)
{
    if (tau1 == tau2) {
        throw DivergenceError(std::string(where) +
                              ": coincident proper times (use the coincidence limit)");
    }
}

void warn_if_near_singular(double kparam, CorrelationMetadata& meta)
{
    if (std::abs(kparam) > near_singular_kparam) {
        std::ostringstream msg;
        msg << "angular weight parameter |k| = " << std::abs(kparam)
            << " is close to 1; closed forms lose accuracy";
        meta.warnings.push_back(msg.str());
    }
}

bool is_e(const CFComponentSpec& s, int a, int b)
{
    return s.field_a == FieldKind::E && s.field_b == FieldKind::E && s.index_a == a &&
           s.index_b == b;
}

MonomialCoefficients e11_brace(double delta, double beta)
{
    const double ch = std::cos(0.5 * delta);
    const double sh = std::sin(0.5 * delta);
    const double b2 = beta * beta;
    return {{Monomial::one, std::cos(delta)},
            {Monomial::ky, -2.0 * beta * ch},
            {Monomial::kx2, -ch * ch + b2},
            {Monomial::ky2, sh * sh + b2}};
}

MonomialCoefficients h11_printed_brace(double delta, double beta)
{
    const double cd = std::cos(delta);
    const double sd = std::sin(delta);
    const double ch = std::cos(0.5 * delta);
    const double sh = std::sin(0.5 * delta);
    return {{Monomial::ky, cd * cd - 2.0 * beta * ch},
            {Monomial::kx2, -0.5 * sd * sd},
            {Monomial::ky2, 0.5 * sd * sd},
            {Monomial::kz2, cd},
            {Monomial::ky_kz2, -ch * cd},
            {Monomial::kx2_kz2, sh * sh * cd},
            {Monomial::ky2_kz2, ch * ch * cd}};
}

} // namespace

CFComponentSpec CFComponentSpec::parse(std::string_view text)
{
    auto field = [&](char ch) {
        if (ch == 'E') {
            return FieldKind::E;
        }
        if (ch == 'H') {
            return FieldKind::H;
        }
        throw UnsupportedError("component '" + std::string(text) +
                               "': field must be E or H");
    };
    auto index = [&](char ch) {
        if (ch < '1' || ch > '3') {
            throw UnsupportedError("component '" + std::string(text) +
                                   "': index must be 1, 2 or 3");
        }
        return ch - '0';
    };
    if (text.size() != 4) {
        throw UnsupportedError("component '" + std::string(text) +
                               "': expected the form E1E1");
    }
    return {field(text[0]), index(text[1]), field(text[2]), index(text[3])};
}

std::string CFComponentSpec::name() const
{
    std::string out;
    out += field_a == FieldKind::E ? 'E' : 'H';
    out += static_cast<char>('0' + index_a);
    out += field_b == FieldKind::E ? 'E' : 'H';
    out += static_cast<char>('0' + index_b);
    return out;
}

std::string_view to_string(CorrelationMethod m) noexcept
{
    switch (m) {
    case CorrelationMethod::closed_form:
        return "closed_form";
    case CorrelationMethod::quadrature:
        return "quadrature";
    case CorrelationMethod::monte_carlo:
        return "monte_carlo";
    }
    return "unknown";
}

double SpectralAmplitude::h0sq(double omega, const PhysicalConstants& k)
{
    return k.hbar() * omega / (2.0 * pi * pi);
}

double SpectralAmplitude::fsq(double omega, const PhysicalConstants& k)
{
    if (!(omega > 0.0)) {
        throw DomainError("fsq: omega must be positive");
    }
    return k.hbar() * k.c() * k.c() / (2.0 * pi * pi * omega);
}

bool cf_is_zero(const CFComponentSpec& s)
{
    return is_e(s, 1, 3) || is_e(s, 3, 1) || is_e(s, 2, 3) || is_e(s, 3, 2);
}

IntegrandCoefficients cf_integrand_coefficients(const CFComponentSpec& s, double delta,
                                                const RotationKinematics& kin,
                                                BraceConvention convention)
{
    const double beta = kin.beta();
    const double g = kin.gamma();
    const double g2 = g * g;
    const double cd = std::cos(delta);
    const double sd = std::sin(delta);
    const double ch = std::cos(0.5 * delta);
    const double sh = std::sin(0.5 * delta);
    const double b2 = beta * beta;

    if (cf_is_zero(s)) {
        return {0.0, {}};
    }
    if (is_e(s, 1, 1)) {
        return {0.5 * g2, e11_brace(delta, beta)};
    }
    if (is_e(s, 2, 2)) {
        return {0.25, {{Monomial::one, cd},
                       {Monomial::kx2, 1.0},
                       {Monomial::ky2, -1.0},
                       {Monomial::kz2, cd}}};
    }
    if (is_e(s, 3, 3)) {
        return {0.5 * g2, {{Monomial::one, 1.0 + b2 * cd},
                           {Monomial::ky, -2.0 * beta * ch},
                           {Monomial::kx2, -b2 * ch * ch},
                           {Monomial::ky2, b2 * sh * sh},
                           {Monomial::kz2, -1.0}}};
    }
    if (is_e(s, 1, 2) || is_e(s, 2, 1)) {
        // E2E1(τ1, τ2) = E1E2(τ2, τ1) = −E1E2(τ1, τ2)
        const double sign = is_e(s, 1, 2) ? 1.0 : -1.0;
        return {0.5 * sign, {{Monomial::one, -0.5 * g * sd},
                             {Monomial::kz2, -0.5 * g * sd},
                             {Monomial::ky, g * beta * sh}}};
    }
    if (s.field_a == FieldKind::H && s.field_b == FieldKind::H && s.index_a == 1 &&
        s.index_b == 1) {
        if (convention == BraceConvention::printed) {
            return {0.5 * g2, h11_printed_brace(delta, beta)};
        }
        return {0.5 * g2, e11_brace(delta, beta)};
    }
    throw UnsupportedError("component " + s.name() + " has no closed-form integrand");
}

CorrelationResult cf_continuous(const CFComponentSpec& spec, double tau1, double tau2,
                                const RotationKinematics& kin,
                                const PhysicalConstants& constants,
                                BraceConvention convention)
{
    check_constants(kin, constants);
    check_separated(tau1, tau2, "cf_continuous");
    const double dtau = tau2 - tau1;
    const double dt = kin.lab_interval(dtau);
    const double delta = kin.rotation_angle(dtau);
    const auto coeffs = cf_integrand_coefficients(spec, delta, kin, convention);
    const double kparam = angular_kparam(delta, kin.beta());

    CorrelationResult out;
    out.metadata = make_metadata(kin, tau1, tau2);
    if (coeffs.brace.empty()) {
        return out;
    }
    warn_if_near_singular(kparam, out.metadata);
    const double cdt = constants.c() * dt;
    const double cdt2 = cdt * cdt;
    out.value = 3.0 * constants.hbar() * constants.c() / (pi * pi * cdt2 * cdt2) *
                coeffs.prefactor * reduce_angular(coeffs.brace, kparam);
    return out;
}

CorrelationResult cf_e11_explicit(double tau1, double tau2, const RotationKinematics& kin,
                                  const PhysicalConstants& constants)
{
    check_constants(kin, constants);
    check_separated(tau1, tau2, "cf_e11_explicit");
    const double dtau = tau2 - tau1;
    const double cdt = constants.c() * kin.lab_interval(dtau);
    const double delta = kin.rotation_angle(dtau);
    const double beta = kin.beta();
    const double k = angular_kparam(delta, beta);
    const double k2 = k * k;
    const double ch = std::cos(0.5 * delta);
    const double sh = std::sin(0.5 * delta);
    const double b2 = beta * beta;

    const double a1 = 2.0 * pi * std::cos(delta);
    const double a3 = 3.0 * pi * k2 * std::cos(delta) + 8.0 * pi * beta * k * ch +
                      pi * (sh * sh - ch * ch) + 2.0 * pi * b2;
    const double a5 =
        pi * k2 * (1.0 + 3.0 * sh * sh + 3.0 * b2) + 2.0 * pi * beta * k2 * k * ch;

    CorrelationResult out;
    out.metadata = make_metadata(kin, tau1, tau2);
    warn_if_near_singular(k, out.metadata);
    const double cdt2 = cdt * cdt;
    out.value = 3.0 * constants.hbar() * constants.c() * kin.gamma() * kin.gamma() /
                (2.0 * pi * pi * cdt2 * cdt2) *
                (a1 * theta_moment(1, k) + a3 * theta_moment(3, k) +
                 a5 * theta_moment(5, k));
    return out;
}

CorrelationResult cf_e11_coincident(const RotationKinematics& kin, double dt,
                                    const PhysicalConstants& constants)
{
    check_constants(kin, constants);
    if (dt == 0.0) {
        throw DivergenceError("cf_e11_coincident: dt must be non-zero");
    }
    const double beta = kin.beta();
    const double b2 = beta * beta;
    const double cdt = constants.c() * dt;
    const double cdt2 = cdt * cdt;
    const double brace = 2.0 * pi * theta_moment(1, beta) -
                         (3.0 * pi * b2 + pi) * theta_moment(3, beta) +
                         (pi * b2 + pi * b2 * b2) * theta_moment(5, beta);

    CorrelationResult out;
    out.metadata = make_metadata(kin, 0.0, dt / kin.gamma());
    warn_if_near_singular(beta, out.metadata);
    out.value = 3.0 * constants.hbar() * constants.c() * kin.gamma() * kin.gamma() /
                (2.0 * pi * pi * cdt2 * cdt2) * brace;
    return out;
}

double discrete_mode_weight(const RotationKinematics& kin, DiscreteNormalization norm,
                            const PhysicalConstants& constants)
{
    const double k0 = kin.omega() / constants.c();
    double K = 0.0;
    if (norm == DiscreteNormalization::riemann) {
        K = k0 * k0 * k0 * k0;
    } else {
        const double a = constants.c() * kin.omega();
        K = 2.0 * a * a * k0 * k0 * k0;
    }
    return K * constants.hbar() * constants.c() / (2.0 * pi * pi);
}

namespace {

struct DiscreteSetup {
    double delta;
    double beta;
    double weight;
    IntegrandCoefficients coeffs;
};

DiscreteSetup discrete_setup(const CFComponentSpec& spec, double tau1, double tau2,
                             const RotationKinematics& kin, const DiscreteOptions& opts,
                             const PhysicalConstants& constants, const char* where)
{
    check_constants(kin, constants);
    if (!(kin.omega() > 0.0)) {
        throw DomainError(std::string(where) + ": discrete spectrum needs omega > 0");
    }
    const double delta = kin.rotation_angle(tau2 - tau1);
    if (std::abs(std::sin(0.5 * delta)) < 1e-300 || tau1 == tau2) {
        throw DivergenceError(std::string(where) +
                              ": delta is a multiple of 2π, every mode is in phase");
    }
    return {delta, kin.beta(), discrete_mode_weight(kin, opts.normalization, constants),
            cf_integrand_coefficients(spec, delta, kin, opts.convention)};
}

} // namespace

DiscreteCFResult cf_discrete(const CFComponentSpec& spec, double tau1, double tau2,
                             const RotationKinematics& kin, const DiscreteOptions& opts,
                             const PhysicalConstants& constants)
{
    const auto setup = discrete_setup(spec, tau1, tau2, kin, opts, constants, "cf_discrete");
    const double coefficient = setup.weight * setup.coeffs.prefactor;

    DiscreteCFResult out;
    out.vacuum.formal_integral = "int_0^inf x^3 cos(x F) dx";
    out.vacuum.coefficient = coefficient;
    out.thermal.metadata = make_metadata(kin, tau1, tau2);
    out.thermal.method = CorrelationMethod::quadrature;
    if (setup.coeffs.brace.empty()) {
        out.total = out.thermal;
        return out;
    }

    const double kparam = angular_kparam(setup.delta, setup.beta);
    const double d2 = setup.delta * setup.delta;
    out.vacuum.abel_value =
        coefficient * 6.0 / (d2 * d2) * reduce_angular(setup.coeffs.brace, kparam);

    const auto& brace = setup.coeffs.brace;
    auto integrand = [&](double theta, double phi) {
        const double st = std::sin(theta);
        const Vec3 k{st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
        const double F = discrete_phase(setup.delta, setup.beta, k[1]);
        return st * brace.evaluate(k) * thermal_n3(F);
    };
    QuadratureOptions q = opts.quadrature;
    // Near-cancelling braces (E1E2 at small δ) need an absolute floor.
    q.abs_tol = std::max(q.abs_tol, 1e-14 * (1.0 / 120.0) * 4.0 * pi);
    const QuadratureResult r = integrate_angles(integrand, q);
    out.thermal.value = coefficient * r.value;
    out.thermal.error_estimate = std::abs(coefficient) * r.error;
    warn_if_near_singular(kparam, out.thermal.metadata);

    out.total = out.thermal;
    out.total.value = out.vacuum.abel_value + out.thermal.value;
    return out;
}

double cf_discrete_truncated(const CFComponentSpec& spec, double tau1, double tau2,
                             const RotationKinematics& kin, const SphereGrid& grid,
                             int n_max, const DiscreteOptions& opts,
                             const PhysicalConstants& constants)
{
    if (n_max < 1) {
        throw DomainError("cf_discrete_truncated: n_max must be at least 1");
    }
    const auto setup =
        discrete_setup(spec, tau1, tau2, kin, opts, constants, "cf_discrete_truncated");
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const Vec3& k = grid.nodes[j];
        const double F = discrete_phase(setup.delta, setup.beta, k[1]);
        double modes = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            const double dn = n;
            modes += dn * dn * dn * std::cos(dn * F);
        }
        sum += grid.weights[j] * setup.coeffs.brace.evaluate(k) * modes;
    }
    return setup.weight * setup.coeffs.prefactor * sum;
}

} // namespace rotvac
