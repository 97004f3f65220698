#include "rotvac/oracles.hpp"

#include "rotvac/errors.hpp"
#include "rotvac/mode_synthesis.hpp"
#include "rotvac/scalar_correlations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rotvac {

namespace {

// Neumaier compensated accumulator.
struct CompensatedSum {
    long double sum = 0.0L;
    long double comp = 0.0L;

    void add(long double x) noexcept
    {
        const long double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    long double value() const noexcept { return sum + comp; }
};

// Σ_{n≥1} nᵖ e^{−ηn} cos(nF) by running powers of z = e^{−η + iF}.
long double damped_series(int p, long double eta, long double F)
{
    const std::complex<long double> z = std::exp(std::complex<long double>(-eta, F));
    std::complex<long double> zn = 1.0L;
    const long double peak = std::pow(p / eta, static_cast<long double>(p)) * std::exp(-p);
    const long double cutoff = 1e-22L * std::max(peak, 1.0L);
    CompensatedSum acc;
    for (long n = 1;; ++n) {
        zn *= z;
        const long double dn = static_cast<long double>(n);
        const long double np = p == 3 ? dn * dn * dn : dn;
        acc.add(np * zn.real());
        if (dn > p / eta && np * std::abs(zn) < cutoff) {
            break;
        }
    }
    return acc.value();
}

double distance_to_pole(double F) noexcept
{
    const double r = std::remainder(F, two_pi);
    return std::abs(r);
}

RegulatorLadder eta_ladder(double d, int points = 8, double top = 0.5)
{
    return RegulatorLadder::geometric(top * d, 0.5, points);
}

} // namespace

RegulatorLadder::RegulatorLadder(std::vector<double> values, int extrapolation_order)
    : values_(std::move(values)), order_(extrapolation_order)
{
    if (values_.size() < 3) {
        throw DomainError("RegulatorLadder: need at least three values");
    }
    if (order_ < 1 || static_cast<std::size_t>(order_) >= values_.size()) {
        throw DomainError("RegulatorLadder: extrapolation order must be below the length");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] > 0.0) || (i > 0 && !(values_[i] < values_[i - 1]))) {
            throw DomainError("RegulatorLadder: values must be positive and strictly "
                              "decreasing");
        }
    }
}

RegulatorLadder RegulatorLadder::geometric(double first, double ratio, int count,
                                           int extrapolation_order)
{
    std::vector<double> v;
    double x = first;
    for (int i = 0; i < count; ++i) {
        v.push_back(x);
        x *= ratio;
    }
    return {std::move(v), extrapolation_order < 0 ? count - 1 : extrapolation_order};
}

Extrapolated neville_to_zero(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.empty()) {
        throw DomainError("neville_to_zero: need matching non-empty samples");
    }
    std::vector<long double> p(y.begin(), y.end());
    const std::size_t n = x.size();
    long double previous = p[n - 1];
    for (std::size_t m = 1; m < n; ++m) {
        previous = p[n - 1];
        for (std::size_t i = n - 1; i >= m; --i) {
            const long double xi = x[i];
            const long double xim = x[i - m];
            p[i] = (xim * p[i] - xi * p[i - 1]) / (xim - xi);
        }
    }
    // p[n-1] is the full-order estimate; `previous` the one a degree lower.
    return {static_cast<double>(p[n - 1]), static_cast<double>(std::fabs(p[n - 1] - previous))};
}

RegulatorLadder default_epsilon_ladder(double, const RotationKinematics&)
{
    return RegulatorLadder({0.1, 0.05, 0.025}, 2);
}

CorrelationResult regulated_cf_quadrature(const OracleTarget& target, double tau1,
                                          double tau2, const RotationKinematics& kin,
                                          const RegulatorLadder* ladder,
                                          const PhysicalConstants& constants,
                                          const QuadratureOptions& opts)
{
    if (tau1 == tau2) {
        throw DivergenceError("regulated_cf_quadrature: coincident proper times");
    }
    const double dtau = tau2 - tau1;
    const double dt = kin.lab_interval(dtau);
    const double delta = kin.rotation_angle(dtau);
    const double scale = constants.c() * std::abs(dt) * (1.0 - kin.beta());
    const RegulatorLadder fallback = default_epsilon_ladder(dt, kin);
    const RegulatorLadder& lad = ladder != nullptr ? *ladder : fallback;

    const CFComponentSpec* spec = std::get_if<CFComponentSpec>(&target);
    const bool scalar = spec == nullptr;

    std::vector<double> eps2;
    std::vector<double> values;
    double quad_error = 0.0;
    for (double e : lad.values()) {
        const double eps = e * scale;
        auto integrand = [&](double theta, double phi) {
            const double st = std::sin(theta);
            const Vec3 n{st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
            const std::complex<double> w(eps, -mode_path_difference(n, delta, dt, kin));
            if (scalar) {
                return st * std::real(1.0 / (w * w));
            }
            const std::complex<double> w2 = w * w;
            return st * mode_component_product(*spec, n, delta, kin.beta()) *
                   std::real(6.0 / (w2 * w2));
        };
        const QuadratureResult r = integrate_angles(integrand, opts);
        eps2.push_back(eps * eps);
        values.push_back(r.value);
        quad_error = std::max(quad_error, r.error);
    }

    double biggest = 0.0;
    for (double v : values) {
        biggest = std::max(biggest, std::abs(v));
    }
    for (std::size_t i = 2; i < values.size(); ++i) {
        const double d1 = values[i - 1] - values[i - 2];
        const double d2 = values[i] - values[i - 1];
        const double floor = 1e-9 * biggest + 4.0 * quad_error + 1e-12;
        if (std::abs(d1) > floor && std::abs(d2) > floor && (d1 > 0) != (d2 > 0)) {
            std::ostringstream diag;
            for (std::size_t j = 0; j < values.size(); ++j) {
                diag << "eps=" << std::sqrt(eps2[j]) << " I=" << values[j] << "; ";
            }
            throw NumericError("regulated_cf_quadrature: non-monotone regulator ladder",
                               diag.str());
        }
    }

    const Extrapolated ex = neville_to_zero(eps2, values);
    const double factor = constants.hbar() * constants.c() / ((scalar ? 4.0 : 2.0) * pi * pi);

    CorrelationResult out;
    out.method = CorrelationMethod::quadrature;
    out.value = factor * ex.value;
    out.error_estimate = std::abs(factor) * (ex.error + quad_error);
    out.metadata = {kin.omega(), kin.radius(), kin.beta(), kin.gamma(), tau1, tau2, {}};
    return out;
}

Extrapolated abel_summed_series(int p, double F, const RegulatorLadder* ladder)
{
    if (p != 1 && p != 3) {
        throw UnsupportedError("abel_summed_series: p must be 1 or 3");
    }
    const double d = distance_to_pole(F);
    if (!(d > 0.0)) {
        throw DomainError("abel_summed_series: F on a pole");
    }
    const RegulatorLadder fallback = eta_ladder(d);
    const RegulatorLadder& lad = ladder != nullptr ? *ladder : fallback;
    std::vector<double> x;
    std::vector<double> y;
    for (double eta : lad.values()) {
        x.push_back(eta);
        y.push_back(static_cast<double>(damped_series(p, eta, F)));
    }
    const Extrapolated ex = neville_to_zero(x, y);
    if (!std::isfinite(ex.value)) {
        throw NumericError("abel_summed_series: extrapolation diverged");
    }
    return ex;
}

Extrapolated mode_sum_cf(const OracleTarget& target, double tau1, double tau2,
                         const RotationKinematics& kin, const DiscreteOptions& opts,
                         const PhysicalConstants& constants, std::size_t n_theta,
                         std::size_t n_phi)
{
    const CFComponentSpec* spec = std::get_if<CFComponentSpec>(&target);
    const bool scalar = spec == nullptr;
    const int p = scalar ? 1 : 3;
    const double dtau = tau2 - tau1;
    const double dt = kin.lab_interval(dtau);
    const double delta = kin.rotation_angle(dtau);
    const double k0 = kin.omega() / constants.c();
    const double weight = scalar
                              ? scalar_discrete_weight(kin, opts.normalization, constants)
                              : discrete_mode_weight(kin, opts.normalization, constants);

    const SphereGrid grid = SphereGrid::gauss_product(n_theta, n_phi);
    std::vector<double> phase(grid.size());
    std::vector<double> product(grid.size());
    double d_min = pi;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const Vec3& n = grid.nodes[j];
        phase[j] = k0 * mode_path_difference(n, delta, dt, kin);
        product[j] = scalar ? 1.0 : mode_component_product(*spec, n, delta, kin.beta());
        d_min = std::min(d_min, distance_to_pole(phase[j]));
    }
    if (!(d_min > 0.0)) {
        throw DomainError("mode_sum_cf: a grid direction sits on a pole");
    }

    const RegulatorLadder lad = eta_ladder(d_min, 6, 0.25);
    std::vector<double> x;
    std::vector<double> y;
    for (double eta : lad.values()) {
        CompensatedSum acc;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            if (product[j] == 0.0) {
                continue;
            }
            acc.add(static_cast<long double>(grid.weights[j] * product[j]) *
                    damped_series(p, eta, phase[j]));
        }
        x.push_back(eta);
        y.push_back(weight * static_cast<double>(acc.value()));
    }
    return neville_to_zero(x, y);
}

GaussianDeltaOracle gaussian_delta_beta(const ModeVector& kp, double delta_t, double t,
                                        const RotationKinematics& kin, double sigma,
                                        int points_per_axis)
{
    const double c = kin.c();
    const double g = kin.gamma();
    const double v = kin.v();
    const double r = kin.radius();
    const double omega = kin.omega();
    const double cd = std::cos(delta_t);
    const double sd = std::sin(delta_t);
    const double wp = kp.omega(c);

    auto args = [&](const Vec3& k) {
        const double wk = c * std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        const double q = (k[1] + wk * v / (c * c)) * g;
        return Vec3{kp.k1 + k[0] * cd - q * sd, kp.k2 + k[0] * sd + q * cd, kp.k3 + k[2]};
    };
    auto jacobian = [&](const Vec3& k) {
        std::array<std::array<double, 3>, 3> J{};
        const double h = 1e-6 * std::max(1.0, kp.norm());
        for (int col = 0; col < 3; ++col) {
            Vec3 kplus = k;
            Vec3 kminus = k;
            kplus[col] += h;
            kminus[col] -= h;
            const Vec3 ap = args(kplus);
            const Vec3 am = args(kminus);
            for (int row = 0; row < 3; ++row) {
                J[row][col] = (ap[row] - am[row]) / (2.0 * h);
            }
        }
        return J;
    };
    auto det = [](const std::array<std::array<double, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    auto inverse = [&](const std::array<std::array<double, 3>, 3>& m) {
        const double D = det(m);
        std::array<std::array<double, 3>, 3> inv{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const int i1 = (j + 1) % 3;
                const int i2 = (j + 2) % 3;
                const int j1 = (i + 1) % 3;
                const int j2 = (i + 2) % 3;
                inv[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / D;
            }
        }
        return inv;
    };

    // Newton solve of A(k) = 0 from the inertial guess k = −k′.
    Vec3 k{-kp.k1, -kp.k2, -kp.k3};
    for (int it = 0; it < 50; ++it) {
        const Vec3 a = args(k);
        const auto inv = inverse(jacobian(k));
        Vec3 step{};
        for (int i = 0; i < 3; ++i) {
            step[i] = inv[i][0] * a[0] + inv[i][1] * a[1] + inv[i][2] * a[2];
            k[i] -= step[i];
        }
        if (std::sqrt(step[0] * step[0] + step[1] * step[1] + step[2] * step[2]) <
            1e-15 * kp.norm()) {
            break;
        }
    }
    const auto J = jacobian(k);
    const auto Jinv = inverse(J);
    const double detJ = std::abs(det(J));

    const std::complex<double> i(0.0, 1.0);
    auto b0b3 = [&](const Vec3& kk) {
        const double wk = c * std::sqrt(kk[0] * kk[0] + kk[1] * kk[1] + kk[2] * kk[2]);
        const double q = (kk[1] + wk * v / (c * c)) * g;
        const double phase = -t * (wp + wk / g) + r * (-kk[0] + kk[0] * cd - q * sd);
        const std::complex<double> b0 = -i / (2.0 * std::sqrt(wk * wp)) * std::polar(1.0, phase);
        const std::complex<double> b3 =
            -i * r * omega * (kk[0] * sd + q * cd) + i * (wp - wk / g);
        return b0 * b3;
    };

    // Box in A-space [−6σ, 6σ]³ mapped back through the linearization at the
    // support; the Gaussians are evaluated on the exact A(k).
    const int n = points_per_axis;
    const double half = 6.0 * sigma;
    const double du = 2.0 * half / (n - 1);
    const double norm = 1.0 / (sigma * std::sqrt(two_pi));
    std::complex<double> sum = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int cidx = 0; cidx < n; ++cidx) {
                const Vec3 u{-half + a * du, -half + b * du, -half + cidx * du};
                Vec3 kk = k;
                for (int row = 0; row < 3; ++row) {
                    kk[row] += Jinv[row][0] * u[0] + Jinv[row][1] * u[1] + Jinv[row][2] * u[2];
                }
                const Vec3 A = args(kk);
                double gauss = 1.0;
                for (double ai : A) {
                    gauss *= norm * std::exp(-0.5 * ai * ai / (sigma * sigma));
                }
                const double w = (a == 0 || a == n - 1 ? 0.5 : 1.0) *
                                 (b == 0 || b == n - 1 ? 0.5 : 1.0) *
                                 (cidx == 0 || cidx == n - 1 ? 0.5 : 1.0);
                sum += w * gauss * b0b3(kk);
            }
        }
    }
    return {sum * du * du * du / detJ, detJ};
}

} // namespace rotvac
