#include "rotvac/angular_reduction.hpp"

#include "rotvac/errors.hpp"

#include <cmath>
#include <string>

namespace rotvac {

namespace {

constexpr std::array<std::string_view, monomial_count> names = {
    "1", "ky", "kx^2", "ky^2", "kz^2", "ky*kz^2", "kx^2*kz^2", "ky^2*kz^2"};

void check_weight(double b, const char* where)
{
    if (!(std::abs(b) < 1.0)) {
        throw DomainError(std::string(where) + ": require |b| < 1");
    }
}

double sinc(double x) noexcept
{
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// ∫₀^π sin⁷θ (1 − k² sin²θ)^{-7/2} dθ = Σ_n (7/2)_n/n! k^{2n} W(2n + 7),
// W(p) = ∫₀^π sin^p θ dθ.
double theta_moment_seven(double k2)
{
    double wallis = 32.0 / 35.0;
    double coeff = 1.0;
    double power = 1.0;
    double sum = 0.0;
    for (int n = 0; n < 200000; ++n) {
        const double term = coeff * power * wallis;
        sum += term;
        if (term < 1e-17 * sum && n > 4) {
            return sum;
        }
        coeff *= (3.5 + n) / (n + 1.0);
        power *= k2;
        const double p = 2.0 * n + 7.0;
        wallis *= (p + 1.0) / (p + 2.0);
    }
    throw NumericError("theta_moment(7): series did not converge",
                       "k^2=" + std::to_string(k2));
}

} // namespace

std::string_view monomial_name(Monomial m) noexcept
{
    return names[static_cast<std::size_t>(m)];
}

MonomialCoefficients::MonomialCoefficients(
    std::initializer_list<std::pair<Monomial, double>> terms)
{
    for (const auto& [m, value] : terms) {
        (*this)[m] += value;
    }
}

MonomialCoefficients
MonomialCoefficients::from_names(const std::map<std::string, double>& terms)
{
    MonomialCoefficients out;
    for (const auto& [name, value] : terms) {
        std::size_t i = 0;
        while (i < monomial_count && names[i] != name) {
            ++i;
        }
        if (i == monomial_count) {
            throw UnsupportedError("unknown monomial '" + name + "'");
        }
        out.c_[i] += value;
    }
    return out;
}

bool MonomialCoefficients::empty() const noexcept
{
    for (double v : c_) {
        if (v != 0.0) {
            return false;
        }
    }
    return true;
}

double MonomialCoefficients::evaluate(const Vec3& k) const noexcept
{
    const double x2 = k[0] * k[0];
    const double y = k[1];
    const double y2 = y * y;
    const double z2 = k[2] * k[2];
    return c_[0] + c_[1] * y + c_[2] * x2 + c_[3] * y2 + c_[4] * z2 +
           c_[5] * y * z2 + c_[6] * x2 * z2 + c_[7] * y2 * z2;
}

MonomialCoefficients& MonomialCoefficients::operator+=(const MonomialCoefficients& o) noexcept
{
    for (std::size_t i = 0; i < monomial_count; ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

MonomialCoefficients& MonomialCoefficients::operator*=(double s) noexcept
{
    for (double& v : c_) {
        v *= s;
    }
    return *this;
}

double angular_kparam(double delta, double beta) noexcept
{
    return -beta * sinc(0.5 * delta);
}

double radial_wave_integral(double delta, double theta, double phi, double dt,
                            const RotationKinematics& kin)
{
    if (dt == 0.0) {
        throw DomainError("radial_wave_integral: dt must be non-zero");
    }
    const double x = 2.0 * kin.radius() * std::sin(0.5 * delta) * std::sin(theta) *
                         std::sin(phi) -
                     kin.c() * dt;
    if (x == 0.0) {
        throw DomainError("radial_wave_integral: vanishing denominator");
    }
    const double x2 = x * x;
    return 6.0 / (x2 * x2);
}

double phi_moment(int p, double b)
{
    check_weight(b, "phi_moment");
    const double b2 = b * b;
    const double denom = std::pow(1.0 - b2, 3.5);
    switch (p) {
    case 0:
        return pi * (2.0 + 3.0 * b2) / denom;
    case 1:
        return -b * pi * (4.0 + b2) / denom;
    case 2:
        return pi * (1.0 + 4.0 * b2) / denom;
    default:
        throw UnsupportedError("phi_moment: p must be 0, 1 or 2");
    }
}

double theta_moment(int m, double kparam)
{
    check_weight(kparam, "theta_moment");
    const double k2 = kparam * kparam;
    const double u = 1.0 / (1.0 - k2);
    const double u2 = u * u;
    const double u3 = u2 * u;
    switch (m) {
    case 1:
        return 2.0 / 5.0 * u + 8.0 / 15.0 * u2 + 16.0 / 15.0 * u3;
    case 3:
        return 4.0 / 15.0 * u2 + 16.0 / 15.0 * u3;
    case 5:
        return 16.0 / 15.0 * u3;
    case 7:
        return theta_moment_seven(k2);
    default:
        throw UnsupportedError("theta_moment: m must be 1, 3, 5 or 7");
    }
}

double reduce_angular(const MonomialCoefficients& coeffs, double k)
{
    check_weight(k, "reduce_angular");
    const double k2 = k * k;
    const double t1 = theta_moment(1, k);
    const double t3 = theta_moment(3, k);
    const double t5 = theta_moment(5, k);
    const bool needs_t7 = coeffs[Monomial::ky_kz2] != 0.0 ||
                          coeffs[Monomial::kx2_kz2] != 0.0 ||
                          coeffs[Monomial::ky2_kz2] != 0.0;
    const double t7 = needs_t7 ? theta_moment(7, k) : 0.0;

    // φ-moments with b = k sinθ, then sin²φ = 1 − cos²φ for k̂_x² and
    // cos²θ = 1 − sin²θ for k̂_z², collected onto the θ-moments.
    const double one = pi * (2.0 * t1 + 3.0 * k2 * t3);
    const double ky = -pi * k * (4.0 * t3 + k2 * t5);
    const double kx2 = pi * (t3 - k2 * t5);
    const double ky2 = pi * (t3 + 4.0 * k2 * t5);
    const double kz2 = pi * (2.0 * t1 + 3.0 * k2 * t3 - 2.0 * t3 - 3.0 * k2 * t5);
    const double ky_kz2 = -pi * k * (4.0 * (t3 - t5) + k2 * (t5 - t7));
    const double kx2_kz2 = pi * ((t3 - t5) - k2 * (t5 - t7));
    const double ky2_kz2 = pi * ((t3 - t5) + 4.0 * k2 * (t5 - t7));

    return coeffs[Monomial::one] * one + coeffs[Monomial::ky] * ky +
           coeffs[Monomial::kx2] * kx2 + coeffs[Monomial::ky2] * ky2 +
           coeffs[Monomial::kz2] * kz2 + coeffs[Monomial::ky_kz2] * ky_kz2 +
           coeffs[Monomial::kx2_kz2] * kx2_kz2 +
           coeffs[Monomial::ky2_kz2] * ky2_kz2;
}

} // namespace rotvac
