#include "rotvac/mode_synthesis.hpp"

#include "rotvac/errors.hpp"

#include <cmath>

namespace rotvac {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) noexcept
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(const Vec3& a)
{
    const double len = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    return {a[0] / len, a[1] / len, a[2] / len};
}

// Components along (e1, e2, z) with e1 = (cos δ, −sin δ), e2 = (sin δ, cos δ).
Vec3 onto_axes(const Vec3& v, double cd, double sd) noexcept
{
    return {v[0] * cd - v[1] * sd, v[0] * sd + v[1] * cd, v[2]};
}

} // namespace

std::array<ModeFieldPair, 2> mode_fields(const Vec3& n, double delta, double beta)
{
    const Vec3 trial = std::abs(n[2]) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
    const Vec3 eps1 = normalized(cross(trial, n));
    const Vec3 eps2 = cross(n, eps1);
    const double cd = std::cos(delta);
    const double sd = std::sin(delta);

    std::array<ModeFieldPair, 2> out;
    const std::array<Vec3, 2> pols{eps1, eps2};
    for (std::size_t l = 0; l < 2; ++l) {
        const Vec3& e = pols[l];
        const Vec3 h = cross(n, e);
        out[l].first = boost_fields_along_axis2({onto_axes(e, cd, sd), onto_axes(h, cd, sd)},
                                                beta);
        out[l].second = boost_fields_along_axis2({e, h}, beta);
    }
    return out;
}

double field_component(const ElectromagneticField& f, FieldKind kind, int index)
{
    if (index < 1 || index > 3) {
        throw DomainError("field_component: index must be 1, 2 or 3");
    }
    const Vec3& v = kind == FieldKind::E ? f.e : f.h;
    return v[static_cast<std::size_t>(index - 1)];
}

double mode_component_product(const CFComponentSpec& spec, const Vec3& n, double delta,
                              double beta)
{
    const auto modes = mode_fields(n, delta, beta);
    double sum = 0.0;
    for (const auto& m : modes) {
        sum += field_component(m.first, spec.field_a, spec.index_a) *
               field_component(m.second, spec.field_b, spec.index_b);
    }
    return 0.5 * sum;
}

double mode_path_difference(const Vec3& n, double delta, double dt,
                            const RotationKinematics& kin)
{
    return kin.radius() * (n[0] * (1.0 - std::cos(delta)) + n[1] * std::sin(delta)) -
           kin.c() * dt;
}

Vec3 bisector_to_lambda(const Vec3& k, double delta) noexcept
{
    const double c = std::cos(0.5 * delta);
    const double s = std::sin(0.5 * delta);
    return {c * k[0] + s * k[1], -s * k[0] + c * k[1], k[2]};
}

} // namespace rotvac
