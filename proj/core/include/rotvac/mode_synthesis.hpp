#pragma once

#include "rotvac/em_correlations.hpp"

#include <array>

namespace rotvac {

/// Field components of one plane-wave mode as seen by the detector at the
/// two events, built directly from polarization vectors and the Lorentz
/// transformation of (E, H). Directions are given in the λ frame of the
/// later event; the earlier event's λ axes are rotated by −δ.
struct ModeFieldPair {
    ElectromagneticField first;  ///< detector rest-frame fields at τ1
    ElectromagneticField second; ///< detector rest-frame fields at τ2
};

/// Both transverse polarizations of direction n (unit vector).
std::array<ModeFieldPair, 2> mode_fields(const Vec3& n, double delta, double beta);

/// ½ Σ_λ A_a(τ1; n, λ) B_b(τ2; n, λ), the polarization-averaged product.
double mode_component_product(const CFComponentSpec& spec, const Vec3& n, double delta,
                              double beta);

/// Component `index` (1..3) of E or H.
double field_component(const ElectromagneticField& f, FieldKind kind, int index);

/// Optical path difference X(n) = r[n_x(1 − cos δ) + n_y sin δ] − c·dt between
/// the two detector events for a wave travelling along n.
double mode_path_difference(const Vec3& n, double delta, double dt,
                            const RotationKinematics& kin);

/// n in the later λ frame from k̂ in the bisector frame used by the braces.
Vec3 bisector_to_lambda(const Vec3& khat, double delta) noexcept;

} // namespace rotvac
