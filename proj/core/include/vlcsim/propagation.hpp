#pragma once

#include <array>
#include <span>
#include <vector>

#include "vlcsim/geometry.hpp"
#include "vlcsim/scene.hpp"

namespace vlcsim {

/// A diffusely reflecting wall element. `normal` points into the room.
struct WallPatch {
    Vec3 center;
    Vec3 normal;
    double area = 0.0;
};

/// Tiles the four walls (floor to ceiling) with rectangles no larger than
/// patch_size on either side. Throws DomainError unless
/// 0 < patch_size <= min(width, depth, height).
std::vector<WallPatch> make_wall_patches(const Room& room, double patch_size);

/// Angles and distances of a direct or first-bounce ray. Direct rays fill
/// theta, psi and d; first-bounce rays fill theta, alpha, beta, psi, d1, d2.
struct RayGeometry {
    double theta = 0.0;  ///< irradiance angle at the source
    double psi = 0.0;    ///< incidence angle at the receiver
    double alpha = 0.0;  ///< incidence angle on the wall element
    double beta = 0.0;   ///< emission angle from the wall element
    double d = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    /// False when any angle exceeds pi/2, i.e. the ray leaves a surface from
    /// behind; such rays carry no power.
    bool visible = true;
};

/// Direct ray from a source with unit axis to a target with unit axis.
/// Throws DomainError for a zero-length ray.
RayGeometry ray_geometry(Vec3 source, Vec3 source_axis, Vec3 target, Vec3 target_axis);

/// Source -> wall element -> target geometry.
RayGeometry reflection_geometry(Vec3 source, Vec3 source_axis, const WallPatch& patch, Vec3 target,
                                Vec3 target_axis);

inline constexpr Vec3 kDown{0.0, 0.0, -1.0};
inline constexpr Vec3 kUp{0.0, 0.0, 1.0};

/// Channel at one receiver position, direct plus first wall bounce.
struct PointChannel {
    double h_data = 0.0;   ///< summed gain over legitimate LEDs
    double h_rogue = 0.0;  ///< summed gain over rogue LEDs
    double p_data_opt = 0.0;
    double p_rogue_opt = 0.0;
    double p_unmodulated_opt = 0.0;  ///< light from "dark" luminaires
    double illuminance = 0.0;        ///< lx, all luminaires

    /// Optical power that drives shot noise.
    double total_power() const { return p_data_opt + p_rogue_opt + p_unmodulated_opt; }
};

/// Scene prepared for repeated point queries. Construction expands the LEDs
/// and accumulates, for every wall element, the irradiance it receives from
/// each role; a query then costs one pass over the LEDs and one over the
/// wall elements. Immutable after construction and safe to share between
/// threads.
class ChannelModel {
public:
    ChannelModel(const Scene& scene, double patch_size);
    ChannelModel(const Scene& scene, std::vector<WallPatch> patches);

    /// Throws DomainError when the point lies outside the room footprint.
    PointChannel evaluate(PlanePoint point) const;

    const std::vector<WallPatch>& patches() const { return patches_; }
    const std::vector<Led>& leds() const { return leds_; }

private:
    static constexpr std::size_t kRoles = 3;

    Room room_;
    ReceiverSpec receiver_;
    std::vector<Led> leds_;
    std::vector<WallPatch> patches_;
    // Per wall element, indexed by Role: sum of source factors (per watt),
    // power-weighted sum (W/m^2), and flux-weighted sum for illuminance.
    std::array<std::vector<double>, kRoles> patch_gain_;
    std::array<std::vector<double>, kRoles> patch_irradiance_;
    std::vector<double> patch_lux_;
};

/// One-shot convenience wrapper around ChannelModel.
PointChannel point_channel(const Scene& scene, PlanePoint point, std::vector<WallPatch> patches);

/// Work-plane illuminance (lx) including the first wall bounce.
double illuminance(const Scene& scene, PlanePoint point, double patch_size = 0.1);

}  // namespace vlcsim
