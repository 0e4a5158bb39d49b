#include "vlcsim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vlcsim/error.hpp"
#include "vlcsim/optics.hpp"

namespace vlcsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerance when deciding whether a ceil() was forced by rounding noise,
// e.g. 7.0 / 0.1 = 70.00000000000001.
constexpr double kCountSlack = 1e-9;

int tile_count(double length, double patch_size) {
    return std::max(1, static_cast<int>(std::ceil(length / patch_size - kCountSlack)));
}

double angle_between(Vec3 axis, Vec3 ray, double len) {
    return std::acos(std::clamp(dot(axis, ray) / len, -1.0, 1.0));
}

std::size_t role_index(Role r) { return static_cast<std::size_t>(r); }

}  // namespace

std::vector<WallPatch> make_wall_patches(const Room& room, double patch_size) {
    const double limit = std::min({room.width, room.depth, room.height});
    if (!(patch_size > 0.0 && patch_size <= limit)) {
        throw DomainError("patch size must lie in (0, " + std::to_string(limit) + "]");
    }
    struct Wall {
        Vec3 origin;
        Vec3 along;  // unit vector along the wall
        double length;
        Vec3 normal;
    };
    const Wall walls[] = {
        {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, room.width, {0.0, 1.0, 0.0}},
        {{0.0, room.depth, 0.0}, {1.0, 0.0, 0.0}, room.width, {0.0, -1.0, 0.0}},
        {{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, room.depth, {1.0, 0.0, 0.0}},
        {{room.width, 0.0, 0.0}, {0.0, 1.0, 0.0}, room.depth, {-1.0, 0.0, 0.0}},
    };
    std::vector<WallPatch> patches;
    const int nh = tile_count(room.height, patch_size);
    const double dh = room.height / nh;
    for (const Wall& w : walls) {
        const int nl = tile_count(w.length, patch_size);
        const double dl = w.length / nl;
        for (int i = 0; i < nl; ++i) {
            for (int j = 0; j < nh; ++j) {
                const Vec3 c = w.origin + ((i + 0.5) * dl) * w.along + Vec3{0.0, 0.0, (j + 0.5) * dh};
                patches.push_back({c, w.normal, dl * dh});
            }
        }
    }
    return patches;
}

RayGeometry ray_geometry(Vec3 source, Vec3 source_axis, Vec3 target, Vec3 target_axis) {
    const Vec3 ray = target - source;
    const double d = norm(ray);
    if (!(d > 0.0)) throw DomainError("degenerate ray: source and target coincide");
    RayGeometry g;
    g.d = d;
    g.theta = angle_between(source_axis, ray, d);
    g.psi = angle_between(target_axis, source - target, d);
    g.visible = g.theta <= kPi / 2 && g.psi <= kPi / 2;
    return g;
}

RayGeometry reflection_geometry(Vec3 source, Vec3 source_axis, const WallPatch& patch, Vec3 target,
                                Vec3 target_axis) {
    const Vec3 in = patch.center - source;
    const Vec3 out = target - patch.center;
    const double d1 = norm(in);
    const double d2 = norm(out);
    if (!(d1 > 0.0) || !(d2 > 0.0)) throw DomainError("degenerate reflection ray");
    RayGeometry g;
    g.d1 = d1;
    g.d2 = d2;
    g.theta = angle_between(source_axis, in, d1);
    g.alpha = angle_between(patch.normal, source - patch.center, d1);
    g.beta = angle_between(patch.normal, out, d2);
    g.psi = angle_between(target_axis, patch.center - target, d2);
    g.visible = g.theta <= kPi / 2 && g.alpha <= kPi / 2 && g.beta <= kPi / 2 && g.psi <= kPi / 2;
    return g;
}

ChannelModel::ChannelModel(const Scene& scene, double patch_size)
    : ChannelModel(scene, make_wall_patches(scene.room, patch_size)) {}

ChannelModel::ChannelModel(const Scene& scene, std::vector<WallPatch> patches)
    : room_(scene.room),
      receiver_(scene.receiver),
      leds_(expand_leds(scene)),
      patches_(std::move(patches)) {
    for (auto& v : patch_gain_) v.assign(patches_.size(), 0.0);
    for (auto& v : patch_irradiance_) v.assign(patches_.size(), 0.0);
    patch_lux_.assign(patches_.size(), 0.0);
    if (room_.reflectivity == 0.0) return;

    for (std::size_t p = 0; p < patches_.size(); ++p) {
        const WallPatch& patch = patches_[p];
        for (const Led& led : leds_) {
            const Vec3 ray = patch.center - led.position;
            const double d1_sq = dot(ray, ray);
            const double d1 = std::sqrt(d1_sq);
            const double cos_theta = -ray.z / d1;
            const double cos_alpha = -dot(patch.normal, ray) / d1;
            if (cos_theta <= 0.0 || cos_alpha <= 0.0) continue;
            const double f = (led.order + 1.0) * std::pow(cos_theta, led.order) * cos_alpha /
                             (2.0 * kPi * d1_sq);
            const std::size_t r = role_index(led.role);
            patch_gain_[r][p] += f;
            patch_irradiance_[r][p] += led.power_w * f;
            patch_lux_[p] += led.flux_lm * f;
        }
    }
}

PointChannel ChannelModel::evaluate(PlanePoint point) const {
    constexpr double kEdge = 1e-9;
    if (point.x < -kEdge || point.x > room_.width + kEdge || point.y < -kEdge ||
        point.y > room_.depth + kEdge) {
        throw DomainError("receiver point outside the room footprint");
    }
    const Vec3 rx{point.x, point.y, room_.reference_plane_height};
    const double cos_fov = std::cos(receiver_.fov_rad());
    const double area_gain = receiver_.area_m2 * receiver_.gain;

    std::array<double, kRoles> h{};
    std::array<double, kRoles> p{};
    double lux = 0.0;

    for (const Led& led : leds_) {
        const Vec3 ray = rx - led.position;
        const double d_sq = dot(ray, ray);
        if (!(d_sq > 0.0)) continue;
        // Both axes are vertical, so the irradiance and incidence angles match.
        const double c = -ray.z / std::sqrt(d_sq);
        if (c <= 0.0) continue;
        const double shape = (led.order + 1.0) * std::pow(c, led.order) * c / (2.0 * kPi * d_sq);
        lux += led.flux_lm * shape;
        if (c < cos_fov) continue;
        const double gain = area_gain * shape;
        const std::size_t r = role_index(led.role);
        h[r] += gain;
        p[r] += led.power_w * gain;
    }

    if (room_.reflectivity > 0.0) {
        const double rho_over_pi = room_.reflectivity / kPi;
        for (std::size_t i = 0; i < patches_.size(); ++i) {
            const WallPatch& patch = patches_[i];
            const Vec3 ray = rx - patch.center;
            const double d2_sq = dot(ray, ray);
            const double d2 = std::sqrt(d2_sq);
            const double cos_beta = dot(patch.normal, ray) / d2;
            const double cos_psi = -ray.z / d2;
            if (cos_beta <= 0.0 || cos_psi <= 0.0) continue;
            const double geometric = rho_over_pi * patch.area * cos_beta * cos_psi / d2_sq;
            lux += geometric * patch_lux_[i];
            if (cos_psi < cos_fov) continue;
            const double f = geometric * area_gain;
            for (std::size_t r = 0; r < kRoles; ++r) {
                h[r] += f * patch_gain_[r][i];
                p[r] += f * patch_irradiance_[r][i];
            }
        }
    }

    PointChannel out;
    out.h_data = h[role_index(Role::legitimate)];
    out.h_rogue = h[role_index(Role::rogue)];
    out.p_data_opt = p[role_index(Role::legitimate)];
    out.p_rogue_opt = p[role_index(Role::rogue)];
    out.p_unmodulated_opt = p[role_index(Role::dark)];
    out.illuminance = lux;
    return out;
}

PointChannel point_channel(const Scene& scene, PlanePoint point, std::vector<WallPatch> patches) {
    return ChannelModel(scene, std::move(patches)).evaluate(point);
}

double illuminance(const Scene& scene, PlanePoint point, double patch_size) {
    return ChannelModel(scene, patch_size).evaluate(point).illuminance;
}

}  // namespace vlcsim
