#include "vlcsim/scene.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

namespace vlcsim {

std::string_view to_string(Role role) {
    switch (role) {
        case Role::legitimate: return "legitimate";
        case Role::rogue: return "rogue";
        case Role::dark: return "dark";
    }
    return "legitimate";
}

Role role_from_string(std::string_view name) {
    if (name == "legitimate") return Role::legitimate;
    if (name == "rogue") return Role::rogue;
    if (name == "dark") return Role::dark;
    throw std::invalid_argument("unknown luminaire role '" + std::string(name) + "'");
}

const LuminaireType& Scene::type_of(const Luminaire& lum) const {
    auto it = std::find_if(luminaire_types.begin(), luminaire_types.end(),
                           [&](const LuminaireType& t) { return t.name == lum.type; });
    if (it == luminaire_types.end()) {
        throw std::out_of_range("unknown luminaire type '" + lum.type + "'");
    }
    return *it;
}

std::vector<Vec3> led_positions(const Luminaire& lum, const LuminaireType& type) {
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(std::max(type.led_count(), 0)));
    const double x0 = -0.5 * (type.led_cols - 1) * type.led_spacing_m;
    const double y0 = -0.5 * (type.led_rows - 1) * type.led_spacing_m;
    for (int r = 0; r < type.led_rows; ++r) {
        for (int c = 0; c < type.led_cols; ++c) {
            out.push_back({lum.x + x0 + c * type.led_spacing_m,
                           lum.y + y0 + r * type.led_spacing_m, lum.mount_height});
        }
    }
    return out;
}

std::vector<Led> expand_leds(const Scene& scene) {
    std::vector<Led> leds;
    for (std::size_t i = 0; i < scene.luminaires.size(); ++i) {
        const Luminaire& lum = scene.luminaires[i];
        const LuminaireType& type = scene.type_of(lum);
        const double flux = type.flux_lm / type.led_count();
        const double order = lambertian_order(type.semi_angle_deg);
        for (const Vec3& p : led_positions(lum, type)) {
            leds.push_back({p, flux / scene.luminous_efficacy_lm_per_w, flux, order,
                            type.semi_angle_deg, lum.role, i});
        }
    }
    return leds;
}

namespace {

class Checker {
public:
    void error(std::string field, std::string message) {
        out_.push_back({Severity::error, std::move(field), std::move(message)});
    }
    void positive(double v, const std::string& field) {
        if (!(v > 0.0) || !std::isfinite(v)) error(field, "must be a positive finite number");
    }
    void in_range(double v, double lo, double hi, const std::string& field) {
        if (!(v >= lo && v <= hi)) {
            error(field, "must lie in [" + fmt(lo) + ", " + fmt(hi) + "], got " + fmt(v));
        }
    }
    static std::string fmt(double v) {
        std::string s = std::to_string(v);
        while (s.size() > 1 && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    }
    std::vector<Violation> take() { return std::move(out_); }

private:
    std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate(const Scene& scene) {
    Checker c;
    const Room& room = scene.room;
    c.positive(room.width, "room.width");
    c.positive(room.depth, "room.depth");
    c.positive(room.height, "room.height");
    c.in_range(room.reflectivity, 0.0, 1.0, "room.reflectivity");
    if (!(room.reference_plane_height >= 0.0 && room.reference_plane_height < room.height)) {
        c.error("room.reference_plane_height", "must lie in [0, room height)");
    }

    const ReceiverSpec& rx = scene.receiver;
    c.positive(rx.area_m2, "receiver.area_m2");
    if (!(rx.fov_deg > 0.0 && rx.fov_deg <= 90.0)) c.error("receiver.fov_deg", "must lie in (0, 90]");
    if (!(rx.gain >= 1.0) || !std::isfinite(rx.gain)) c.error("receiver.gain", "must be >= 1");
    c.positive(rx.responsivity_a_per_w, "receiver.responsivity_a_per_w");

    const SignalParams& sig = scene.signal;
    if (sig.pam_order < 2 || !is_power_of_two(sig.pam_order)) {
        c.error("signal.pam_order", "must be a power of two >= 2");
    }
    if (!(sig.modulation_index > 0.0 && sig.modulation_index <= 1.0)) {
        c.error("signal.modulation_index", "must lie in (0, 1]");
    }
    c.positive(sig.bandwidth_hz, "signal.bandwidth_hz");
    if (!(sig.background_current_a >= 0.0) || !std::isfinite(sig.background_current_a)) {
        c.error("signal.background_current_a", "must be >= 0");
    }
    if (!(sig.i2_factor >= 0.0) || !std::isfinite(sig.i2_factor)) {
        c.error("signal.i2_factor", "must be >= 0");
    }
    if (!(sig.extra_noise_variance >= 0.0) || !std::isfinite(sig.extra_noise_variance)) {
        c.error("signal.extra_noise_variance", "must be >= 0");
    }
    c.positive(sig.electron_charge, "signal.electron_charge");
    const double floor = 2.0 * sig.electron_charge * sig.background_current_a * sig.i2_factor *
                             sig.bandwidth_hz +
                         sig.extra_noise_variance;
    if (!(floor > 0.0)) {
        c.error("signal.background_current_a",
                "noise floor is zero; need background current or extra noise variance");
    }
    c.positive(scene.luminous_efficacy_lm_per_w, "luminous_efficacy_lm_per_w");

    std::set<std::string> names;
    for (std::size_t i = 0; i < scene.luminaire_types.size(); ++i) {
        const LuminaireType& t = scene.luminaire_types[i];
        const std::string f = "luminaire_types[" + std::to_string(i) + "]";
        if (t.name.empty()) c.error(f + ".name", "must not be empty");
        if (!names.insert(t.name).second) c.error(f + ".name", "duplicate type name '" + t.name + "'");
        c.positive(t.panel_w, f + ".panel_w");
        c.positive(t.panel_d, f + ".panel_d");
        if (t.led_rows < 1 || t.led_cols < 1) c.error(f + ".led_rows", "LED grid needs at least one LED");
        if (!(t.led_spacing_m >= 0.0)) c.error(f + ".led_spacing_m", "must be >= 0");
        if ((t.led_rows > 1 || t.led_cols > 1) && !(t.led_spacing_m > 0.0)) {
            c.error(f + ".led_spacing_m", "must be positive for a multi-LED grid");
        }
        c.positive(t.flux_lm, f + ".flux_lm");
        if (!(t.semi_angle_deg > 0.0 && t.semi_angle_deg < 90.0)) {
            c.error(f + ".semi_angle_deg", "must lie in (0, 90)");
        }
        constexpr double kTol = 1e-9;
        if ((t.led_cols - 1) * t.led_spacing_m > t.panel_w + kTol ||
            (t.led_rows - 1) * t.led_spacing_m > t.panel_d + kTol) {
            c.error(f + ".led_spacing_m", "LED grid does not fit within the panel");
        }
    }

    bool any_legitimate = false;
    for (std::size_t i = 0; i < scene.luminaires.size(); ++i) {
        const Luminaire& lum = scene.luminaires[i];
        const std::string f = "luminaires[" + std::to_string(i) + "]";
        if (lum.role == Role::legitimate) any_legitimate = true;
        if (!(lum.x >= 0.0 && lum.x <= room.width)) c.error(f + ".x", "luminaire center outside the room footprint");
        if (!(lum.y >= 0.0 && lum.y <= room.depth)) c.error(f + ".y", "luminaire center outside the room footprint");
        if (!(lum.mount_height > room.reference_plane_height && lum.mount_height <= room.height)) {
            c.error(f + ".mount_height", "must lie above the reference plane and not above the ceiling");
        }
        if (!names.contains(lum.type)) {
            c.error(f + ".type", "unknown luminaire type '" + lum.type + "'");
            continue;
        }
        const LuminaireType& t = scene.type_of(lum);
        if (t.led_rows < 1 || t.led_cols < 1) continue;
        for (const Vec3& p : led_positions(lum, t)) {
            if (p.x < 0.0 || p.x > room.width || p.y < 0.0 || p.y > room.depth) {
                c.error(f, "LED grid extends outside the room");
                break;
            }
        }
    }
    if (!any_legitimate) c.error("luminaires", "scene needs at least one legitimate luminaire");
    return c.take();
}

bool has_errors(std::span<const Violation> violations) {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.severity == Severity::error; });
}

namespace {

std::string summarize(const std::vector<Violation>& v) {
    std::string s = "scene has " + std::to_string(v.size()) + " violation(s)";
    if (!v.empty()) s += ": " + v.front().field + ": " + v.front().message;
    return s;
}

}  // namespace

SceneInvalidError::SceneInvalidError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

// ---------------------------------------------------------------------------
// Presets

LuminaireType preset_type_g() {
    return {"g", 0.6, 0.6, 6, 6, 0.10, 2000.0, 70.0};
}

LuminaireType preset_type_d() {
    return {"d", 0.2, 0.2, 3, 3, 0.05, 1600.0, 30.0};
}

namespace {

constexpr std::array<PresetInfo, 7> kPresets{{
    {"g1_central", "G1: 3x4 type-g grid, one rogue panel near the room center"},
    {"g1_peripheral", "G1: 3x4 type-g grid, one rogue panel in an outer row"},
    {"g2_one", "G2: 2x4 type-g grid + row of 3 downlights, middle downlight rogue"},
    {"g2_three", "G2: 2x4 type-g grid + row of 3 downlights, all downlights rogue"},
    {"g2_one_wide45", "G2 one-rogue with downlight semi-angle widened to 45 deg"},
    {"gc_half", "GC: 2x3 type-g grid inside a ring of 10 downlights, 5 rogue"},
    {"gc_full", "GC: 2x3 type-g grid inside a ring of 10 downlights, all rogue"},
}};

double mm(double v) { return std::round(v * 1000.0) / 1000.0; }

Scene base_scene() {
    Scene s;
    s.room = Room{};
    s.receiver = ReceiverSpec{};
    s.signal = SignalParams{};
    s.luminous_efficacy_lm_per_w = 240.0;
    return s;
}

Scene g1(bool peripheral) {
    Scene s = base_scene();
    s.luminaire_types = {preset_type_g()};
    // Row-major from the lowest y: g7 is row 2 / column 3, g10 row 3 / column 2.
    const std::array xs{0.8, 2.6, 4.4, 6.2};
    const std::array ys{2.0, 3.5, 5.0};
    const std::size_t rogue = peripheral ? 9 : 6;
    for (double y : ys) {
        for (double x : xs) {
            const Role role = s.luminaires.size() == rogue ? Role::rogue : Role::legitimate;
            s.luminaires.push_back({x, y, s.room.height, "g", role});
        }
    }
    return s;
}

Scene g2(int rogue_downlights, double downlight_semi_angle) {
    Scene s = base_scene();
    LuminaireType d = preset_type_d();
    d.semi_angle_deg = downlight_semi_angle;
    s.luminaire_types = {preset_type_g(), d};
    for (double y : {1.4, 3.2}) {
        for (double x : {1.25, 2.75, 4.25, 5.75}) {
            s.luminaires.push_back({x, y, s.room.height, "g", Role::legitimate});
        }
    }
    const std::array dxs{1.7, 3.5, 5.3};
    for (std::size_t i = 0; i < dxs.size(); ++i) {
        const bool rogue = rogue_downlights == 3 || (rogue_downlights == 1 && i == 1);
        s.luminaires.push_back({dxs[i], 5.0, s.room.height, "d", rogue ? Role::rogue : Role::legitimate});
    }
    return s;
}

Scene gc(int rogue_downlights) {
    Scene s = base_scene();
    s.luminaire_types = {preset_type_g(), preset_type_d()};
    for (double y : {1.7, 3.5, 5.3}) {
        for (double x : {2.3, 4.7}) {
            s.luminaires.push_back({x, y, s.room.height, "g", Role::legitimate});
        }
    }
    constexpr double kRadius = 3.2;
    constexpr double kPhaseDeg = 18.0;
    const double cx = s.room.width / 2.0;
    const double cy = s.room.depth / 2.0;
    for (int k = 0; k < 10; ++k) {
        const double a = deg_to_rad(kPhaseDeg + 36.0 * k);
        const Role role = k < rogue_downlights ? Role::rogue : Role::legitimate;
        s.luminaires.push_back(
            {mm(cx + kRadius * std::cos(a)), mm(cy + kRadius * std::sin(a)), s.room.height, "d", role});
    }
    return s;
}

}  // namespace

std::span<const PresetInfo> preset_catalog() { return kPresets; }

Scene build_preset(std::string_view id) {
    if (id == "g1_central") return g1(false);
    if (id == "g1_peripheral") return g1(true);
    if (id == "g2_one") return g2(1, 30.0);
    if (id == "g2_three") return g2(3, 30.0);
    if (id == "g2_one_wide45") return g2(1, 45.0);
    if (id == "gc_half") return gc(5);
    if (id == "gc_full") return gc(10);
    std::string msg = "unknown preset '" + std::string(id) + "'; valid presets:";
    for (const PresetInfo& p : kPresets) msg += " " + std::string(p.id);
    throw std::invalid_argument(msg);
}

}  // namespace vlcsim
