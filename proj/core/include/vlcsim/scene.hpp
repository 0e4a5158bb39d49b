#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vlcsim/geometry.hpp"
#include "vlcsim/optics.hpp"

namespace vlcsim {

struct Room {
    double width = 7.0;   // x extent
    double depth = 7.0;   // y extent
    double height = 2.8;  // z extent
    double reflectivity = 0.8;
    double reference_plane_height = 0.85;

    friend bool operator==(const Room&, const Room&) = default;
};

/// A luminaire model: a rectangular panel carrying a regular LED grid.
/// Rows run along y, columns along x.
struct LuminaireType {
    std::string name;
    double panel_w = 0.6;
    double panel_d = 0.6;
    int led_rows = 1;
    int led_cols = 1;
    double led_spacing_m = 0.1;
    double flux_lm = 1000.0;
    double semi_angle_deg = 60.0;

    int led_count() const { return led_rows * led_cols; }

    friend bool operator==(const LuminaireType&, const LuminaireType&) = default;
};

enum class Role { legitimate, rogue, dark };

std::string_view to_string(Role role);
/// Throws std::invalid_argument for an unknown role name.
Role role_from_string(std::string_view name);

struct Luminaire {
    double x = 0.0;
    double y = 0.0;
    double mount_height = 2.8;
    std::string type;
    Role role = Role::legitimate;

    friend bool operator==(const Luminaire&, const Luminaire&) = default;
};

struct Scene {
    Room room;
    std::vector<LuminaireType> luminaire_types;
    std::vector<Luminaire> luminaires;
    ReceiverSpec receiver;
    SignalParams signal;
    double luminous_efficacy_lm_per_w = 240.0;

    /// Throws std::out_of_range when the luminaire references an unknown type.
    const LuminaireType& type_of(const Luminaire& lum) const;

    friend bool operator==(const Scene&, const Scene&) = default;
};

/// One emitter after expanding luminaires into their LED grids.
struct Led {
    Vec3 position;
    double power_w = 0.0;  // optical
    double flux_lm = 0.0;
    double order = 1.0;    // Lambertian m
    double semi_angle_deg = 60.0;
    Role role = Role::legitimate;
    std::size_t luminaire = 0;
};

/// LED positions of a luminaire, centered on it at its mount height, row-major
/// from the lowest (y, x).
std::vector<Vec3> led_positions(const Luminaire& lum, const LuminaireType& type);

/// Every LED of the scene with its optical power (flux / efficacy / count).
std::vector<Led> expand_leds(const Scene& scene);

enum class Severity { warning, error };

struct Violation {
    Severity severity = Severity::error;
    std::string field;    // dotted path, e.g. "room.reflectivity"
    std::string message;
};

/// Checks every structural and range invariant of a scene. The lighting-level
/// warning needs a propagation pass and lives in simulation.hpp.
std::vector<Violation> validate(const Scene& scene);

bool has_errors(std::span<const Violation> violations);

/// Raised when a scene fails validation on load.
class SceneInvalidError : public std::runtime_error {
public:
    explicit SceneInvalidError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

// Presets reconstructing the office scenes: a 3x4 type-g grid (G1), a 2x4 grid
// with a row of three downlights (G2) and a 2x3 grid inside a ring of ten
// downlights (GC). Coordinates are derived from the published spacings, not
// measured; data/presets/ carries the same scenes as editable files.

struct PresetInfo {
    std::string_view id;
    std::string_view description;
};

std::span<const PresetInfo> preset_catalog();

/// Throws std::invalid_argument for an unknown preset id.
Scene build_preset(std::string_view id);

LuminaireType preset_type_g();
LuminaireType preset_type_d();

}  // namespace vlcsim
