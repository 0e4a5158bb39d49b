#pragma once

#include <cstdint>
#include <string>

#include "vlcsim/simulation.hpp"

namespace vlcsim::cli {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// field.csv contents: one row per cell in FieldMap order.
std::string field_csv(const FieldMap& map);

inline constexpr double kGrayBerFloor = 1e-8;
inline constexpr double kGrayDecades = 8.0;
inline constexpr double kGrayLuxCeiling = 1000.0;

/// round(255 * min(-log10(max(ber, 1e-8)), 8) / 8)
std::uint8_t ber_to_gray(double ber);

/// round(255 * min(lux, 1000) / 1000), negative values clamp to 0.
std::uint8_t lux_to_gray(double lux);

enum class PgmField { ber_s, ber_r, illuminance };

/// Binary P5 image, one pixel per cell, top row = largest y.
std::string field_pgm(const FieldMap& map, PgmField field, double ber_threshold);

struct RunSummary {
    std::string scene_id;
    double cell_size = 0.1;
    double patch_size = 0.1;
    double elapsed_seconds = 0.0;
};

std::string summary_json(const RunSummary& run, const Metrics& m);

}  // namespace vlcsim::cli
