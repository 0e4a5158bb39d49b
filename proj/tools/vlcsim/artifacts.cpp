#include "artifacts.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "json.hpp"

namespace vlcsim::cli {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf.data(), end);
}

std::string field_csv(const FieldMap& map) {
    std::string out = "x,y,illuminance_lx,p_data_w,p_rogue_w,snr_s,snr_r,ber_s,ber_r\n";
    out.reserve(out.size() + map.cells.size() * 160);
    for (const CellResult& c : map.cells) {
        for (double v : {c.x, c.y, c.illuminance, c.p_data_w, c.p_rogue_w, c.snr_s, c.snr_r, c.ber_s}) {
            out += format_double(v);
            out += ',';
        }
        out += format_double(c.ber_r);
        out += '\n';
    }
    return out;
}

std::uint8_t ber_to_gray(double ber) {
    const double decades = std::min(-std::log10(std::max(ber, kGrayBerFloor)), kGrayDecades);
    return static_cast<std::uint8_t>(std::lround(255.0 * std::max(decades, 0.0) / kGrayDecades));
}

std::uint8_t lux_to_gray(double lux) {
    const double v = std::clamp(lux, 0.0, kGrayLuxCeiling);
    return static_cast<std::uint8_t>(std::lround(255.0 * v / kGrayLuxCeiling));
}

std::string field_pgm(const FieldMap& map, PgmField field, double ber_threshold) {
    std::string out = "P5\n";
    if (field == PgmField::illuminance) {
        out += "# gray=round(255*min(lux,1000)/1000) threshold=" + format_double(ber_threshold) +
               " top_row=max_y\n";
    } else {
        out += "# gray=round(255*min(-log10(max(ber,1e-8)),8)/8) threshold=" +
               format_double(ber_threshold) + " top_row=max_y\n";
    }
    out += std::to_string(map.nx) + " " + std::to_string(map.ny) + "\n255\n";
    for (int iy = map.ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < map.nx; ++ix) {
            const CellResult& c = map.at(ix, iy);
            std::uint8_t g = 0;
            switch (field) {
                case PgmField::ber_s: g = ber_to_gray(c.ber_s); break;
                case PgmField::ber_r: g = ber_to_gray(c.ber_r); break;
                case PgmField::illuminance: g = lux_to_gray(c.illuminance); break;
            }
            out.push_back(static_cast<char>(g));
        }
    }
    return out;
}

std::string summary_json(const RunSummary& run, const Metrics& m) {
    nlohmann::ordered_json j;
    j["scene_id"] = run.scene_id;
    j["cell_size"] = run.cell_size;
    j["patch_size"] = run.patch_size;
    j["ber_threshold"] = m.ber_threshold;
    j["jammed_fraction"] = m.jammed_fraction;
    j["legit_feasible_fraction"] = m.legit_feasible_fraction;
    j["rogue_feasible_fraction"] = m.rogue_feasible_fraction;
    j["illuminance_min_lx"] = m.illuminance_min_lx;
    j["illuminance_mean_lx"] = m.illuminance_mean_lx;
    j["illuminance_max_lx"] = m.illuminance_max_lx;
    j["cell_count"] = m.cell_count;
    j["elapsed_seconds"] = run.elapsed_seconds;
    return j.dump(2) + "\n";
}

}  // namespace vlcsim::cli
