#include "vlcsim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "vlcsim/error.hpp"
#include "vlcsim/optics.hpp"

namespace vlcsim {

namespace {

int cell_count(double length, double cell) {
    return std::max(1, static_cast<int>(std::ceil(length / cell - 1e-9)));
}

double cell_center(int i, double cell, double length) {
    const double c = (i + 0.5) * cell;
    if (c <= length) return c;
    return 0.5 * (i * cell + length);
}

double relative_change(double coarse, double fine) {
    if (coarse == fine) return 0.0;
    if (fine == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(coarse - fine) / std::abs(fine);
}

}  // namespace

CellResult link_budget(const Scene& scene, const PointChannel& channel, PlanePoint point) {
    const double gain = scene.receiver.responsivity_a_per_w * scene.signal.modulation_index;
    const double s_data = gain * channel.p_data_opt;
    const double s_rogue = gain * channel.p_rogue_opt;
    const double noise = shot_noise_variance(channel.total_power(), scene.signal, scene.receiver);
    const SnrPair snr = snr_pair(s_data, s_rogue, noise);

    CellResult c;
    c.x = point.x;
    c.y = point.y;
    c.illuminance = channel.illuminance;
    c.p_data_w = channel.p_data_opt;
    c.p_rogue_w = channel.p_rogue_opt;
    c.snr_s = snr.legitimate;
    c.snr_r = snr.rogue;
    c.ber_s = ber_pam(scene.signal.pam_order, snr.legitimate);
    c.ber_r = ber_pam(scene.signal.pam_order, snr.rogue);
    return c;
}

FieldMap sweep(const Scene& scene, const SweepOptions& options) {
    const ChannelModel model(scene, options.patch_size);
    return sweep(scene, model, options.cell_size, options.workers);
}

FieldMap sweep(const Scene& scene, const ChannelModel& model, double cell_size, unsigned workers) {
    const Room& room = scene.room;
    if (!(cell_size > 0.0 && cell_size <= std::min(room.width, room.depth))) {
        throw DomainError("cell size must lie in (0, min(room width, depth)]");
    }
    FieldMap map;
    map.origin = {0.0, 0.0};
    map.cell_size = cell_size;
    map.nx = cell_count(room.width, cell_size);
    map.ny = cell_count(room.depth, cell_size);
    map.cells.resize(static_cast<std::size_t>(map.nx) * map.ny);

    auto run_rows = [&](int first, int step) {
        for (int iy = first; iy < map.ny; iy += step) {
            const double y = cell_center(iy, cell_size, room.depth);
            for (int ix = 0; ix < map.nx; ++ix) {
                const PlanePoint pt{cell_center(ix, cell_size, room.width), y};
                map.cells[static_cast<std::size_t>(iy) * map.nx + ix] =
                    link_budget(scene, model.evaluate(pt), pt);
            }
        }
    };

    unsigned n = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(map.ny));
    if (n <= 1) {
        run_rows(0, 1);
        return map;
    }
    {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned w = 0; w < n; ++w) pool.emplace_back(run_rows, static_cast<int>(w), static_cast<int>(n));
    }
    return map;
}

Metrics metrics(const FieldMap& map, double ber_threshold) {
    if (!(ber_threshold > 0.0 && ber_threshold < 0.5)) {
        throw DomainError("BER threshold must lie in (0, 0.5)");
    }
    if (map.cells.empty()) throw DomainError("field map has no cells");
    Metrics m;
    m.ber_threshold = ber_threshold;
    m.cell_count = map.cells.size();
    std::size_t jammed = 0;
    std::size_t rogue_ok = 0;
    double lux_sum = 0.0;
    m.illuminance_min_lx = std::numeric_limits<double>::infinity();
    m.illuminance_max_lx = -std::numeric_limits<double>::infinity();
    for (const CellResult& c : map.cells) {
        if (c.ber_s > ber_threshold) ++jammed;
        if (c.ber_r <= ber_threshold) ++rogue_ok;
        lux_sum += c.illuminance;
        m.illuminance_min_lx = std::min(m.illuminance_min_lx, c.illuminance);
        m.illuminance_max_lx = std::max(m.illuminance_max_lx, c.illuminance);
    }
    const double total = static_cast<double>(m.cell_count);
    m.jammed_fraction = jammed / total;
    m.legit_feasible_fraction = (m.cell_count - jammed) / total;
    m.rogue_feasible_fraction = rogue_ok / total;
    m.illuminance_mean_lx = lux_sum / total;
    return m;
}

ConvergenceReport convergence_report(const Scene& scene, PlanePoint point,
                                     std::span<const double> patch_sizes) {
    if (patch_sizes.size() < 2) {
        throw std::invalid_argument("convergence report needs at least two patch sizes");
    }
    std::vector<double> sizes(patch_sizes.begin(), patch_sizes.end());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());

    ConvergenceReport report;
    for (double s : sizes) {
        const PointChannel ch = ChannelModel(scene, s).evaluate(point);
        report.rows.push_back({s, ch.h_data, ch.h_rogue});
    }
    report.relative_deltas.push_back(0.0);
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const ConvergenceRow& a = report.rows[i - 1];
        const ConvergenceRow& b = report.rows[i];
        const double d = std::max(relative_change(a.h_data, b.h_data), relative_change(a.h_rogue, b.h_rogue));
        report.relative_deltas.push_back(d);
        report.max_relative_delta = std::max(report.max_relative_delta, d);
    }
    return report;
}

std::vector<Violation> validate_with_lighting(const Scene& scene, double cell_size, double patch_size) {
    std::vector<Violation> out = validate(scene);
    if (has_errors(out)) return out;
    const double cell = std::min({cell_size, scene.room.width, scene.room.depth});
    const double patch = std::min({patch_size, scene.room.width, scene.room.depth, scene.room.height});
    const FieldMap map = sweep(scene, SweepOptions{cell, patch, 0});
    const Metrics m = metrics(map);
    if (m.illuminance_mean_lx < kMinimumWorkPlaneLux) {
        out.push_back({Severity::warning, "luminaires",
                       "mean work-plane illuminance " + std::to_string(m.illuminance_mean_lx) +
                           " lx is below 300 lx"});
    }
    return out;
}

}  // namespace vlcsim
