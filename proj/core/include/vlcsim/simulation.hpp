#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vlcsim/propagation.hpp"
#include "vlcsim/scene.hpp"

namespace vlcsim {

/// Link quality at one cell center.
struct CellResult {
    double x = 0.0;
    double y = 0.0;
    double illuminance = 0.0;  // lx
    double p_data_w = 0.0;
    double p_rogue_w = 0.0;
    double snr_s = 0.0;
    double snr_r = 0.0;
    double ber_s = 0.0;
    double ber_r = 0.0;
};

/// Uniform grid of cell results over the reference plane. Cells are stored
/// row-major starting at (min x, min y); x varies fastest.
struct FieldMap {
    PlanePoint origin;
    double cell_size = 0.0;
    int nx = 0;
    int ny = 0;
    std::vector<CellResult> cells;

    const CellResult& at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * nx + ix]; }
};

struct SweepOptions {
    double cell_size = 0.1;
    double patch_size = 0.1;
    /// Worker threads; 0 uses the hardware concurrency. Output does not
    /// depend on this value.
    unsigned workers = 0;
};

/// Combines a point channel with the scene's receiver and signal parameters:
/// photocurrents R*mu*P, shot noise over all received light, SNR both ways
/// and M-PAM BER both ways.
CellResult link_budget(const Scene& scene, const PointChannel& channel, PlanePoint point);

/// Evaluates every cell center of the reference plane. Cells tile the
/// footprint from the origin corner; a partial last column/row is sampled at
/// the middle of its in-room part. Throws DomainError unless
/// 0 < cell_size <= min(width, depth).
FieldMap sweep(const Scene& scene, const SweepOptions& options = {});

/// Same as sweep() but reuses a prepared channel model.
FieldMap sweep(const Scene& scene, const ChannelModel& model, double cell_size, unsigned workers = 0);

struct Metrics {
    double ber_threshold = 1e-3;
    double jammed_fraction = 0.0;          // ber_s > threshold
    double legit_feasible_fraction = 0.0;  // ber_s <= threshold
    double rogue_feasible_fraction = 0.0;  // ber_r <= threshold
    double illuminance_min_lx = 0.0;
    double illuminance_mean_lx = 0.0;
    double illuminance_max_lx = 0.0;
    std::size_t cell_count = 0;
};

/// Area fractions as cell counts over the total. Throws DomainError unless
/// the threshold lies in (0, 0.5) or when the map is empty.
Metrics metrics(const FieldMap& map, double ber_threshold = 1e-3);

struct ConvergenceRow {
    double patch_size = 0.0;
    double h_data = 0.0;
    double h_rogue = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;  // coarse to fine
    /// Relative change between each row and the previous (coarser) one,
    /// the larger of the h_data and h_rogue changes; first entry is 0.
    std::vector<double> relative_deltas;
    double max_relative_delta = 0.0;
};

/// Evaluates the channel at one point for a ladder of wall discretizations.
/// Throws std::invalid_argument with fewer than two patch sizes.
ConvergenceReport convergence_report(const Scene& scene, PlanePoint point,
                                     std::span<const double> patch_sizes);

inline constexpr double kMinimumWorkPlaneLux = 300.0;

/// validate() plus a warning when the mean work-plane illuminance, sampled on
/// a coarse grid, falls below 300 lx. Skips the lighting pass when the scene
/// already has error-level violations.
std::vector<Violation> validate_with_lighting(const Scene& scene, double cell_size = 0.25,
                                              double patch_size = 0.1);

}  // namespace vlcsim
