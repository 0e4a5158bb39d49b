#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vlcsim/geometry.hpp"

namespace vlcsim::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidScene = 2,
    kIoFailure = 3,
};

/// Where a scene comes from: exactly one of preset / scene_file is set.
struct SceneSource {
    std::string preset;
    std::filesystem::path scene_file;
};

struct RunConfig {
    SceneSource source;
    double cell_size = 0.1;
    double patch_size = 0.1;
    double ber_threshold = 1e-3;
    std::filesystem::path out_dir = ".";
    bool write_csv = true;
    bool write_pgm = true;
    bool write_json = true;
    unsigned workers = 0;  // 0 = hardware concurrency
};

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_presets(std::ostream& out);
int cmd_validate(const std::filesystem::path& file, std::ostream& out, std::ostream& err);
int cmd_convergence(const SceneSource& source, PlanePoint point, const std::vector<double>& patch_sizes,
                    std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlcsim::cli
