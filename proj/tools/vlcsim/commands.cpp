#include "commands.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "artifacts.hpp"
#include "vlcsim/error.hpp"
#include "vlcsim/scene_io.hpp"
#include "vlcsim/simulation.hpp"

namespace vlcsim::cli {

namespace {

struct Loaded {
    Scene scene;
    std::string id;
};

// Resolves a scene source, reporting failures on `err`. Returns the exit code
// to use on failure, or kOk.
int load_source(const SceneSource& source, Loaded& loaded, std::ostream& err) {
    if (!source.preset.empty()) {
        try {
            loaded.scene = build_preset(source.preset);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
        loaded.id = source.preset;
        return kOk;
    }
    std::string text;
    try {
        text = read_text_file(source.scene_file);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIoFailure;
    }
    try {
        loaded.scene = load_scene(text);
    } catch (const SceneInvalidError& e) {
        err << "error: invalid scene " << source.scene_file.string() << "\n";
        for (const Violation& v : e.violations()) err << "  " << v.field << ": " << v.message << "\n";
        return kInvalidScene;
    } catch (const SceneFormatError& e) {
        err << "error: " << source.scene_file.string() << ": " << e.what() << "\n";
        return kInvalidScene;
    }
    loaded.id = source.scene_file.stem().string();
    return kOk;
}

void print_metrics(std::ostream& out, const std::string& id, const Metrics& m) {
    out << "scene " << id << " (" << m.cell_count << " cells, BER threshold " << m.ber_threshold << ")\n"
        << std::fixed << std::setprecision(4) << "  jammed_fraction          " << m.jammed_fraction << "\n"
        << "  legit_feasible_fraction  " << m.legit_feasible_fraction << "\n"
        << "  rogue_feasible_fraction  " << m.rogue_feasible_fraction << "\n"
        << std::setprecision(1) << "  illuminance min/mean/max " << m.illuminance_min_lx << " / "
        << m.illuminance_mean_lx << " / " << m.illuminance_max_lx << " lx\n";
    out.unsetf(std::ios::floatfield);
    out << std::setprecision(6);
}

}  // namespace

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!(config.cell_size > 0.0) || !(config.patch_size > 0.0)) {
        err << "error: --cell and --patch must be positive\n";
        return kUsage;
    }
    if (!(config.ber_threshold > 0.0 && config.ber_threshold < 0.5)) {
        err << "error: --threshold must lie in (0, 0.5)\n";
        return kUsage;
    }
    if (!config.write_csv && !config.write_pgm && !config.write_json) {
        err << "error: --formats selects no output\n";
        return kUsage;
    }
    Loaded loaded;
    if (int rc = load_source(config.source, loaded, err); rc != kOk) return rc;

    const auto start = std::chrono::steady_clock::now();
    FieldMap map;
    Metrics m;
    try {
        map = sweep(loaded.scene, SweepOptions{config.cell_size, config.patch_size, config.workers});
        m = metrics(map, config.ber_threshold);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    try {
        std::filesystem::create_directories(config.out_dir);
        const auto& dir = config.out_dir;
        if (config.write_csv) write_text_file(dir / "field.csv", field_csv(map));
        if (config.write_pgm) {
            write_text_file(dir / "ber_s.pgm", field_pgm(map, PgmField::ber_s, config.ber_threshold));
            write_text_file(dir / "ber_r.pgm", field_pgm(map, PgmField::ber_r, config.ber_threshold));
            write_text_file(dir / "illuminance.pgm",
                            field_pgm(map, PgmField::illuminance, config.ber_threshold));
        }
        if (config.write_json) {
            write_text_file(dir / "summary.json",
                            summary_json({loaded.id, config.cell_size, config.patch_size, elapsed}, m));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIoFailure;
    }
    print_metrics(out, loaded.id, m);
    return kOk;
}

int cmd_presets(std::ostream& out) {
    for (const PresetInfo& p : preset_catalog()) {
        out << std::left << std::setw(15) << p.id << " " << p.description << "\n";
    }
    return kOk;
}

int cmd_validate(const std::filesystem::path& file, std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        text = read_text_file(file);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIoFailure;
    }
    Scene scene;
    try {
        scene = parse_scene(text);
    } catch (const SceneFormatError& e) {
        out << file.string() << ": " << e.what() << "\n";
        return kInvalidScene;
    }
    const auto violations = validate_with_lighting(scene);
    for (const Violation& v : violations) {
        out << (v.severity == Severity::error ? "error" : "warning") << ": " << v.field << ": "
            << v.message << "\n";
    }
    if (has_errors(violations)) return kInvalidScene;
    out << file.string() << ": ok\n";
    return kOk;
}

int cmd_convergence(const SceneSource& source, PlanePoint point, const std::vector<double>& patch_sizes,
                    std::ostream& out, std::ostream& err) {
    Loaded loaded;
    if (int rc = load_source(source, loaded, err); rc != kOk) return rc;
    ConvergenceReport report;
    try {
        report = convergence_report(loaded.scene, point, patch_sizes);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    out << "patch_size,h_data,h_rogue,relative_delta\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const ConvergenceRow& r = report.rows[i];
        out << format_double(r.patch_size) << "," << format_double(r.h_data) << ","
            << format_double(r.h_rogue) << "," << format_double(report.relative_deltas[i]) << "\n";
    }
    out << "max_relative_delta " << format_double(report.max_relative_delta) << "\n";
    return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Indoor VLC rogue-transmitter field simulator", "vlcsim"};
    app.require_subcommand(1);

    RunConfig config;
    std::string formats = "csv,pgm,json";
    std::string scene_file;
    auto* simulate = app.add_subcommand("simulate", "Sweep the work plane and write field artifacts");
    auto* sim_src = simulate->add_option_group("source");
    sim_src->add_option("--preset", config.source.preset, "Preset scene id (see `vlcsim presets`)");
    sim_src->add_option("--scene", scene_file, "Scene JSON file");
    sim_src->require_option(1);
    simulate->add_option("--cell", config.cell_size, "Grid cell size in meters")->capture_default_str();
    simulate->add_option("--patch", config.patch_size, "Wall patch size in meters")->capture_default_str();
    simulate->add_option("--threshold", config.ber_threshold, "BER threshold")->capture_default_str();
    simulate->add_option("--formats", formats, "Comma-separated subset of csv,pgm,json")->capture_default_str();
    simulate->add_option("--out", config.out_dir, "Output directory")->capture_default_str();
    simulate->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);

    std::string export_dir;
    auto* presets = app.add_subcommand("presets", "List the built-in preset scenes");
    presets->add_option("--export", export_dir, "Also write each preset as <id>.json into this directory");

    std::string validate_file;
    auto* validate_cmd = app.add_subcommand("validate", "Check a scene file");
    validate_cmd->add_option("file", validate_file, "Scene JSON file")->required();

    SceneSource conv_source;
    std::string conv_scene;
    std::vector<double> point;
    std::vector<double> patches;
    auto* convergence = app.add_subcommand("convergence", "Wall-discretization refinement table at one point");
    auto* conv_src = convergence->add_option_group("source");
    conv_src->add_option("--preset", conv_source.preset, "Preset scene id");
    conv_src->add_option("--scene", conv_scene, "Scene JSON file");
    conv_src->require_option(1);
    convergence->add_option("--point", point, "Receiver position X,Y")->delimiter(',')->expected(2)->required();
    convergence->add_option("--patches", patches, "Patch sizes, e.g. 0.2,0.1,0.05")
        ->delimiter(',')
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (simulate->parsed()) {
        config.source.scene_file = scene_file;
        config.write_csv = config.write_pgm = config.write_json = false;
        std::stringstream ss(formats);
        std::string f;
        while (std::getline(ss, f, ',')) {
            if (f == "csv") config.write_csv = true;
            else if (f == "pgm") config.write_pgm = true;
            else if (f == "json") config.write_json = true;
            else {
                err << "error: unknown format '" << f << "' (expected csv, pgm, json)\n";
                return kUsage;
            }
        }
        return cmd_simulate(config, out, err);
    }
    if (validate_cmd->parsed()) return cmd_validate(validate_file, out, err);
    if (convergence->parsed()) {
        conv_source.scene_file = conv_scene;
        return cmd_convergence(conv_source, {point[0], point[1]}, patches, out, err);
    }
    if (!export_dir.empty()) {
        try {
            std::filesystem::create_directories(export_dir);
            for (const PresetInfo& p : preset_catalog()) {
                write_text_file(std::filesystem::path(export_dir) / (std::string(p.id) + ".json"),
                                save_scene(build_preset(p.id)));
            }
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kIoFailure;
        }
    }
    return cmd_presets(out);
}

}  // namespace vlcsim::cli
