#include "vlcsim/scene_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

#include "vlcsim/error.hpp"

namespace vlcsim {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
    throw SceneFormatError("schema error at \"" + field + "\": " + what);
}

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

// Wraps one JSON object and tracks which members were consumed so leftovers
// can be reported as unknown.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) schema_error(path_.empty() ? "<document>" : path_, "expected an object");
    }

    const json& member(const std::string& key) {
        auto it = j_.find(key);
        if (it == j_.end()) schema_error(join(path_, key), "missing required member");
        seen_.push_back(key);
        return *it;
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    double number(const std::string& key) {
        const json& v = member(key);
        if (!v.is_number()) schema_error(join(path_, key), "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) schema_error(join(path_, key), "number must be finite");
        return d;
    }

    int integer(const std::string& key) {
        const json& v = member(key);
        if (!v.is_number_integer()) schema_error(join(path_, key), "expected an integer");
        const auto i = v.get<long long>();
        if (i < -1'000'000'000LL || i > 1'000'000'000LL) schema_error(join(path_, key), "integer out of range");
        return static_cast<int>(i);
    }

    std::string text(const std::string& key) {
        const json& v = member(key);
        if (!v.is_string()) schema_error(join(path_, key), "expected a string");
        return v.get<std::string>();
    }

    const json& array(const std::string& key) {
        const json& v = member(key);
        if (!v.is_array()) schema_error(join(path_, key), "expected an array");
        return v;
    }

    std::string path(const std::string& key) const { return join(path_, key); }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end()) {
                schema_error(join(path_, it.key()), "unknown member");
            }
        }
    }

private:
    const json& j_;
    std::string path_;
    std::vector<std::string> seen_;
};

Room read_room(const json& j) {
    ObjectReader r(j, "room");
    Room room;
    room.width = r.number("width");
    room.depth = r.number("depth");
    room.height = r.number("height");
    room.reflectivity = r.number("reflectivity");
    room.reference_plane_height = r.number("reference_plane_height");
    r.finish();
    return room;
}

ReceiverSpec read_receiver(const json& j) {
    ObjectReader r(j, "receiver");
    ReceiverSpec rx;
    rx.area_m2 = r.number("area_m2");
    rx.fov_deg = r.number("fov_deg");
    rx.gain = r.number("gain");
    rx.responsivity_a_per_w = r.number("responsivity_a_per_w");
    r.finish();
    return rx;
}

SignalParams read_signal(const json& j) {
    ObjectReader r(j, "signal");
    SignalParams s;
    s.pam_order = r.integer("pam_order");
    s.modulation_index = r.number("modulation_index");
    s.bandwidth_hz = r.number("bandwidth_hz");
    s.background_current_a = r.number("background_current_a");
    s.i2_factor = r.number("i2_factor");
    s.extra_noise_variance = r.has("extra_noise_variance") ? r.number("extra_noise_variance") : 0.0;
    r.finish();
    return s;
}

LuminaireType read_type(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    LuminaireType t;
    t.name = r.text("name");
    t.panel_w = r.number("panel_w");
    t.panel_d = r.number("panel_d");
    t.led_rows = r.integer("led_rows");
    t.led_cols = r.integer("led_cols");
    t.led_spacing_m = r.number("led_spacing_m");
    t.flux_lm = r.number("flux_lm");
    t.semi_angle_deg = r.number("semi_angle_deg");
    r.finish();
    return t;
}

Luminaire read_luminaire(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    Luminaire l;
    l.x = r.number("x");
    l.y = r.number("y");
    l.mount_height = r.number("mount_height");
    l.type = r.text("type");
    const std::string role = r.text("role");
    try {
        l.role = role_from_string(role);
    } catch (const std::invalid_argument&) {
        schema_error(r.path("role"), "expected one of legitimate, rogue, dark; got \"" + role + "\"");
    }
    r.finish();
    return l;
}

std::string locate(std::string_view doc, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, doc.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (doc[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string save_scene(const Scene& scene) {
    json doc;
    const Room& room = scene.room;
    doc["room"] = {{"width", room.width},
                   {"depth", room.depth},
                   {"height", room.height},
                   {"reflectivity", room.reflectivity},
                   {"reference_plane_height", room.reference_plane_height}};
    const ReceiverSpec& rx = scene.receiver;
    doc["receiver"] = {{"area_m2", rx.area_m2},
                       {"fov_deg", rx.fov_deg},
                       {"gain", rx.gain},
                       {"responsivity_a_per_w", rx.responsivity_a_per_w}};
    const SignalParams& sig = scene.signal;
    doc["signal"] = {{"pam_order", sig.pam_order},
                     {"modulation_index", sig.modulation_index},
                     {"bandwidth_hz", sig.bandwidth_hz},
                     {"background_current_a", sig.background_current_a},
                     {"i2_factor", sig.i2_factor},
                     {"extra_noise_variance", sig.extra_noise_variance}};
    doc["luminous_efficacy_lm_per_w"] = scene.luminous_efficacy_lm_per_w;
    json types = json::array();
    for (const LuminaireType& t : scene.luminaire_types) {
        types.push_back({{"name", t.name},
                         {"panel_w", t.panel_w},
                         {"panel_d", t.panel_d},
                         {"led_rows", t.led_rows},
                         {"led_cols", t.led_cols},
                         {"led_spacing_m", t.led_spacing_m},
                         {"flux_lm", t.flux_lm},
                         {"semi_angle_deg", t.semi_angle_deg}});
    }
    doc["luminaire_types"] = std::move(types);
    json lums = json::array();
    for (const Luminaire& l : scene.luminaires) {
        lums.push_back({{"x", l.x},
                        {"y", l.y},
                        {"mount_height", l.mount_height},
                        {"type", l.type},
                        {"role", std::string(to_string(l.role))}});
    }
    doc["luminaires"] = std::move(lums);
    return doc.dump(2) + "\n";
}

Scene parse_scene(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        throw SceneFormatError("parse error at " + locate(document, e.byte) + ": " + e.what());
    } catch (const json::out_of_range& e) {
        // Number literals that overflow a double.
        throw SceneFormatError(std::string("number out of range: ") + e.what());
    }
    ObjectReader r(doc, "");
    Scene scene;
    scene.room = read_room(r.member("room"));
    scene.receiver = read_receiver(r.member("receiver"));
    scene.signal = read_signal(r.member("signal"));
    scene.luminous_efficacy_lm_per_w = r.number("luminous_efficacy_lm_per_w");
    const json& types = r.array("luminaire_types");
    for (std::size_t i = 0; i < types.size(); ++i) {
        scene.luminaire_types.push_back(read_type(types[i], "luminaire_types[" + std::to_string(i) + "]"));
    }
    const json& lums = r.array("luminaires");
    for (std::size_t i = 0; i < lums.size(); ++i) {
        scene.luminaires.push_back(read_luminaire(lums[i], "luminaires[" + std::to_string(i) + "]"));
    }
    r.finish();
    return scene;
}

Scene load_scene(std::string_view document) {
    Scene scene = parse_scene(document);
    auto violations = validate(scene);
    if (has_errors(violations)) throw SceneInvalidError(std::move(violations));
    return scene;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error reading " + path.string());
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace vlcsim
