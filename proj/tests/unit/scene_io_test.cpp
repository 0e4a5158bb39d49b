#include <gtest/gtest.h>

#include <filesystem>

#include "vlcsim/error.hpp"
#include "vlcsim/scene_io.hpp"

namespace vlcsim {
namespace {

std::string expect_format_error(const std::string& doc) {
    try {
        parse_scene(doc);
    } catch (const SceneFormatError& e) {
        return e.what();
    }
    ADD_FAILURE() << "expected SceneFormatError";
    return {};
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
    const auto pos = s.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    if (pos != std::string::npos) s.replace(pos, from.size(), to);
    return s;
}

TEST(SceneIo, RoundTripIsIdentityOnAllPresets) {
    for (const PresetInfo& p : preset_catalog()) {
        const Scene s = build_preset(p.id);
        const std::string text = save_scene(s);
        EXPECT_EQ(load_scene(text), s) << p.id;
        EXPECT_EQ(save_scene(load_scene(text)), text) << p.id;
    }
}

TEST(SceneIo, ShippedPresetFilesMatchBuilders) {
    for (const PresetInfo& p : preset_catalog()) {
        const auto path = std::filesystem::path(VLCSIM_PRESET_DIR) / (std::string(p.id) + ".json");
        ASSERT_TRUE(std::filesystem::exists(path)) << path;
        EXPECT_EQ(load_scene(read_text_file(path)), build_preset(p.id)) << p.id;
    }
}

TEST(SceneIo, TableOneRoom) {
    Scene s = build_preset("g1_central");
    const Scene parsed = parse_scene(save_scene(s));
    EXPECT_EQ(parsed.room.width, 7.0);
    EXPECT_EQ(parsed.room.depth, 7.0);
    EXPECT_EQ(parsed.room.height, 2.8);
    EXPECT_EQ(parsed.room.reflectivity, 0.8);
    EXPECT_EQ(parsed.room.reference_plane_height, 0.85);
    EXPECT_EQ(parsed.receiver.fov_deg, 60.0);
    EXPECT_EQ(parsed.receiver.area_m2, 1e-4);
    EXPECT_EQ(parsed.receiver.gain, 4.5);
}

TEST(SceneIo, MissingRoomNamesField) {
    const std::string doc = R"({"receiver": {}, "signal": {}})";
    const std::string msg = expect_format_error(doc);
    EXPECT_NE(msg.find("\"room\""), std::string::npos) << msg;
}

TEST(SceneIo, MissingNestedMemberNamesPath) {
    const std::string doc = replace(save_scene(build_preset("g1_central")), "\"gain\": 4.5,", "");
    const std::string msg = expect_format_error(doc);
    EXPECT_NE(msg.find("receiver.gain"), std::string::npos) << msg;
}

TEST(SceneIo, UnknownMemberRejected) {
    const std::string doc = replace(save_scene(build_preset("g1_central")), "\"room\": {", "\"room\": {\"color\": 1,");
    const std::string msg = expect_format_error(doc);
    EXPECT_NE(msg.find("room.color"), std::string::npos) << msg;
    EXPECT_NE(msg.find("unknown"), std::string::npos) << msg;
}

TEST(SceneIo, WrongTypesRejected) {
    const std::string base = save_scene(build_preset("g1_central"));
    EXPECT_NE(expect_format_error(replace(base, "\"pam_order\": 2", "\"pam_order\": 2.5")).find("signal.pam_order"),
              std::string::npos);
    EXPECT_NE(expect_format_error(replace(base, "\"role\": \"rogue\"", "\"role\": \"evil\""))
                  .find("luminaires[6].role"),
              std::string::npos);
    EXPECT_NE(expect_format_error(replace(base, "\"width\": 7.0", "\"width\": \"7\"")).find("room.width"),
              std::string::npos);
}

TEST(SceneIo, NonFiniteNumbersRejected) {
    const std::string base = save_scene(build_preset("g1_central"));
    EXPECT_NO_THROW(parse_scene(base));
    EXPECT_THROW(parse_scene(replace(base, "\"width\": 7.0", "\"width\": NaN")), SceneFormatError);
    EXPECT_THROW(parse_scene(replace(base, "\"width\": 7.0", "\"width\": 1e999")), SceneFormatError);
}

TEST(SceneIo, SyntaxErrorReportsLineAndColumn) {
    const std::string doc = "{\n  \"room\": {\n    \"width\": 7.0,,\n";
    const std::string msg = expect_format_error(doc);
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(SceneIo, LoadReportsInvariantViolations) {
    const std::string doc =
        replace(save_scene(build_preset("g2_three")), "\"reflectivity\": 0.8", "\"reflectivity\": 1.5");
    EXPECT_NO_THROW(parse_scene(doc));
    try {
        load_scene(doc);
        FAIL() << "expected SceneInvalidError";
    } catch (const SceneInvalidError& e) {
        ASSERT_FALSE(e.violations().empty());
        EXPECT_EQ(e.violations().front().field, "room.reflectivity");
    }
}

TEST(SceneIo, ExtraNoiseVarianceOptional) {
    const std::string doc =
        replace(save_scene(build_preset("g1_central")), ",\n    \"extra_noise_variance\": 0.0", "");
    EXPECT_EQ(parse_scene(doc).signal.extra_noise_variance, 0.0);
}

}  // namespace
}  // namespace vlcsim
