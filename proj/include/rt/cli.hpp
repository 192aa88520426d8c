#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rt/vec.hpp"

namespace rt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitParse = 4;

struct CliOptions {
    std::optional<std::filesystem::path> input;
    std::filesystem::path output{"out.ppm"};
    int width{400};
    int height{400};
    Vec3 position{0.0, 0.0, 5.0};
    Vec3 look_at{0.0, 0.0, 0.0};
    Vec3 up{0.0, 1.0, 0.0};
    double distance{1.0};
    double frame_min_x{-1.0}, frame_max_x{1.0}, frame_min_y{-1.0}, frame_max_y{1.0};
    Vec3 background{0.0, 0.0, 0.0};
    Vec3 triangle_color{1.0, 0.0, 0.0};  // applied to every loaded triangle
    int jobs{1};
    bool demo{false};  // true exactly when no input mesh was given
};

// `args` excludes the program name. Throws UsageError on bad flags and
// HelpRequested for --help.
CliOptions parse_args(const std::vector<std::string>& args);

// Load (or build) the scene, render, and atomically write the PPM. Stats go
// to `diagnostics`. Throws UsageError / IoError / ObjParseError.
int run_render(const CliOptions& options, std::ostream& diagnostics);

// Full entry point: parse, render, map errors to exit codes. Writes all
// diagnostics to stderr; stdout stays clean.
int run_main(int argc, const char* const* argv);

}  // namespace rt
