#include "rt/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <string_view>
#include <system_error>

#include <unistd.h>

#include "rt/errors.hpp"
#include "rt/obj_loader.hpp"
#include "rt/ppm.hpp"
#include "rt/renderer.hpp"

namespace rt {
namespace {

// "1,2.5,-3" style lists; no spaces, fixed arity.
std::vector<double> parse_csv_reals(const std::string& flag, const std::string& text,
                                    std::size_t count) {
    std::vector<double> values;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = text.find(',', begin);
        const std::string_view token =
            std::string_view(text).substr(begin, comma == std::string::npos ? std::string::npos
                                                                            : comma - begin);
        double value{};
        const char* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (token.empty() || ec != std::errc{} || ptr != end)
            throw UsageError(flag + ": bad component '" + std::string(token) + "'");
        values.push_back(value);
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (values.size() != count)
        throw UsageError(flag + " expects " + std::to_string(count) +
                         " comma-separated values, got " + std::to_string(values.size()));
    return values;
}

Vec3 parse_vec3(const std::string& flag, const std::string& text) {
    const auto v = parse_csv_reals(flag, text, 3);
    return {v[0], v[1], v[2]};
}

Vec3 parse_rgb(const std::string& flag, const std::string& text) {
    const Vec3 c = parse_vec3(flag, text);
    if (c.x < 0.0 || c.x > 1.0 || c.y < 0.0 || c.y > 1.0 || c.z < 0.0 || c.z > 1.0)
        throw UsageError(flag + ": channels must lie in [0,1]");
    return c;
}

}  // namespace

CliOptions parse_args(const std::vector<std::string>& args) {
    CliOptions opts;

    CLI::App app{"Brute-force triangle-mesh ray tracer: OBJ in, ASCII PPM out"};
    app.name("raytracer");

    std::string input;
    std::string output = opts.output.string();
    std::string position = "0,0,5";
    std::string look_at = "0,0,0";
    std::string up = "0,1,0";
    std::string frame = "-1,1,-1,1";
    std::string background = "0,0,0";
    std::string color = "1,0,0";

    auto* input_opt = app.add_option("-i,--input", input, "OBJ mesh to render");
    app.add_option("-o,--output", output, "destination PPM file")->capture_default_str();
    app.add_option("--width", opts.width, "image width in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--height", opts.height, "image height in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--position", position, "camera position X,Y,Z")->capture_default_str();
    app.add_option("--look-at", look_at, "camera target X,Y,Z")->capture_default_str();
    app.add_option("--up", up, "camera up vector X,Y,Z")->capture_default_str();
    app.add_option("--distance", opts.distance, "image-plane distance from the camera")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--frame", frame, "image-plane window MINX,MAXX,MINY,MAXY")
        ->capture_default_str();
    app.add_option("--background", background, "background color R,G,B")->capture_default_str();
    app.add_option("--color", color, "flat color for loaded triangles R,G,B")
        ->capture_default_str();
    app.add_option("--jobs", opts.jobs, "number of render worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--demo", "render the built-in demo scene")->excludes(input_opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (!input.empty()) opts.input = input;
    opts.demo = !opts.input.has_value();
    opts.output = output;
    opts.position = parse_vec3("--position", position);
    opts.look_at = parse_vec3("--look-at", look_at);
    opts.up = parse_vec3("--up", up);
    const auto f = parse_csv_reals("--frame", frame, 4);
    opts.frame_min_x = f[0];
    opts.frame_max_x = f[1];
    opts.frame_min_y = f[2];
    opts.frame_max_y = f[3];
    opts.background = parse_rgb("--background", background);
    opts.triangle_color = parse_rgb("--color", color);
    return opts;
}

int run_render(const CliOptions& options, std::ostream& diagnostics) {
    const PinholeCamera camera = [&] {
        try {
            return PinholeCamera(options.frame_min_x, options.frame_max_x, options.frame_min_y,
                                 options.frame_max_y, options.distance,
                                 {options.width, options.height}, options.position, options.up,
                                 options.look_at);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();

    Scene scene;
    if (options.demo) {
        scene = default_scene();
    } else {
        scene.triangles = load_obj(*options.input, options.triangle_color).triangles;
    }
    scene.background = options.background;

    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const FrameBuffer image = integrate(camera.resolution, camera, scene, options.jobs);
    const std::chrono::duration<double> elapsed = clock::now() - start;

    // Temp file next to the destination, then rename: a failed run never
    // leaves a truncated image at the output path.
    std::filesystem::path tmp = options.output;
    tmp += ".tmp" + std::to_string(::getpid());
    try {
        save_ppm(image, tmp);
        std::filesystem::rename(tmp, options.output);
    } catch (const std::filesystem::filesystem_error& e) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place: " + std::string(e.what()));
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }

    diagnostics << "triangles: " << scene.triangles.size() << '\n'
                << "resolution: " << camera.resolution.x << 'x' << camera.resolution.y << '\n'
                << "render time: " << elapsed.count() << " s\n";
    return kExitOk;
}

int run_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc) - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

    CliOptions options;
    try {
        options = parse_args(args);
    } catch (const HelpRequested& help) {
        std::cerr << help.text;
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }

    try {
        return run_render(options, std::cerr);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ObjParseError& e) {
        std::cerr << "error: " << (options.input ? options.input->string() + ": " : std::string{})
                  << e.what() << '\n';
        return kExitParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

}  // namespace rt
