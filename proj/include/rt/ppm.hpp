#pragma once

#include <filesystem>
#include <ostream>

#include "rt/framebuffer.hpp"

namespace rt {

// clamp to [0, 1], scale to 0..255, round half away from zero.
int quantize_channel(double channel);

// ASCII P3: "P3\n<w> <h>\n255\n" and then one "<value> " per channel in
// raster order (top row first, R G B per pixel). Every value carries a
// trailing space; there is no final newline. Golden tests depend on these
// exact bytes.
void write_ppm(std::ostream& out, const FrameBuffer& buffer);

// Throws IoError when the destination cannot be opened or written.
void save_ppm(const FrameBuffer& buffer, const std::filesystem::path& path);

}  // namespace rt
