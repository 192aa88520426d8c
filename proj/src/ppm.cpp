#include "rt/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "rt/errors.hpp"

namespace rt {

int quantize_channel(double channel) {
    return static_cast<int>(std::lround(std::clamp(channel, 0.0, 1.0) * 255.0));
}

void write_ppm(std::ostream& out, const FrameBuffer& buffer) {
    out << "P3\n" << buffer.width() << ' ' << buffer.height() << "\n255\n";
    for (int y = 0; y < buffer.height(); ++y) {
        for (int x = 0; x < buffer.width(); ++x) {
            const Vec3& c = buffer.pixel(x, y);
            out << quantize_channel(c.x) << ' ' << quantize_channel(c.y) << ' '
                << quantize_channel(c.z) << ' ';
        }
    }
}

void save_ppm(const FrameBuffer& buffer, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_ppm(out, buffer);
    out.flush();
    if (!out) throw IoError("failed while writing '" + path.string() + "'");
}

}  // namespace rt
