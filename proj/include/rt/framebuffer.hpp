#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rt/vec.hpp"

namespace rt {

// Row-major RGB grid; row 0 is the top of the image. Rows may be written
// concurrently as long as no two writers share a pixel.
class FrameBuffer {
public:
    FrameBuffer(int width, int height) : width_(width), height_(height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("FrameBuffer: dimensions must be positive");
        pixels_.assign(static_cast<std::size_t>(width) * height, Vec3::zero());
    }

    int width() const { return width_; }
    int height() const { return height_; }

    const Vec3& pixel(int x, int y) const { return pixels_[index(x, y)]; }
    void set_pixel(int x, int y, const Vec3& color) { pixels_[index(x, y)] = color; }

    bool operator==(const FrameBuffer&) const = default;

private:
    std::size_t index(int x, int y) const {
        if (x < 0 || x >= width_ || y < 0 || y >= height_)
            throw std::out_of_range("FrameBuffer: pixel index out of range");
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_;
    int height_;
    std::vector<Vec3> pixels_;
};

}  // namespace rt
