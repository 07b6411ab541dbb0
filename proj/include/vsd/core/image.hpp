#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace vsd {

// 8-bit RGB image, row-major, interleaved channels.
class Image {
public:
    Image() = default;
    Image(int width, int height) : width_(width), height_(height), data_(size_t(width) * height * 3, 0) {}

    int width() const { return width_; }
    int height() const { return height_; }

    uint8_t* row(int y) { return data_.data() + size_t(y) * width_ * 3; }
    const uint8_t* row(int y) const { return data_.data() + size_t(y) * width_ * 3; }

    uint8_t* px(int x, int y) { return row(y) + size_t(x) * 3; }
    const uint8_t* px(int x, int y) const { return row(y) + size_t(x) * 3; }

    const std::vector<uint8_t>& data() const { return data_; }
    std::vector<uint8_t>& data() { return data_; }

    double mean_brightness() const;

    bool operator==(const Image& o) const {
        return width_ == o.width_ && height_ == o.height_ && data_ == o.data_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<uint8_t> data_;
};

// PNG I/O (RGB8). Throws std::runtime_error on failure, naming the file.
void write_png(const Image& img, const std::filesystem::path& path);
Image read_png(const std::filesystem::path& path);

} // namespace vsd
