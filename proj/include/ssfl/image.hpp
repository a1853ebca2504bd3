#pragma once

#include <cstdint>
#include <vector>

namespace ssfl {

// Grayscale slice, intensities normalized to [0, 1], row-major.
struct SliceImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;

  SliceImage() = default;
  SliceImage(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  float& at(int row, int col) { return data[static_cast<std::size_t>(row) * width + col]; }
  float at(int row, int col) const { return data[static_cast<std::size_t>(row) * width + col]; }
  bool empty() const { return data.empty(); }
  std::size_t size() const { return data.size(); }
};

// Binary image, values 0/1, row-major.
struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  BinaryImage() = default;
  BinaryImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t& at(int row, int col) { return data[static_cast<std::size_t>(row) * width + col]; }
  std::uint8_t at(int row, int col) const { return data[static_cast<std::size_t>(row) * width + col]; }
  bool empty() const { return data.empty(); }
  std::size_t size() const { return data.size(); }
  std::uint64_t count() const {
    std::uint64_t n = 0;
    for (auto v : data) n += v != 0;
    return n;
  }
};

inline bool same_shape(const BinaryImage& a, const BinaryImage& b) {
  return a.width == b.width && a.height == b.height;
}

// Raw integer image as decoded from disk, before normalization.
struct RawImage {
  int width = 0;
  int height = 0;
  int bit_depth = 8;  // 8 or 16
  std::vector<std::uint16_t> data;
};

}  // namespace ssfl
