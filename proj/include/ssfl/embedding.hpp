#pragma once

#include <cstddef>
#include <vector>

namespace ssfl {

// Per-slice feature vectors, one row per slice, row-major float32.
struct EmbeddingMatrix {
  std::size_t n_slices = 0;
  std::size_t dim = 0;
  std::vector<float> data;

  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t rows, std::size_t cols)
      : n_slices(rows), dim(cols), data(rows * cols, 0.0f) {}

  float* row(std::size_t i) { return data.data() + i * dim; }
  const float* row(std::size_t i) const { return data.data() + i * dim; }
  float& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
  float at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
  bool empty() const { return data.empty(); }
};

}  // namespace ssfl
