// SPDX-License-Identifier: Apache-2.0
//
// Containers for quaternion-valued signals and images plus the complex
// component planes they split into.  A correlation output reuses the same
// container with a nonzero lag offset: sample index i corresponds to lag
// i - lag_offset (per axis in 2-D).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcorr/quat22.hpp"

namespace qcorr {

using CVec = std::vector<Cx>;

struct ComplexGrid {
  std::size_t rows = 0, cols = 0;
  CVec data;  // row major

  ComplexGrid() = default;
  ComplexGrid(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Cx& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Cx& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct QuatSignal {
  std::vector<Quat22> samples;
  int lag_offset = 0;  // sample i holds lag i - lag_offset

  QuatSignal() = default;
  explicit QuatSignal(std::vector<Quat22> s, int offset = 0)
      : samples(std::move(s)), lag_offset(offset) {
    if (samples.empty()) throw std::invalid_argument("QuatSignal: empty");
  }

  std::size_t size() const { return samples.size(); }
  int lag_of(std::size_t i) const { return static_cast<int>(i) - lag_offset; }
};

struct QuatImage {
  std::size_t rows = 0, cols = 0;
  std::vector<Quat22> pixels;  // row major
  int lag_offset_row = 0, lag_offset_col = 0;

  QuatImage() = default;
  QuatImage(std::size_t r, std::size_t c) : rows(r), cols(c), pixels(r * c) {
    if (r == 0 || c == 0) throw std::invalid_argument("QuatImage: empty");
  }

  Quat22& at(std::size_t r, std::size_t c) { return pixels[r * cols + c]; }
  const Quat22& at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
};

// Signal energy of each complex component plane: sqrt(sum |x_n|^2).
struct EnergyPair {
  double e1 = 0.0;
  double e2 = 0.0;
};

enum class Normalization { none, componentwise, global };

inline std::pair<CVec, CVec> component_planes(const QuatSignal& s) {
  CVec f(s.size()), g(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    f[i] = s.samples[i].c1;
    g[i] = s.samples[i].c2;
  }
  return {std::move(f), std::move(g)};
}

inline QuatSignal signal_from_planes(const CVec& f, const CVec& g, int lag_offset = 0) {
  if (f.size() != g.size() || f.empty())
    throw std::invalid_argument("signal_from_planes: mismatched or empty planes");
  std::vector<Quat22> samples(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) samples[i] = Quat22(f[i], g[i]);
  return QuatSignal(std::move(samples), lag_offset);
}

inline std::pair<ComplexGrid, ComplexGrid> component_planes(const QuatImage& img) {
  ComplexGrid f(img.rows, img.cols), g(img.rows, img.cols);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    f.data[i] = img.pixels[i].c1;
    g.data[i] = img.pixels[i].c2;
  }
  return {std::move(f), std::move(g)};
}

inline QuatImage image_from_planes(const ComplexGrid& f, const ComplexGrid& g,
                                   int lag_row = 0, int lag_col = 0) {
  if (f.rows != g.rows || f.cols != g.cols || f.rows == 0 || f.cols == 0)
    throw std::invalid_argument("image_from_planes: mismatched or empty planes");
  QuatImage img(f.rows, f.cols);
  for (std::size_t i = 0; i < f.data.size(); ++i)
    img.pixels[i] = Quat22(f.data[i], g.data[i]);
  img.lag_offset_row = lag_row;
  img.lag_offset_col = lag_col;
  return img;
}

}  // namespace qcorr
