// SPDX-License-Identifier: Apache-2.0
//
// Netpbm image I/O (PGM P2/P5 and PPM P3/P6, maxval 255), the RGB and
// grayscale quaternion pixel encodings, and the CSV formats for signals and
// correlation surfaces.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcorr/signal.hpp"

namespace qcorr::imageio {

struct GrayImage {
  std::size_t width = 0, height = 0;
  std::vector<std::uint8_t> pixels;  // row major
};

struct RgbImage {
  std::size_t width = 0, height = 0;
  std::vector<std::uint8_t> pixels;  // row major, RGB triplets
};

GrayImage load_pgm(const std::string& path);
RgbImage load_ppm(const std::string& path);

// binary selects P5/P6; plain text writes P2/P3.
void save_pgm(const std::string& path, const GrayImage& img, bool binary = true);
void save_ppm(const std::string& path, const RgbImage& img, bool binary = true);

enum class RealPart { zero, luminance };

// Pixel (R,G,B) -> [(rho, R), (G, B)] scaled to [0,1]; rho is 0 or the
// 0.299/0.587/0.114 luminance, per mode.
QuatImage rgb_to_quat(const RgbImage& img, RealPart mode = RealPart::zero);

// Inverse of the zero mode: components clamped to [0,1], then quantized.
RgbImage quat_to_rgb(const QuatImage& img);

// Grayscale image as a real quaternion image scaled to [0,1].
QuatImage gray_to_quat(const GrayImage& img);

// Four adjacent columns of a grayscale image as one quaternion signal with
// raw 0..255 sample values: sample n = [(col0[n], col1[n]), (col2[n], col3[n])].
QuatSignal columns_as_quat_signal(const GrayImage& img, std::size_t start_col);

// CSV signal: one sample per row, four comma-separated fields; saved with 17
// significant digits so a round trip is lossless.
QuatSignal load_signal_csv(const std::string& path);
void save_signal_csv(const std::string& path, const QuatSignal& s);

// CSV surface: header row "rows,cols,lag_offset_row,lag_offset_col", then
// one pixel per row (four fields) in row-major order.
void save_surface_csv(const std::string& path, const QuatImage& r);

}  // namespace qcorr::imageio
