// SPDX-License-Identifier: Apache-2.0

#include "qcorr/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace qcorr::imageio {
namespace {

// Next whitespace-delimited header token; '#' starts a comment running to
// end of line.
std::string next_token(std::istream& in, const std::string& path) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) continue;
    tok.push_back(static_cast<char>(ch));
    while ((ch = in.peek()) != EOF && !std::isspace(ch) && ch != '#')
      tok.push_back(static_cast<char>(in.get()));
    return tok;
  }
  throw std::runtime_error(path + ": truncated header");
}

std::size_t parse_header_uint(std::istream& in, const std::string& path) {
  const std::string tok = next_token(in, path);
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error(path + ": malformed header");
  }
  if (pos != tok.size()) throw std::runtime_error(path + ": malformed header");
  return v;
}

// Shared loader body for both netpbm families; channels is 1 or 3.
std::vector<std::uint8_t> load_netpbm(const std::string& path, std::string& magic,
                                      std::size_t& w, std::size_t& h,
                                      std::size_t channels_plain, std::size_t channels_raw,
                                      const char* plain_magic, const char* raw_magic) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  magic = next_token(in, path);
  if (magic != plain_magic && magic != raw_magic)
    throw std::runtime_error(path + ": unexpected magic '" + magic + "'");
  const std::size_t channels = magic == plain_magic ? channels_plain : channels_raw;
  w = parse_header_uint(in, path);
  h = parse_header_uint(in, path);
  const std::size_t maxval = parse_header_uint(in, path);
  if (w == 0 || h == 0) throw std::runtime_error(path + ": zero image dimension");
  if (maxval != 255) throw std::runtime_error(path + ": unsupported maxval (must be 255)");

  std::vector<std::uint8_t> data(w * h * channels);
  if (magic == raw_magic) {
    // A single whitespace byte separates the header from the raster.
    in.get();
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (static_cast<std::size_t>(in.gcount()) != data.size())
      throw std::runtime_error(path + ": truncated pixel data");
  } else {
    for (auto& px : data) {
      const std::size_t v = parse_header_uint(in, path);
      if (v > 255) throw std::runtime_error(path + ": sample exceeds maxval");
      px = static_cast<std::uint8_t>(v);
    }
  }
  return data;
}

void write_plain_raster(std::ofstream& out, const std::vector<std::uint8_t>& data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    out << static_cast<unsigned>(data[i]);
    out << ((i % 12 == 11 || i + 1 == data.size()) ? '\n' : ' ');
  }
}

std::uint8_t quantize(double v) {
  const double c = std::clamp(v, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::lround(c * 255.0));
}

void append_fields(std::string& out, const Quat22& q) {
  char buf[128];
  const auto a = q.to_array();
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", a[0], a[1], a[2], a[3]);
  out += buf;
}

}  // namespace

GrayImage load_pgm(const std::string& path) {
  std::string magic;
  GrayImage img;
  img.pixels = load_netpbm(path, magic, img.width, img.height, 1, 1, "P2", "P5");
  return img;
}

RgbImage load_ppm(const std::string& path) {
  std::string magic;
  RgbImage img;
  img.pixels = load_netpbm(path, magic, img.width, img.height, 3, 3, "P3", "P6");
  return img;
}

void save_pgm(const std::string& path, const GrayImage& img, bool binary) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height)
    throw std::invalid_argument("save_pgm: malformed image");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << (binary ? "P5" : "P2") << "\n" << img.width << " " << img.height << "\n255\n";
  if (binary)
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
  else
    write_plain_raster(out, img.pixels);
  if (!out) throw std::runtime_error(path + ": write failed");
}

void save_ppm(const std::string& path, const RgbImage& img, bool binary) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != 3 * img.width * img.height)
    throw std::invalid_argument("save_ppm: malformed image");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << (binary ? "P6" : "P3") << "\n" << img.width << " " << img.height << "\n255\n";
  if (binary)
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
  else
    write_plain_raster(out, img.pixels);
  if (!out) throw std::runtime_error(path + ": write failed");
}

QuatImage rgb_to_quat(const RgbImage& img, RealPart mode) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != 3 * img.width * img.height)
    throw std::invalid_argument("rgb_to_quat: malformed image");
  QuatImage out(img.height, img.width);
  for (std::size_t i = 0; i < img.width * img.height; ++i) {
    const double r = img.pixels[3 * i] / 255.0;
    const double g = img.pixels[3 * i + 1] / 255.0;
    const double b = img.pixels[3 * i + 2] / 255.0;
    const double rho = mode == RealPart::zero ? 0.0 : 0.299 * r + 0.587 * g + 0.114 * b;
    out.pixels[i] = Quat22(rho, r, g, b);
  }
  return out;
}

RgbImage quat_to_rgb(const QuatImage& img) {
  if (img.pixels.empty()) throw std::invalid_argument("quat_to_rgb: empty image");
  RgbImage out;
  out.width = img.cols;
  out.height = img.rows;
  out.pixels.resize(3 * img.rows * img.cols);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const auto a = img.pixels[i].to_array();
    out.pixels[3 * i] = quantize(a[1]);
    out.pixels[3 * i + 1] = quantize(a[2]);
    out.pixels[3 * i + 2] = quantize(a[3]);
  }
  return out;
}

QuatImage gray_to_quat(const GrayImage& img) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height)
    throw std::invalid_argument("gray_to_quat: malformed image");
  QuatImage out(img.height, img.width);
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    out.pixels[i] = Quat22(img.pixels[i] / 255.0, 0.0, 0.0, 0.0);
  return out;
}

QuatSignal columns_as_quat_signal(const GrayImage& img, std::size_t start_col) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height)
    throw std::invalid_argument("columns_as_quat_signal: malformed image");
  if (start_col + 4 > img.width)
    throw std::invalid_argument("columns_as_quat_signal: need 4 columns from start_col");
  std::vector<Quat22> samples(img.height);
  for (std::size_t n = 0; n < img.height; ++n) {
    const std::uint8_t* row = img.pixels.data() + n * img.width + start_col;
    samples[n] = Quat22(static_cast<double>(row[0]), static_cast<double>(row[1]),
                        static_cast<double>(row[2]), static_cast<double>(row[3]));
  }
  return QuatSignal(std::move(samples));
}

QuatSignal load_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::vector<Quat22> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    std::array<double, 4> vals{};
    std::size_t field = 0, pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      const std::string cell = line.substr(pos, comma == std::string::npos
                                                    ? std::string::npos
                                                    : comma - pos);
      if (field >= 4)
        throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                 ": expected 4 fields");
      const char* begin = cell.c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
      if (end == begin || (end && *end != '\0'))
        throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                 ": non-numeric field '" + cell + "'");
      vals[field++] = v;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (field != 4)
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": expected 4 fields, got " + std::to_string(field));
    try {
      samples.emplace_back(vals[0], vals[1], vals[2], vals[3]);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": non-finite sample");
    }
  }
  if (samples.empty()) throw std::runtime_error(path + ": no samples");
  return QuatSignal(std::move(samples));
}

void save_signal_csv(const std::string& path, const QuatSignal& s) {
  std::string body;
  body.reserve(s.size() * 64);
  for (const auto& q : s.samples) append_fields(body, q);
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << body;
  if (!out) throw std::runtime_error(path + ": write failed");
}

void save_surface_csv(const std::string& path, const QuatImage& r) {
  if (r.pixels.empty()) throw std::invalid_argument("save_surface_csv: empty surface");
  std::string body;
  body.reserve(r.pixels.size() * 64);
  body += std::to_string(r.rows) + "," + std::to_string(r.cols) + "," +
          std::to_string(r.lag_offset_row) + "," + std::to_string(r.lag_offset_col) + "\n";
  for (const auto& q : r.pixels) append_fields(body, q);
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << body;
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace qcorr::imageio
