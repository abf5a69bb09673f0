// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: 1-D correlation of CSV signals, 2-D template
// matching on netpbm images, an operation-count benchmark, and a self test.
// Exit codes: 0 success, 1 failed check, 2 usage or input error.

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/corr1d.hpp"
#include "qcorr/corr2d.hpp"
#include "qcorr/fft.hpp"
#include "qcorr/hamilton.hpp"
#include "qcorr/imageio.hpp"
#include "qcorr/opcount.hpp"
#include "qcorr/quat22.hpp"

namespace {

using qcorr::Cx;
using qcorr::EnergyPair;
using qcorr::Normalization;
using qcorr::Quat22;
using qcorr::QuatImage;
using qcorr::QuatSignal;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_quat(const Quat22& q) {
  const auto a = q.to_array();
  return "(" + fmt(a[0]) + ", " + fmt(a[1]) + ", " + fmt(a[2]) + ", " + fmt(a[3]) + ")";
}

Normalization parse_norm(const std::string& s) {
  if (s == "none") return Normalization::none;
  if (s == "component") return Normalization::componentwise;
  if (s == "global") return Normalization::global;
  throw CLI::ValidationError("--normalize", "must be none, component, or global");
}

QuatSignal apply_norm_1d(const QuatSignal& r, Normalization norm, const EnergyPair& ev,
                         const EnergyPair& eq) {
  switch (norm) {
    case Normalization::componentwise:
      return qcorr::normalize_componentwise(r, ev, eq);
    case Normalization::global:
      return qcorr::normalize_global(r, ev, eq);
    default:
      return r;
  }
}

QuatImage apply_norm_2d(const QuatImage& r, Normalization norm, const EnergyPair& ev,
                        const EnergyPair& eq) {
  switch (norm) {
    case Normalization::componentwise:
      return qcorr::normalize_componentwise(r, ev, eq);
    case Normalization::global:
      return qcorr::normalize_global(r, ev, eq);
    default:
      return r;
  }
}

double deviation_1d(const QuatSignal& a, const QuatSignal& b) {
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max(scale, qcorr::modulus(b.samples[i]));
    diff = std::max(diff, qcorr::modulus(a.samples[i] - b.samples[i]));
  }
  return diff / std::max(scale, 1e-30);
}

double deviation_2d(const QuatImage& a, const QuatImage& b) {
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    scale = std::max(scale, qcorr::modulus(b.pixels[i]));
    diff = std::max(diff, qcorr::modulus(a.pixels[i] - b.pixels[i]));
  }
  return diff / std::max(scale, 1e-30);
}

void write_lag_csv(const std::string& path, const QuatSignal& s) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error(path + ": cannot open for writing");
  std::fprintf(f, "lag,a,b,c,d\n");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto a = s.samples[i].to_array();
    std::fprintf(f, "%d,%.12g,%.12g,%.12g,%.12g\n", s.lag_of(i), a[0], a[1], a[2], a[3]);
  }
  std::fclose(f);
}

void write_lag_csv_13(const std::string& path, const qcorr::QuatHSignal& s) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error(path + ": cannot open for writing");
  std::fprintf(f, "lag,a,b,c,d\n");
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    const auto a = s.samples[i].to_array();
    std::fprintf(f, "%d,%.12g,%.12g,%.12g,%.12g\n", int(i) - s.lag_offset, a[0], a[1], a[2],
                 a[3]);
  }
  std::fclose(f);
}

struct CountReport {
  std::uint64_t m_dft = 0;
  std::uint64_t pointwise = 0;
  std::uint64_t total = 0;
  std::uint64_t formula = 0;
  bool pointwise_expected(std::uint64_t padded) const { return pointwise == 16 * padded; }
  bool total_matches() const { return total == formula; }
};

// Real-multiplication accounting of the 1-D frequency path at padded
// length n: one transform, the pointwise stage, and the whole correlation.
CountReport count_1d(std::size_t L, std::size_t N) {
  const std::size_t n = L + N - 1;
  std::mt19937 gen(42u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto make = [&](std::size_t len) {
    std::vector<Quat22> s(len);
    for (auto& q : s) q = Quat22(dist(gen), dist(gen), dist(gen), dist(gen));
    return QuatSignal(s);
  };
  const QuatSignal v = make(L), q = make(N);

  CountReport rep;
  {
    std::vector<Cx> x(n, Cx(0.5, -0.5));
    const auto c = qcorr::opcount::counting_scope(
        [&] { (void)qcorr::dft(x, qcorr::FftDirection::forward); });
    rep.m_dft = c.real_multiplications;
  }
  {
    auto pad = [&](const QuatSignal& s) {
      std::vector<Quat22> padded(n);
      std::copy(s.samples.begin(), s.samples.end(), padded.begin());
      return QuatSignal(padded);
    };
    const auto V = qcorr::qdft_e2(pad(v));
    const auto Q = qcorr::qdft_e2(pad(q));
    const auto c = qcorr::opcount::counting_scope(
        [&] { (void)qcorr::correlation_spectrum(V, Q); });
    rep.pointwise = c.real_multiplications;
  }
  {
    const auto c =
        qcorr::opcount::counting_scope([&] { (void)qcorr::correlate_fft(v, q); });
    rep.total = c.real_multiplications;
  }
  rep.formula = 6 * rep.m_dft + 16 * std::uint64_t(n);
  return rep;
}

CountReport count_2d(std::size_t L1, std::size_t L2, std::size_t N1, std::size_t N2) {
  const std::size_t n1 = L1 + N1 - 1, n2 = L2 + N2 - 1;
  std::mt19937 gen(43u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto make = [&](std::size_t rows, std::size_t cols) {
    QuatImage img(rows, cols);
    for (auto& q : img.pixels) q = Quat22(dist(gen), dist(gen), dist(gen), dist(gen));
    return img;
  };
  const QuatImage v = make(L1, L2), q = make(N1, N2);

  CountReport rep;
  {
    qcorr::ComplexGrid g(n1, n2);
    for (auto& c : g.data) c = Cx(0.25, 0.75);
    const auto c = qcorr::opcount::counting_scope(
        [&] { (void)qcorr::dft2d(g, qcorr::FftDirection::forward); });
    rep.m_dft = c.real_multiplications;
  }
  {
    auto pad = [&](const QuatImage& img) {
      QuatImage padded(n1, n2);
      for (std::size_t r = 0; r < img.rows; ++r)
        for (std::size_t col = 0; col < img.cols; ++col) padded.at(r, col) = img.at(r, col);
      return padded;
    };
    const auto V = qcorr::qdft2d_e2(pad(v));
    const auto Q = qcorr::qdft2d_e2(pad(q));
    const auto c = qcorr::opcount::counting_scope(
        [&] { (void)qcorr::correlation_spectrum(V, Q); });
    rep.pointwise = c.real_multiplications;
  }
  {
    const auto c =
        qcorr::opcount::counting_scope([&] { (void)qcorr::correlate2d_fft(v, q); });
    rep.total = c.real_multiplications;
  }
  rep.formula = 6 * rep.m_dft + 16 * std::uint64_t(n1 * n2);
  return rep;
}

int print_count_report(const CountReport& rep, std::uint64_t padded) {
  std::printf("counted: m_dft = %" PRIu64 ", pointwise = %" PRIu64 ", total = %" PRIu64
              ", formula 6*m_dft + 16*N' = %" PRIu64 "\n",
              rep.m_dft, rep.pointwise, rep.total, rep.formula);
  if (!rep.pointwise_expected(padded)) {
    std::fprintf(stderr, "count check failed: pointwise stage expected %" PRIu64 "\n",
                 16 * padded);
    return 1;
  }
  if (!rep.total_matches()) {
    std::fprintf(stderr, "count check failed: total does not match the formula\n");
    return 1;
  }
  return 0;
}

struct Correlate1dConfig {
  std::string v_path, q_path, out_path;
  std::string method = "direct";
  std::string normalize = "none";
  std::string model = "22";
  bool count = false;
};

int cmd_correlate1d(const Correlate1dConfig& cfg) {
  const Normalization norm = parse_norm(cfg.normalize);

  if (cfg.model == "13") {
    if (cfg.method != "direct" || norm != Normalization::none || cfg.count) {
      std::fprintf(stderr,
                   "error: model 13 supports only --method direct, --normalize none, "
                   "and no --count\n");
      return 2;
    }
    const QuatSignal v22 = qcorr::imageio::load_signal_csv(cfg.v_path);
    const QuatSignal q22 = qcorr::imageio::load_signal_csv(cfg.q_path);
    auto to_h = [](const QuatSignal& s) {
      qcorr::QuatHSignal h;
      for (const auto& q : s.samples) {
        const auto a = q.to_array();
        h.samples.emplace_back(a[0], a[1], a[2], a[3]);
      }
      return h;
    };
    const qcorr::QuatHSignal r = qcorr::correlate_direct_13(to_h(v22), to_h(q22));
    std::printf("signal lengths: L = %zu, N = %zu\n", v22.size(), q22.size());
    std::printf("model: 13 (direct)\n");
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.samples.size(); ++i)
      if (qcorr::modulus(r.samples[i]) > qcorr::modulus(r.samples[best])) best = i;
    const auto a = r.samples[best].to_array();
    std::printf("peak: lag = %d, modulus = %s, components = (%s, %s, %s, %s)\n",
                int(best) - r.lag_offset, fmt(qcorr::modulus(r.samples[best])).c_str(),
                fmt(a[0]).c_str(), fmt(a[1]).c_str(), fmt(a[2]).c_str(), fmt(a[3]).c_str());
    if (!cfg.out_path.empty()) write_lag_csv_13(cfg.out_path, r);
    return 0;
  }

  if (cfg.model != "22") {
    std::fprintf(stderr, "error: --model must be 22 or 13\n");
    return 2;
  }

  const QuatSignal v = qcorr::imageio::load_signal_csv(cfg.v_path);
  const QuatSignal q = qcorr::imageio::load_signal_csv(cfg.q_path);
  std::printf("signal lengths: L = %zu, N = %zu\n", v.size(), q.size());
  std::printf("method: %s\n", cfg.method.c_str());

  QuatSignal result(std::vector<Quat22>{Quat22()});
  if (cfg.method == "direct") {
    result = qcorr::correlate_direct(v, q);
  } else if (cfg.method == "fft") {
    result = qcorr::correlate_fft(v, q);
  } else if (cfg.method == "both") {
    const QuatSignal direct = qcorr::correlate_direct(v, q);
    const QuatSignal fft = qcorr::correlate_fft(v, q);
    std::printf("max relative deviation (direct vs fft) = %s\n",
                fmt(deviation_1d(fft, direct)).c_str());
    result = direct;
  } else {
    std::fprintf(stderr, "error: --method must be direct, fft, or both\n");
    return 2;
  }

  const EnergyPair ev = qcorr::energies(v);
  const EnergyPair eq = qcorr::energies(q);
  if (norm == Normalization::componentwise) {
    std::printf("K1 = %s, K2 = %s\n", fmt(ev.e1 * eq.e1 + ev.e2 * eq.e2).c_str(),
                fmt(ev.e1 * eq.e2 + ev.e2 * eq.e1).c_str());
  } else if (norm == Normalization::global) {
    const double Ev = std::sqrt(ev.e1 * ev.e1 + ev.e2 * ev.e2);
    const double Eq = std::sqrt(eq.e1 * eq.e1 + eq.e2 * eq.e2);
    std::printf("E[v]E[q] = %s\n", fmt(Ev * Eq).c_str());
  }
  result = apply_norm_1d(result, norm, ev, eq);

  std::printf("lag range: %d .. %d\n", result.lag_of(0), result.lag_of(result.size() - 1));
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.size(); ++i)
    if (qcorr::modulus(result.samples[i]) > qcorr::modulus(result.samples[best])) best = i;
  std::printf("peak: lag = %d, modulus = %s, components = %s\n", result.lag_of(best),
              fmt(qcorr::modulus(result.samples[best])).c_str(),
              fmt_quat(result.samples[best]).c_str());

  if (!cfg.out_path.empty()) write_lag_csv(cfg.out_path, result);

  if (cfg.count) {
    const std::size_t padded = v.size() + q.size() - 1;
    return print_count_report(count_1d(v.size(), q.size()), padded);
  }
  return 0;
}

struct Match2dConfig {
  std::string ref_path, tpl_path, out_path, heatmap_path;
  std::string method = "fft";
  std::string normalize = "none";
  std::string real_part = "zero";
  bool count = false;
};

QuatImage load_quat_image(const std::string& path, qcorr::imageio::RealPart mode) {
  auto ends_with = [&](const char* suffix) {
    const std::string s(suffix);
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".ppm") || ends_with(".PPM"))
    return qcorr::imageio::rgb_to_quat(qcorr::imageio::load_ppm(path), mode);
  if (ends_with(".pgm") || ends_with(".PGM"))
    return qcorr::imageio::gray_to_quat(qcorr::imageio::load_pgm(path));
  throw std::runtime_error(path + ": unsupported image extension (use .ppm or .pgm)");
}

void write_heatmap(const std::string& path, const QuatImage& surface) {
  double lo = qcorr::modulus(surface.pixels[0]), hi = lo;
  for (const auto& p : surface.pixels) {
    const double m = qcorr::modulus(p);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  qcorr::imageio::GrayImage img;
  img.width = surface.cols;
  img.height = surface.rows;
  img.pixels.resize(surface.pixels.size());
  for (std::size_t i = 0; i < surface.pixels.size(); ++i) {
    const double t = (qcorr::modulus(surface.pixels[i]) - lo) / span;
    img.pixels[i] = static_cast<std::uint8_t>(std::lround(255.0 * t));
  }
  qcorr::imageio::save_pgm(path, img, true);
}

int cmd_match2d(const Match2dConfig& cfg) {
  const Normalization norm = parse_norm(cfg.normalize);
  qcorr::imageio::RealPart mode;
  if (cfg.real_part == "zero") {
    mode = qcorr::imageio::RealPart::zero;
  } else if (cfg.real_part == "luma") {
    mode = qcorr::imageio::RealPart::luminance;
  } else {
    std::fprintf(stderr, "error: --real-part must be zero or luma\n");
    return 2;
  }

  const QuatImage ref = load_quat_image(cfg.ref_path, mode);
  const QuatImage tpl = load_quat_image(cfg.tpl_path, mode);
  std::printf("reference: %zu x %zu, template: %zu x %zu\n", ref.rows, ref.cols, tpl.rows,
              tpl.cols);
  std::printf("method: %s\n", cfg.method.c_str());

  QuatImage result(1, 1);
  if (cfg.method == "direct") {
    result = qcorr::correlate2d_direct(tpl, ref);
  } else if (cfg.method == "fft") {
    result = qcorr::correlate2d_fft(tpl, ref);
  } else if (cfg.method == "both") {
    const QuatImage direct = qcorr::correlate2d_direct(tpl, ref);
    const QuatImage fft = qcorr::correlate2d_fft(tpl, ref);
    std::printf("max relative deviation (direct vs fft) = %s\n",
                fmt(deviation_2d(fft, direct)).c_str());
    result = direct;
  } else {
    std::fprintf(stderr, "error: --method must be direct, fft, or both\n");
    return 2;
  }

  const EnergyPair ev = qcorr::energies(tpl);
  const EnergyPair eq = qcorr::energies(ref);
  const QuatImage surface = apply_norm_2d(result, norm, ev, eq);
  const auto peak =
      qcorr::find_peak(surface, Normalization::none, EnergyPair{}, EnergyPair{});
  std::printf("peak: lag = (%d, %d), modulus = %s, components = (%s, %s, %s, %s)\n",
              peak.lag_row, peak.lag_col, fmt(peak.modulus).c_str(),
              fmt(peak.components[0]).c_str(), fmt(peak.components[1]).c_str(),
              fmt(peak.components[2]).c_str(), fmt(peak.components[3]).c_str());

  if (!cfg.out_path.empty()) qcorr::imageio::save_surface_csv(cfg.out_path, surface);
  if (!cfg.heatmap_path.empty()) write_heatmap(cfg.heatmap_path, surface);

  if (cfg.count) {
    const std::uint64_t padded =
        std::uint64_t(tpl.rows + ref.rows - 1) * std::uint64_t(tpl.cols + ref.cols - 1);
    return print_count_report(count_2d(tpl.rows, tpl.cols, ref.rows, ref.cols), padded);
  }
  return 0;
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok =
        csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) out.push_back(std::stoul(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int cmd_bench(const std::string& sizes_1d, const std::string& sizes_2d) {
  int status = 0;
  std::printf("1-D frequency-path multiplication counts (real multiplications)\n");
  std::printf("%8s %12s %12s %12s %12s  %s\n", "N'", "m_dft", "pointwise", "total",
              "formula", "status");
  for (std::size_t n : parse_size_list(sizes_1d)) {
    if (n == 0) continue;
    const std::size_t L = (n + 1) / 2, N = n + 1 - L;
    const CountReport rep = count_1d(L, N);
    const bool ok = rep.pointwise_expected(n) && rep.total_matches();
    if (!ok) status = 1;
    std::printf("%8zu %12" PRIu64 " %12" PRIu64 " %12" PRIu64 " %12" PRIu64 "  %s\n", n,
                rep.m_dft, rep.pointwise, rep.total, rep.formula, ok ? "ok" : "MISMATCH");
  }

  std::printf("\n2-D frequency-path multiplication counts (real multiplications)\n");
  std::printf("%8s %12s %12s %12s %12s  %s\n", "N'xM'", "m_2ddft", "pointwise", "total",
              "formula", "status");
  std::size_t pos = 0;
  const std::string& spec2 = sizes_2d;
  while (pos <= spec2.size()) {
    const std::size_t comma = spec2.find(',', pos);
    const std::string tok =
        spec2.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) {
      const std::size_t x = tok.find('x');
      if (x == std::string::npos)
        throw std::runtime_error("bench: 2-D sizes look like 8x8,16x16");
      const std::size_t n1 = std::stoul(tok.substr(0, x));
      const std::size_t n2 = std::stoul(tok.substr(x + 1));
      if (n1 == 0 || n2 == 0) throw std::runtime_error("bench: zero 2-D size");
      const std::size_t L1 = (n1 + 1) / 2, N1 = n1 + 1 - L1;
      const std::size_t L2 = (n2 + 1) / 2, N2 = n2 + 1 - L2;
      const CountReport rep = count_2d(L1, L2, N1, N2);
      const bool ok = rep.pointwise_expected(n1 * n2) && rep.total_matches();
      if (!ok) status = 1;
      char label[64];
      std::snprintf(label, sizeof label, "%zux%zu", n1, n2);
      std::printf("%8s %12" PRIu64 " %12" PRIu64 " %12" PRIu64 " %12" PRIu64 "  %s\n", label,
                  rep.m_dft, rep.pointwise, rep.total, rep.formula, ok ? "ok" : "MISMATCH");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return status;
}

struct SelfCheck {
  bool all_ok = true;
  void report(const char* name, bool ok) {
    std::printf("[%s] %s\n", ok ? "pass" : "FAIL", name);
    if (!ok) all_ok = false;
  }
};

int run_jetplane(SelfCheck& sc, const std::string& path) {
  const qcorr::imageio::GrayImage img = qcorr::imageio::load_pgm(path);
  std::printf("reference image: %zu x %zu\n", img.width, img.height);
  const QuatSignal v = qcorr::imageio::columns_as_quat_signal(img, 80);
  const QuatSignal q = qcorr::imageio::columns_as_quat_signal(img, 90);
  const QuatSignal r = qcorr::correlate_direct(v, q);
  const EnergyPair ev = qcorr::energies(v);
  const EnergyPair eq = qcorr::energies(q);
  const double K1 = ev.e1 * eq.e1 + ev.e2 * eq.e2;
  const QuatSignal n = qcorr::normalize_componentwise(r, ev, eq);

  double best_d = -1e300;
  int best_lag = 0;
  double max_abc = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto a = n.samples[i].to_array();
    if (a[3] > best_d) {
      best_d = a[3];
      best_lag = n.lag_of(i);
    }
    max_abc = std::max({max_abc, std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
  }
  std::printf("K1 = %s\n", fmt(K1).c_str());
  std::printf("max fourth component = %s at lag %d\n", fmt(best_d).c_str(), best_lag);
  std::printf("max |first three components| = %s\n", fmt(max_abc).c_str());

  sc.report("column-signal K1 near 5.7722e7", std::abs(K1 - 5.7722e7) <= 0.001 * 5.7722e7);
  sc.report("fourth-component peak 0.9696 within 5e-4", std::abs(best_d - 0.9696) <= 5e-4);
  sc.report("fourth-component peak at lag 0", best_lag == 0);
  sc.report("first three components within [-0.011, 0.011]", max_abc <= 0.011);
  return sc.all_ok ? 0 : 1;
}

int cmd_selftest(const std::string& jetplane_path) {
  SelfCheck sc;

  const Quat22 q1(Cx(1, 4), Cx(-1, 2));
  const Quat22 q2(Cx(2, 5), Cx(3, -1));
  sc.report("product of the reference pair",
            q1 * q2 == Quat22(Cx(-17, 6), Cx(-5, 10)));
  sc.report("reference matrix determinant 340",
            std::abs(to_matrix(q1).det() - 340.0) <= 1e-9);

  {
    const Quat22 e1 = Quat22::e1(), e2 = Quat22::e2(), e3 = Quat22::e3(), e4 = Quat22::e4();
    const bool table = e2 * e2 == -e1 && e2 * e3 == e4 && e2 * e4 == -e3 &&
                       e3 * e2 == e4 && e3 * e3 == -e1 && e3 * e4 == -e2 &&
                       e4 * e2 == -e3 && e4 * e3 == -e2 && e4 * e4 == e1;
    sc.report("basis product table (9 entries)", table);
    sc.report("zero-divisor pair multiplies to zero",
              (e1 + e4) * (e1 - e4) == Quat22() && (e1 + e4) != Quat22());
  }

  std::mt19937 gen(2718u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto rq = [&] { return Quat22(dist(gen), dist(gen), dist(gen), dist(gen)); };

  {
    std::vector<Quat22> v(5), q(12);
    for (auto& s : v) s = rq();
    for (auto& s : q) s = rq();
    const QuatSignal direct = qcorr::correlate_direct(QuatSignal(v), QuatSignal(q));
    const QuatSignal fft = qcorr::correlate_fft(QuatSignal(v), QuatSignal(q));
    sc.report("1-D direct and frequency paths agree", deviation_1d(fft, direct) <= 1e-9);
  }
  {
    QuatImage v(3, 4), q(6, 7);
    for (auto& s : v.pixels) s = rq();
    for (auto& s : q.pixels) s = rq();
    const QuatImage direct = qcorr::correlate2d_direct(v, q);
    const QuatImage fft = qcorr::correlate2d_fft(v, q);
    sc.report("2-D direct and frequency paths agree", deviation_2d(fft, direct) <= 1e-9);
  }
  {
    const std::size_t n = 12;
    std::vector<Cx> x(n);
    for (auto& c : x) c = Cx(dist(gen), dist(gen));
    const auto got = qcorr::dft(x, qcorr::FftDirection::forward);
    double err = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      Cx acc{0, 0};
      for (std::size_t k = 0; k < n; ++k) {
        const double ang = -2.0 * qcorr::kPi * double(k * p) / double(n);
        acc += x[k] * Cx(std::cos(ang), std::sin(ang));
      }
      err = std::max(err, std::abs(got[p] - acc));
    }
    sc.report("transform matches the quadratic-time reference", err <= 1e-10);
  }
  {
    const CountReport rep = count_1d(8, 9);
    sc.report("operation counts match the six-transform formula",
              rep.pointwise_expected(16) && rep.total_matches());
  }

  if (!jetplane_path.empty()) {
    return run_jetplane(sc, jetplane_path);
  }
  return sc.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion correlation of signals and color images"};
  app.require_subcommand(1);

  Correlate1dConfig c1;
  CLI::App* correlate1d =
      app.add_subcommand("correlate1d", "Correlate two quaternion signals from CSV files");
  correlate1d->add_option("v", c1.v_path, "First operand (slides; length L <= N)")
      ->required();
  correlate1d->add_option("q", c1.q_path, "Second operand (length N)")->required();
  correlate1d->add_option("--method", c1.method, "direct, fft, or both");
  correlate1d->add_option("--normalize", c1.normalize, "none, component, or global");
  correlate1d->add_option("--model", c1.model, "22 (commutative) or 13 (classical)");
  correlate1d->add_flag("--count", c1.count, "Report real-multiplication counts");
  correlate1d->add_option("--out", c1.out_path, "Write the correlation as lag CSV");

  Match2dConfig c2;
  CLI::App* match2d =
      app.add_subcommand("match2d", "Locate a template inside a reference image");
  match2d->add_option("reference", c2.ref_path, "Reference image (.ppm or .pgm)")
      ->required();
  match2d->add_option("template", c2.tpl_path, "Template image (.ppm or .pgm)")->required();
  match2d->add_option("--method", c2.method, "direct, fft, or both");
  match2d->add_option("--normalize", c2.normalize, "none, component, or global");
  match2d->add_option("--real-part", c2.real_part, "zero or luma");
  match2d->add_flag("--count", c2.count, "Report real-multiplication counts");
  match2d->add_option("--out", c2.out_path, "Write the correlation surface as CSV");
  match2d->add_option("--heatmap", c2.heatmap_path, "Write the surface modulus as PGM");

  std::string sizes_1d = "16,64,256,1021";
  std::string sizes_2d = "8x8,16x16";
  CLI::App* bench =
      app.add_subcommand("bench", "Verify the multiplication-count formula per size");
  bench->add_option("--sizes", sizes_1d, "Padded 1-D lengths, comma separated");
  bench->add_option("--sizes2d", sizes_2d, "Padded 2-D sizes like 8x8,16x16");

  std::string jetplane;
  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the built-in worked examples and cross-checks");
  selftest->add_option("--jetplane", jetplane,
                       "512x512 grayscale reference image for the column experiment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (correlate1d->parsed()) return cmd_correlate1d(c1);
    if (match2d->parsed()) return cmd_match2d(c2);
    if (bench->parsed()) return cmd_bench(sizes_1d, sizes_2d);
    if (selftest->parsed()) return cmd_selftest(jetplane);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
