// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qcorr/corr1d.hpp"
#include "qcorr/corr2d.hpp"
#include "qcorr/kernels.hpp"

using qcorr::Cx;
using qcorr::EnergyPair;
using qcorr::Normalization;
using qcorr::Quat22;
using qcorr::QuatImage;
using qcorr::QuatSignal;

namespace {

QuatImage random_image(std::size_t rows, std::size_t cols) {
  QuatImage img(rows, cols);
  for (auto& q : img.pixels) q = oracles::random_quat();
  return img;
}

double relative_deviation(const QuatImage& got, const std::vector<Quat22>& want) {
  return oracles::relative_deviation(got.pixels, want);
}

// Intensity t along the fixed direction (0, 3, 0, 4).  With every pixel on
// the same ray, all lag products are positive multiples of one quaternion,
// so the surface modulus ranks lags exactly by the intensity correlation.
Quat22 hue_pixel(double t) { return Quat22(0.0, 3.0 * t, 0.0, 4.0 * t); }

// Checkerboard intensities 1.8 / 0.2.  Shifted against itself, parity either
// matches everywhere or mismatches everywhere, which keeps every partial
// overlap well below the aligned full-overlap score.
double checker(std::size_t r, std::size_t c) {
  return (r + c) % 2 == 0 ? 1.8 : 0.2;
}

QuatImage crop(const QuatImage& img, std::size_t r0, std::size_t c0, std::size_t rows,
               std::size_t cols) {
  QuatImage out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = img.at(r0 + r, c0 + c);
  return out;
}

}  // namespace

TEST_CASE("direct correlation") {
  SUBCASE("delta template sifts the image") {
    QuatImage v(1, 1);
    v.at(0, 0) = Quat22(1, 0, 0, 0);
    const QuatImage q = random_image(3, 4);
    const QuatImage r = qcorr::correlate2d_direct(v, q);
    REQUIRE(r.rows == 3);
    REQUIRE(r.cols == 4);
    CHECK(r.lag_offset_row == 0);
    CHECK(r.lag_offset_col == 0);
    for (std::size_t i = 0; i < q.pixels.size(); ++i)
      CHECK(qcorr::modulus(r.pixels[i] - q.pixels[i]) <= 1e-15);
  }

  SUBCASE("single-row images reduce to the 1-D correlation") {
    const auto v = oracles::random_signal(3);
    const auto q = oracles::random_signal(7);
    QuatImage vi(1, 3), qi(1, 7);
    vi.pixels = v;
    qi.pixels = q;
    const QuatImage r2 = qcorr::correlate2d_direct(vi, qi);
    const QuatSignal r1 = qcorr::correlate_direct(QuatSignal(v), QuatSignal(q));
    REQUIRE(r2.rows == 1);
    REQUIRE(r2.cols == r1.size());
    CHECK(r2.lag_offset_col == r1.lag_offset);
    CHECK(oracles::relative_deviation(r2.pixels, r1.samples) <= 1e-12);
  }

  SUBCASE("matches the quadruple-loop sum") {
    for (int t = 0; t < 20; ++t) {
      QuatImage v = random_image(2, 3);
      QuatImage q = random_image(4, 5);
      const auto want = oracles::brute_corr2d(v.pixels, 2, 3, q.pixels, 4, 5);
      const QuatImage got = qcorr::correlate2d_direct(v, q);
      REQUIRE(got.pixels.size() == want.size());
      CHECK(got.lag_offset_row == 1);
      CHECK(got.lag_offset_col == 2);
      CHECK(relative_deviation(got, want) <= 1e-12);
    }
  }

  SUBCASE("template larger than the image is rejected") {
    CHECK_THROWS_AS(qcorr::correlate2d_direct(random_image(3, 2), random_image(2, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(qcorr::correlate2d_direct(random_image(2, 5), random_image(2, 4)),
                    std::invalid_argument);
  }
}

TEST_CASE("autocorrelation") {
  SUBCASE("single pixel squares") {
    QuatImage q(1, 1);
    q.at(0, 0) = oracles::random_quat();
    const QuatImage r = qcorr::autocorrelate2d(q);
    REQUIRE(r.pixels.size() == 1);
    CHECK(qcorr::modulus(r.pixels[0] - square(q.at(0, 0))) <= 1e-15);
  }

  SUBCASE("agrees with the two-operand direct path") {
    const QuatImage q = random_image(3, 3);
    const QuatImage a = qcorr::autocorrelate2d(q);
    const QuatImage b = qcorr::correlate2d_direct(q, q);
    REQUIRE(a.pixels.size() == b.pixels.size());
    CHECK(oracles::relative_deviation(a.pixels, b.pixels) <= 1e-12);
  }

  SUBCASE("swapped plane correlation is the reflected cross correlation") {
    const std::size_t n = 4;
    std::vector<Cx> f = oracles::random_cvec(n * n);
    std::vector<Cx> g = oracles::random_cvec(n * n);
    const std::size_t out_rows = 2 * n - 1, out_cols = 2 * n - 1;
    std::vector<Cx> rfg(out_rows * out_cols), rgf(out_rows * out_cols);
    qcorr::kernels::xcorr2d_serial(f.data(), n, n, g.data(), n, n, rfg.data());
    qcorr::kernels::xcorr2d_serial(g.data(), n, n, f.data(), n, n, rgf.data());
    for (std::size_t r = 0; r < out_rows; ++r)
      for (std::size_t c = 0; c < out_cols; ++c) {
        const Cx want = rfg[(out_rows - 1 - r) * out_cols + (out_cols - 1 - c)];
        CHECK(std::abs(rgf[r * out_cols + c] - want) <= 1e-12 * std::max(1.0, std::abs(want)));
      }
  }
}

TEST_CASE("frequency-domain correlation") {
  SUBCASE("single-pixel operands multiply") {
    QuatImage v(1, 1), q(1, 1);
    v.at(0, 0) = oracles::random_quat();
    q.at(0, 0) = oracles::random_quat();
    const QuatImage r = qcorr::correlate2d_fft(v, q);
    REQUIRE(r.pixels.size() == 1);
    CHECK(qcorr::modulus(r.pixels[0] - v.at(0, 0) * q.at(0, 0)) <= 1e-12);
  }

  SUBCASE("agrees with the direct path") {
    for (int t = 0; t < 10; ++t) {
      const QuatImage v = random_image(3, 4);
      const QuatImage q = random_image(6, 7);
      const QuatImage direct = qcorr::correlate2d_direct(v, q);
      const QuatImage fft = qcorr::correlate2d_fft(v, q);
      CHECK(fft.lag_offset_row == direct.lag_offset_row);
      CHECK(fft.lag_offset_col == direct.lag_offset_col);
      CHECK(oracles::relative_deviation(fft.pixels, direct.pixels) <= 1e-9);
    }
  }
}

TEST_CASE("real images keep the second plane empty") {
  QuatImage v(2, 2), q(4, 4);
  for (auto& p : v.pixels) p = Quat22(oracles::uniform(), 0, 0, 0);
  for (auto& p : q.pixels) p = Quat22(oracles::uniform(), 0, 0, 0);
  const QuatImage r = qcorr::correlate2d_direct(v, q);
  for (const auto& p : r.pixels) {
    CHECK(std::abs(p.c2) == 0.0);
    CHECK(p.c1.imag() == 0.0);
  }
}

TEST_CASE("peak search") {
  SUBCASE("template cut at a known offset is found there") {
    QuatImage q(12, 10);
    for (std::size_t r = 0; r < q.rows; ++r)
      for (std::size_t c = 0; c < q.cols; ++c) {
        const bool in_patch = r >= 3 && r < 7 && c >= 5 && c < 8;
        q.at(r, c) = hue_pixel(in_patch ? checker(r, c) : 1.0);
      }
    const QuatImage v = crop(q, 3, 5, 4, 3);
    const QuatImage r = qcorr::correlate2d_direct(v, q);
    const auto peak = qcorr::find_peak(r, Normalization::none, EnergyPair{}, EnergyPair{});
    CHECK(peak.lag_row == 3);
    CHECK(peak.lag_col == 5);
  }

  SUBCASE("shift equivariance of the peak") {
    QuatImage base(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) base.at(r, c) = hue_pixel(checker(r, c));
    QuatImage shifted(9, 8);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) shifted.at(r + 2, c + 1) = base.at(r, c);
    const QuatImage r0 = qcorr::correlate2d_direct(base, shifted);
    const auto peak = qcorr::find_peak(r0, Normalization::none, EnergyPair{}, EnergyPair{});
    CHECK(peak.lag_row == 2);
    CHECK(peak.lag_col == 1);
  }

  SUBCASE("identical real unit-energy images peak at one") {
    QuatImage q(2, 2);
    q.pixels = {Quat22(0.5, 0, 0, 0), Quat22(0.5, 0, 0, 0), Quat22(0.5, 0, 0, 0),
                Quat22(0.5, 0, 0, 0)};
    const QuatImage r = qcorr::autocorrelate2d(q);
    const EnergyPair e = qcorr::energies(q);
    const auto peak = qcorr::find_peak(r, Normalization::global, e, e);
    CHECK(peak.lag_row == 0);
    CHECK(peak.lag_col == 0);
    CHECK(peak.modulus == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("all-zero surface reports the smallest lag") {
    QuatImage r(3, 4);
    r.lag_offset_row = 1;
    r.lag_offset_col = 2;
    const auto peak = qcorr::find_peak(r, Normalization::none, EnergyPair{}, EnergyPair{});
    CHECK(peak.modulus == 0.0);
    CHECK(peak.lag_row == -1);
    CHECK(peak.lag_col == -2);
  }
}

TEST_CASE("two-dimensional energies and normalization") {
  const QuatImage img = random_image(3, 5);
  const EnergyPair e = qcorr::energies(img);
  double sum1 = 0.0, sum2 = 0.0;
  for (const auto& p : img.pixels) {
    sum1 += std::norm(p.c1);
    sum2 += std::norm(p.c2);
  }
  CHECK(e.e1 * e.e1 == doctest::Approx(sum1).epsilon(1e-12));
  CHECK(e.e2 * e.e2 == doctest::Approx(sum2).epsilon(1e-12));

  QuatImage bad(1, 1);
  bad.at(0, 0) = Quat22(0, 0, 1, 0);
  CHECK_THROWS_AS(
      qcorr::normalize_componentwise(bad, EnergyPair{1.0, 0.0}, EnergyPair{1.0, 0.0}),
      std::domain_error);
  CHECK_THROWS_AS(qcorr::normalize_global(bad, EnergyPair{0.0, 0.0}, EnergyPair{1.0, 1.0}),
                  std::domain_error);
}
