#pragma once

// Julia set of z^2 + c approximated by a random backward orbit: starting at
// the base point, repeatedly step to one of the two preimages +-sqrt(z - c)
// chosen by a seeded generator.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace arborist {

using ComplexPoint = std::complex<double>;

struct Bounds {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -2.0;
  double im_max = 2.0;
};

struct RenderConfig {
  int width = 800;
  int height = 800;
  Bounds bounds;
  std::size_t n_points = 200'000;
  std::size_t burn_in = 50;
  std::uint64_t seed = 42;
};

/// Throws InvalidInput for non-positive sizes, empty bounds or n_points = 0.
void validate(const RenderConfig& cfg);

/// n_points successive preimages after discarding burn_in of them. The
/// branch choice uses the low bit of std::mt19937_64, so the output is
/// identical for identical inputs on every conforming platform.
std::vector<ComplexPoint> sample_backward(ComplexPoint c, ComplexPoint a, const RenderConfig& cfg);

/// Binary PGM (P5): 255 where at least one point falls in the pixel, 0
/// elsewhere. Points outside the bounds are dropped; the top row is im_max.
std::vector<std::uint8_t> render_pgm(const std::vector<ComplexPoint>& points, const RenderConfig& cfg);

/// Number of lit pixels in a PGM produced by render_pgm.
std::size_t lit_pixels(const std::vector<std::uint8_t>& pgm, const RenderConfig& cfg);

/// "re,im" rows with round-trip precision.
std::string points_csv(const std::vector<ComplexPoint>& points);

}  // namespace arborist
