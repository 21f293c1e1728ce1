#include "arborist/backorbit.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "arborist/errors.hpp"

namespace arborist {

void validate(const RenderConfig& cfg) {
  if (cfg.width <= 0 || cfg.height <= 0) throw InvalidInput("image dimensions must be positive");
  const Bounds& b = cfg.bounds;
  if (!(b.re_max > b.re_min) || !(b.im_max > b.im_min)) {
    throw InvalidInput("render bounds must have positive area");
  }
  if (cfg.n_points == 0) throw InvalidInput("n_points must be positive");
}

std::vector<ComplexPoint> sample_backward(ComplexPoint c, ComplexPoint a, const RenderConfig& cfg) {
  validate(cfg);
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || !std::isfinite(a.real()) ||
      !std::isfinite(a.imag())) {
    throw InvalidInput("c and a must be finite");
  }
  std::mt19937_64 gen(cfg.seed);
  std::vector<ComplexPoint> out;
  out.reserve(cfg.n_points);
  ComplexPoint z = a;
  const std::size_t total = cfg.burn_in + cfg.n_points;
  for (std::size_t i = 0; i < total; ++i) {
    z = std::sqrt(z - c);
    if ((gen() & 1U) != 0) z = -z;
    if (i >= cfg.burn_in) out.push_back(z);
  }
  return out;
}

std::vector<std::uint8_t> render_pgm(const std::vector<ComplexPoint>& points, const RenderConfig& cfg) {
  validate(cfg);
  char header[64];
  const int len = std::snprintf(header, sizeof header, "P5\n%d %d\n255\n", cfg.width, cfg.height);
  std::vector<std::uint8_t> out(header, header + len);
  const std::size_t offset = out.size();
  out.resize(offset + static_cast<std::size_t>(cfg.width) * static_cast<std::size_t>(cfg.height), 0);

  const Bounds& b = cfg.bounds;
  const double sx = cfg.width / (b.re_max - b.re_min);
  const double sy = cfg.height / (b.im_max - b.im_min);
  for (const ComplexPoint& z : points) {
    const double col = std::floor((z.real() - b.re_min) * sx);
    const double row = std::floor((b.im_max - z.imag()) * sy);
    if (!(col >= 0 && col < cfg.width && row >= 0 && row < cfg.height)) continue;
    out[offset + static_cast<std::size_t>(row) * static_cast<std::size_t>(cfg.width) +
        static_cast<std::size_t>(col)] = 255;
  }
  return out;
}

std::size_t lit_pixels(const std::vector<std::uint8_t>& pgm, const RenderConfig& cfg) {
  const std::size_t pixels = static_cast<std::size_t>(cfg.width) * static_cast<std::size_t>(cfg.height);
  if (pgm.size() < pixels) throw InvalidInput("image smaller than its declared dimensions");
  std::size_t lit = 0;
  for (std::size_t i = pgm.size() - pixels; i < pgm.size(); ++i) lit += pgm[i] != 0 ? 1 : 0;
  return lit;
}

std::string points_csv(const std::vector<ComplexPoint>& points) {
  std::string out = "re,im\n";
  char line[80];
  for (const ComplexPoint& z : points) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", z.real(), z.imag());
    out += line;
  }
  return out;
}

}  // namespace arborist
