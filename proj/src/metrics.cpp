#include "primesteg/metrics.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace primesteg {

namespace {

constexpr double kPeak = 255.0;

void check_same_shape(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("image dimensions differ: " + std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                                "x" + std::to_string(b.height()));
  }
}

}  // namespace

double mse(const GrayImage& cover, const GrayImage& stego) {
  check_same_shape(cover, stego);
  if (cover.empty()) return 0.0;
  const auto f = cover.pixels();
  const auto g = stego.pixels();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::int64_t d = std::int64_t{f[i]} - std::int64_t{g[i]};
    total += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(total) / static_cast<double>(f.size());
}

double psnr(const GrayImage& cover, const GrayImage& stego) {
  const double e = mse(cover, stego);
  if (e == 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(kPeak * kPeak / e);
}

std::uint64_t wse(const NumberSystem& sys, std::size_t plane) {
  const std::uint64_t w = sys.weight(plane);
  return w * w;
}

std::uint64_t wmse(std::size_t width, std::size_t height, const NumberSystem& sys,
                   std::size_t plane) {
  return std::uint64_t{width} * height * wse(sys, plane);
}

double psnr_worst(int bit_depth, const NumberSystem& sys, std::size_t plane) {
  if (bit_depth < kMinBitDepth || bit_depth > kMaxBitDepth) {
    throw std::invalid_argument("bit depth must be in [1, 16]");
  }
  const double peak = std::ldexp(1.0, bit_depth) - 1.0;
  return 10.0 * std::log10(peak * peak / static_cast<double>(wse(sys, plane)));
}

MetricsReport measure(const GrayImage& cover, const GrayImage& stego, const NumberSystem& sys,
                      std::size_t plane) {
  MetricsReport r;
  r.mse = mse(cover, stego);
  r.psnr_db = psnr(cover, stego);
  r.plane = plane;
  r.wse = wse(sys, plane);
  r.wmse = wmse(cover.width(), cover.height(), sys, plane);
  r.psnr_worst_db = psnr_worst(kImageBitDepth, sys, plane);
  return r;
}

double alpha_root(unsigned order, double tolerance) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const double p = order;
  auto f = [&](double a) { return std::pow(a, p + 1) - std::pow(a, p) - 1.0; };
  auto df = [&](double a) { return (p + 1) * std::pow(a, p) - p * std::pow(a, p - 1); };

  // f(1) = -1 and f(2) = 2^p - 1 > 0, and f is increasing above 1.
  double lo = 1.0;
  double hi = 2.0;

  double a = 1.5;
  for (int iter = 0; iter < 100; ++iter) {
    const double step = f(a) / df(a);
    const double next = a - step;
    if (!std::isfinite(next) || next <= lo || next > hi) break;
    a = next;
    if (std::abs(step) < tolerance * 1e-3) return a;
  }

  while (hi - lo > tolerance * 1e-3) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<GrowthRow> growth_table(std::size_t n_max) {
  if (n_max < 2 || n_max > 64) throw std::invalid_argument("n_max must be in [2, 64]");
  const auto bin = binary_weights(n_max);
  const auto fib = fibonacci_weights(1, n_max);
  const auto primes = prime_weights(n_max);
  std::vector<GrowthRow> rows;
  rows.reserve(n_max);
  for (std::size_t i = 0; i < n_max; ++i) {
    GrowthRow row{i, bin[i], fib[i], primes[i], std::nullopt};
    if (i >= 2) {
      const double n = static_cast<double>(i);
      row.prime_over_nlogn = static_cast<double>(primes[i]) / (n * std::log(n));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "plane,binary,fibonacci1,prime,prime_over_nlogn\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& r : rows) {
    os << r.plane << ',' << r.binary << ',' << r.fibonacci1 << ',' << r.prime << ',';
    if (r.prime_over_nlogn) os << *r.prime_over_nlogn;
    os << '\n';
  }
  return os.str();
}

std::string format_db(double db) {
  if (std::isinf(db)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << db;
  return os.str();
}

}  // namespace primesteg
