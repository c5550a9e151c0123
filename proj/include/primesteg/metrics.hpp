#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "primesteg/imageio.hpp"
#include "primesteg/numsys.hpp"

namespace primesteg {

/// PSNR of two identical images.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

/// Mean of squared pixel differences.
double mse(const GrayImage& cover, const GrayImage& stego);

/// 10 log10(255^2 / MSE); kInfinitePsnr when the images are identical.
double psnr(const GrayImage& cover, const GrayImage& stego);

/// Worst-case squared error per pixel when `plane` toggles: W(plane)^2.
std::uint64_t wse(const NumberSystem& sys, std::size_t plane);

/// width * height * wse.
std::uint64_t wmse(std::size_t width, std::size_t height, const NumberSystem& sys,
                   std::size_t plane);

/// 10 log10((2^k - 1)^2 / W(plane)^2).
double psnr_worst(int bit_depth, const NumberSystem& sys, std::size_t plane);

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = kInfinitePsnr;
  std::optional<std::size_t> plane;
  std::uint64_t wse = 0;
  std::uint64_t wmse = 0;
  double psnr_worst_db = kInfinitePsnr;
};

/// Measured and worst-case statistics for an embed run in `plane`.
MetricsReport measure(const GrayImage& cover, const GrayImage& stego, const NumberSystem& sys,
                      std::size_t plane);

/// Root above 1 of a^(p+1) - a^p - 1 = 0.
///
/// Newton-Raphson from 1.5; if an iterate leaves the bracket [1, 2] or the
/// iteration stalls, falls back to bisection on that bracket.
double alpha_root(unsigned order, double tolerance);

struct GrowthRow {
  std::size_t plane;
  std::uint64_t binary;
  std::uint64_t fibonacci1;
  std::uint64_t prime;
  /// p_i / (i ln i), defined for i >= 2.
  std::optional<double> prime_over_nlogn;
};

/// Rows for planes 0 .. n_max - 1, 2 <= n_max <= 64. Weights are exact.
std::vector<GrowthRow> growth_table(std::size_t n_max);

/// CSV with header `plane,binary,fibonacci1,prime,prime_over_nlogn`.
std::string growth_csv(const std::vector<GrowthRow>& rows);

/// Formats a decibel value; the infinite sentinel prints as "inf".
std::string format_db(double db);

}  // namespace primesteg
