#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primesteg/imageio.hpp"
#include "primesteg/numsys.hpp"

namespace primesteg {

struct CompareRow {
  std::string system;
  std::size_t plane = 0;
  std::uint32_t weight = 0;
  std::size_t capacity_bits = 0;
  std::size_t bits_embedded = 0;
  double mse = 0.0;
  double psnr_db = 0.0;
  std::uint64_t wse = 0;
  std::uint64_t wmse = 0;
  double psnr_worst_db = 0.0;
};

/// Embeds `message` into every plane of binary, fib:1 and prime (8-bit
/// systems), truncating it to whatever fits, and measures the distortion.
/// Rows come out grouped by system in that order, planes ascending.
std::vector<CompareRow> compare_sweep(const GrayImage& cover, std::span<const std::uint8_t> message);

/// Same sweep for an explicit list of systems.
std::vector<CompareRow> compare_sweep(const GrayImage& cover, std::span<const std::uint8_t> message,
                                      std::span<const NumberSystem> systems);

/// CSV header `system,plane,weight,capacity_bits,bits_embedded,mse,psnr_db,wse,wmse,psnr_worst_db`.
std::string compare_csv(const std::vector<CompareRow>& rows);

}  // namespace primesteg
