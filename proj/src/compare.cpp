#include "primesteg/compare.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

#include "primesteg/codec.hpp"
#include "primesteg/metrics.hpp"

namespace primesteg {

namespace {

CompareRow run_one(const GrayImage& cover, std::span<const std::uint8_t> message,
                   const NumberSystem& sys, std::size_t plane) {
  CompareRow row;
  row.system = sys.name();
  row.plane = plane;
  row.weight = sys.weight(plane);
  row.capacity_bits = capacity(cover, sys, plane);

  GrayImage stego = cover;
  if (row.capacity_bits >= kFrameHeaderBits) {
    const std::size_t room = (row.capacity_bits - kFrameHeaderBits) / 8;
    MessageFrame frame;
    frame.payload.assign(message.begin(), message.begin() + std::min(room, message.size()));
    auto result = embed_message(cover, sys, plane, frame);
    stego = std::move(result.stego);
    row.bits_embedded = result.report.bits_embedded;
  }

  const auto m = measure(cover, stego, sys, plane);
  row.mse = m.mse;
  row.psnr_db = m.psnr_db;
  row.wse = m.wse;
  row.wmse = m.wmse;
  row.psnr_worst_db = m.psnr_worst_db;
  return row;
}

}  // namespace

std::vector<CompareRow> compare_sweep(const GrayImage& cover, std::span<const std::uint8_t> message,
                                      std::span<const NumberSystem> systems) {
  // Configurations are independent; results are collected in sweep order.
  std::vector<std::future<CompareRow>> jobs;
  for (const auto& sys : systems) {
    for (std::size_t plane = 0; plane < sys.plane_count(); ++plane) {
      jobs.push_back(std::async(std::launch::async, [&cover, message, &sys, plane] {
        return run_one(cover, message, sys, plane);
      }));
    }
  }
  std::vector<CompareRow> rows;
  rows.reserve(jobs.size());
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

std::vector<CompareRow> compare_sweep(const GrayImage& cover, std::span<const std::uint8_t> message) {
  const std::vector<NumberSystem> systems{make_binary_system(kImageBitDepth),
                                          make_fibonacci_system(1, kImageBitDepth),
                                          make_prime_system(kImageBitDepth)};
  return compare_sweep(cover, message, systems);
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream os;
  os << "system,plane,weight,capacity_bits,bits_embedded,mse,psnr_db,wse,wmse,psnr_worst_db\n";
  for (const auto& r : rows) {
    std::ostringstream mse;
    mse << std::fixed << std::setprecision(6) << r.mse;
    os << r.system << ',' << r.plane << ',' << r.weight << ',' << r.capacity_bits << ','
       << r.bits_embedded << ',' << mse.str() << ',' << format_db(r.psnr_db) << ',' << r.wse << ','
       << r.wmse << ',' << format_db(r.psnr_worst_db) << '\n';
  }
  return os.str();
}

}  // namespace primesteg
