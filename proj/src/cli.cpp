#include "primesteg/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "primesteg/codec.hpp"
#include "primesteg/compare.hpp"
#include "primesteg/imageio.hpp"
#include "primesteg/metrics.hpp"
#include "primesteg/numsys.hpp"
#include "primesteg/system_spec.hpp"

namespace primesteg {

namespace {

constexpr std::size_t kMaxWeightCount = 64;
constexpr int kMaxCodebookDepth = 12;

/// Bad flags or values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SystemSpec parse_system(const std::string& text) {
  try {
    return SystemSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

NumberSystem image_system(const std::string& text) {
  return parse_system(text).build(kImageBitDepth);
}

void check_plane(const NumberSystem& sys, std::size_t plane) {
  if (plane >= sys.plane_count()) {
    throw UsageError("--plane " + std::to_string(plane) + " is out of range for " + sys.name() +
                     " on 8-bit images (valid 0.." + std::to_string(sys.plane_count() - 1) + ")");
  }
}

std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

struct EmbedArgs {
  std::string cover, message, out, system;
  std::size_t plane = 0;
};

struct ExtractArgs {
  std::string stego, out, system;
  std::size_t plane = 0;
};

struct CompareArgs {
  std::string cover, message;
};

struct WeightsArgs {
  std::string system;
  std::size_t count = 16;
};

struct CodebookArgs {
  std::string system;
  int k = 8;
  std::size_t planes = 0;
};

int do_embed(const EmbedArgs& a, std::ostream& out) {
  const auto sys = image_system(a.system);
  check_plane(sys, a.plane);
  const auto cover = load_pgm(a.cover);
  MessageFrame frame{read_file(a.message)};
  const auto result = embed_message(cover, sys, a.plane, frame);
  save_pgm(a.out, result.stego);

  const auto& r = result.report;
  out << "system=" << sys.name() << '\n'
      << "plane=" << r.plane << '\n'
      << "weight=" << sys.weight(r.plane) << '\n'
      << "bits_embedded=" << r.bits_embedded << '\n'
      << "pixels_visited=" << r.pixels_visited << '\n'
      << "pixels_skipped=" << r.pixels_skipped << '\n'
      << "capacity_bits=" << r.capacity_bits << '\n'
      << "mse=" << fixed6(mse(cover, result.stego)) << '\n'
      << "psnr_db=" << format_db(psnr(cover, result.stego)) << '\n';
  return kExitOk;
}

int do_extract(const ExtractArgs& a, std::ostream& out) {
  const auto sys = image_system(a.system);
  check_plane(sys, a.plane);
  const auto stego = load_pgm(a.stego);
  const auto frame = extract_message(stego, sys, a.plane);
  write_file(a.out, frame.payload);
  out << "system=" << sys.name() << '\n'
      << "plane=" << a.plane << '\n'
      << "payload_bytes=" << frame.payload.size() << '\n';
  return kExitOk;
}

int do_compare(const CompareArgs& a, std::ostream& out) {
  const auto cover = load_pgm(a.cover);
  const auto message = read_file(a.message);
  out << compare_csv(compare_sweep(cover, message));
  return kExitOk;
}

int do_weights(const WeightsArgs& a, std::ostream& out) {
  if (a.count < 2 || a.count > kMaxWeightCount) {
    throw UsageError("--count must be in [2, 64]");
  }
  if (a.system.empty()) {
    out << growth_csv(growth_table(a.count));
    return kExitOk;
  }
  const auto spec = parse_system(a.system);
  std::vector<std::uint64_t> weights;
  switch (spec.kind) {
    case SystemKind::binary:
      weights = binary_weights(a.count);
      break;
    case SystemKind::prime:
      weights = prime_weights(a.count);
      break;
    case SystemKind::fibonacci:
      weights = fibonacci_weights(spec.order, a.count);
      break;
  }
  out << "plane," << spec.to_string() << '\n';
  for (std::size_t i = 0; i < weights.size(); ++i) out << i << ',' << weights[i] << '\n';
  return kExitOk;
}

int do_codebook(const CodebookArgs& a, std::ostream& out) {
  const auto spec = parse_system(a.system);
  if (a.planes > 0) {
    NumberSystem sys = [&] {
      try {
        return make_system_with_planes(spec.kind, a.planes, spec.order == 0 ? 1 : spec.order);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    out << codebook_csv(codebook(sys, sys.weight_sum()));
    return kExitOk;
  }
  if (a.k < kMinBitDepth || a.k > kMaxCodebookDepth) {
    throw UsageError("--k must be in [1, 12]");
  }
  const auto sys = spec.build(a.k);
  out << codebook_csv(codebook(sys, (std::uint64_t{1} << a.k) - 1));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hide messages in virtual bit-planes of 8-bit PGM images"};
  app.name("primesteg");
  app.require_subcommand(1);

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a message file into one plane of a cover");
  embed_cmd->add_option("--cover", embed.cover, "Cover image (binary PGM)")->required();
  embed_cmd->add_option("--message", embed.message, "Message file")->required();
  embed_cmd->add_option("--out", embed.out, "Output stego image")->required();
  embed_cmd->add_option("--system", embed.system, "binary | prime | fib:<p>")->required();
  embed_cmd->add_option("--plane", embed.plane, "Plane index")->required();

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Recover a message from a stego image");
  extract_cmd->add_option("--stego,--cover", extract.stego, "Stego image (binary PGM)")->required();
  extract_cmd->add_option("--out", extract.out, "Output message file")->required();
  extract_cmd->add_option("--system", extract.system, "binary | prime | fib:<p>")->required();
  extract_cmd->add_option("--plane", extract.plane, "Plane index")->required();

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Embed in every plane of binary, fib:1 and prime; print CSV");
  compare_cmd->add_option("--cover", compare.cover, "Cover image (binary PGM)")->required();
  compare_cmd->add_option("--message", compare.message, "Message file")->required();

  WeightsArgs weights;
  auto* weights_cmd = app.add_subcommand("weights", "Print plane weights as CSV");
  weights_cmd->add_option("--system", weights.system,
                          "Restrict to one system; omit for the joint growth table");
  weights_cmd->add_option("--count", weights.count, "Number of planes (2..64)");

  CodebookArgs book;
  auto* codebook_cmd = app.add_subcommand("codebook", "Print value,codeword CSV");
  codebook_cmd->add_option("--system", book.system, "binary | prime | fib:<p>")->required();
  codebook_cmd->add_option("--k", book.k, "Bit depth (1..12); values 0..2^k-1");
  codebook_cmd->add_option("--planes", book.planes,
                           "Use the first N weights instead of sizing by --k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*embed_cmd) return do_embed(embed, out);
    if (*extract_cmd) return do_extract(extract, out);
    if (*compare_cmd) return do_compare(compare, out);
    if (*weights_cmd) return do_weights(weights, out);
    if (*codebook_cmd) return do_codebook(book, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace primesteg
