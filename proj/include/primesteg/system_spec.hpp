#pragma once

#include <string>
#include <string_view>

#include "primesteg/numsys.hpp"

namespace primesteg {

/// Command-line name of a number system: "binary", "prime" or "fib:<p>".
struct SystemSpec {
  SystemKind kind = SystemKind::binary;
  unsigned order = 0;  // only for fibonacci

  /// Throws std::invalid_argument on anything outside the grammar.
  static SystemSpec parse(std::string_view text);
  std::string to_string() const;

  NumberSystem build(int bit_depth) const;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

}  // namespace primesteg
