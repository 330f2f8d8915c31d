#pragma once

// Canned reports that rebuild the worked examples from the literature on
// products of permutation automata and check their stated numbers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symbool {

struct Report {
  std::string text;
  bool matches = false;
};

/// example-1, example-2.2, example-3.2, example-3.3, example-3.4, prop-1
std::vector<std::string> reproduce_ids();

/// Throws InvalidArgument on an unknown id, or when m/n are given for any id
/// other than prop-1. prop-1 defaults to every m, n in {3, 4, 5}.
Report reproduce(std::string_view id,
                 std::optional<std::size_t> m = std::nullopt,
                 std::optional<std::size_t> n = std::nullopt);

}  // namespace symbool
