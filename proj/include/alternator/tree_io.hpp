#pragma once

// JSON tree documents.
//
//   {"format_version": "1", "initial_state": "a", "n_coins": 5, "root": NODE}
//   NODE := {"weigh": {"left": [ids], "right": [ids]},
//            "on_equal": NODE, "on_left_light": NODE, "on_right_light": NODE}
//         | {"alternator": id}
//         | {"unreachable": true}
//
// Keys are sorted, id arrays ascending, two-space indent, trailing newline.

#include <stdexcept>
#include <string>
#include <string_view>

#include "alternator/strategy.hpp"

namespace alternator {

inline constexpr std::string_view kTreeFormatVersion = "1";
inline constexpr int kMaxDocumentCoins = 1 << 20;

class TreeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize_tree(const StrategyTree& tree);

// Throws TreeFormatError on malformed JSON, unknown or missing keys, or a
// tree that fails validate_tree().
StrategyTree parse_tree(std::string_view text);

StrategyTree read_tree_file(const std::string& path);
// Throws std::runtime_error if the file cannot be written.
void write_tree_file(const std::string& path, const StrategyTree& tree);

}  // namespace alternator
