#pragma once

#include <string>
#include <utility>
#include <vector>

namespace reciplab::cli {

// Flat declarative grid: ordered key -> list of value strings.
struct Grid {
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;

  bool has(const std::string& key) const;
  const std::vector<std::string>& at(const std::string& key) const;
  // Replaces an existing key or appends a new one.
  void set(const std::string& key, std::vector<std::string> values);
};

// Lines "key = v1, v2, lo..hi"; '#' starts a comment. Errors carry
// "<origin>:<line>:" positions.
Grid parse_grid(const std::string& text, const std::string& origin);
Grid parse_grid_file(const std::string& path);
// One "key=values" assignment from the command line.
void apply_assignment(Grid& g, const std::string& assignment);

}  // namespace reciplab::cli
