#include "grid.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "reciplab/errors.hpp"

namespace reciplab::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::vector<std::string> parse_values(const std::string& rhs, const std::string& where) {
  std::vector<std::string> out;
  std::stringstream ss(rhs);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(where + " empty value");
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(item);
      continue;
    }
    std::string lo = trim(item.substr(0, dots)), hi = trim(item.substr(dots + 2));
    if (!is_integer(lo) || !is_integer(hi)) throw ConfigError(where + " range bounds must be integers: '" + item + "'");
    long a = std::stol(lo), b = std::stol(hi);
    if (a > b) throw ConfigError(where + " empty range '" + item + "'");
    if (b - a > 100000) throw ConfigError(where + " range too large '" + item + "'");
    for (long v = a; v <= b; ++v) out.push_back(std::to_string(v));
  }
  if (out.empty()) throw ConfigError(where + " no values");
  return out;
}

void add_line(Grid& g, const std::string& line, const std::string& where) {
  auto eq = line.find('=');
  if (eq == std::string::npos) throw ConfigError(where + " expected 'key = values'");
  std::string key = trim(line.substr(0, eq));
  if (key.empty()) throw ConfigError(where + " missing key");
  for (char c : key)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) throw ConfigError(where + " bad key '" + key + "'");
  if (g.has(key)) throw ConfigError(where + " duplicate key '" + key + "'");
  g.set(key, parse_values(line.substr(eq + 1), where));
}

}  // namespace

bool Grid::has(const std::string& key) const {
  for (const auto& e : entries)
    if (e.first == key) return true;
  return false;
}

const std::vector<std::string>& Grid::at(const std::string& key) const {
  for (const auto& e : entries)
    if (e.first == key) return e.second;
  throw ConfigError("missing grid key '" + key + "'");
}

void Grid::set(const std::string& key, std::vector<std::string> values) {
  for (auto& e : entries)
    if (e.first == key) {
      e.second = std::move(values);
      return;
    }
  entries.emplace_back(key, std::move(values));
}

Grid parse_grid(const std::string& text, const std::string& origin) {
  Grid g;
  std::stringstream ss(text);
  std::string line;
  long no = 0;
  while (std::getline(ss, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    add_line(g, line, origin + ":" + std::to_string(no) + ":");
  }
  return g;
}

Grid parse_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read grid file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_grid(buf.str(), path);
}

void apply_assignment(Grid& g, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("--set expects key=values, got '" + assignment + "'");
  std::string key = trim(assignment.substr(0, eq));
  g.set(key, parse_values(assignment.substr(eq + 1), "--set " + key + ":"));
}

}  // namespace reciplab::cli
