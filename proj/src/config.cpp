#include "adauc/config.hpp"

#include <sstream>
#include <stdexcept>

#include "adauc/io_util.hpp"

namespace adauc::config {

namespace {

std::string trim(const std::string& s) {
  const std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  const std::string bytes = io::read_file_bytes(path);
  std::istringstream in(bytes);
  KeyValueConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": empty key");
    cfg.values_[key] = value;
  }
  return cfg;
}

std::string KeyValueConfig::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw std::runtime_error("config: missing key '" + key + "'");
  return it->second;
}

double KeyValueConfig::get_double(const std::string& key) const {
  const std::string raw = get_string(key);
  std::size_t used = 0;
  const double v = std::stod(raw, &used);
  if (used != raw.size())
    throw std::runtime_error("config: key '" + key + "' is not a number: " + raw);
  return v;
}

long KeyValueConfig::get_long(const std::string& key) const {
  const std::string raw = get_string(key);
  std::size_t used = 0;
  const long v = std::stol(raw, &used);
  if (used != raw.size())
    throw std::runtime_error("config: key '" + key + "' is not an integer: " + raw);
  return v;
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key) const {
  const std::string raw = get_string(key);
  std::size_t used = 0;
  const unsigned long long v = std::stoull(raw, &used);
  if (used != raw.size())
    throw std::runtime_error("config: key '" + key + "' is not an integer: " + raw);
  return v;
}

std::vector<std::string> echo_lines(const std::map<std::string, std::string>& effective) {
  std::vector<std::string> lines;
  lines.reserve(effective.size());
  for (const auto& [key, value] : effective) lines.push_back(key + " = " + value);
  return lines;
}

}  // namespace adauc::config
