#ifndef ADAUC_CONFIG_HPP
#define ADAUC_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace adauc::config {

/// Flat `key = value` config file; '#' starts a comment. Keys mirror the CLI
/// flag names with dashes replaced by underscores.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;
  static KeyValueConfig from_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  long get_long(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// "key = value" lines describing the effective configuration, for echoing
/// into output-file header comments.
std::vector<std::string> echo_lines(const std::map<std::string, std::string>& effective);

}  // namespace adauc::config

#endif
