#ifndef ADAUC_IO_UTIL_HPP
#define ADAUC_IO_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace adauc::io {

// Explicit little-endian encoding so file formats are identical on any host.

void put_u32_le(std::string& out, std::uint32_t v);
void put_u64_le(std::string& out, std::uint64_t v);
void put_f64_le(std::string& out, double v);

/// Cursor over an in-memory blob; every read checks the remaining length
/// and throws std::runtime_error on truncation.
class ByteReader {
 public:
  ByteReader(const std::string& bytes, std::string context)
      : bytes_(bytes), context_(std::move(context)) {}

  std::uint8_t u8();
  std::uint32_t u32_le();
  std::uint32_t u32_be();
  std::uint64_t u64_le();
  double f64_le();
  std::string raw(std::size_t n);
  std::size_t remaining() const { return bytes_.size() - pos_; }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  const std::string& bytes_;
  std::string context_;
  std::size_t pos_ = 0;

  void need(std::size_t n);
};

std::string read_file_bytes(const std::string& path);

/// Writes to "<path>.tmp" and renames into place, so a failed run never
/// leaves a partial output file.
void atomic_write_file(const std::string& path, const std::string& bytes);

}  // namespace adauc::io

#endif
