#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vfc {

// Little-endian fixed-width encoding used by the index file.
class BinaryWriter {
 public:
  void U32(std::uint32_t v);
  void I32(std::int32_t v) { U32(static_cast<std::uint32_t>(v)); }
  void U64(std::uint64_t v);
  void Raw(std::string_view bytes) { buf_.append(bytes); }

  void I32Vector(const std::vector<std::int32_t>& v);
  void SizeVector(const std::vector<std::size_t>& v);

  const std::string& buffer() const { return buf_; }

 private:
  std::string buf_;
};

// Every read is bounds-checked; a short or inconsistent buffer raises
// FormatError.
class BinaryReader {
 public:
  explicit BinaryReader(std::string_view data) : data_(data) {}

  std::uint32_t U32();
  std::int32_t I32() { return static_cast<std::int32_t>(U32()); }
  std::uint64_t U64();
  std::string_view Raw(std::size_t n);

  // `expected` (when given) must match the stored length.
  std::vector<std::int32_t> I32Vector(std::size_t expected = kAny);
  std::vector<std::size_t> SizeVector(std::size_t expected = kAny);

  std::size_t remaining() const { return data_.size() - pos_; }

  static constexpr std::size_t kAny = static_cast<std::size_t>(-1);

 private:
  std::size_t Length(std::size_t elem_size, std::size_t expected);

  std::string_view data_;
  std::size_t pos_ = 0;
};

std::uint64_t Fnv1a64(std::string_view bytes);

// Throws FormatError when `ok` is false.
void Require(bool ok, const char* what);

}  // namespace vfc
