#include "binary_io.h"

#include "vfc/errors.h"

namespace vfc {

void BinaryWriter::U32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void BinaryWriter::U64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void BinaryWriter::I32Vector(const std::vector<std::int32_t>& v) {
  U64(v.size());
  for (auto x : v) I32(x);
}

void BinaryWriter::SizeVector(const std::vector<std::size_t>& v) {
  U64(v.size());
  for (auto x : v) U64(x);
}

std::uint32_t BinaryReader::U32() {
  auto bytes = Raw(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
  }
  return v;
}

std::uint64_t BinaryReader::U64() {
  auto bytes = Raw(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
  }
  return v;
}

std::string_view BinaryReader::Raw(std::size_t n) {
  Require(n <= remaining(), "truncated index");
  auto out = data_.substr(pos_, n);
  pos_ += n;
  return out;
}

std::size_t BinaryReader::Length(std::size_t elem_size, std::size_t expected) {
  const std::uint64_t len = U64();
  Require(len <= remaining() / elem_size, "vector length exceeds file size");
  Require(expected == kAny || len == expected, "vector length mismatch");
  return static_cast<std::size_t>(len);
}

std::vector<std::int32_t> BinaryReader::I32Vector(std::size_t expected) {
  const auto len = Length(4, expected);
  std::vector<std::int32_t> out(len);
  for (auto& x : out) x = I32();
  return out;
}

std::vector<std::size_t> BinaryReader::SizeVector(std::size_t expected) {
  const auto len = Length(8, expected);
  std::vector<std::size_t> out(len);
  for (auto& x : out) x = static_cast<std::size_t>(U64());
  return out;
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void Require(bool ok, const char* what) {
  if (!ok) throw FormatError(what);
}

}  // namespace vfc
