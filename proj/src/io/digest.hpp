#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

namespace tsbm {

// FNV-1a over a byte string, hex-encoded. Used to fingerprint inputs in run
// manifests, not for anything adversarial.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001B3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int nibble = 15; nibble >= 0; --nibble) {
    out[static_cast<std::size_t>(nibble)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

inline std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fnv1a_hex(bytes);
}

}  // namespace tsbm
