#pragma once

#include <cstdint>
#include <string_view>

namespace lpembed {

// splitmix64; the de-facto standard seed expander.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic child seed: master seed mixed with a label, so independent
// components never share streams and reruns reproduce bit-identically.
inline uint64_t derive_seed(uint64_t master, std::string_view label) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return splitmix64(master ^ splitmix64(h));
}

}  // namespace lpembed
