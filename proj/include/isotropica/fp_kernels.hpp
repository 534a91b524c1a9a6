#pragma once

// Allocation-free helpers over F_p for the hot loops of exhaustive scans. Matrices are raw
// row-major buffers of canonical residues; callers own the storage.

#include <cstddef>
#include <cstdint>
#include <utility>

namespace isotropica::fp {

inline std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

/// Rank of a rows x cols matrix; destroys the buffer.
inline std::size_t rank_in_place(std::uint32_t* m, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t c = col; c < cols; ++c) std::swap(m[piv * cols + c], m[rank * cols + c]);
    const std::uint32_t inv = inverse(m[rank * cols + col], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint32_t a = m[r * cols + col];
      if (a == 0) continue;
      const std::uint32_t factor = a * inv % p;
      for (std::size_t c = col; c < cols; ++c) {
        m[r * cols + c] = (m[r * cols + c] + (p - factor) * m[rank * cols + c]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace isotropica::fp
