#pragma once

// Small brute-force routines that share no code with the library.

#include <cstdint>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint32_t>;

inline std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Rank over F_p by plain elimination on a copy.
inline std::size_t rank(std::vector<Vec> rows, std::uint32_t p) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto inv = pow_mod(rows[r][c], p - 2, p);
    for (auto& e : rows[r]) e = static_cast<std::uint32_t>(std::uint64_t(e) * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] % p == 0) continue;
      const auto f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + std::uint64_t(p - f) * rows[r][j]) % p);
    }
    ++r;
  }
  return r;
}

/// All vectors of F_p^n, the i-th written in base p with the first coordinate most significant.
inline std::vector<Vec> all_vectors(std::size_t n, std::uint32_t p) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<Vec> out(total, Vec(n));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t d = n; d-- > 0;) {
      out[idx][d] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
  }
  return out;
}

/// Number of k x n matrices of rank k divided by |GL_k(F_p)|.
inline std::uint64_t grassmannian_size(std::size_t n, std::size_t k, std::uint32_t p) {
  const auto vecs = all_vectors(n, p);
  std::uint64_t full_rank = 0;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(vecs[i]);
    if (rank(rows, p) == k) ++full_rank;
    std::size_t d = k;
    while (d > 0 && ++idx[d - 1] == vecs.size()) idx[--d] = 0;
    if (d == 0) break;
  }
  std::uint64_t gl = 1;
  std::uint64_t pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    gl *= pk - pi;
    pi *= p;
  }
  return full_rank / gl;
}

/// x^T M y over F_p for a dense row-major n x n matrix.
inline std::uint32_t form(const std::vector<std::uint32_t>& m, const Vec& x, const Vec& y, std::uint32_t p) {
  const std::size_t n = x.size();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += std::uint64_t(x[i]) * m[i * n + j] % p * y[j];
  return static_cast<std::uint32_t>(acc % p);
}

/// Every alternating form on F_p^n as a dense matrix, indexed by its strict upper triangle.
inline std::vector<std::vector<std::uint32_t>> all_alternating(std::size_t n, std::uint32_t p) {
  const auto uppers = all_vectors(n * (n - 1) / 2, p);
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& up : uppers) {
    std::vector<std::uint32_t> m(n * n, 0);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++pos) {
        m[i * n + j] = up[pos];
        m[j * n + i] = (p - up[pos]) % p;
      }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace oracle
