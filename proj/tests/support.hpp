#pragma once

#include "hessalg/hessalg.hpp"
#include "oracle.hpp"

#include <random>

namespace support {

inline oracle::IntMatrix to_int(const hessalg::Matrix &m) {
  oracle::IntMatrix out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<int>(m.raw(r, c));
  return out;
}

inline hessalg::Matrix from_int(const oracle::IntMatrix &m, hessalg::PrimeField f) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto &r : m) rows.emplace_back(r.begin(), r.end());
  return hessalg::Matrix::from_rows(f, rows);
}

inline hessalg::Matrix random_matrix(std::size_t rows, std::size_t cols, hessalg::PrimeField f, std::mt19937 &rng) {
  hessalg::Matrix m(rows, cols, f);
  std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.raw(r, c) = d(rng);
  return m;
}

inline hessalg::Matrix random_invertible(std::size_t n, hessalg::PrimeField f, std::mt19937 &rng) {
  while (true) {
    auto g = random_matrix(n, n, f, rng);
    if (hessalg::is_invertible(g)) return g;
  }
}

} // namespace support
