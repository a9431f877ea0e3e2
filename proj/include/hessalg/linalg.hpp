#pragma once
// Exact linear algebra over F_p: elimination, inverses, linear systems,
// conjugation, antidiagonal transpose and Jordan matrices.

#include "matrix.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace hessalg {

/// Gauss-Jordan elimination in place. Returns the 0-based pivot columns; the
/// result is the reduced row echelon form of the input.
inline std::vector<std::size_t> rref_in_place(Matrix &m) {
  const PrimeField f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.raw(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.raw(sel, c), m.raw(row, c));
    std::uint32_t s = f.inv(m.raw(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.raw(row, c) = f.mul(m.raw(row, c), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.raw(r, col) == 0) continue;
      std::uint32_t x = m.raw(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.raw(r, c) = f.sub(m.raw(r, c), f.mul(x, m.raw(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

inline std::optional<Matrix> inverse(const Matrix &g) {
  if (!g.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = g.rows();
  if (n == 0) return g;
  Matrix aug = g.hcat(Matrix::identity(n, g.field()));
  auto piv = rref_in_place(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.block(1, n + 1, n, n);
}

inline bool is_invertible(const Matrix &g) { return g.is_square() && rank(g) == g.rows(); }

/// Some X with a X = b, or nullopt when the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows()) throw Error("solve: row count mismatch");
  Matrix aug = a.hcat(b);
  auto piv = rref_in_place(aug);
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x.raw(piv[k], c) = aug.raw(k, a.cols() + c);
  }
  return x;
}

/// Basis (as columns) of the right null space {v : a v = 0}.
inline Matrix nullspace(const Matrix &a) {
  Matrix r = a;
  auto piv = rref_in_place(r);
  const PrimeField f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(a.cols(), free_cols.size(), f);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis.raw(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      basis.raw(piv[i], k) = f.neg(r.raw(i, free_cols[k]));
  }
  return basis;
}

/// g^{-1} X g.
inline Matrix conjugate(const Matrix &x, const Matrix &g) {
  if (!x.is_square() || x.rows() != g.rows() || !g.is_square())
    throw Error("conjugate: dimension mismatch");
  auto gi = inverse(g);
  if (!gi) throw Error("conjugate: singular matrix");
  return *gi * x * g;
}

/// Antidiagonal permutation matrix (the longest Weyl group element).
inline Matrix longest_element(std::size_t n, PrimeField f) {
  Matrix w(n, n, f);
  for (std::size_t k = 0; k < n; ++k) w.raw(k, n - 1 - k) = 1;
  return w;
}

/// Flip across the antidiagonal: (i, j) -> (n+1-j, n+1-i).
inline Matrix antitranspose(const Matrix &m) {
  if (!m.is_square()) throw Error("antitranspose of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix t(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) t.raw(n - 1 - c, n - 1 - r) = m.raw(r, c);
  return t;
}

/// Matrix of the permutation w (one-line notation, values 1..n): column k is e_{w(k)}.
inline Matrix permutation_matrix(const std::vector<int> &w, PrimeField f) {
  const std::size_t n = w.size();
  Matrix m(n, n, f);
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k] < 1 || static_cast<std::size_t>(w[k]) > n) throw Error("not a permutation");
    m.raw(static_cast<std::size_t>(w[k] - 1), k) = 1;
  }
  if (!is_invertible(m)) throw Error("not a permutation");
  return m;
}

struct JordanBlock {
  std::uint32_t eigenvalue;
  int size;
  friend auto operator<=>(const JordanBlock &, const JordanBlock &) = default;
};

/// Jordan data of an operator over F_p.
///
/// Blocks keep the order they were given in, which fixes the basis of
/// `jordan_matrix`. Equality compares the canonical key (blocks sorted by
/// eigenvalue, then descending size), so similar specs compare equal.
class JordanSpec {
public:
  JordanSpec(PrimeField f, std::vector<JordanBlock> blocks) : f_(f), blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw Error("Jordan spec without blocks");
    for (auto &b : blocks_) {
      if (b.size < 1) throw Error("Jordan block size must be positive");
      if (b.eigenvalue >= f.modulus())
        throw Error("eigenvalue " + std::to_string(b.eigenvalue) + " is not in F_" +
                    std::to_string(f.modulus()));
      n_ += static_cast<std::size_t>(b.size);
    }
  }

  PrimeField field() const noexcept { return f_; }
  std::size_t n() const noexcept { return n_; }
  const std::vector<JordanBlock> &blocks() const noexcept { return blocks_; }

  std::vector<JordanBlock> canonical_key() const {
    auto key = blocks_;
    std::sort(key.begin(), key.end(), [](const JordanBlock &a, const JordanBlock &b) {
      return std::tie(a.eigenvalue, b.size) < std::tie(b.eigenvalue, a.size);
    });
    return key;
  }

  /// A multiple of the identity.
  bool is_scalar() const {
    for (auto &b : blocks_)
      if (b.size > 1 || b.eigenvalue != blocks_.front().eigenvalue) return false;
    return true;
  }

  /// 1-based index of the first basis vector of each block.
  std::vector<std::size_t> block_offsets() const {
    std::vector<std::size_t> off;
    std::size_t at = 1;
    for (auto &b : blocks_) {
      off.push_back(at);
      at += static_cast<std::size_t>(b.size);
    }
    return off;
  }

  std::string to_string() const {
    std::string s = "jordan:";
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(blocks_[k].eigenvalue) + "^" + std::to_string(blocks_[k].size);
    }
    return s;
  }

  friend bool operator==(const JordanSpec &a, const JordanSpec &b) {
    return a.f_ == b.f_ && a.canonical_key() == b.canonical_key();
  }

private:
  PrimeField f_;
  std::vector<JordanBlock> blocks_;
  std::size_t n_ = 0;
};

/// Block-diagonal Jordan matrix with superdiagonal ones inside each block.
inline Matrix jordan_matrix(const JordanSpec &spec) {
  Matrix m(spec.n(), spec.n(), spec.field());
  std::size_t at = 0;
  for (auto &b : spec.blocks()) {
    for (int k = 0; k < b.size; ++k) {
      m.raw(at + k, at + k) = b.eigenvalue;
      if (k + 1 < b.size) m.raw(at + k, at + k + 1) = 1;
    }
    at += static_cast<std::size_t>(b.size);
  }
  return m;
}

/// Single nilpotent Jordan block: sum of E_{i,i+1}.
inline Matrix regular_nilpotent(std::size_t n, PrimeField f) {
  return jordan_matrix(JordanSpec(f, {{0, static_cast<int>(n)}}));
}

} // namespace hessalg
