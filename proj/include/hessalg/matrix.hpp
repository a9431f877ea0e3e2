#pragma once

#include "field.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hessalg {

/// Dense matrix over a prime field.
///
/// The public accessors `operator()(i, j)` and `set(i, j, v)` are 1-based
/// (row i, column j), matching how matrices are written on paper. `raw(r, c)`
/// is the unchecked 0-based accessor used by the algorithms in this library.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, PrimeField f)
      : rows_(rows), cols_(cols), f_(f), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n, PrimeField f) {
    Matrix m(n, n, f);
    for (std::size_t k = 0; k < n; ++k) m.raw(k, k) = 1 % f.modulus();
    return m;
  }

  static Matrix from_rows(PrimeField f,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> v;
    for (auto &r : rows) v.emplace_back(r);
    return from_rows(f, v);
  }

  static Matrix from_rows(PrimeField f, const std::vector<std::vector<std::int64_t>> &rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), nc, f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != nc) throw Error("ragged matrix rows");
      for (std::size_t c = 0; c < nc; ++c) m.raw(r, c) = f.reduce(rows[r][c]);
    }
    return m;
  }

  /// Builds an n x k matrix from k column vectors of length n.
  static Matrix from_columns(PrimeField f, std::size_t n,
                             const std::vector<std::vector<std::int64_t>> &cols) {
    Matrix m(n, cols.size(), f);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != n) throw Error("column of wrong length");
      for (std::size_t r = 0; r < n; ++r) m.raw(r, c) = f.reduce(cols[c][r]);
    }
    return m;
  }

  /// Standard basis vector e_i (1-based) of length n, as an n x 1 matrix.
  static Matrix unit(std::size_t n, std::size_t i, PrimeField f) {
    Matrix m(n, 1, f);
    m.set(i, 1, 1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  PrimeField field() const noexcept { return f_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return raw(i - 1, j - 1);
  }
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    check_index(i, j);
    raw(i - 1, j - 1) = f_.reduce(v);
  }
  Scalar at(std::size_t i, std::size_t j) const { return {(*this)(i, j), f_}; }

  std::uint32_t &raw(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::uint32_t raw(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<const std::uint32_t> data() const noexcept { return data_; }

  /// Column j (1-based) as an n x 1 matrix.
  Matrix column(std::size_t j) const { return columns(j, 1); }

  /// `count` consecutive columns starting at column `first` (1-based).
  Matrix columns(std::size_t first, std::size_t count) const {
    if (first == 0 || first - 1 + count > cols_) throw Error("column range out of bounds");
    Matrix m(rows_, count, f_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) m.raw(r, c) = raw(r, first - 1 + c);
    return m;
  }

  /// Rectangular block, 1-based top-left corner.
  Matrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const {
    if (row == 0 || col == 0 || row - 1 + nrows > rows_ || col - 1 + ncols > cols_)
      throw Error("block out of bounds");
    Matrix m(nrows, ncols, f_);
    for (std::size_t r = 0; r < nrows; ++r)
      for (std::size_t c = 0; c < ncols; ++c) m.raw(r, c) = raw(row - 1 + r, col - 1 + c);
    return m;
  }

  bool is_zero() const noexcept {
    for (auto v : data_)
      if (v) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, f_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.raw(c, r) = raw(r, c);
    return t;
  }

  /// Horizontal concatenation [*this | other].
  Matrix hcat(const Matrix &other) const {
    same_field(other);
    if (other.rows_ != rows_) throw Error("hcat: row count mismatch");
    Matrix m(rows_, cols_ + other.cols_, f_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m.raw(r, c) = raw(r, c);
      for (std::size_t c = 0; c < other.cols_; ++c) m.raw(r, cols_ + c) = other.raw(r, c);
    }
    return m;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    a.same_field(b);
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    Matrix m(a.rows_, b.cols_, a.f_);
    const std::uint64_t p = a.f_.modulus();
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        std::uint64_t x = a.raw(r, k);
        if (!x) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          m.raw(r, c) = static_cast<std::uint32_t>((m.raw(r, c) + x * b.raw(k, c)) % p);
      }
    return m;
  }

  friend Matrix operator+(const Matrix &a, const Matrix &b) {
    a.same_shape(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.f_.add(a.data_[k], b.data_[k]);
    return m;
  }

  friend Matrix operator-(const Matrix &a, const Matrix &b) {
    a.same_shape(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.f_.sub(a.data_[k], b.data_[k]);
    return m;
  }

  friend Matrix operator*(std::int64_t s, const Matrix &a) {
    Matrix m = a;
    std::uint32_t v = a.f_.reduce(s);
    for (auto &x : m.data_) x = a.f_.mul(x, v);
    return m;
  }

  friend bool operator==(const Matrix &, const Matrix &) = default;

  /// Rows separated by ';', entries by ','. Round-trips through the CLI grammar.
  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) s += ';';
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += ',';
        s += std::to_string(raw(r, c));
      }
    }
    return s;
  }

private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0 || i > rows_ || j > cols_)
      throw Error("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  void same_field(const Matrix &o) const {
    if (!(f_ == o.f_)) throw Error("matrices over different fields");
  }
  void same_shape(const Matrix &o) const {
    same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  PrimeField f_;
  std::vector<std::uint32_t> data_;
};

} // namespace hessalg
