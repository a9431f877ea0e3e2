#pragma once

#include "linalg.hpp"

namespace hessalg {

/// A subspace of F_p^n stored by its canonical basis: reduced column echelon
/// form. Column k has its topmost nonzero entry (the pivot) equal to 1 in row
/// pivot(k); pivot rows strictly increase and every other basis column is
/// zero in a pivot row. Equal subspaces therefore have identical bases.
class Subspace {
public:
  static Subspace zero(std::size_t n, PrimeField f) { return Subspace(Matrix(n, 0, f), {}); }
  static Subspace full(std::size_t n, PrimeField f) {
    std::vector<std::size_t> piv(n);
    for (std::size_t k = 0; k < n; ++k) piv[k] = k;
    return Subspace(Matrix::identity(n, f), std::move(piv));
  }

  std::size_t ambient() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  PrimeField field() const noexcept { return basis_.field(); }
  const Matrix &basis() const noexcept { return basis_; }
  /// 0-based pivot row of each basis column.
  const std::vector<std::size_t> &pivots() const noexcept { return pivots_; }

  /// Whether the column vector v (n x 1) lies in the subspace.
  bool contains(const Matrix &v) const {
    if (v.rows() != ambient() || v.cols() != 1 || !(v.field() == field()))
      throw Error("subspace membership: vector does not match ambient space");
    return contains_column(v, 0);
  }

  /// Whether column c (0-based) of m lies in the subspace.
  bool contains_column(const Matrix &m, std::size_t c) const {
    const PrimeField f = field();
    std::vector<std::uint32_t> w(ambient());
    for (std::size_t r = 0; r < ambient(); ++r) w[r] = m.raw(r, c);
    for (std::size_t k = 0; k < dim(); ++k) {
      std::uint32_t x = w[pivots_[k]];
      if (!x) continue;
      for (std::size_t r = pivots_[k]; r < ambient(); ++r)
        w[r] = f.sub(w[r], f.mul(x, basis_.raw(r, k)));
    }
    for (auto x : w)
      if (x) return false;
    return true;
  }

  friend bool operator==(const Subspace &a, const Subspace &b) { return a.basis_ == b.basis_; }

  friend Subspace canonicalize_span(const Matrix &cols);

private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of the column span of `cols` (n x k, any k).
inline Subspace canonicalize_span(const Matrix &cols) {
  Matrix rows = cols.transpose();
  auto piv = rref_in_place(rows);
  Matrix basis(cols.rows(), piv.size(), cols.field());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t r = 0; r < cols.rows(); ++r) basis.raw(r, k) = rows.raw(k, r);
  return Subspace(std::move(basis), std::move(piv));
}

/// A is contained in B.
inline bool subspace_le(const Subspace &a, const Subspace &b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw Error("subspace comparison: ambient space or field mismatch");
  if (a.dim() > b.dim()) return false;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!b.contains_column(a.basis(), k)) return false;
  return true;
}

/// X V.
inline Subspace image_subspace(const Matrix &x, const Subspace &v) {
  if (!x.is_square() || x.rows() != v.ambient() || !(x.field() == v.field()))
    throw Error("image: operator does not act on the subspace's ambient space");
  return canonicalize_span(x * v.basis());
}

/// Span of the first k columns of g.
inline Subspace column_span_prefix(const Matrix &g, std::size_t k) {
  if (k == 0) return Subspace::zero(g.rows(), g.field());
  return canonicalize_span(g.columns(1, k));
}

} // namespace hessalg
