#pragma once
// Rational canonical (Frobenius) form with an explicit change of basis, and
// the similarity transform built from it.

#include "subspace.hpp"

#include <optional>
#include <random>

namespace hessalg {

struct FrobeniusForm {
  /// Block diagonal of companion matrices, largest invariant factor first.
  Matrix form;
  /// Columns are the cyclic bases; basis^{-1} A basis = form.
  Matrix basis;
  /// Monic invariant factors, coefficients low degree first (leading 1 included).
  std::vector<std::vector<std::uint32_t>> invariant_factors;
};

namespace detail {

/// Dimension of the Krylov space of v under a.
inline std::size_t krylov_dim(const Matrix &a, const Matrix &v) {
  Matrix k = v;
  Matrix cur = v;
  std::size_t d = rank(k);
  if (d == 0) return 0;
  while (true) {
    cur = a * cur;
    Matrix next = k.hcat(cur);
    std::size_t r = rank(next);
    if (r == d) return d;
    k = std::move(next);
    d = r;
  }
}

/// Degree of the minimal polynomial of a.
inline std::size_t minpoly_degree(const Matrix &a) {
  const std::size_t m = a.rows();
  const PrimeField f = a.field();
  Matrix powers(m * m, 0, f);
  Matrix cur = Matrix::identity(m, f);
  for (std::size_t d = 0;; ++d) {
    Matrix vec(m * m, 1, f);
    for (std::size_t k = 0; k < m * m; ++k) vec.raw(k, 0) = cur.data()[k];
    Matrix next = powers.hcat(vec);
    if (rank(next) == d) return d;
    powers = std::move(next);
    cur = cur * a;
  }
}

/// A vector whose Krylov space has dimension `target` (the minimal
/// polynomial degree). Tries unit vectors, then seeded random vectors, then
/// falls back to exhaustive search.
inline Matrix maximal_vector(const Matrix &a, std::size_t target) {
  const std::size_t m = a.rows();
  const PrimeField f = a.field();
  for (std::size_t i = 1; i <= m; ++i) {
    Matrix e = Matrix::unit(m, i, f);
    if (krylov_dim(a, e) == target) return e;
  }
  std::mt19937_64 rng(0x5eed5eedULL + m);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.modulus() - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix v(m, 1, f);
    for (std::size_t r = 0; r < m; ++r) v.raw(r, 0) = dist(rng);
    if (krylov_dim(a, v) == target) return v;
  }
  Matrix v(m, 1, f);
  while (true) {
    std::size_t r = 0;
    while (r < m && v.raw(r, 0) == f.modulus() - 1) v.raw(r++, 0) = 0;
    if (r == m) break;
    v.raw(r, 0) += 1;
    if (krylov_dim(a, v) == target) return v;
  }
  throw Error("internal: no vector attains the minimal polynomial degree");
}

} // namespace detail

inline FrobeniusForm frobenius_form(const Matrix &a) {
  if (!a.is_square()) throw Error("Frobenius form of a non-square matrix");
  const std::size_t n = a.rows();
  const PrimeField f = a.field();

  FrobeniusForm out{Matrix(n, n, f), Matrix(n, 0, f), {}};
  Matrix embed = Matrix::identity(n, f); // columns span the current invariant subspace
  Matrix op = a;                         // a restricted to it, in those coordinates
  std::size_t placed = 0;

  while (op.rows() > 0) {
    const std::size_t m = op.rows();
    const std::size_t d = detail::minpoly_degree(op);
    Matrix v = detail::maximal_vector(op, d);

    Matrix krylov = v;
    Matrix cur = v;
    for (std::size_t k = 1; k < d; ++k) {
      cur = op * cur;
      krylov = krylov.hcat(cur);
    }
    Matrix last = op * cur;
    auto coeffs = solve(krylov, last);
    if (!coeffs) throw Error("internal: Krylov relation not found");

    std::vector<std::uint32_t> factor(d + 1);
    for (std::size_t k = 0; k < d; ++k) factor[k] = f.neg(coeffs->raw(k, 0));
    factor[d] = 1;
    out.invariant_factors.push_back(factor);

    for (std::size_t k = 0; k < d; ++k) {
      if (k + 1 < d) out.form.raw(placed + k + 1, placed + k) = 1;
      out.form.raw(placed + k, placed + d - 1) = coeffs->raw(k, 0);
    }
    out.basis = out.basis.hcat(embed * krylov);
    placed += d;
    if (d == m) break;

    // Invariant complement: kernel of the functional rows f, f.op, ..., f.op^{d-1}
    // where f(op^k v) = [k == d-1].
    Matrix target(d, 1, f);
    target.raw(d - 1, 0) = 1;
    auto functional = solve(krylov.transpose(), target);
    if (!functional) throw Error("internal: dual functional not found");
    Matrix row = functional->transpose();
    Matrix conditions = row;
    for (std::size_t k = 1; k < d; ++k) {
      row = row * op;
      Matrix stacked(conditions.rows() + 1, m, f);
      for (std::size_t r = 0; r < conditions.rows(); ++r)
        for (std::size_t c = 0; c < m; ++c) stacked.raw(r, c) = conditions.raw(r, c);
      for (std::size_t c = 0; c < m; ++c) stacked.raw(conditions.rows(), c) = row.raw(0, c);
      conditions = std::move(stacked);
    }
    Matrix complement = nullspace(conditions);
    auto restricted = solve(complement, op * complement);
    if (!restricted) throw Error("internal: complement is not invariant");
    embed = embed * complement;
    op = std::move(*restricted);
  }

  if (!(a * out.basis == out.basis * out.form)) throw Error("internal: Frobenius basis check failed");
  return out;
}

/// Invertible P with P a P^{-1} = b, or nullopt when a and b are not similar.
inline std::optional<Matrix> similarity_transform(const Matrix &a, const Matrix &b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows() || !(a.field() == b.field()))
    throw Error("similarity: matrices must be square of the same size and field");
  FrobeniusForm fa = frobenius_form(a);
  FrobeniusForm fb = frobenius_form(b);
  if (!(fa.form == fb.form)) return std::nullopt;
  // a = Qa C Qa^{-1}, b = Qb C Qb^{-1}  =>  P = Qb Qa^{-1}.
  Matrix p = fb.basis * *inverse(fa.basis);
  if (!(p * a == b * p)) throw Error("internal: similarity transform check failed");
  return p;
}

} // namespace hessalg
