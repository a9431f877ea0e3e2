#pragma once
// Constructive certificates:
//  * witness flags separating strict Hessenberg varieties of a non-scalar operator,
//  * the antidiagonal involution gB -> w0 (g^T)^{-1} w0 B and its composition
//    with a similarity transform,
//  * the product decomposition of regular nilpotent Hessenberg varieties.

#include "similarity.hpp"
#include "varieties.hpp"

#include <array>

namespace hessalg {

/// The three conditions that make a flag a witness for the pair (i, j):
///  (1) X F_k is contained in F_k for k < i and for k > j,
///  (2) X F_i is contained in F_j,
///  (3) X F_i is not contained in F_{j-1}.
/// Such a flag lies in Hess(X, h) exactly when h(i) >= j.
struct LemmaCheck {
  bool stable_outside = false;
  bool image_within = false;
  bool image_escapes = false;

  bool verdict() const { return stable_outside && image_within && image_escapes; }
  std::array<bool, 3> as_array() const { return {stable_outside, image_within, image_escapes}; }
};

inline LemmaCheck check_lemma(const Matrix &x, const Matrix &flag, std::size_t i, std::size_t j) {
  const std::size_t n = flag.rows();
  if (!x.is_square() || x.rows() != n || !flag.is_square() || !(x.field() == flag.field()))
    throw Error("check_lemma: operator and flag sizes or fields disagree");
  if (i < 1 || i > j || j > n) throw Error("check_lemma: need 1 <= i <= j <= n");
  LemmaCheck out;
  out.stable_outside = true;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k >= i && k <= j) continue;
    auto fk = column_span_prefix(flag, k);
    if (!subspace_le(image_subspace(x, fk), fk)) {
      out.stable_outside = false;
      break;
    }
  }
  auto image = image_subspace(x, column_span_prefix(flag, i));
  out.image_within = subspace_le(image, column_span_prefix(flag, j));
  out.image_escapes = !subspace_le(image, column_span_prefix(flag, j - 1));
  return out;
}

/// A flag (as an invertible matrix) lying in Hess(X, h) iff h(i) >= j, for
/// the Jordan matrix of `x`.
///
/// With a Jordan block of size m > 1 (the first largest block, basis
/// b_1..b_m) and the remaining basis vectors o_1..o_{n-m} in order, set
/// v = (o_1, ..., o_{n-m}, b_3, ..., b_m, b_2, b_1). Then
///   i <= n-m:    columns v_1..v_{i-1}, b_2, v_i..v_{j-2}, b_1, v_{j-1}..v_{n-2}
///   i >  n-m:    columns o_1..o_{n-m}, b_1..b_{r-1}, b_{r+1}..b_{j-n+m}, b_r, b_{j-n+m+1}..b_m
///                with r = i-(n-m).
/// When X is diagonal, e_a and e_b (a = 1, b the first index with a different
/// eigenvalue) replace b_1 and b_2 and the column at position i is e_a + e_b.
/// Nilpotent-part witnesses are permutation matrices.
inline Matrix witness_flag(const JordanSpec &x, std::size_t i, std::size_t j) {
  const std::size_t n = x.n();
  if (i < 1 || i >= j || j > n) throw Error("witness pair must satisfy 1 <= i < j <= n");
  if (x.is_scalar()) throw Error("no witness exists for a scalar operator");
  const PrimeField f = x.field();

  const auto &blocks = x.blocks();
  const auto offsets = x.block_offsets();
  std::size_t big = 0;
  for (std::size_t k = 1; k < blocks.size(); ++k)
    if (blocks[k].size > blocks[big].size) big = k;

  std::vector<std::vector<std::int64_t>> cols;
  auto e = [&](std::size_t idx) {
    std::vector<std::int64_t> c(n, 0);
    c[idx - 1] = 1;
    return c;
  };

  if (blocks[big].size > 1) {
    const std::size_t m = static_cast<std::size_t>(blocks[big].size);
    const std::size_t s = offsets[big];
    auto b = [&](std::size_t r) { return s + r - 1; };
    std::vector<std::size_t> others;
    for (std::size_t k = 1; k <= n; ++k)
      if (k < s || k >= s + m) others.push_back(k);
    const std::size_t rest = others.size(); // n - m
    std::vector<std::size_t> v = others;
    for (std::size_t r = 3; r <= m; ++r) v.push_back(b(r));
    v.push_back(b(2));
    v.push_back(b(1));
    auto vk = [&](std::size_t k) { return v[k - 1]; };

    if (i <= rest) {
      for (std::size_t k = 1; k <= n; ++k) {
        if (k < i) cols.push_back(e(vk(k)));
        else if (k == i) cols.push_back(e(b(2)));
        else if (k < j) cols.push_back(e(vk(k - 1)));
        else if (k == j) cols.push_back(e(b(1)));
        else cols.push_back(e(vk(k - 2)));
      }
    } else {
      const std::size_t r = i - rest;
      for (std::size_t k = 1; k <= n; ++k) {
        if (k <= rest) cols.push_back(e(others[k - 1]));
        else if (k < i) cols.push_back(e(b(k - rest)));
        else if (k < j) cols.push_back(e(b(k - rest + 1)));
        else if (k == j) cols.push_back(e(b(r)));
        else cols.push_back(e(b(k - rest)));
      }
    }
  } else {
    std::size_t a = 1, bidx = 0;
    for (std::size_t k = 1; k < blocks.size(); ++k)
      if (blocks[k].eigenvalue != blocks[0].eigenvalue) {
        bidx = k + 1;
        break;
      }
    std::vector<std::size_t> others;
    for (std::size_t k = 1; k <= n; ++k)
      if (k != a && k != bidx) others.push_back(k);
    for (std::size_t k = 1; k <= n; ++k) {
      if (k < i) cols.push_back(e(others[k - 1]));
      else if (k == i) {
        auto c = e(a);
        c[bidx - 1] = 1;
        cols.push_back(c);
      } else if (k < j) cols.push_back(e(others[k - 2]));
      else if (k == j) cols.push_back(e(a));
      else cols.push_back(e(others[k - 3]));
    }
  }

  Matrix w = Matrix::from_columns(f, n, cols);
  if (!check_lemma(jordan_matrix(x), w, i, j).verdict())
    throw Error("internal: witness flag for (" + std::to_string(i) + "," + std::to_string(j) + ") fails the checks");
  return w;
}

/// "e4", "e1+e2", "2e1+e3".
inline std::string column_string(const Matrix &m, std::size_t col) {
  std::string s;
  for (std::size_t r = 1; r <= m.rows(); ++r) {
    auto v = m(r, col);
    if (!v) continue;
    if (!s.empty()) s += '+';
    if (v != 1) s += std::to_string(v);
    s += "e" + std::to_string(r);
  }
  return s.empty() ? "0" : s;
}

inline std::string columns_string(const Matrix &m) {
  std::string s = "[";
  for (std::size_t c = 1; c <= m.cols(); ++c) {
    if (c > 1) s += ',';
    s += column_string(m, c);
  }
  return s + "]";
}

struct WitnessCertificate {
  JordanSpec op;
  std::size_t i, j;
  Matrix witness;
  Flag flag;
  LemmaCheck checks;
  /// Membership of the witness in Hess(X, s) for every strict shape s of rank n.
  std::vector<std::pair<HessShape, bool>> memberships;
  /// Every membership equals the predicate t_i >= j.
  bool memberships_match = false;
  /// Set by certify_distinct: the shapes being separated.
  std::optional<std::pair<HessShape, HessShape>> separated;
  bool in_first = false, in_second = false;

  bool verified() const {
    bool ok = checks.verdict() && memberships_match;
    if (separated) ok = ok && (in_first != in_second);
    return ok;
  }
};

/// Builds the witness for (i, j) and checks it against every strict shape.
inline WitnessCertificate witness_certificate(const JordanSpec &x, std::size_t i, std::size_t j) {
  Matrix w = witness_flag(x, i, j);
  Matrix xm = jordan_matrix(x);
  WitnessCertificate cert{x, i, j, w, canonical_form(w), check_lemma(xm, w, i, j), {}, true, std::nullopt};
  for (auto &s : enumerate_shapes(x.n(), true)) {
    bool in = member(xm, s, cert.flag);
    cert.memberships.emplace_back(s, in);
    if (in != (s.threshold(i) >= static_cast<int>(j))) cert.memberships_match = false;
  }
  return cert;
}

/// Lexicographically least (i, j), i < j, where exactly one of the shapes has t_i >= j.
inline std::pair<std::size_t, std::size_t> separating_pair(const HessShape &a, const HessShape &b) {
  if (a.n() != b.n()) throw Error("shapes of different rank");
  for (std::size_t i = 1; i <= a.n(); ++i)
    for (std::size_t j = i + 1; j <= a.n(); ++j)
      if ((a.threshold(i) >= static_cast<int>(j)) != (b.threshold(i) >= static_cast<int>(j))) return {i, j};
  throw Error("shapes " + a.to_string() + " and " + b.to_string() + " have no separating pair");
}

/// Certificate that Hess(X, s1) != Hess(X, s2) for distinct strict shapes and
/// non-scalar X. The witness has entries in {0, 1}, so it certifies over any
/// field containing the eigenvalues of X.
inline WitnessCertificate certify_distinct(const JordanSpec &x, const HessShape &s1, const HessShape &s2) {
  if (s1 == s2) throw Error("certify_distinct: the shapes are equal");
  if (!s1.is_strict() || !s2.is_strict()) throw Error("certify_distinct: shapes must be strict");
  if (s1.n() != x.n() || s2.n() != x.n()) throw Error("certify_distinct: rank mismatch");
  if (x.is_scalar()) throw Error("certify_distinct: scalar operators give equal varieties");
  auto [i, j] = separating_pair(s1, s2);
  auto cert = witness_certificate(x, i, j);
  Matrix xm = jordan_matrix(x);
  cert.separated = std::make_pair(s1, s2);
  cert.in_first = member(xm, s1, cert.flag);
  cert.in_second = member(xm, s2, cert.flag);
  return cert;
}

/// gB -> w0 (g^T)^{-1} w0 B.
inline Flag involution_image(const Flag &f) {
  const PrimeField fld = f.rep().field();
  Matrix w0 = longest_element(f.n(), fld);
  return canonical_form(w0 * *inverse(f.rep().transpose()) * w0);
}

struct InvolutionReport {
  HessShape shape, partner;
  std::uint32_t p;
  std::uint64_t source_count = 0;
  /// |Hess(w0 X^T w0, partner)|.
  std::uint64_t flipped_count = 0;
  /// |Hess(X, partner)|.
  std::uint64_t partner_count = 0;
  /// The involution maps Hess(X, s) onto Hess(w0 X^T w0, partner).
  bool direct_bijection = false;
  /// P composed with the involution maps Hess(X, s) onto Hess(X, partner).
  bool composed_bijection = false;
  /// P with P (w0 X^T w0) P^{-1} = X.
  Matrix similarity;
  bool same_points = false;

  bool verified() const {
    return direct_bijection && composed_bijection && source_count == flipped_count && source_count == partner_count;
  }
};

namespace detail {
/// Whether `map` sends the points of `source` bijectively onto `target`.
template <class Map>
bool maps_onto(const FlagSpace &space, const FlagSet &source, const FlagSet &target, Map &&map) {
  if (source.count() != target.count()) return false;
  FlagSet image(space);
  for (auto id : source.ids()) {
    std::uint64_t to = map(space.flag(id)).id();
    if (!target.test(to) || image.test(to)) return false;
    image.set(to);
  }
  return image == target;
}
} // namespace detail

inline InvolutionReport verify_involution(const OperatorSpec &op, const HessShape &s, std::uint32_t p,
                                          const ComputeOptions &opt = {}) {
  if (op.n() != s.n()) throw Error("operator and shape have different rank");
  FlagSpace space(s.n(), p, opt.allow_large);
  const Matrix x = op.matrix(space.field());
  const Matrix flipped = antitranspose(x);
  const HessShape partner = transpose_shape(s);

  auto source = compute_point_sets(x, {s, partner}, space, opt.workers);
  auto flipped_set = compute_point_sets(flipped, {partner}, space, opt.workers).front();

  auto pmat = similarity_transform(flipped, x);
  if (!pmat) throw Error("internal: no similarity between X and its antitranspose");

  InvolutionReport rep{s, partner, p, source[0].count(), flipped_set.count(), source[1].count(),
                       false, false, *pmat, source[0] == source[1]};
  rep.direct_bijection = detail::maps_onto(space, source[0], flipped_set, [](const Flag &f) { return involution_image(f); });
  rep.composed_bijection = detail::maps_onto(space, source[0], source[1], [&](const Flag &f) {
    return canonical_form(*pmat * involution_image(f).rep());
  });
  return rep;
}

/// The flag [[f1, 0], [0, f2]].
inline Flag product_flag(const Flag &f1, const Flag &f2) {
  if (!(f1.rep().field() == f2.rep().field())) throw Error("product_flag: different fields");
  const std::size_t a = f1.n(), b = f2.n();
  Matrix g(a + b, a + b, f1.rep().field());
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t c = 0; c < a; ++c) g.raw(r, c) = f1.rep().raw(r, c);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) g.raw(a + r, a + c) = f2.rep().raw(r, c);
  return canonical_form(g);
}

/// Inverse of product_flag: F_k for k <= j, and F_{k+j}/F_j. Requires
/// F_j = span{e_1, ..., e_j}.
inline std::pair<Flag, Flag> split_flag(const Flag &f, std::size_t j) {
  const std::size_t n = f.n();
  if (j < 1 || j >= n) throw Error("split_flag: need 1 <= j < n");
  Matrix std_cols = Matrix::identity(n, f.rep().field()).columns(1, j);
  if (!(chain(f, j) == canonicalize_span(std_cols)))
    throw Error("split_flag: F_" + std::to_string(j) + " is not the span of the first standard basis vectors");
  return {canonical_form(f.rep().block(1, 1, j, j)), canonical_form(f.rep().block(j + 1, j + 1, n - j, n - j))};
}

struct DecompositionReport {
  HessShape shape;
  std::size_t split;
  HessShape first, second;
  std::uint32_t p;
  std::uint64_t count = 0, first_count = 0, second_count = 0;
  /// Pairs whose product lies in Hess(N, H) and splits back to the pair.
  std::uint64_t verified_pairs = 0;
  bool bijection = false;

  bool verified() const { return bijection && count == first_count * second_count && verified_pairs == count; }
};

/// Checks Hess(N, h) = Hess(N_1, h_1) x Hess(N_2, h_2) point by point, N
/// regular nilpotent. The split index defaults to the smallest j < n with t_j = j.
inline DecompositionReport verify_decomposition(const HessShape &s, std::uint32_t p,
                                                std::optional<std::size_t> split = std::nullopt,
                                                const ComputeOptions &opt = {}) {
  if (!s.is_strict()) throw Error("decomposition needs a strict shape");
  auto js = split_indices(s);
  if (js.empty()) throw Error("shape " + s.to_string() + " has no split index");
  std::size_t j = split.value_or(js.front());
  auto [h1, h2] = split_shape(s, j);

  FlagSpace whole(s.n(), p, opt.allow_large), left(j, p, opt.allow_large), right(s.n() - j, p, opt.allow_large);
  auto set = compute_point_sets(regular_nilpotent(s.n(), whole.field()), {s}, whole, opt.workers).front();
  auto set1 = compute_point_sets(regular_nilpotent(j, left.field()), {h1}, left, opt.workers).front();
  auto set2 = compute_point_sets(regular_nilpotent(s.n() - j, right.field()), {h2}, right, opt.workers).front();

  DecompositionReport rep{s, j, h1, h2, p, set.count(), set1.count(), set2.count(), 0, false};
  FlagSet image(whole);
  bool ok = true;
  auto ids2 = set2.ids();
  for (auto a : set1.ids()) {
    Flag f1 = left.flag(a);
    for (auto b : ids2) {
      Flag f2 = right.flag(b);
      Flag g = product_flag(f1, f2);
      if (!set.test(g.id()) || image.test(g.id())) {
        ok = false;
        continue;
      }
      auto [g1, g2] = split_flag(g, j);
      if (!(g1 == f1) || !(g2 == f2)) {
        ok = false;
        continue;
      }
      image.set(g.id());
      ++rep.verified_pairs;
    }
  }
  for (auto id : set.ids()) {
    Flag g = whole.flag(id);
    auto [g1, g2] = split_flag(g, j);
    if (!(product_flag(g1, g2) == g)) ok = false;
  }
  rep.bijection = ok && image == set;
  return rep;
}

/// Repeatedly splits at the smallest fixed point until every factor is indecomposable.
inline std::vector<HessShape> indecomposable_factors(const HessShape &s) {
  std::vector<HessShape> out;
  HessShape cur = s;
  while (true) {
    auto js = split_indices(cur);
    if (js.empty()) break;
    auto [a, b] = split_shape(cur, js.front());
    out.push_back(a);
    cur = b;
  }
  out.push_back(cur);
  return out;
}

struct IntervalReport {
  std::size_t n;
  std::vector<HessShape> decomposable, indecomposable;
  /// Strict shapes s with peterson <= s <= full.
  std::vector<HessShape> interval;
  bool matches() const { return indecomposable == interval; }
};

inline IntervalReport indecomposable_interval(std::size_t n) {
  if (n < 2) throw Error("indecomposable_interval needs n >= 2");
  IntervalReport rep{n, {}, {}, {}};
  const HessShape lo = peterson_shape(n), hi = full_shape(n);
  for (auto &s : enumerate_shapes(n, true)) {
    (split_indices(s).empty() ? rep.indecomposable : rep.decomposable).push_back(s);
    if (shape_le(lo, s) && shape_le(s, hi)) rep.interval.push_back(s);
  }
  return rep;
}

} // namespace hessalg
