#pragma once
// Complete flags in F_p^n as canonical coset representatives of GL_n/B, their
// enumeration, and the two Hessenberg membership tests.

#include "shapes.hpp"
#include "subspace.hpp"

#include <bit>
#include <numeric>

namespace hessalg {

/// One-line notation, values 1..n.
using Permutation = std::vector<int>;

inline std::size_t inversions(const Permutation &w) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

inline bool is_permutation(const Permutation &w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int v : w) {
    if (v < 1 || static_cast<std::size_t>(v) > w.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

inline Permutation identity_permutation(std::size_t n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline Permutation longest_permutation(std::size_t n) {
  Permutation w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<int>(n - k);
  return w;
}

/// (u v)(k) = u(v(k)).
inline Permutation compose(const Permutation &u, const Permutation &v) {
  Permutation r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = u[static_cast<std::size_t>(v[k] - 1)];
  return r;
}

/// [n]_q! = prod_{k=1..n} (1 + q + ... + q^{k-1}).
inline std::uint64_t q_factorial(std::size_t n, std::uint64_t q) {
  std::uint64_t r = 1;
  std::uint64_t qint = 0, qpow = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    qint += qpow;
    qpow *= q;
    r *= qint;
  }
  return r;
}

/// A point of GL_n(F_p)/B. The representative is in canonical cell form:
/// column k has its lowest nonzero entry, equal to 1, in row w(k), and is
/// zero in the pivot rows of all earlier columns. Equal flags have equal
/// representatives.
class Flag {
public:
  std::size_t n() const noexcept { return rep_.rows(); }
  std::uint32_t p() const noexcept { return rep_.field().modulus(); }
  const Matrix &rep() const noexcept { return rep_; }
  const Permutation &cell() const noexcept { return cell_; }
  /// Position in the enumeration order of FlagSpace(n, p).
  std::uint64_t id() const noexcept { return id_; }

  /// Column list in pivot form, e.g. "[e4,e2,e5,e1,e6,e3]", followed by the
  /// nonzero free parameters as " {(row,col)=value,...}".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < cell_.size(); ++k) {
      if (k) s += ',';
      s += "e" + std::to_string(cell_[k]);
    }
    s += "]";
    std::string params;
    for (std::size_t c = 0; c < n(); ++c)
      for (std::size_t r = 0; r < n(); ++r) {
        if (static_cast<int>(r + 1) == cell_[c] || rep_.raw(r, c) == 0) continue;
        if (!params.empty()) params += ',';
        params += "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")=" + std::to_string(rep_.raw(r, c));
      }
    if (!params.empty()) s += " {" + params + "}";
    return s;
  }

  friend bool operator==(const Flag &a, const Flag &b) { return a.rep_ == b.rep_; }

  friend Flag canonical_form(const Matrix &g);

private:
  Flag(Matrix rep, Permutation cell, std::uint64_t id)
      : rep_(std::move(rep)), cell_(std::move(cell)), id_(id) {}

  Matrix rep_;
  Permutation cell_;
  std::uint64_t id_;
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Free parameter positions (0-based row, col) of a cell, in enumeration order.
inline std::vector<std::pair<std::size_t, std::size_t>> free_positions(const Permutation &w) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  std::vector<bool> used(w.size(), false);
  for (std::size_t c = 0; c < w.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(w[c] - 1);
    for (std::size_t r = 0; r < pivot; ++r)
      if (!used[r]) pos.emplace_back(r, c);
    used[pivot] = true;
  }
  return pos;
}

/// Number of flags in cells lexicographically before w.
inline std::uint64_t cell_offset(const Permutation &w, std::uint64_t p) {
  const std::size_t n = w.size();
  std::vector<int> remaining = identity_permutation(n);
  std::uint64_t offset = 0;
  std::size_t prefix_inv = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t tail = q_factorial(n - k - 1, p);
    std::size_t c = 0;
    for (; remaining[c] != w[k]; ++c) offset += ipow(p, prefix_inv + c) * tail;
    prefix_inv += c;
    remaining.erase(remaining.begin() + static_cast<long>(c));
  }
  return offset;
}

} // namespace detail

/// Canonical representative of the coset gB.
inline Flag canonical_form(const Matrix &g) {
  if (!g.is_square() || !is_invertible(g)) throw Error("canonical_form needs an invertible square matrix");
  const std::size_t n = g.rows();
  const PrimeField f = g.field();
  Matrix a = g;
  Permutation w(n);
  std::vector<std::size_t> pivot_row(n);
  std::vector<std::size_t> by_row; // earlier columns sorted by descending pivot row
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t prev : by_row) {
      std::uint32_t x = a.raw(pivot_row[prev], k);
      if (!x) continue;
      for (std::size_t r = 0; r <= pivot_row[prev]; ++r)
        a.raw(r, k) = f.sub(a.raw(r, k), f.mul(x, a.raw(r, prev)));
    }
    std::size_t r = n;
    while (r > 0 && a.raw(r - 1, k) == 0) --r;
    if (r == 0) throw Error("canonical_form: dependent columns");
    pivot_row[k] = r - 1;
    w[k] = static_cast<int>(r);
    std::uint32_t s = f.inv(a.raw(r - 1, k));
    for (std::size_t i = 0; i < r; ++i) a.raw(i, k) = f.mul(a.raw(i, k), s);
    auto at = std::find_if(by_row.begin(), by_row.end(),
                           [&](std::size_t c) { return pivot_row[c] < pivot_row[k]; });
    by_row.insert(at, k);
  }
  const std::uint64_t p = f.modulus();
  std::uint64_t id = detail::cell_offset(w, p);
  std::uint64_t local = 0;
  for (auto [r, c] : detail::free_positions(w)) local = local * p + a.raw(r, c);
  return Flag(std::move(a), std::move(w), id + local);
}

inline Flag permutation_flag(const Permutation &w, std::uint32_t p) {
  return canonical_form(permutation_matrix(w, PrimeField(p)));
}

struct FlagGuard {
  static constexpr std::size_t max_n = 6;
  static constexpr std::uint64_t max_flags = 2'000'000;
};

/// The finite flag variety GL_n(F_p)/B with a fixed enumeration order:
/// cells by permutation in lexicographic order, then free parameters in
/// lexicographic order (column-major positions, first position most
/// significant).
///
/// Guard rails: n <= 6, p in {2,3,5,7} and at most 2e6 flags unless
/// `allow_large` is set.
class FlagSpace {
public:
  FlagSpace(std::size_t n, std::uint32_t p, bool allow_large = false) : n_(n), f_(p) {
    if (n < 1) throw Error("flag space needs n >= 1");
    size_ = q_factorial(n, p);
    if (!allow_large) {
      if (n > FlagGuard::max_n) throw Error("n = " + std::to_string(n) + " exceeds the guard n <= 6");
      if (p != 2 && p != 3 && p != 5 && p != 7) throw Error("p = " + std::to_string(p) + " outside {2,3,5,7}");
      if (size_ > FlagGuard::max_flags)
        throw Error(std::to_string(size_) + " flags exceed the size guard of " +
                    std::to_string(FlagGuard::max_flags));
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return f_.modulus(); }
  PrimeField field() const noexcept { return f_; }
  std::uint64_t size() const noexcept { return size_; }

  Flag flag(std::uint64_t id) const {
    if (id >= size_) throw Error("flag id out of range");
    const std::uint64_t p = f_.modulus();
    std::vector<int> remaining = identity_permutation(n_);
    Permutation w;
    std::size_t prefix_inv = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint64_t tail = q_factorial(n_ - k - 1, p);
      std::size_t c = 0;
      while (true) {
        std::uint64_t block = detail::ipow(p, prefix_inv + c) * tail;
        if (id < block) break;
        id -= block;
        ++c;
      }
      w.push_back(remaining[c]);
      prefix_inv += c;
      remaining.erase(remaining.begin() + static_cast<long>(c));
    }
    Matrix g = permutation_matrix(w, f_);
    auto pos = detail::free_positions(w);
    for (std::size_t k = pos.size(); k-- > 0;) {
      g.raw(pos[k].first, pos[k].second) = static_cast<std::uint32_t>(id % p);
      id /= p;
    }
    return canonical_form(g);
  }

  std::vector<Flag> all() const {
    std::vector<Flag> out;
    out.reserve(size_);
    for (std::uint64_t id = 0; id < size_; ++id) out.push_back(flag(id));
    return out;
  }

private:
  std::size_t n_;
  PrimeField f_;
  std::uint64_t size_;
};

inline std::vector<Flag> enumerate_flags(std::size_t n, std::uint32_t p, bool allow_large = false) {
  return FlagSpace(n, p, allow_large).all();
}

/// F_k, the span of the first k columns.
inline Subspace chain(const Flag &f, std::size_t k) {
  if (k > f.n()) throw Error("chain index out of range");
  return column_span_prefix(f.rep(), k);
}

/// For each column j of g^{-1} X g, the row of its lowest nonzero entry
/// (0 for a zero column). The flag lies in Hess(X, s) iff this is <= t_j for all j.
inline std::vector<int> adjoint_profile(const Matrix &x, const Matrix &g) {
  Matrix ad = conjugate(x, g);
  std::vector<int> prof(ad.cols(), 0);
  for (std::size_t c = 0; c < ad.cols(); ++c)
    for (std::size_t r = ad.rows(); r > 0; --r)
      if (ad.raw(r - 1, c)) {
        prof[c] = static_cast<int>(r);
        break;
      }
  return prof;
}

inline bool profile_fits(const std::vector<int> &profile, const HessShape &s) {
  for (std::size_t j = 0; j < profile.size(); ++j)
    if (profile[j] > s.thresholds()[j]) return false;
  return true;
}

namespace detail {
inline void check_compatible(const Matrix &x, const HessShape &s, const Flag &f) {
  if (!x.is_square() || x.rows() != f.n() || s.n() != f.n() || !(x.field() == f.rep().field()))
    throw Error("operator, shape and flag sizes or fields disagree");
}
} // namespace detail

/// X F_j is contained in F_{t_j} for every j (F_0 = 0).
inline bool member(const Matrix &x, const HessShape &s, const Flag &f) {
  detail::check_compatible(x, s, f);
  for (std::size_t j = 1; j <= f.n(); ++j) {
    Subspace image = image_subspace(x, chain(f, j));
    if (!subspace_le(image, chain(f, static_cast<std::size_t>(s.threshold(j))))) return false;
  }
  return true;
}

/// g^{-1} X g lies in the mask of s, for g the flag's representative.
inline bool member_adjoint(const Matrix &x, const HessShape &s, const Flag &f) {
  detail::check_compatible(x, s, f);
  return profile_fits(adjoint_profile(x, f.rep()), s);
}

/// Membership bitmap over the enumeration order of FlagSpace(n, p).
class FlagSet {
public:
  FlagSet(std::size_t n, std::uint32_t p, std::uint64_t size)
      : n_(n), p_(p), size_(size), words_((size + 63) / 64, 0) {}
  explicit FlagSet(const FlagSpace &space) : FlagSet(space.n(), space.p(), space.size()) {}

  std::size_t n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return size_; }

  void set(std::uint64_t id) { words_.at(id / 64) |= std::uint64_t{1} << (id % 64); }
  bool test(std::uint64_t id) const { return (words_.at(id / 64) >> (id % 64)) & 1; }

  std::uint64_t count() const noexcept {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  std::vector<std::uint64_t> ids() const {
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (std::uint64_t w = words_[k]; w; w &= w - 1)
        out.push_back(k * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
    return out;
  }

  bool is_subset_of(const FlagSet &o) const {
    same_space(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  FlagSet &operator|=(const FlagSet &o) {
    same_space(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  friend bool operator==(const FlagSet &, const FlagSet &) = default;

private:
  void same_space(const FlagSet &o) const {
    if (n_ != o.n_ || p_ != o.p_) throw Error("flag sets over different flag spaces");
  }

  std::size_t n_;
  std::uint32_t p_;
  std::uint64_t size_;
  std::vector<std::uint64_t> words_;
};

} // namespace hessalg
