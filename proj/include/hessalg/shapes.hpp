#pragma once
// Hessenberg spaces of gl_n encoded as column thresholds.
//
// A shape with thresholds (t_1, ..., t_n), non-decreasing in {0, ..., n},
// allows matrix entry (i, j) iff i <= t_j. The forbidden entries form a
// Young diagram drawn in French notation in the lower-left corner: column j
// holds n - t_j boxes, so t determines the conjugate partition of the
// diagram. For a strict shape t is the Hessenberg function h.

#include "field.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hessalg {

class YoungDiagram {
public:
  YoungDiagram() = default;
  /// Zero parts are dropped; parts must be non-increasing.
  explicit YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 0) throw Error("Young diagram with a negative part");
      if (k && parts_[k] > parts_[k - 1]) throw Error("Young diagram parts must be non-increasing");
    }
  }

  const std::vector<int> &parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  int boxes() const noexcept {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
  }

  YoungDiagram conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int x : parts_)
      for (int k = 0; k < x; ++k) ++c[static_cast<std::size_t>(k)];
    return YoungDiagram(std::move(c));
  }

  /// "2,1"; the empty diagram prints as "0".
  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(parts_[k]);
    }
    return s;
  }

  friend bool operator==(const YoungDiagram &, const YoungDiagram &) = default;

private:
  std::vector<int> parts_;
};

class HessShape {
public:
  /// Validates range and monotonicity.
  static HessShape from_thresholds(std::vector<int> t) {
    const int n = static_cast<int>(t.size());
    if (n < 1) throw Error("Hessenberg shape needs n >= 1");
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[j] < 0 || t[j] > n)
        throw Error("threshold " + std::to_string(t[j]) + " outside {0,...," + std::to_string(n) + "}");
      if (j && t[j] < t[j - 1]) throw Error("Hessenberg function must be non-decreasing");
    }
    return HessShape(std::move(t));
  }

  std::size_t n() const noexcept { return t_.size(); }
  /// t_j, 1-based.
  int threshold(std::size_t j) const { return t_.at(j - 1); }
  const std::vector<int> &thresholds() const noexcept { return t_; }

  /// Entry (i, j), 1-based, is allowed.
  bool allows(std::size_t i, std::size_t j) const { return static_cast<int>(i) <= threshold(j); }

  /// Contains the Borel subalgebra: t_j >= j for all j.
  bool is_strict() const noexcept {
    for (std::size_t j = 0; j < t_.size(); ++j)
      if (t_[j] < static_cast<int>(j + 1)) return false;
    return true;
  }

  /// Number of allowed entries (the dimension of the space).
  int cells() const noexcept {
    int s = 0;
    for (int x : t_) s += x;
    return s;
  }

  /// "h:2,3,3".
  std::string to_string() const {
    std::string s = "h:";
    for (std::size_t j = 0; j < t_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(t_[j]);
    }
    return s;
  }

  /// Rows of '*' (allowed) and '0' (forbidden), separated by '\n'.
  std::string mask_string() const {
    std::string s;
    for (std::size_t i = 1; i <= n(); ++i) {
      if (i > 1) s += '\n';
      for (std::size_t j = 1; j <= n(); ++j) s += allows(i, j) ? '*' : '0';
    }
    return s;
  }

  friend auto operator<=>(const HessShape &, const HessShape &) = default;
  friend bool operator==(const HessShape &, const HessShape &) = default;

private:
  explicit HessShape(std::vector<int> t) : t_(std::move(t)) {}
  std::vector<int> t_;
};

/// Accepts any non-decreasing vector in {0..n}^n; strictness is `is_strict()`.
inline HessShape shape_from_function(const std::vector<int> &h) { return HessShape::from_thresholds(h); }

inline YoungDiagram shape_to_diagram(const HessShape &s) {
  std::vector<int> columns;
  for (int t : s.thresholds()) columns.push_back(static_cast<int>(s.n()) - t);
  return YoungDiagram(std::move(columns)).conjugate();
}

inline HessShape shape_from_diagram(const YoungDiagram &d, std::size_t n) {
  if (d.parts().size() > n || (!d.empty() && static_cast<std::size_t>(d.parts().front()) > n))
    throw Error("diagram " + d.to_string() + " does not fit in the " + std::to_string(n) + "x" +
                std::to_string(n) + " box");
  auto columns = d.conjugate().parts();
  std::vector<int> t(n, static_cast<int>(n));
  for (std::size_t j = 0; j < columns.size(); ++j) t[j] = static_cast<int>(n) - columns[j];
  return HessShape::from_thresholds(std::move(t));
}

/// Mask containment.
inline bool shape_le(const HessShape &a, const HessShape &b) {
  if (a.n() != b.n()) throw Error("shape comparison: rank mismatch");
  for (std::size_t j = 1; j <= a.n(); ++j)
    if (a.threshold(j) > b.threshold(j)) return false;
  return true;
}

/// Mask flipped across the antidiagonal; the diagram is conjugated.
inline HessShape transpose_shape(const HessShape &s) {
  return shape_from_diagram(shape_to_diagram(s).conjugate(), s.n());
}

/// Pairs (i, j), i < j, with t_i >= j: the negative roots -a_i - ... - a_{j-1}
/// whose root spaces lie in the space.
inline std::vector<std::pair<int, int>> negative_root_set(const HessShape &s) {
  if (!s.is_strict()) throw Error("negative root set requires a strict shape");
  std::vector<std::pair<int, int>> roots;
  const int n = static_cast<int>(s.n());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (s.threshold(static_cast<std::size_t>(i)) >= j) roots.emplace_back(i, j);
  return roots;
}

/// All shapes of rank n in lexicographic order of t.
inline std::vector<HessShape> enumerate_shapes(std::size_t n, bool strict_only) {
  if (n < 1) throw Error("enumerate_shapes needs n >= 1");
  std::vector<HessShape> out;
  std::vector<int> t(n, 0);
  const int top = static_cast<int>(n);
  auto rec = [&](auto &&self, std::size_t j, int lo) -> void {
    if (j == n) {
      out.push_back(HessShape::from_thresholds(t));
      return;
    }
    int start = strict_only ? std::max(lo, static_cast<int>(j + 1)) : lo;
    for (int v = start; v <= top; ++v) {
      t[j] = v;
      self(self, j + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Covering relations of shape_le among enumerate_shapes(n, strict_only), as
/// index pairs (lower, upper) into that list, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> shape_hasse(std::size_t n, bool strict_only) {
  auto shapes = enumerate_shapes(n, strict_only);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < shapes.size(); ++a)
    for (std::size_t b = 0; b < shapes.size(); ++b) {
      if (a == b || !shape_le(shapes[a], shapes[b])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < shapes.size() && cover; ++c)
        if (c != a && c != b && shape_le(shapes[a], shapes[c]) && shape_le(shapes[c], shapes[b]))
          cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

/// Indices j < n with t_j = j.
inline std::vector<std::size_t> split_indices(const HessShape &s) {
  std::vector<std::size_t> js;
  for (std::size_t j = 1; j < s.n(); ++j)
    if (s.threshold(j) == static_cast<int>(j)) js.push_back(j);
  return js;
}

/// h1 = h restricted to [j], h2(i) = h(i+j) - j.
inline std::pair<HessShape, HessShape> split_shape(const HessShape &s, std::size_t j) {
  if (!s.is_strict()) throw Error("split_shape requires a strict shape");
  if (j < 1 || j >= s.n()) throw Error("split index must satisfy 1 <= j < n");
  if (s.threshold(j) != static_cast<int>(j))
    throw Error("cannot split " + s.to_string() + " at " + std::to_string(j) + ": t_j != j");
  std::vector<int> h1(s.thresholds().begin(), s.thresholds().begin() + static_cast<long>(j));
  std::vector<int> h2;
  for (std::size_t i = j + 1; i <= s.n(); ++i) h2.push_back(s.threshold(i) - static_cast<int>(j));
  return {HessShape::from_thresholds(std::move(h1)), HessShape::from_thresholds(std::move(h2))};
}

inline HessShape full_shape(std::size_t n) { return HessShape::from_thresholds(std::vector<int>(n, static_cast<int>(n))); }

inline HessShape borel_shape(std::size_t n) {
  std::vector<int> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = static_cast<int>(j + 1);
  return HessShape::from_thresholds(std::move(t));
}

/// h(i) = i + 1 for i < n.
inline HessShape peterson_shape(std::size_t n) {
  std::vector<int> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = static_cast<int>(std::min(j + 2, n));
  return HessShape::from_thresholds(std::move(t));
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw Error("bad integer '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

} // namespace detail

/// Parses "h:2,3,3" or "yd:2,1". The diagram form needs n; the function form
/// checks it when given.
inline HessShape parse_shape(std::string_view text, std::optional<std::size_t> n = std::nullopt) {
  if (text.starts_with("h:")) {
    auto s = shape_from_function(detail::parse_int_list(text.substr(2)));
    if (n && s.n() != *n)
      throw Error("shape '" + std::string(text) + "' has rank " + std::to_string(s.n()) + ", expected " +
                  std::to_string(*n));
    return s;
  }
  if (text.starts_with("yd:")) {
    if (!n) throw Error("diagram shape '" + std::string(text) + "' needs the rank n");
    return shape_from_diagram(YoungDiagram(detail::parse_int_list(text.substr(3))), *n);
  }
  throw Error("shape '" + std::string(text) + "' must start with 'h:' or 'yd:'");
}

} // namespace hessalg
