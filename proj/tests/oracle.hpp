#pragma once
// Brute-force reference implementations for tests. Nothing here uses the
// library: vectors of F_p^n are encoded as integers in base p (coordinate k
// is digit k), subspaces as membership bitmaps over all p^n vectors, and
// flags as chains of such bitmaps.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>; // row-major, entries in [0, p)
using Space = std::vector<bool>;                 // membership bitmap
using Chain = std::vector<Space>;                // F_1, ..., F_n

struct Field {
  int p;
  int n;
  int size() const {
    int s = 1;
    for (int k = 0; k < n; ++k) s *= p;
    return s;
  }
  std::vector<int> decode(int code) const {
    std::vector<int> v(n);
    for (int k = 0; k < n; ++k, code /= p) v[k] = code % p;
    return v;
  }
  int encode(const std::vector<int> &v) const {
    int code = 0;
    for (int k = n; k-- > 0;) code = code * p + ((v[k] % p) + p) % p;
    return code;
  }
  int add(int a, int b) const {
    auto x = decode(a), y = decode(b);
    for (int k = 0; k < n; ++k) x[k] += y[k];
    return encode(x);
  }
  int scale(int c, int a) const {
    auto x = decode(a);
    for (auto &e : x) e *= c;
    return encode(x);
  }
  int apply(const IntMatrix &m, int a) const {
    auto x = decode(a);
    std::vector<int> y(n, 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) y[r] += m[r][c] * x[c];
    return encode(y);
  }

  Space zero_space() const {
    Space s(size(), false);
    s[0] = true;
    return s;
  }

  /// Closure of `s` together with `v` under addition and scaling.
  Space extend(const Space &s, int v) const {
    Space out = s;
    for (int a = 0; a < size(); ++a)
      if (s[a])
        for (int c = 0; c < p; ++c) out[add(a, scale(c, v))] = true;
    return out;
  }

  Space span(const std::vector<int> &vs) const {
    Space s = zero_space();
    for (int v : vs) s = extend(s, v);
    return s;
  }

  /// All full flags, by extending chains one vector at a time.
  std::set<Chain> all_flags() const {
    std::set<Chain> level{Chain{}};
    for (int k = 0; k < n; ++k) {
      std::set<Chain> next;
      for (auto &ch : level) {
        const Space base = ch.empty() ? zero_space() : ch.back();
        for (int v = 1; v < size(); ++v) {
          if (base[v]) continue;
          Chain c = ch;
          c.push_back(extend(base, v));
          next.insert(std::move(c));
        }
      }
      level = std::move(next);
    }
    return level;
  }

  /// X F_j inside F_{t_j} for all j, with F_0 = 0.
  bool member(const IntMatrix &x, const std::vector<int> &t, const Chain &ch) const {
    for (int j = 0; j < n; ++j) {
      const Space target = t[j] == 0 ? zero_space() : ch[t[j] - 1];
      for (int a = 0; a < size(); ++a)
        if (ch[j][a] && !target[apply(x, a)]) return false;
    }
    return true;
  }

  /// Chain spanned by the columns of g.
  Chain chain_of_columns(const IntMatrix &g) const {
    Chain ch;
    std::vector<int> cols;
    for (int c = 0; c < n; ++c) {
      std::vector<int> v(n);
      for (int r = 0; r < n; ++r) v[r] = g[r][c];
      cols.push_back(encode(v));
      ch.push_back(span(cols));
    }
    return ch;
  }
};

inline int det(IntMatrix m, int p) {
  const int n = static_cast<int>(m.size());
  auto inv = [p](int a) {
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) return b;
    return 0;
  };
  int d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] % p) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = (p - d) % p;
    }
    d = d * m[c][c] % p;
    int ic = inv(m[c][c]);
    for (int r = c + 1; r < n; ++r) {
      int factor = m[r][c] * ic % p;
      for (int k = c; k < n; ++k) m[r][k] = ((m[r][k] - factor * m[c][k]) % p + p) % p;
    }
  }
  return d;
}

inline IntMatrix multiply(const IntMatrix &a, const IntMatrix &b, int p) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

/// Calls `fn` on every n x n matrix over F_p.
inline void for_each_matrix(int n, int p, const std::function<void(const IntMatrix &)> &fn) {
  IntMatrix m(n, std::vector<int>(n, 0));
  const int cells = n * n;
  std::vector<int> digits(cells, 0);
  while (true) {
    for (int k = 0; k < cells; ++k) m[k / n][k % n] = digits[k];
    fn(m);
    int k = 0;
    while (k < cells && ++digits[k] == p) digits[k++] = 0;
    if (k == cells) break;
  }
}

/// Some invertible g with g a = b g.
inline bool similar(const IntMatrix &a, const IntMatrix &b, int p) {
  bool found = false;
  const int n = static_cast<int>(a.size());
  for_each_matrix(n, p, [&](const IntMatrix &g) {
    if (found) return;
    if (multiply(g, a, p) == multiply(b, g, p) && det(g, p) != 0) found = true;
  });
  return found;
}

inline long long count_invertible(int n, int p) {
  long long c = 0;
  for_each_matrix(n, p, [&](const IntMatrix &g) { c += det(g, p) != 0; });
  return c;
}

} // namespace oracle
