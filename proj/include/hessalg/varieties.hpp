#pragma once
// Hessenberg varieties over F_p as explicit point sets, the containment poset
// of varieties for a fixed operator, and point-count polynomials.
//
// Equality and containment computed here are statements about F_p-points for
// the primes used; they are evidence about the complex varieties, not proofs.

#include "flags.hpp"

#include <map>
#include <numeric>
#include <thread>
#include <variant>

namespace hessalg {

/// An eigenvalue written as an integer (reduced mod p) or as a symbol a, b,
/// c, ... that is assigned a field value when a prime is chosen.
struct EigenTerm {
  std::variant<std::int64_t, char> value;
  int size;
};

/// An operator X in gl_n, either as Jordan data or as a raw matrix.
///
/// Grammar: "jordan:<eig>^<size>,..." and "matrix:<r1>;<r2>;..." with rows
/// of comma separated integers. Symbols are assigned, in order of first
/// appearance, the smallest residues not used by integer eigenvalues; an
/// error is raised when p is too small to keep them distinct.
class OperatorSpec {
public:
  static OperatorSpec parse(std::string_view text) {
    OperatorSpec op;
    op.name_ = std::string(text);
    if (text.starts_with("jordan:")) {
      std::string_view body = text.substr(7);
      std::size_t pos = 0;
      while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
        std::size_t caret = tok.find('^');
        if (caret == std::string_view::npos) throw Error("Jordan term '" + std::string(tok) + "' lacks '^size'");
        std::string_view eig = tok.substr(0, caret);
        auto sizes = detail::parse_int_list(tok.substr(caret + 1));
        if (sizes.size() != 1 || sizes[0] < 1) throw Error("bad Jordan block size in '" + std::string(tok) + "'");
        EigenTerm term{std::int64_t{0}, sizes[0]};
        if (eig.size() == 1 && eig[0] >= 'a' && eig[0] <= 'z') {
          term.value = eig[0];
        } else {
          std::int64_t v = 0;
          auto [end, ec] = std::from_chars(eig.data(), eig.data() + eig.size(), v);
          if (eig.empty() || ec != std::errc() || end != eig.data() + eig.size())
            throw Error("bad eigenvalue '" + std::string(eig) + "'");
          term.value = v;
        }
        op.terms_.push_back(term);
        op.n_ += static_cast<std::size_t>(sizes[0]);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      if (op.terms_.empty()) throw Error("empty Jordan spec");
      return op;
    }
    if (text.starts_with("matrix:")) {
      std::string_view body = text.substr(7);
      std::vector<std::vector<std::int64_t>> rows;
      std::size_t pos = 0;
      while (true) {
        std::size_t semi = body.find(';', pos);
        auto row = detail::parse_int_list(body.substr(pos, semi == std::string_view::npos ? body.size() - pos : semi - pos));
        rows.emplace_back(row.begin(), row.end());
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
      }
      for (auto &r : rows)
        if (r.size() != rows.size()) throw Error("operator matrix must be square");
      op.rows_ = std::move(rows);
      op.n_ = op.rows_.size();
      return op;
    }
    throw Error("operator '" + std::string(text) + "' must start with 'jordan:' or 'matrix:'");
  }

  static OperatorSpec from_jordan(const JordanSpec &spec) {
    OperatorSpec op = parse(spec.to_string());
    return op;
  }

  static OperatorSpec from_matrix(const Matrix &m) { return parse("matrix:" + m.to_string()); }

  const std::string &name() const noexcept { return name_; }
  std::size_t n() const noexcept { return n_; }
  bool is_jordan() const noexcept { return !terms_.empty(); }

  JordanSpec jordan_spec(PrimeField f) const {
    if (!is_jordan()) throw Error("operator '" + name_ + "' is not given by Jordan data");
    std::vector<bool> used(f.modulus(), false);
    for (auto &t : terms_)
      if (auto v = std::get_if<std::int64_t>(&t.value)) used[f.reduce(*v)] = true;
    std::map<char, std::uint32_t> symbols;
    std::uint32_t next = 0;
    std::vector<JordanBlock> blocks;
    for (auto &t : terms_) {
      std::uint32_t value;
      if (auto v = std::get_if<std::int64_t>(&t.value)) {
        value = f.reduce(*v);
      } else {
        char sym = std::get<char>(t.value);
        auto it = symbols.find(sym);
        if (it == symbols.end()) {
          while (next < f.modulus() && used[next]) ++next;
          if (next >= f.modulus())
            throw Error("F_" + std::to_string(f.modulus()) + " is too small for distinct eigenvalues in '" + name_ + "'");
          used[next] = true;
          it = symbols.emplace(sym, next).first;
        }
        value = it->second;
      }
      blocks.push_back({value, t.size});
    }
    return JordanSpec(f, std::move(blocks));
  }

  Matrix matrix(PrimeField f) const {
    if (is_jordan()) return jordan_matrix(jordan_spec(f));
    return Matrix::from_rows(f, rows_);
  }

  friend bool operator==(const OperatorSpec &a, const OperatorSpec &b) { return a.name_ == b.name_; }

private:
  OperatorSpec() = default;

  std::string name_;
  std::size_t n_ = 0;
  std::vector<EigenTerm> terms_;
  std::vector<std::vector<std::int64_t>> rows_;
};

struct ComputeOptions {
  unsigned workers = 1;
  bool allow_large = false;
};

/// Point sets of Hess(x, s) for every shape, in one pass over the flags.
/// Workers scan disjoint id ranges; the merged bitmaps do not depend on the
/// worker count.
inline std::vector<FlagSet> compute_point_sets(const Matrix &x, const std::vector<HessShape> &shapes,
                                               const FlagSpace &space, unsigned workers = 1) {
  if (!x.is_square() || x.rows() != space.n() || !(x.field() == space.field()))
    throw Error("operator does not act on the flag space");
  for (auto &s : shapes)
    if (s.n() != space.n()) throw Error("shape rank differs from the flag space");
  workers = std::max(1u, workers);
  const std::uint64_t total = space.size();
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<FlagSet> local(shapes.size(), FlagSet(space));
    for (std::uint64_t id = begin; id < end; ++id) {
      auto prof = adjoint_profile(x, space.flag(id).rep());
      for (std::size_t k = 0; k < shapes.size(); ++k)
        if (profile_fits(prof, shapes[k])) local[k].set(id);
    }
    return local;
  };
  if (workers == 1 || total < 2 * workers) return scan(0, total);

  std::vector<std::vector<FlagSet>> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] { parts[w] = scan(begin, end); });
  }
  for (auto &t : pool) t.join();
  std::vector<FlagSet> merged(shapes.size(), FlagSet(space));
  for (auto &part : parts)
    for (std::size_t k = 0; k < shapes.size(); ++k) merged[k] |= part[k];
  return merged;
}

struct Variety {
  OperatorSpec op;
  HessShape shape;
  std::uint32_t p;
  FlagSet points;

  std::uint64_t count() const { return points.count(); }
};

inline Variety compute_variety(const OperatorSpec &op, const HessShape &s, std::uint32_t p,
                               const ComputeOptions &opt = {}) {
  if (op.n() != s.n()) throw Error("operator and shape have different rank");
  FlagSpace space(s.n(), p, opt.allow_large);
  auto sets = compute_point_sets(op.matrix(space.field()), {s}, space, opt.workers);
  return {op, s, p, std::move(sets.front())};
}

enum class Containment { equal, properly_contained, properly_contains, incomparable };

inline std::string to_string(Containment c) {
  switch (c) {
  case Containment::equal: return "equal";
  case Containment::properly_contained: return "properly-contained";
  case Containment::properly_contains: return "properly-contains";
  case Containment::incomparable: return "incomparable";
  }
  return "?";
}

inline Containment compare(const Variety &a, const Variety &b) {
  if (!(a.op == b.op) || a.p != b.p || a.shape.n() != b.shape.n())
    throw Error("compare: varieties have different operator, prime or rank");
  bool le = a.points.is_subset_of(b.points), ge = b.points.is_subset_of(a.points);
  if (le && ge) return Containment::equal;
  if (le) return Containment::properly_contained;
  if (ge) return Containment::properly_contains;
  return Containment::incomparable;
}

struct EquivalenceClass {
  /// Lexicographically least member shape.
  HessShape name;
  std::vector<HessShape> shapes;
  /// Point count at each prime of the poset, same order.
  std::vector<std::uint64_t> counts;
  std::vector<FlagSet> points;

  bool empty() const {
    return std::all_of(counts.begin(), counts.end(), [](auto c) { return c == 0; });
  }
};

/// Containment poset of the varieties Hess(X, H) over all shapes H.
struct PosetPX {
  OperatorSpec op;
  std::size_t n;
  std::vector<std::uint32_t> primes;
  bool strict_only;
  std::vector<EquivalenceClass> classes;
  /// order[a][b]: class a is contained in class b (at every prime).
  std::vector<std::vector<bool>> order;
  /// Covering pairs (lower, upper), indices into classes, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
};

/// Covering pairs of a partial order given as a relation matrix.
inline std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>> &le) {
  const std::size_t m = le.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !le[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < m && cover; ++c)
        if (c != a && c != b && le[a][c] && le[c][b]) cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

/// Shapes are X-equivalent when their point sets agree at every given prime.
inline PosetPX build_poset(const OperatorSpec &op, const std::vector<std::uint32_t> &primes, bool strict_only,
                           const ComputeOptions &opt = {}) {
  if (primes.empty()) throw Error("build_poset needs at least one prime");
  const std::size_t n = op.n();
  auto shapes = enumerate_shapes(n, strict_only);
  std::vector<std::vector<FlagSet>> sets; // [prime][shape]
  for (auto p : primes) {
    FlagSpace space(n, p, opt.allow_large);
    sets.push_back(compute_point_sets(op.matrix(space.field()), shapes, space, opt.workers));
  }

  PosetPX poset{op, n, primes, strict_only, {}, {}, {}};
  std::vector<std::size_t> rep; // shape index representing each class
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    std::size_t cls = rep.size();
    for (std::size_t c = 0; c < rep.size() && cls == rep.size(); ++c) {
      bool same = true;
      for (std::size_t k = 0; k < primes.size() && same; ++k) same = sets[k][s] == sets[k][rep[c]];
      if (same) cls = c;
    }
    if (cls == rep.size()) {
      rep.push_back(s);
      EquivalenceClass ec{shapes[s], {}, {}, {}};
      for (std::size_t k = 0; k < primes.size(); ++k) {
        ec.counts.push_back(sets[k][s].count());
        ec.points.push_back(sets[k][s]);
      }
      poset.classes.push_back(std::move(ec));
    }
    poset.classes[cls].shapes.push_back(shapes[s]);
  }

  const std::size_t m = poset.classes.size();
  poset.order.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      bool le = true;
      for (std::size_t k = 0; k < primes.size() && le; ++k)
        le = poset.classes[a].points[k].is_subset_of(poset.classes[b].points[k]);
      poset.order[a][b] = le;
    }
  poset.hasse = transitive_reduction(poset.order);
  return poset;
}

inline std::vector<std::vector<HessShape>> x_equivalence_classes(const OperatorSpec &op,
                                                                 const std::vector<std::uint32_t> &primes,
                                                                 bool strict_only, const ComputeOptions &opt = {}) {
  std::vector<std::vector<HessShape>> out;
  for (auto &c : build_poset(op, primes, strict_only, opt).classes) out.push_back(c.shapes);
  return out;
}

inline std::vector<std::uint64_t> point_counts(const OperatorSpec &op, const HessShape &s,
                                               const std::vector<std::uint32_t> &primes,
                                               const ComputeOptions &opt = {}) {
  std::vector<std::uint64_t> counts;
  for (auto p : primes) counts.push_back(compute_variety(op, s, p, opt).count());
  return counts;
}

/// Integer polynomial in q, coefficients low degree first.
struct PolynomialFit {
  std::vector<std::int64_t> coeffs;
  /// No other polynomial of degree <= bound with non-negative integer
  /// coefficients fits the data (or the data determine the fit outright).
  bool unique = false;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  std::int64_t evaluate(std::int64_t q) const {
    std::int64_t v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * q + coeffs[k];
    return v;
  }

  /// "q^2+2q+1"; the zero polynomial is "0".
  std::string to_string() const {
    std::string s;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      std::int64_t c = coeffs[k];
      if (c == 0) continue;
      if (!s.empty()) s += c < 0 ? "-" : "+";
      else if (c < 0) s += "-";
      std::int64_t a = c < 0 ? -c : c;
      if (a != 1 || k == 0) s += std::to_string(a);
      if (k >= 1) s += "q";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const PolynomialFit &, const PolynomialFit &) = default;
};

namespace detail {

struct Rational {
  __int128 num = 0, den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  Rational normalized() const {
    Rational r = *this;
    if (r.den < 0) r.num = -r.num, r.den = -r.den;
    __int128 g = gcd(r.num, r.den);
    if (g > 1) r.num /= g, r.den /= g;
    return r;
  }
  friend Rational operator+(Rational a, Rational b) { return Rational{a.num * b.den + b.num * a.den, a.den * b.den}.normalized(); }
  friend Rational operator-(Rational a, Rational b) { return Rational{a.num * b.den - b.num * a.den, a.den * b.den}.normalized(); }
  friend Rational operator*(Rational a, Rational b) { return Rational{a.num * b.num, a.den * b.den}.normalized(); }
  friend Rational operator/(Rational a, Rational b) { return Rational{a.num * b.den, a.den * b.num}.normalized(); }
};

/// Coefficients of the unique polynomial of degree < k through k points.
inline std::vector<Rational> newton_interpolate(const std::vector<std::pair<std::int64_t, std::int64_t>> &pts) {
  const std::size_t k = pts.size();
  std::vector<Rational> dd(k);
  for (std::size_t i = 0; i < k; ++i) dd[i] = {pts[i].second, 1};
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational{pts[i].first - pts[i - level].first, 1};
  // Horner on the Newton form: c(q) = dd0 + (q - x0)(dd1 + (q - x1)(...)).
  std::vector<Rational> coeffs(k, Rational{0, 1});
  for (std::size_t i = k; i-- > 0;) {
    std::vector<Rational> next(k, Rational{0, 1});
    for (std::size_t d = 0; d + 1 < k; ++d) {
      next[d + 1] = next[d + 1] + coeffs[d];
      next[d] = next[d] - coeffs[d] * Rational{pts[i].first, 1};
    }
    next[0] = next[0] + dd[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

inline void nonnegative_fits(const std::vector<std::pair<std::int64_t, std::int64_t>> &pts, std::size_t degree,
                             std::vector<__int128> &residual, std::vector<std::int64_t> &coeffs,
                             std::vector<std::vector<std::int64_t>> &found, std::uint64_t &budget) {
  if (budget == 0 || found.size() > 1) return;
  --budget;
  // Sum of c_k q^k with c_k >= 0 is non-decreasing in q.
  for (std::size_t a = 0; a + 1 < pts.size(); ++a)
    if (residual[a] < 0 || residual[a] > residual[a + 1]) return;
  if (degree == 0) {
    for (std::size_t a = 1; a < pts.size(); ++a)
      if (residual[a] != residual[0]) return;
    coeffs[0] = static_cast<std::int64_t>(residual[0]);
    found.push_back(coeffs);
    return;
  }
  __int128 limit = residual[0];
  for (std::size_t a = 0; a < pts.size(); ++a) {
    __int128 qp = 1;
    for (std::size_t e = 0; e < degree; ++e) qp *= pts[a].first;
    limit = std::min(limit, residual[a] / qp);
  }
  for (__int128 c = limit; c >= 0; --c) {
    std::vector<__int128> next = residual;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      __int128 qp = 1;
      for (std::size_t e = 0; e < degree; ++e) qp *= pts[a].first;
      next[a] -= c * qp;
    }
    coeffs[degree] = static_cast<std::int64_t>(c);
    nonnegative_fits(pts, degree - 1, next, coeffs, found, budget);
    if (budget == 0 || found.size() > 1) return;
  }
}

} // namespace detail

/// Integer polynomial of degree <= degree_bound through (q, count) points,
/// or nullopt (no fit).
///
/// With more points than the bound the fit is the interpolating polynomial
/// and is unique. Otherwise candidates are restricted to non-negative
/// coefficients, which point counts of varieties paved by affine cells have;
/// `unique` reports whether exactly one such candidate exists.
inline std::optional<PolynomialFit> interpolate(std::vector<std::pair<std::int64_t, std::int64_t>> pts,
                                                std::size_t degree_bound) {
  if (pts.empty()) return std::nullopt;
  std::sort(pts.begin(), pts.end());
  for (std::size_t a = 1; a < pts.size(); ++a)
    if (pts[a].first == pts[a - 1].first) throw Error("interpolate: repeated abscissa");

  std::optional<PolynomialFit> base;
  {
    auto rc = detail::newton_interpolate(pts);
    bool integral = std::all_of(rc.begin(), rc.end(), [](const detail::Rational &r) { return r.den == 1; });
    if (integral) {
      PolynomialFit fit;
      for (auto &r : rc) fit.coeffs.push_back(static_cast<std::int64_t>(r.num));
      while (!fit.coeffs.empty() && fit.coeffs.back() == 0) fit.coeffs.pop_back();
      if (fit.coeffs.empty() || fit.degree() <= degree_bound) base = fit;
    }
  }
  if (pts.size() > degree_bound) {
    if (base) base->unique = true;
    return base;
  }

  std::vector<__int128> residual;
  for (auto &pt : pts) residual.push_back(pt.second);
  std::vector<std::int64_t> coeffs(degree_bound + 1, 0);
  std::vector<std::vector<std::int64_t>> found;
  std::uint64_t budget = 2'000'000;
  if (pts.front().first >= 2) detail::nonnegative_fits(pts, degree_bound, residual, coeffs, found, budget);
  if (found.size() == 1 && budget > 0) {
    PolynomialFit fit{found.front(), true};
    while (!fit.coeffs.empty() && fit.coeffs.back() == 0) fit.coeffs.pop_back();
    return fit;
  }
  if (!base && !found.empty()) base = PolynomialFit{found.front(), false};
  if (base) {
    base->unique = false;
    while (!base->coeffs.empty() && base->coeffs.back() == 0) base->coeffs.pop_back();
  }
  return base;
}

inline std::optional<PolynomialFit> interpolate_counts(const std::vector<std::uint32_t> &primes,
                                                       const std::vector<std::uint64_t> &counts,
                                                       std::size_t degree_bound) {
  if (primes.size() != counts.size()) throw Error("interpolate: primes and counts differ in length");
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::size_t k = 0; k < primes.size(); ++k)
    pts.emplace_back(primes[k], static_cast<std::int64_t>(counts[k]));
  return interpolate(std::move(pts), degree_bound);
}

/// Every similarity class of operators on F_p^n with all eigenvalues in F_p,
/// as canonical Jordan specs (eigenvalue ascending, block sizes descending).
inline std::vector<JordanSpec> jordan_types(std::size_t n, std::uint32_t p, bool include_scalar = false) {
  const PrimeField f(p);
  std::vector<JordanSpec> out;
  std::vector<JordanBlock> blocks;
  // Eigenvalue ev takes multiplicity m, split into a partition of m.
  auto rec = [&](auto &&self, std::uint32_t ev, std::size_t remaining) -> void {
    if (remaining == 0) {
      JordanSpec spec(f, blocks);
      if (include_scalar || !spec.is_scalar()) out.push_back(std::move(spec));
      return;
    }
    if (ev >= p) return;
    auto parts = [&](auto &&pself, std::size_t m, int cap) -> void {
      if (m == 0) {
        self(self, ev + 1, remaining);
        return;
      }
      for (int s = std::min(cap, static_cast<int>(m)); s >= 1; --s) {
        blocks.push_back({ev, s});
        remaining -= static_cast<std::size_t>(s);
        pself(pself, m - static_cast<std::size_t>(s), s);
        remaining += static_cast<std::size_t>(s);
        blocks.pop_back();
      }
    };
    for (std::size_t m = remaining + 1; m-- > 0;) parts(parts, m, static_cast<int>(m));
  };
  rec(rec, 0, n);
  return out;
}

} // namespace hessalg
