#pragma once
// JSON, DOT and text renderings of results. Every object carries
// "schema": "hessalg/1" and keys appear in a fixed order, so identical
// inputs give byte-identical output.

#include "certificates.hpp"

#include <json.hpp>

#include <sstream>

namespace hessalg::report {

using Json = nlohmann::ordered_json;

inline constexpr const char *schema = "hessalg/1";

/// "(2,1)", or "∅" for the empty diagram.
inline std::string diagram_label(const HessShape &s) {
  auto d = shape_to_diagram(s);
  return d.empty() ? "∅" : "(" + d.to_string() + ")";
}

inline std::string vector_label(const std::vector<int> &v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

/// "-a1-a2" for the pair (1, 3).
inline std::string root_label(std::pair<int, int> r) {
  std::string s;
  for (int k = r.first; k < r.second; ++k) s += "-a" + std::to_string(k);
  return s;
}

inline std::string roots_label(const HessShape &s) {
  std::string out = "{";
  bool first = true;
  for (auto &r : negative_root_set(s)) {
    out += (first ? "" : ",") + root_label(r);
    first = false;
  }
  return out + "}";
}

inline std::string mask_row_form(const HessShape &s) {
  std::string m = s.mask_string();
  for (auto &c : m)
    if (c == '\n') c = '/';
  return m;
}

inline Json shapes_json(std::size_t n, bool strict_only) {
  Json out{{"schema", schema}, {"command", "shapes"}, {"n", n}, {"strict_only", strict_only}};
  Json rows = Json::array();
  for (auto &s : enumerate_shapes(n, strict_only)) {
    Json row{{"function", s.to_string()},
             {"diagram", "yd:" + shape_to_diagram(s).to_string()},
             {"strict", s.is_strict()},
             {"mask", Json::array()}};
    std::istringstream mask(s.mask_string());
    for (std::string line; std::getline(mask, line);) row["mask"].push_back(line);
    if (s.is_strict()) {
      Json roots = Json::array();
      for (auto &r : negative_root_set(s)) roots.push_back(root_label(r));
      row["negative_roots"] = roots;
    }
    rows.push_back(row);
  }
  out["shapes"] = rows;
  out["count"] = out["shapes"].size();
  return out;
}

/// One line per shape: function, mask rows, diagram and (strict only) M_H.
inline std::string shapes_text(std::size_t n, bool strict_only) {
  std::string out;
  for (auto &s : enumerate_shapes(n, strict_only)) {
    out += s.to_string() + "  mask=" + mask_row_form(s) + "  yd:" + shape_to_diagram(s).to_string();
    if (s.is_strict()) out += "  M_H=" + roots_label(s);
    out += "\n";
  }
  return out;
}

struct VarietyQuery {
  OperatorSpec op;
  HessShape shape;
  std::vector<std::uint32_t> primes;
  ComputeOptions options;
  /// Point lists longer than this are omitted (counts are always reported).
  std::uint64_t max_points = 1000;
};

inline Json variety_json(const VarietyQuery &q) {
  Json out{{"schema", schema},
           {"command", "variety"},
           {"operator", q.op.name()},
           {"n", q.shape.n()},
           {"shape", q.shape.to_string()},
           {"diagram", "yd:" + shape_to_diagram(q.shape).to_string()},
           {"strict", q.shape.is_strict()},
           {"over", "F_p"}};
  Json results = Json::array();
  std::vector<std::uint64_t> counts;
  for (auto p : q.primes) {
    auto v = compute_variety(q.op, q.shape, p, q.options);
    FlagSpace space(q.shape.n(), p, q.options.allow_large);
    Json r{{"p", p}, {"count", v.count()}};
    counts.push_back(v.count());
    if (v.count() <= q.max_points) {
      Json pts = Json::array();
      for (auto id : v.points.ids()) pts.push_back(space.flag(id).to_string());
      r["points"] = pts;
    } else {
      r["points_omitted"] = true;
    }
    results.push_back(r);
  }
  out["results"] = results;
  if (q.primes.size() >= 2) {
    const std::size_t n = q.shape.n();
    auto fit = interpolate_counts(q.primes, counts, n * (n - 1) / 2);
    if (fit)
      out["fit"] = Json{{"polynomial", fit->to_string()}, {"coefficients", fit->coeffs}, {"unique", fit->unique}};
    else
      out["fit"] = nullptr;
  }
  return out;
}

inline Json poset_json(const PosetPX &poset) {
  Json out{{"schema", schema},
           {"command", "poset"},
           {"operator", poset.op.name()},
           {"n", poset.n},
           {"p", poset.primes},
           {"over", "F_p"},
           {"strict_only", poset.strict_only}};
  Json classes = Json::array();
  for (auto &c : poset.classes) {
    Json shapes = Json::array();
    for (auto &s : c.shapes) shapes.push_back(s.to_string());
    classes.push_back(Json{{"name", c.name.to_string()},
                           {"diagram", "yd:" + shape_to_diagram(c.name).to_string()},
                           {"shapes", shapes},
                           {"count", c.counts}});
  }
  out["classes"] = classes;
  Json hasse = Json::array();
  for (auto [a, b] : poset.hasse)
    hasse.push_back(Json::array({poset.classes[a].name.to_string(), poset.classes[b].name.to_string()}));
  out["hasse"] = hasse;
  return out;
}

/// Graphviz digraph, one node per class, edges from smaller to larger variety.
inline std::string poset_dot(const PosetPX &poset) {
  std::string primes;
  for (std::size_t k = 0; k < poset.primes.size(); ++k) primes += (k ? "," : "") + std::to_string(poset.primes[k]);
  std::string out = "digraph P_X {\n";
  out += "  label=\"" + poset.op.name() + " over F_p, p in {" + primes + "}\";\n";
  out += "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < poset.classes.size(); ++c) {
    auto &cls = poset.classes[c];
    std::string lambdas;
    for (auto &s : cls.shapes) lambdas += (lambdas.empty() ? "" : "=") + diagram_label(s);
    std::string counts;
    for (std::size_t k = 0; k < cls.counts.size(); ++k) counts += (k ? "," : "") + std::to_string(cls.counts[k]);
    std::string label = "λ=" + lambdas + " | h=" + vector_label(cls.name.thresholds()) + " | #" + counts;
    if (cls.empty()) label = "∅-variety | " + label;
    out += "  c" + std::to_string(c) + " [label=\"" + label + "\"];\n";
  }
  for (auto [a, b] : poset.hasse) out += "  c" + std::to_string(a) + " -> c" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

inline std::string poset_text(const PosetPX &poset) {
  std::string out;
  for (auto &c : poset.classes) {
    out += c.name.to_string() + " :";
    for (auto &s : c.shapes) out += " " + diagram_label(s);
    out += "  #";
    for (std::size_t k = 0; k < c.counts.size(); ++k) out += (k ? "," : "") + std::to_string(c.counts[k]);
    out += "\n";
  }
  for (auto [a, b] : poset.hasse)
    out += poset.classes[a].name.to_string() + " < " + poset.classes[b].name.to_string() + "\n";
  return out;
}

inline Json witness_json(const WitnessCertificate &cert, const std::string &operator_name) {
  Json out{{"schema", schema}, {"command", "witness"}, {"operator", operator_name}};
  out["p"] = cert.op.field().modulus();
  out["pair"] = Json::array({cert.i, cert.j});
  Json cols = Json::array();
  for (std::size_t c = 1; c <= cert.witness.cols(); ++c) cols.push_back(column_string(cert.witness, c));
  out["flag_columns"] = cols;
  auto checks = cert.checks.as_array();
  out["lemma_checks"] = Json::array({checks[0], checks[1], checks[2]});
  Json mem = Json::object();
  for (auto &[s, in] : cert.memberships) mem[s.to_string()] = in;
  out["memberships"] = mem;
  if (cert.separated) {
    out["separates"] = Json::array({cert.separated->first.to_string(), cert.separated->second.to_string()});
    out["in_first"] = cert.in_first;
    out["in_second"] = cert.in_second;
  }
  out["field_independent"] = true;
  out["verified"] = cert.verified();
  return out;
}

inline Json involution_json(const InvolutionReport &r, const std::string &operator_name) {
  return Json{{"schema", schema},
              {"command", "involution"},
              {"operator", operator_name},
              {"p", r.p},
              {"shape", r.shape.to_string()},
              {"diagram", "yd:" + shape_to_diagram(r.shape).to_string()},
              {"partner", r.partner.to_string()},
              {"partner_diagram", "yd:" + shape_to_diagram(r.partner).to_string()},
              {"count", r.source_count},
              {"flipped_operator_count", r.flipped_count},
              {"partner_count", r.partner_count},
              {"direct_bijection", r.direct_bijection},
              {"composed_bijection", r.composed_bijection},
              {"similarity", r.similarity.to_string()},
              {"same_points", r.same_points},
              {"verified", r.verified()}};
}

inline Json decomposition_json(const DecompositionReport &r) {
  Json factors = Json::array();
  for (auto &s : indecomposable_factors(r.shape)) factors.push_back(s.to_string());
  return Json{{"schema", schema},
              {"command", "decompose"},
              {"operator", "regular nilpotent"},
              {"p", r.p},
              {"shape", r.shape.to_string()},
              {"split", r.split},
              {"factors", Json::array({r.first.to_string(), r.second.to_string()})},
              {"count", r.count},
              {"factor_counts", Json::array({r.first_count, r.second_count})},
              {"verified_pairs", r.verified_pairs},
              {"bijection", r.bijection},
              {"indecomposable_factors", factors},
              {"verified", r.verified()}};
}

inline Json interval_json(const IntervalReport &r) {
  auto list = [](const std::vector<HessShape> &v) {
    Json a = Json::array();
    for (auto &s : v) a.push_back(s.to_string());
    return a;
  };
  return Json{{"schema", schema},
              {"command", "interval"},
              {"n", r.n},
              {"bottom", peterson_shape(r.n).to_string()},
              {"top", full_shape(r.n).to_string()},
              {"indecomposable", list(r.indecomposable)},
              {"decomposable", list(r.decomposable)},
              {"interval", list(r.interval)},
              {"verified", r.matches()}};
}

inline Json failure_json(const std::string &command, const std::string &status, const std::string &message) {
  return Json{{"schema", schema}, {"command", command}, {"status", status}, {"message", message}};
}

} // namespace hessalg::report
