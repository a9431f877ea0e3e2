// hessalg command-line front end.
//
// Exit codes: 0 success or verified, 1 verification failure, 2 usage error.
// Failures print a JSON record with "status" and "message".

#include "hessalg/hessalg.hpp"
#include "hessalg/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using hessalg::report::Json;

constexpr int exit_ok = 0;
constexpr int exit_unverified = 1;
constexpr int exit_usage = 2;

struct UsageError : hessalg::Error {
  using hessalg::Error::Error;
};

struct RunConfig {
  std::string command;
  std::optional<std::size_t> n;
  std::vector<std::uint32_t> primes;
  std::string op;
  std::vector<std::string> shapes;
  bool strict_only = false;
  std::string out;
  std::string format;
  unsigned workers = 1;
  bool allow_large = false;
  std::size_t i = 0, j = 0;
  std::optional<std::size_t> split;
  std::uint64_t max_points = 1000;
};

void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + cfg.out + "'");
  f << text;
}

void emit(const RunConfig &cfg, const Json &j) { emit(cfg, j.dump(2) + "\n"); }

hessalg::ComputeOptions options(const RunConfig &cfg) { return {cfg.workers, cfg.allow_large}; }

void require_format(const RunConfig &cfg, std::initializer_list<const char *> allowed) {
  for (auto *a : allowed)
    if (cfg.format == a) return;
  throw UsageError("format '" + cfg.format + "' is not available for '" + cfg.command + "'");
}

hessalg::OperatorSpec parse_operator(const RunConfig &cfg) {
  if (cfg.op.empty()) throw UsageError("--x is required");
  auto op = hessalg::OperatorSpec::parse(cfg.op);
  if (cfg.n && *cfg.n != op.n())
    throw UsageError("operator has size " + std::to_string(op.n()) + " but --n is " + std::to_string(*cfg.n));
  return op;
}

hessalg::HessShape parse_one_shape(const RunConfig &cfg, std::optional<std::size_t> n) {
  if (cfg.shapes.size() != 1) throw UsageError("exactly one --h is required");
  return hessalg::parse_shape(cfg.shapes.front(), n ? n : cfg.n);
}

std::vector<std::uint32_t> primes_or(const RunConfig &cfg, std::vector<std::uint32_t> fallback) {
  return cfg.primes.empty() ? fallback : cfg.primes;
}

std::uint32_t single_prime(const RunConfig &cfg) {
  auto ps = primes_or(cfg, {2});
  if (ps.size() != 1) throw UsageError("'" + cfg.command + "' takes a single --p");
  return ps.front();
}

int run_shapes(const RunConfig &cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  if (cfg.format.empty() || cfg.format == "text")
    emit(cfg, hessalg::report::shapes_text(*cfg.n, cfg.strict_only));
  else {
    require_format(cfg, {"json"});
    emit(cfg, hessalg::report::shapes_json(*cfg.n, cfg.strict_only));
  }
  return exit_ok;
}

int run_variety(const RunConfig &cfg) {
  require_format(cfg, {"", "json"});
  auto op = parse_operator(cfg);
  hessalg::report::VarietyQuery q{op, parse_one_shape(cfg, op.n()), primes_or(cfg, {2}), options(cfg),
                                  cfg.max_points};
  emit(cfg, hessalg::report::variety_json(q));
  return exit_ok;
}

int run_poset(const RunConfig &cfg) {
  auto op = parse_operator(cfg);
  auto poset = hessalg::build_poset(op, primes_or(cfg, {2}), cfg.strict_only, options(cfg));
  if (cfg.format.empty() || cfg.format == "json")
    emit(cfg, hessalg::report::poset_json(poset));
  else if (cfg.format == "dot")
    emit(cfg, hessalg::report::poset_dot(poset));
  else {
    require_format(cfg, {"text"});
    emit(cfg, hessalg::report::poset_text(poset));
  }
  return exit_ok;
}

// Smallest listed prime able to give every symbolic eigenvalue its own value.
std::uint32_t witness_prime(const RunConfig &cfg, const hessalg::OperatorSpec &op) {
  if (!cfg.primes.empty()) {
    if (cfg.primes.size() != 1) throw UsageError("'witness' takes a single --p");
    return cfg.primes.front();
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    try {
      op.jordan_spec(hessalg::PrimeField(p));
      return p;
    } catch (const hessalg::Error &) {
    }
  }
  throw UsageError("operator needs more distinct eigenvalues than any default prime supplies; pass --p");
}

int run_witness(const RunConfig &cfg) {
  require_format(cfg, {"", "json"});
  auto op = parse_operator(cfg);
  if (!op.is_jordan()) throw UsageError("witness needs a jordan: operator");
  auto x = op.jordan_spec(hessalg::PrimeField(witness_prime(cfg, op)));
  hessalg::WitnessCertificate cert = [&] {
    if (cfg.shapes.size() == 2) {
      auto a = hessalg::parse_shape(cfg.shapes[0], op.n()), b = hessalg::parse_shape(cfg.shapes[1], op.n());
      return hessalg::certify_distinct(x, a, b);
    }
    if (!cfg.shapes.empty()) throw UsageError("witness takes either --i/--j or two --h shapes");
    if (cfg.i == 0 || cfg.j == 0) throw UsageError("--i and --j are required");
    return hessalg::witness_certificate(x, cfg.i, cfg.j);
  }();
  emit(cfg, hessalg::report::witness_json(cert, op.name()));
  return cert.verified() ? exit_ok : exit_unverified;
}

int run_involution(const RunConfig &cfg) {
  require_format(cfg, {"", "json"});
  auto op = parse_operator(cfg);
  auto r = hessalg::verify_involution(op, parse_one_shape(cfg, op.n()), single_prime(cfg), options(cfg));
  emit(cfg, hessalg::report::involution_json(r, op.name()));
  return r.verified() ? exit_ok : exit_unverified;
}

int run_decompose(const RunConfig &cfg) {
  require_format(cfg, {"", "json"});
  auto s = parse_one_shape(cfg, cfg.n);
  auto r = hessalg::verify_decomposition(s, single_prime(cfg), cfg.split, options(cfg));
  emit(cfg, hessalg::report::decomposition_json(r));
  return r.verified() ? exit_ok : exit_unverified;
}

int run_interval(const RunConfig &cfg) {
  require_format(cfg, {"", "json"});
  if (!cfg.n) throw UsageError("--n is required");
  auto r = hessalg::indecomposable_interval(*cfg.n);
  emit(cfg, hessalg::report::interval_json(r));
  return r.matches() ? exit_ok : exit_unverified;
}

int fail(const std::string &command, int code, const std::string &message) {
  std::cout << hessalg::report::failure_json(command, code == exit_usage ? "usage-error" : "failure", message).dump(2)
            << "\n";
  std::cerr << "hessalg: " << message << "\n";
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hessenberg varieties over prime fields: point sets, posets and certificates"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_n = [&](CLI::App *c) { c->add_option("--n", cfg.n, "rank n")->check(CLI::Range(1, 64)); };
  auto add_x = [&](CLI::App *c) { c->add_option("--x", cfg.op, "operator: jordan:<eig>^<size>,... or matrix:<rows>"); };
  auto add_h = [&](CLI::App *c) { c->add_option("--h", cfg.shapes, "shape: h:<function> or yd:<diagram>"); };
  auto add_p = [&](CLI::App *c) { c->add_option("--p", cfg.primes, "prime(s), comma separated")->delimiter(','); };
  auto add_common = [&](CLI::App *c) {
    c->add_option("--format", cfg.format, "json, dot or text");
    c->add_option("--out", cfg.out, "write output to this file");
    c->add_option("--workers", cfg.workers, "worker threads for flag scans")->check(CLI::Range(1, 256));
    c->add_flag("--allow-large", cfg.allow_large, "lift the flag-count size guard");
  };

  auto *shapes = app.add_subcommand("shapes", "list Hessenberg shapes of rank n");
  add_n(shapes);
  shapes->add_flag("--strict", cfg.strict_only, "strict shapes only");
  add_common(shapes);

  auto *variety = app.add_subcommand("variety", "point sets of Hess(X, H) over F_p");
  add_n(variety);
  add_x(variety);
  add_h(variety);
  add_p(variety);
  variety->add_option("--max-points", cfg.max_points, "omit point lists longer than this");
  add_common(variety);

  auto *poset = app.add_subcommand("poset", "containment poset of Hess(X, H) with X-equivalence classes");
  add_n(poset);
  add_x(poset);
  add_p(poset);
  poset->add_flag("--strict", cfg.strict_only, "strict shapes only");
  add_common(poset);

  auto *witness = app.add_subcommand("witness", "witness flag separating strict shapes");
  add_n(witness);
  add_x(witness);
  add_h(witness);
  add_p(witness);
  witness->add_option("--i", cfg.i, "column index i")->check(CLI::PositiveNumber);
  witness->add_option("--j", cfg.j, "row index j")->check(CLI::PositiveNumber);
  add_common(witness);

  auto *involution = app.add_subcommand("involution", "verify Hess(X, H) and Hess(X, transpose H) correspond");
  add_n(involution);
  add_x(involution);
  add_h(involution);
  add_p(involution);
  add_common(involution);

  auto *decompose = app.add_subcommand("decompose", "verify the product decomposition for the regular nilpotent");
  add_n(decompose);
  add_h(decompose);
  add_p(decompose);
  decompose->add_option("--split", cfg.split, "split index j with h(j) = j");
  add_common(decompose);

  auto *interval = app.add_subcommand("interval", "indecomposable strict shapes against [Peterson, full]");
  add_n(interval);
  add_common(interval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return fail("", exit_usage, e.what());
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.command == "shapes") return run_shapes(cfg);
    if (cfg.command == "variety") return run_variety(cfg);
    if (cfg.command == "poset") return run_poset(cfg);
    if (cfg.command == "witness") return run_witness(cfg);
    if (cfg.command == "involution") return run_involution(cfg);
    if (cfg.command == "decompose") return run_decompose(cfg);
    return run_interval(cfg);
  } catch (const hessalg::Error &e) {
    // Parse errors and guard violations: the input is rejected before or
    // during setup, never as a failed check.
    return fail(cfg.command, exit_usage, e.what());
  } catch (const std::exception &e) {
    return fail(cfg.command, exit_unverified, e.what());
  }
}
