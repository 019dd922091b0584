#include "lamsol/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"

#include "lamsol/bounds.hpp"
#include "lamsol/closure.hpp"
#include "lamsol/pratt.hpp"
#include "lamsol/serialize.hpp"
#include "lamsol/witness.hpp"

namespace lamsol::cli {

namespace {

// Validation failures detected before any computation.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

template <typename T>
void kv(std::ostream& out, std::string_view key, const T& value) {
  fmt::print(out, "{}={}\n", key, value);
}

std::string join(const std::vector<u64>& values) {
  return fmt::format("{}", fmt::join(values, ","));
}

class CacheScope {
 public:
  explicit CacheScope(const RunConfig& config) : path_(config.cache_path) {
    if (path_ && std::filesystem::exists(*path_)) cache_.load(*path_);
  }
  ~CacheScope() = default;
  FCache& get() { return cache_; }
  void flush() {
    if (path_) cache_.save(*path_);
  }

 private:
  std::optional<std::filesystem::path> path_;
  FCache cache_;
};

int cmd_f(const RunConfig& c, std::ostream& out) {
  CacheScope cache(c);
  const u64 f = f_of(c.n, cache.get());
  cache.flush();
  if (c.format == OutputFormat::Json)
    emit_json(out, {{"q", c.n}, {"f", f}});
  else
    fmt::print(out, "f({})={}\n", c.n, f);
  return 0;
}

nlohmann::json tree_json(const PrattNode& node) {
  nlohmann::json children = nlohmann::json::array();
  for (const auto& child : node.children) children.push_back(tree_json(child));
  return {{"label", to_string(node.value)}, {"p", node.value.p}, {"e", node.value.a}, {"children", children}};
}

int cmd_tree(const RunConfig& c, std::ostream& out) {
  const PrattTree tree = build_tree(c.n);
  switch (c.format) {
    case OutputFormat::Dot:
      out << export_dot(tree);
      break;
    case OutputFormat::Json:
      emit_json(out, tree_json(tree.root));
      break;
    case OutputFormat::Plain:
      kv(out, "q", c.n);
      kv(out, "nodes", tree.node_count());
      kv(out, "depth", tree.depth());
      kv(out, "max_proper_prime_power", tree.max_proper_prime_power());
      break;
  }
  return 0;
}

int cmd_witness(const RunConfig& c, std::ostream& out) {
  if (c.a == 0 || c.a > 62) throw UsageError("witness: exponent must be between 1 and 62");
  const auto a = static_cast<unsigned>(c.a);
  CacheScope cache(c);
  const u64 limit = c.limit ? *c.limit : SearchPolicy{}.limit_for(c.p, a);
  const auto record = find_witness(c.p, a, limit, cache.get());
  cache.flush();
  if (c.format == OutputFormat::Json) {
    nlohmann::json j = {{"p", c.p}, {"a", a}, {"search_limit", limit}};
    j["witness"] = record ? nlohmann::json(*record) : nlohmann::json(nullptr);
    emit_json(out, j);
    return 0;
  }
  kv(out, "p", c.p);
  kv(out, "a", a);
  kv(out, "search_limit", limit);
  if (!record) {
    kv(out, "result", "not-found");
    return 0;
  }
  kv(out, "result", "found");
  kv(out, "q", record->q);
  kv(out, "certificate", to_string(record->certificate));
  if (record->f_value) kv(out, "f", *record->f_value);
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  RangeMode mode;
  if (c.a1_bound)
    mode = {RangeKind::Linear, *c.a1_bound};
  else
    mode = {RangeKind::Proper, *c.pp_bound};

  SearchPolicy policy;
  policy.extended_limit = c.extended_limit;

  RunControl control;
  control.workers = c.workers;
  control.checkpoint_path = c.checkpoint_path ? c.checkpoint_path : c.resume_path;
  if (c.resume_path) control.resume = checkpoint_load(*c.resume_path);
  if (c.stop_after) control.stop_after = parse_prime_power(*c.stop_after);

  CacheScope cache(c);
  control.cache = &cache.get();
  const RangeReport report = verify_range(mode, policy, control);
  cache.flush();

  if (c.log_path) {
    std::ofstream log(*c.log_path);
    if (!log) throw std::runtime_error("cannot write " + c.log_path->string());
    write_witness_log(log, report.records, report.failures);
  }
  fmt::print(err, "# elapsed={:.3f}s\n", report.elapsed_seconds);

  if (c.format == OutputFormat::Json) {
    nlohmann::json j = report;
    j.erase("elapsed_seconds");
    emit_json(out, j);
    return 0;
  }
  kv(out, "mode", mode.kind == RangeKind::Linear ? "a1" : "pp");
  kv(out, "bound", mode.bound);
  kv(out, "examined", report.examined);
  kv(out, "witnessed", report.witnessed);
  kv(out, "failures", report.failures.size());
  kv(out, "complete", report.complete);
  for (const auto& pp : report.failures) kv(out, "failure", to_string(pp));
  return 0;
}

int cmd_chains(const RunConfig& c, std::ostream& out) {
  const PrimeSieve sieve(std::max<u64>(c.x, 2));
  const ChainReport r = enumerate_chains(c.p, c.x, sieve, c.eps, c.C);
  if (c.format == OutputFormat::Json) {
    emit_json(out, r);
    return 0;
  }
  kv(out, "p", r.p);
  kv(out, "x", r.x);
  kv(out, "count", r.count);
  kv(out, "max_length", r.max_length);
  kv(out, "eps", r.eps);
  kv(out, "C", r.C);
  kv(out, "bound", r.bound);
  kv(out, "satisfied", r.satisfied);
  return 0;
}

int cmd_cbound(const RunConfig& c, std::ostream& out) {
  if (c.dump_path) {
    std::ofstream dump(*c.dump_path);
    if (!dump) throw std::runtime_error("cannot write " + c.dump_path->string());
    write_matrix(dump, build_progression_matrix(c.w, c.s));
  }
  try {
    const CEpsResult r = compute_C_eps(c.w, c.s);
    if (c.format == OutputFormat::Json) {
      emit_json(out, r);
      return 0;
    }
    kv(out, "w", r.w);
    kv(out, "s", r.s);
    kv(out, "dimension", r.dimension);
    kv(out, "spectral_radius", r.spectral_radius);
    kv(out, "C", r.C);
    kv(out, "residual", r.residual);
  } catch (const NotConvergent& e) {
    if (c.format == OutputFormat::Json) {
      emit_json(out, {{"w", c.w}, {"s", c.s}, {"result", "not-convergent"}, {"spectral_radius", e.spectral_radius()}});
      return 0;
    }
    kv(out, "w", c.w);
    kv(out, "s", c.s);
    kv(out, "result", "not-convergent");
    kv(out, "spectral_radius", e.spectral_radius());
  }
  return 0;
}

int cmd_census(const RunConfig& c, std::ostream& out) {
  const PrimeSieve sieve(std::max<u64>(c.x, 2));
  CacheScope cache(c);
  if (!c.census_ge) {
    const u64 count = census_f_equal(c.x, c.v, sieve, cache.get(), c.workers);
    cache.flush();
    if (c.format == OutputFormat::Json) {
      emit_json(out, {{"x", c.x}, {"v", c.v}, {"count", count}});
      return 0;
    }
    kv(out, "x", c.x);
    kv(out, "v", c.v);
    kv(out, "count", count);
    return 0;
  }
  CensusOptions options;
  options.workers = c.workers;
  if (c.filter) options.unitary_filter = parse_prime_power(*c.filter);
  const CensusReport r = census_f_ge(c.x, c.v, c.eps, c.C, sieve, cache.get(), options);
  cache.flush();
  if (c.format == OutputFormat::Json) {
    emit_json(out, r);
    return 0;
  }
  kv(out, "x", r.x);
  kv(out, "y", r.y);
  kv(out, "count", r.count);
  kv(out, "eps", r.eps);
  kv(out, "C", r.C);
  kv(out, "c_eps", r.c_eps);
  kv(out, "bound", r.bound);
  kv(out, "hypothesis", r.in_hypothesis ? "in-hypothesis" : "out-of-hypothesis");
  if (r.filter) {
    kv(out, "filter", to_string(*r.filter));
    kv(out, "filtered_bound", *r.filtered_bound);
    kv(out, "filtered_hypothesis", r.filtered_in_hypothesis ? "in-hypothesis" : "out-of-hypothesis");
  }
  return 0;
}

int cmd_closure(const RunConfig& c, std::ostream& out) {
  ClosureOptions options;
  options.max_iters = c.max_iters;
  const ClosureReport r = run_closure(c.n, options);
  std::optional<WitnessStep> step;
  if (c.witness_step) step = check_witness_step(r, parse_prime_power(*c.witness_step));

  if (c.format == OutputFormat::Json) {
    nlohmann::json j = r;
    if (step) {
      j["witness_step"] = {{"target", step->target},
                           {"smallest_missing", step->smallest_missing},
                           {"next_power_is_smallest_missing", step->next_power_is_smallest_missing},
                           {"witness", step->witness ? nlohmann::json(*step->witness) : nlohmann::json(nullptr)},
                           {"applies", step->applies}};
    }
    emit_json(out, j);
    return 0;
  }
  for (std::size_t i = 0; i < r.added.size(); ++i) fmt::print(out, "iter={} added={}\n", i + 1, join(r.added[i]));
  fmt::print(out, "summary bound={} forced={} primes={} saturated={} iterations={} fixpoint={}\n", r.bound,
             r.forced.size(), r.primes_below_bound, r.saturated, r.iterations, r.fixpoint);
  if (step) {
    fmt::print(out, "witness_step target={} smallest_missing={} next_power_is_smallest_missing={} witness={} applies={}\n",
               to_string(step->target), to_string(step->smallest_missing), step->next_power_is_smallest_missing,
               step->witness ? std::to_string(step->witness->q) : "none", step->applies);
  }
  return 0;
}

int cmd_erh(const RunConfig& c, std::ostream& out) {
  if (c.m < 2) throw UsageError("erh: m must be at least 2");
  const PrimeSieve sieve(std::max<u64>(c.x, 2));
  const ErhReport r = check_erh_bound(c.x, c.m, c.b, sieve);
  if (c.format == OutputFormat::Json) {
    emit_json(out, r);
    return 0;
  }
  kv(out, "x", r.x);
  kv(out, "m", r.m);
  kv(out, "b", r.b);
  kv(out, "pi_xmb", r.pi_xmb);
  kv(out, "main_term", r.main_term);
  kv(out, "error_bound", r.error_bound);
  kv(out, "holds", r.holds);
  return 0;
}

int scalar(const RunConfig& c, std::ostream& out, std::string_view key, auto value) {
  if (c.format == OutputFormat::Json)
    emit_json(out, {{std::string(key), value}});
  else
    fmt::print(out, "{}\n", value);
  return 0;
}

void validate(const RunConfig& c) {
  if (c.workers == 0) throw UsageError("--workers must be at least 1");
  if (c.format == OutputFormat::Dot && c.subcommand != "tree")
    throw UsageError("--format dot is only available for 'tree'");
  if (c.subcommand == "verify") {
    if (c.a1_bound.has_value() == c.pp_bound.has_value())
      throw UsageError("verify: give exactly one of --a1-bound and --pp-bound");
    if (!c.long_run && ((c.a1_bound && *c.a1_bound > kLongA1Bound) || (c.pp_bound && *c.pp_bound > kLongPPBound)))
      throw UsageError(fmt::format("verify: bounds above --a1-bound {} or --pp-bound {} need --long", kLongA1Bound,
                                   kLongPPBound));
  }
  if (c.subcommand == "census" && c.v == 0) throw UsageError("census: the value must be positive");
}

}  // namespace

PrimePower parse_prime_power(const std::string& text) {
  const auto caret = text.find('^');
  try {
    std::size_t used = 0;
    PrimePower pp;
    const std::string base = text.substr(0, caret);
    pp.p = std::stoull(base, &used);
    if (used != base.size() || base.empty() || base[0] == '-') throw std::invalid_argument("");
    pp.a = 1;
    if (caret != std::string::npos) {
      const std::string exp = text.substr(caret + 1);
      const auto a = std::stoul(exp, &used);
      if (used != exp.size() || exp.empty() || exp[0] == '-' || a == 0 || a > 62) throw std::invalid_argument("");
      pp.a = static_cast<unsigned>(a);
    }
    require_input_range(pp.p, "prime power");
    if (!is_prime(pp.p)) throw std::invalid_argument("");
    return pp;
  } catch (const std::logic_error&) {
    throw UsageError("'" + text + "' is not a prime power p^a");
  }
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  validate(c);
  set_factor_seed(c.seed);
  fmt::print(err, "# lamsol {} seed={:#x}\n", c.subcommand, c.seed);

  const std::string& cmd = c.subcommand;
  if (cmd == "f") return cmd_f(c, out);
  if (cmd == "tree") return cmd_tree(c, out);
  if (cmd == "witness") return cmd_witness(c, out);
  if (cmd == "verify") return cmd_verify(c, out, err);
  if (cmd == "chains") return cmd_chains(c, out);
  if (cmd == "cbound") return cmd_cbound(c, out);
  if (cmd == "ceps") return scalar(c, out, "c_eps", compute_c_eps(c.eps, c.C));
  if (cmd == "census") return cmd_census(c, out);
  if (cmd == "closure") return cmd_closure(c, out);
  if (cmd == "erh") return cmd_erh(c, out);
  if (cmd == "zeta") return scalar(c, out, "zeta", hurwitz_zeta(c.s, c.alpha));
  if (cmd == "count-pp") {
    require_input_range(c.n, "count-pp");
    const PrimeSieve sieve(std::max<u64>(2, integer_root(c.n, 2)));
    return scalar(c, out, "count", count_proper_prime_powers(c.n, sieve));
  }
  if (cmd == "pi") {
    if (c.n < 2) return scalar(c, out, "pi", u64{0});
    const PrimeSieve sieve(c.n);
    return scalar(c, out, "pi", prime_count(c.n, sieve));
  }
  throw UsageError("unknown subcommand '" + cmd + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string format = "plain";
  std::string cache_path;
  if (const char* env = std::getenv("LAMSOL_CACHE"); env && *env) cache_path = env;
  std::string checkpoint, resume, log, dump;

  CLI::App app{"Carmichael lambda toolkit: f(q), witness searches, prime chains and related bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "plain | json | dot")->check(CLI::IsMember({"plain", "json", "dot"}));
  app.add_option("--workers", c.workers, "worker threads");
  app.add_option("--seed", c.seed, "seed for randomized factorization");
  app.add_flag("--long", c.long_run, "allow full-size reproductions");
  app.add_option("--cache", cache_path, "f-cache file (default $LAMSOL_CACHE)");

  auto* f = app.add_subcommand("f", "print f(q)");
  f->add_option("q", c.n)->required();

  auto* tree = app.add_subcommand("tree", "print T(q) as a graph description");
  tree->add_option("q", c.n)->required();

  auto* witness = app.add_subcommand("witness", "smallest witness q for p^a");
  witness->add_option("p", c.p)->required();
  witness->add_option("a", c.a)->required();
  witness->add_option("--limit", c.limit, "largest q to try (default p^(2a+1) - 1)");

  auto* verify = app.add_subcommand("verify", "find witnesses for a whole range of prime powers");
  verify->add_option("--a1-bound", c.a1_bound, "all primes p <= P with a = 1");
  verify->add_option("--pp-bound", c.pp_bound, "all p^a <= B with a >= 2");
  verify->add_option("--resume", resume, "continue from a checkpoint");
  verify->add_option("--checkpoint", checkpoint, "save progress here");
  verify->add_option("--log", log, "write the witness log here");
  verify->add_option("--stop-after", c.stop_after, "stop once this prime power is done");
  verify->add_option("--extended-limit", c.extended_limit, "search past p^(2a+1) up to this q");

  auto* chains = app.add_subcommand("chains", "count prime chains starting at p up to x");
  chains->add_option("p", c.p)->required();
  chains->add_option("x", c.x)->required();
  chains->add_option("--eps", c.eps);
  chains->add_option("--C", c.C);

  auto* cbound = app.add_subcommand("cbound", "spectral radius and largest column sum of (I - M)^-1");
  cbound->add_option("w", c.w)->required();
  cbound->add_option("s", c.s)->required();
  cbound->add_option("--dump", dump, "write the matrix here");

  auto* ceps = app.add_subcommand("ceps", "the census constant c(eps)");
  ceps->add_option("eps", c.eps)->required();
  ceps->add_option("C", c.C)->required();

  auto* census = app.add_subcommand("census", "count primes q <= x by f(q)");
  std::optional<u64> ge, eq;
  auto* ge_opt = census->add_option("--ge", ge, "count f(q) >= v");
  auto* eq_opt = census->add_option("--eq", eq, "count f(q) == v");
  ge_opt->excludes(eq_opt);
  census->add_option("x", c.x)->required();
  census->add_option("--eps", c.eps);
  census->add_option("--C", c.C);
  census->add_option("--filter", c.filter, "only q with p^a || q - 1");

  auto* closure = app.add_subcommand("closure", "primes forced to divide n0 squared");
  closure->add_option("bound", c.n)->required();
  closure->add_option("--max-iters", c.max_iters);
  closure->add_option("--witness-step", c.witness_step, "check the witness step for p^a");

  auto* erh = app.add_subcommand("erh", "compare pi(x; m, b) with li(x)/phi(m)");
  erh->add_option("x", c.x)->required();
  erh->add_option("m", c.m)->required();
  erh->add_option("b", c.b)->required();

  auto* zeta = app.add_subcommand("zeta", "Hurwitz zeta(s, alpha)");
  zeta->add_option("s", c.s)->required();
  zeta->add_option("alpha", c.alpha)->required();

  auto* count_pp = app.add_subcommand("count-pp", "number of proper prime powers <= t");
  count_pp->add_option("t", c.n)->required();

  auto* pi = app.add_subcommand("pi", "number of primes <= x");
  pi->add_option("x", c.n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 2;
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = format == "json" ? OutputFormat::Json : format == "dot" ? OutputFormat::Dot : OutputFormat::Plain;
  if (c.subcommand == "tree" && format == "plain" && app.get_option("--format")->count() == 0)
    c.format = OutputFormat::Dot;
  if (!cache_path.empty()) c.cache_path = cache_path;
  if (!checkpoint.empty()) c.checkpoint_path = checkpoint;
  if (!resume.empty()) c.resume_path = resume;
  if (!log.empty()) c.log_path = log;
  if (!dump.empty()) c.dump_path = dump;
  if (c.subcommand == "census") {
    if (!ge && !eq) {
      fmt::print(err, "error: census needs --ge <v> or --eq <v>\n");
      return 2;
    }
    c.census_ge = ge.has_value();
    c.v = ge ? *ge : *eq;
  }

  try {
    return execute(c, out, err);
  } catch (const NotConvergent& e) {
    fmt::print(out, "result=not-convergent\nspectral_radius={}\n", e.spectral_radius());
    return 0;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 2;
  } catch (const std::out_of_range& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 2;
  } catch (const std::length_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
}

}  // namespace lamsol::cli
