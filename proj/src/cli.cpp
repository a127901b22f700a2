#include "koornwinder/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "koornwinder/duality.hpp"
#include "koornwinder/errors.hpp"
#include "koornwinder/json_io.hpp"
#include "koornwinder/relations.hpp"

namespace kw::cli {

std::uint64_t content_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 1;
  std::string alpha;
  std::string lambda;
  int degree = 2;
  int max_weight = 2;
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::string assignment;
  bool symbolic = false;
  bool text = false;
  std::string cache_dir;
  bool three_parameter = false;
  bool with_un = false;
  std::string input;
};

struct Outcome {
  Json report;
  bool ok = true;
};

// ---- argument helpers ----

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

ExponentVector parse_label(const std::string& csv, int n, const char* what) {
  std::vector<int> xs;
  for (const auto& item : split_csv(csv)) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + ": not an integer: '" + item + "'");
    }
  }
  if (static_cast<int>(xs.size()) != n)
    throw UsageError(std::string("--") + what + " must have exactly n = " + std::to_string(n) + " entries");
  return ExponentVector::from(xs);
}

std::string resolved_mode(const Options& o, const std::string& fallback) {
  std::string m = o.symbolic ? "symbolic" : (o.mode.empty() ? fallback : o.mode);
  if (m != "symbolic" && m != "specialized") throw UsageError("--mode must be symbolic or specialized");
  return m;
}

Assignment base_assignment(const Options& o) {
  Assignment a = Assignment::primes();
  if (!o.assignment.empty()) {
    const auto items = split_csv(o.assignment);
    if (items.size() != kNumParams)
      throw UsageError("--assignment needs six rationals: q,t,t0,tn,u0,un square roots");
    for (std::size_t i = 0; i < kNumParams; ++i) {
      try {
        a.roots[i] = Rational::parse(items[i]);
      } catch (const std::exception&) {
        throw UsageError("--assignment: not a rational: '" + items[i] + "'");
      }
      if (a.roots[i].is_zero()) throw UsageError("--assignment values must be nonzero");
    }
  } else if (o.seed) {
    a = Assignment::from_seed(*o.seed);
  }
  if (o.three_parameter) {
    a.roots[static_cast<int>(Param::u0)] = Rational(1);
    a.roots[static_cast<int>(Param::un)] = Rational(1);
    a.roots[static_cast<int>(Param::t0)] = a.roots[static_cast<int>(Param::tn)];
  }
  return a;
}

std::uint64_t derive_seed(std::uint64_t seed) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool is_unlucky(const std::exception& e) {
  return dynamic_cast<const UnluckySpecialization*>(&e) != nullptr ||
         dynamic_cast<const NonGenericParameters*>(&e) != nullptr ||
         dynamic_cast<const DivisionByZero*>(&e) != nullptr;
}

/// Runs f in the requested mode. In specialized mode an unlucky assignment is
/// replaced once by a draw from a derived seed, unless the assignment was explicit.
template <class F>
Outcome dispatch(const Options& o, const std::string& mode, F&& f) {
  if (mode == "symbolic") {
    if (o.three_parameter) throw UsageError("--three-parameter requires specialized mode");
    Outcome r = f(SymbolicContext{});
    r.report["mode"] = "symbolic";
    return r;
  }
  const Assignment a = base_assignment(o);
  try {
    Outcome r = f(SpecializedContext(a));
    r.report["mode"] = "specialized";
    r.report["assignment"] = a.to_string();
    return r;
  } catch (const std::exception& e) {
    if (!is_unlucky(e) || !o.assignment.empty() || o.three_parameter) throw;
  }
  const std::uint64_t next = derive_seed(o.seed.value_or(0));
  const Assignment b = Assignment::from_seed(next);
  Outcome r = f(SpecializedContext(b));
  r.report["mode"] = "specialized";
  r.report["assignment"] = b.to_string();
  r.report["redrawn_seed"] = next;
  return r;
}

// ---- cache ----

std::string cache_directory(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv(kCacheEnv)) return env;
  return {};
}

template <class F>
Json cached(const Options& o, const std::string& key, F&& compute) {
  const std::string dir = cache_directory(o);
  if (dir.empty()) return compute();
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << content_hash(key) << ".json";
  const std::filesystem::path path = std::filesystem::path(dir) / name.str();
  if (std::ifstream in(path); in) {
    try {
      Json entry = Json::parse(in);
      if (entry.value("key", "") == key) return entry.at("result");
    } catch (const std::exception&) {
      // unreadable entries are recomputed and overwritten
    }
  }
  Json result = compute();
  std::filesystem::create_directories(dir);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream outf(tmp);
    outf << Json{{"key", key}, {"result", result}}.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
  return result;
}

// ---- subcommands ----

template <class K>
Outcome compute_labeled(const Options& o, const Coefficients<K>& ctx, bool symmetric) {
  const ExponentVector label =
      symmetric ? parse_label(o.lambda, o.n, "lambda") : parse_label(o.alpha, o.n, "alpha");
  if (symmetric && !is_partition(label)) throw UsageError("--lambda must be a partition");
  const std::string key = std::string(symmetric ? "P|" : "E|") + std::to_string(o.n) + "|" +
                          label.to_string() + "|" + ctx.describe();
  Json j = cached(o, key, [&] {
    KoornwinderFamily<K> fam(o.n, ctx);
    return labeled_to_json(symmetric ? fam.P(label) : fam.E(label));
  });
  return {std::move(j), true};
}

template <class K>
Outcome basis_check(const Options& o, const Coefficients<K>& ctx) {
  KoornwinderFamily<K> fam(o.n, ctx);
  const BasisReport r = fam.basis_check(o.degree);
  Json j{{"n", o.n},
         {"degree", r.degree},
         {"size", r.size},
         {"rank", r.rank},
         {"support_ok", r.support_ok},
         {"status", r.ok() ? "pass" : "fail"}};
  return {std::move(j), r.ok()};
}

template <class K>
Outcome check_relations(const Options& o, const Coefficients<K>& ctx) {
  Noumi<K> pi(o.n, ctx);
  auto rels = daha_relations(o.n, ctx);
  if (o.with_un) rels.push_back(un_relation(o.n, ctx));
  const auto monomials = monomials_up_to(o.n, o.degree);
  const auto space = monomial_test_space<K>(o.n, o.degree);
  const auto results = check_relations_parallel(pi, rels, space);
  Json list = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    Json entry{{"relation", r.relation}, {"status", r.pass ? "pass" : "fail"}};
    if (r.witness) entry["witness"] = to_json(monomials[*r.witness]);
    if (!r.error.empty()) entry["error"] = r.error;
    ok = ok && r.pass;
    list.push_back(std::move(entry));
  }
  Json j{{"n", o.n}, {"degree", o.degree}, {"results", std::move(list)}, {"status", ok ? "pass" : "fail"}};
  if (o.three_parameter) j["three_parameter"] = true;
  return {std::move(j), ok};
}

template <class K>
Outcome check_duality(const Options& o, const Coefficients<K>& ctx) {
  Duality<K> dual(o.n, ctx);
  const DualityReport report = dual.grid_parallel(o.max_weight);
  Json entries = Json::array();
  Json failures = Json::array();
  for (const auto& e : report.entries) {
    Json entry{{"kind", e.kind},
               {"left", to_json(e.left)},
               {"right", to_json(e.right)},
               {"status", e.pass ? "pass" : "fail"}};
    if (!e.error.empty()) entry["error"] = e.error;
    if (!e.pass) failures.push_back(entry);
    entries.push_back(std::move(entry));
  }
  Json j{{"n", o.n},
         {"max_weight", o.max_weight},
         {"entries", std::move(entries)},
         {"failures", std::move(failures)},
         {"status", report.ok() ? "pass" : "fail"}};
  return {std::move(j), report.ok()};
}

Outcome specialize_command(const Options& o) {
  const Assignment a = base_assignment(o);
  const SpecializedContext ctx(a);
  auto lift = [&](const Json& field) { return to_json(ctx.lift(field_from_json(field))); };
  auto specialize_json = [&](Json j) {
    for (auto& t : j.at("terms")) t["coeff"] = lift(t.at("coeff"));
    if (j.contains("spectrum"))
      for (auto& s : j["spectrum"]) s = lift(s);
    return j;
  };
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("--input: cannot open " + o.input);
    Json source;
    try {
      source = Json::parse(in);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--input: invalid JSON: ") + e.what());
    }
    Json j = specialize_json(source);
    j["assignment"] = a.to_string();
    return {std::move(j), true};
  }
  if (o.alpha.empty() == o.lambda.empty()) throw UsageError("specialize needs exactly one of --alpha, --lambda, or --input");
  const bool symmetric = !o.lambda.empty();
  const ExponentVector label =
      symmetric ? parse_label(o.lambda, o.n, "lambda") : parse_label(o.alpha, o.n, "alpha");
  if (symmetric && !is_partition(label)) throw UsageError("--lambda must be a partition");
  KoornwinderFamily<FieldElement> sym(o.n, SymbolicContext{});
  KoornwinderFamily<Rational> spec(o.n, ctx);
  const Json symbolic = labeled_to_json(symmetric ? sym.P(label) : sym.E(label));
  const Json direct = labeled_to_json(symmetric ? spec.P(label) : spec.E(label));
  Json j = specialize_json(symbolic);
  const bool consistent = j == direct;
  j["assignment"] = a.to_string();
  j["consistent"] = consistent;
  return {std::move(j), consistent};
}

void add_common(CLI::App* sub, Options& o, bool with_mode = true) {
  sub->add_option("--n", o.n, "rank n >= 1")->check(CLI::Range(1, kMaxRank));
  if (with_mode) sub->add_option("--mode", o.mode, "symbolic or specialized");
  sub->add_option("--seed", o.seed, "seed for the specialization assignment");
  sub->add_option("--assignment", o.assignment,
                  "six rationals: values of the square roots of q,t,t0,tn,u0,un");
  auto* json = sub->add_flag("--json", "JSON output (default)");
  auto* text = sub->add_flag("--text", o.text, "plain-text output");
  json->excludes(text);
}

int emit(const Outcome& r, const Options& o, std::ostream& out) {
  if (o.text) out << render_text(r.report);
  else out << r.report.dump() << '\n';
  return r.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonsymmetric and symmetric Koornwinder polynomials via the double affine Hecke algebra",
               "koornwinder"};
  app.require_subcommand(1);
  Options o;

  auto* e = app.add_subcommand("compute-e", "nonsymmetric polynomial E_alpha");
  add_common(e, o);
  e->add_option("--alpha", o.alpha, "comma-separated exponent vector")->required();
  e->add_option("--cache-dir", o.cache_dir, std::string("cache directory (default $") + kCacheEnv + ")");

  auto* p = app.add_subcommand("compute-p", "symmetric polynomial P_lambda");
  add_common(p, o);
  p->add_option("--lambda", o.lambda, "comma-separated partition")->required();
  p->add_option("--cache-dir", o.cache_dir, std::string("cache directory (default $") + kCacheEnv + ")");

  auto* b = app.add_subcommand("basis-check", "rank of {E_alpha : |alpha| <= k} against monomials");
  add_common(b, o);
  b->add_option("--degree", o.degree, "degree bound k")->check(CLI::NonNegativeNumber);

  auto* r = app.add_subcommand("check-relations", "defining relations on monomials |alpha| <= k");
  add_common(r, o);
  r->add_option("--degree", o.degree, "degree bound k")->check(CLI::NonNegativeNumber);
  r->add_flag("--three-parameter", o.three_parameter, "specialize u0 = un = 1, t0 = tn");
  r->add_flag("--with-un", o.with_un, "also check U_n ~ un");

  auto* d = app.add_subcommand("check-duality", "pairing symmetries and the evaluation duality");
  add_common(d, o);
  d->add_option("--max-weight", o.max_weight, "weight bound")->check(CLI::NonNegativeNumber);
  d->add_flag("--symbolic", o.symbolic, "symbolic mode");

  auto* s = app.add_subcommand("specialize", "specialize a symbolic polynomial under an assignment");
  add_common(s, o, false);
  s->add_option("--alpha", o.alpha, "compute E_alpha symbolically and specialize it");
  s->add_option("--lambda", o.lambda, "compute P_lambda symbolically and specialize it");
  s->add_option("--input", o.input, "polynomial JSON file with symbolic coefficients");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    else
      err << app.help();
    return kExitUsage;
  }

  try {
    Outcome result;
    if (e->parsed() || p->parsed()) {
      const bool symmetric = p->parsed();
      result = dispatch(o, resolved_mode(o, "symbolic"),
                        [&](const auto& ctx) { return compute_labeled(o, ctx, symmetric); });
    } else if (b->parsed()) {
      result = dispatch(o, resolved_mode(o, "specialized"), [&](const auto& ctx) { return basis_check(o, ctx); });
    } else if (r->parsed()) {
      result = dispatch(o, resolved_mode(o, "specialized"), [&](const auto& ctx) { return check_relations(o, ctx); });
    } else if (d->parsed()) {
      result = dispatch(o, resolved_mode(o, "specialized"), [&](const auto& ctx) { return check_duality(o, ctx); });
    } else {
      result = specialize_command(o);
    }
    return emit(result, o, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitCheckFailed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace kw::cli
