#include "sepform/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepform/counting.hpp"
#include "sepform/oracle.hpp"
#include "sepform/solver.hpp"
#include "sepform/system_file.hpp"
#include "sepform/triangular.hpp"

namespace sepform {

namespace {

using nlohmann::ordered_json;

struct Common {
  std::string file;
  bool json = false;
  bool verbose = false;
  bool exhaustive = false;
  unsigned threads = 1;
  unsigned window = 8;
  std::uint64_t seed = 1;
};

LuckyOptions options(const Common& c) {
  LuckyOptions o;
  o.schedule = c.exhaustive ? PrimeSchedule::Exhaustive : PrimeSchedule::EarlyStop;
  o.threads = std::max(1u, c.threads);
  o.window = std::max(1u, c.window);
  return o;
}

const char* schedule_name(PrimeSchedule s) { return s == PrimeSchedule::Exhaustive ? "exhaustive" : "early-stop"; }

ordered_json bound_json(const BoundBreakdown& b) {
  return ordered_json{{"d", b.d},
                      {"tau", b.tau},
                      {"tau_sheared", b.tau_sheared},
                      {"tau_resultant", b.tau_resultant},
                      {"sigma", b.sigma},
                      {"eval_bits", b.eval_bits},
                      {"gcd_primes", b.gcd_primes},
                      {"small_primes", b.small_primes},
                      {"xi", b.xi}};
}

std::string bivar_string(const PrimeField& f, const XYPoly<PrimeField>& b) {
  const UnivariateDomain<PrimeField> dom{f, Var::X};
  return from_ypoly(b, Var::Y, dom).to_string();
}

ordered_json trace_json(const PrimeField& f, const CountTrace& t) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : t.components) {
    ordered_json second = ordered_json::array();
    for (const auto& s : c.second) second.push_back({{"j", s.index}, {"A", s.a.to_string("X")}, {"B", bivar_string(f, s.b)}});
    comps.push_back({{"i", c.index},
                     {"reduced_i", c.reduced_index},
                     {"squarefree_fallback", c.squarefree_fallback},
                     {"A", c.a.to_string("X")},
                     {"B", bivar_string(f, c.b)},
                     {"B_monic", bivar_string(f, c.b_monic)},
                     {"second", second}});
  }
  return ordered_json{{"b", t.b}, {"N", t.count}, {"components", comps}};
}

/// Text rendering of a flat JSON object: "key = value" lines.
void print_fields(std::ostream& out, const ordered_json& j) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_structured()) continue;
    out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void emit(std::ostream& out, const Common& c, const ordered_json& fields, const ordered_json& extra) {
  if (c.json) {
    ordered_json j = fields;
    if (c.verbose) {
      for (const auto& [k, v] : extra.items()) j[k] = v;
    }
    out << j.dump() << "\n";
    return;
  }
  print_fields(out, fields);
  if (c.verbose) {
    for (const auto& [k, v] : extra.items()) out << k << ": " << v.dump(2) << "\n";
  }
}

ordered_json verbose_extra(const SystemFile& sys, const LuckyResult& r) {
  const PrimeField f(r.prime);
  const auto trace = count_distinct_mod(reduce_mod_prime(sys.p, f), reduce_mod_prime(sys.q, f));
  ordered_json per = ordered_json::object();
  for (const auto& [mu, n] : r.per_prime) per[std::to_string(mu)] = n;
  return ordered_json{{"bound", bound_json(r.bound)}, {"trace", trace_json(f, trace)}, {"per_prime", per}};
}

int cmd_count(const Common& c, std::ostream& out) {
  const auto sys = load_system(c.file);
  const auto r = count_and_lucky_prime(sys.p, sys.q, options(c));
  emit(out, c, ordered_json{{"N", r.count}}, c.verbose ? verbose_extra(sys, r) : ordered_json::object());
  return kExitOk;
}

int cmd_lucky(const Common& c, std::ostream& out) {
  const auto sys = load_system(c.file);
  const auto r = count_and_lucky_prime(sys.p, sys.q, options(c));
  ordered_json fields{{"N", r.count},
                      {"mu", r.prime},
                      {"schedule", schedule_name(r.schedule)},
                      {"primes_tried", r.primes_tried},
                      {"rejected", r.rejected.size()},
                      {"xi", r.bound.xi}};
  emit(out, c, fields, c.verbose ? verbose_extra(sys, r) : ordered_json::object());
  return kExitOk;
}

int cmd_form(const Common& c, std::ostream& out) {
  const auto sys = load_system(c.file);
  const auto f = separating_form(sys.p, sys.q, options(c));
  ordered_json extra = ordered_json::object();
  if (c.verbose) {
    extra = verbose_extra(sys, f.lucky);
    ordered_json steps = ordered_json::array();
    for (const auto& s : f.steps) steps.push_back({{"a", s.a}, {"leading_nonzero", s.leading_nonzero}, {"sqfree_degree", s.sqfree_degree}});
    extra["steps"] = steps;
  }
  emit(out, c, ordered_json{{"a", f.a}, {"N", f.lucky.count}, {"mu", f.lucky.prime}}, extra);
  return kExitOk;
}

int cmd_tridec(const Common& c, std::uint64_t modulus, std::ostream& out) {
  const auto sys = load_system(c.file);
  const PrimeField f(modulus);
  ModPoly p = reduce_mod_prime(sys.p, f);
  ModPoly q = reduce_mod_prime(sys.q, f);
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::NotCoprime, "a polynomial vanishes modulo the prime");
  if (q.degree(Var::Y) > p.degree(Var::Y)) std::swap(p, q);
  const auto comps = triangular_decompose(p, q, UPoly<PrimeField>(f, {}));
  ordered_json list = ordered_json::array();
  for (const auto& t : comps) list.push_back({{"i", t.index}, {"A", t.a.to_string("X")}, {"B", bivar_string(f, t.b)}});
  if (c.json) {
    out << ordered_json{{"modulus", modulus}, {"components", list}}.dump() << "\n";
  } else {
    out << "modulus = " << modulus << "\n";
    for (const auto& t : list) {
      out << "i = " << t["i"].get<int>() << ": A = " << t["A"].get<std::string>() << ", B = " << t["B"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

struct BenchArgs {
  int dmax = 6;
  int taumax = 8;
  std::string out;
  int samples = 1;
};

IntPoly random_dense(std::mt19937_64& rng, int d, int tau) {
  const std::int64_t hi = (std::int64_t{1} << tau) - 1;
  std::uniform_int_distribution<std::int64_t> coef(-hi, hi);
  IntPoly f(IntegerRing{}, VarSet{Var::X, Var::Y});
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0, 0}, BigInt(coef(rng)));
  }
  const Exponents top{0, static_cast<std::uint32_t>(d), 0, 0};
  if (f.coeff(top).is_zero()) f.add_term(top, BigInt(1));
  return f;
}

int cmd_bench(const Common& c, const BenchArgs& b, std::ostream& out) {
  if (b.dmax < 2 || b.taumax < 1 || b.taumax > 62) fail(ErrorCode::InvalidArgument, "bench needs --dmax >= 2 and 1 <= --taumax <= 62");
  std::ofstream file;
  std::ostream* sink = &out;
  if (!b.out.empty()) {
    file.open(b.out);
    if (!file) fail(ErrorCode::InvalidArgument, "cannot write " + b.out);
    sink = &file;
  }
  std::mt19937_64 rng(c.seed);
  std::vector<int> taus{std::min(4, b.taumax), b.taumax};
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  *sink << "d,tau,N,a,time_modular_ms,time_classical_ms\n";
  using clock = std::chrono::steady_clock;
  for (int tau : taus) {
    for (int d = 2; d <= b.dmax; ++d) {
      for (int s = 0; s < b.samples; ++s) {
        IntPoly p = random_dense(rng, d, tau);
        IntPoly q = random_dense(rng, d, tau);
        const auto t0 = clock::now();
        const auto f = separating_form(p, q, options(c));
        const auto t1 = clock::now();
        const auto cl = classical_separating_form(p, q);
        const auto t2 = clock::now();
        if (cl.count != f.lucky.count) fail(ErrorCode::BoundExceeded, "bench: classical and modular counts disagree");
        const auto ms = [](auto a, auto z) { return std::chrono::duration<double, std::milli>(z - a).count(); };
        *sink << d << "," << tau << "," << f.lucky.count << "," << f.a << "," << ms(t0, t1) << "," << ms(t1, t2) << "\n";
      }
    }
  }
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCoprime:
    case ErrorCode::NotZeroDimensional:
    case ErrorCode::LeadingCoefficientsNotCoprime:
      return kExitDegenerate;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinct-solution count and separating linear form of a bivariate integer system"};
  app.require_subcommand(1);
  Common c;
  std::uint64_t modulus = 0;
  BenchArgs bench;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", c.file, "system file (expression or JSON form)")->required();
    sub->add_flag("--json", c.json, "structured output");
    sub->add_flag("--verbose", c.verbose, "dump the bound breakdown and counting trace");
    sub->add_option("--threads", c.threads, "worker threads for the prime loop")->check(CLI::Range(1u, 256u));
    sub->add_flag("--exhaustive", c.exhaustive, "try all Xi+1 candidate primes");
    sub->add_option("--window", c.window, "early-stop window")->check(CLI::Range(1u, 100000u));
    sub->add_option("--seed", c.seed, "corpus seed (bench only)");
  };
  auto* count = app.add_subcommand("count", "number of distinct complex solutions");
  add_common(count, true);
  auto* form = app.add_subcommand("form", "separating linear form X + aY");
  add_common(form, true);
  auto* lucky = app.add_subcommand("lucky", "count together with a lucky prime");
  add_common(lucky, true);
  auto* tridec = app.add_subcommand("tridec", "triangular decomposition modulo a prime");
  add_common(tridec, true);
  tridec->add_option("--modulus", modulus, "prime modulus")->required();
  auto* bn = app.add_subcommand("bench", "modular vs classical timings as CSV");
  add_common(bn, false);
  bn->add_option("--dmax", bench.dmax, "largest total degree");
  bn->add_option("--taumax", bench.taumax, "largest coefficient bitsize");
  bn->add_option("--out", bench.out, "CSV path (default stdout)");
  bn->add_option("--samples", bench.samples, "systems per grid cell")->check(CLI::Range(1, 1000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(c, out);
    if (*form) return cmd_form(c, out);
    if (*lucky) return cmd_lucky(c, out);
    if (*tridec) return cmd_tridec(c, modulus, out);
    if (*bn) return cmd_bench(c, bench, out);
  } catch (const Error& e) {
    if (c.json) {
      out << ordered_json{{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}}.dump() << "\n";
    } else {
      err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    }
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace sepform
