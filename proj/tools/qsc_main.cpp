// Command-line front end: verify single statements, scan parameter ranges,
// run the numeric identity checks, or reproduce the whole battery.
//
// Exit codes: 0 every verdict holds, 1 any verdict fails, 2 undefined_gcd
// verdicts (and nothing worse), 3 usage or precondition error.

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "qsc/engine.hpp"
#include "qsc/numeric.hpp"
#include "qsc/padic.hpp"
#include "qsc/qseries.hpp"
#include "qsc/report.hpp"

namespace {

using namespace qsc;

struct GlobalOpts {
  std::string format = "json";
  std::string out;
  unsigned precision = 50;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  bool quick = false;
  bool verbose = false;
  long fault = -1;
};

EngineOptions engine_options(const GlobalOpts& g, bool sequential_preferred = false) {
  EngineOptions opt;
  opt.jobs = sequential_preferred ? 1 : std::max(1, g.jobs);
  opt.full_witness = g.verbose;
  opt.fault_exponent = g.fault;
  return opt;
}

long timed_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

// ---------------------------------------------------------------------------
// congruence statements (exact, engine-backed)

const std::set<std::string> kCongruenceStatements = {"eq1", "eq2", "eq3", "thm1",
                                                     "thm2", "thm4", "s5"};

std::vector<ParamPoint> congruence_points(const std::string& stmt, std::optional<long> n,
                                          std::optional<long> upto, std::optional<long> m) {
  std::vector<long> ns;
  if (n && upto) throw std::invalid_argument("give either --n or --n-odd-upto, not both");
  if (n) ns.push_back(*n);
  if (upto) {
    for (long v : odd_up_to(*upto)) {
      if ((stmt == "thm4" || stmt == "eq3" || stmt == "s5") && std::gcd(v, 6L) != 1) continue;
      if (stmt == "eq3" && m && (v == *m || v == -*m)) continue;  // degenerate modulus
      ns.push_back(v);
    }
  }
  if (ns.empty()) throw std::invalid_argument(stmt + ": need --n or --n-odd-upto");

  std::vector<ParamPoint> pts;
  for (long v : ns) {
    if (stmt == "eq3") {
      if (!m) throw std::invalid_argument("eq3: need --m (the exponent in a = q^m)");
      pts.push_back({{"n", v}, {"m", *m}});
    } else if (stmt == "s5") {
      pts.push_back({{"n", v}, {"sign", 1}});
      pts.push_back({{"n", v}, {"sign", -1}});
    } else {
      pts.push_back({{"n", v}});
    }
  }
  return pts;
}

std::vector<Record> run_congruence(const std::string& stmt, const std::vector<ParamPoint>& pts,
                                   const GlobalOpts& g) {
  bool shared_tail = stmt == "eq1" || stmt == "eq2" || stmt == "thm1" || stmt == "thm2";
  std::vector<Record> out;
  for (const CongruenceReport& rep : run_scan(stmt, pts, engine_options(g, shared_tail)))
    out.push_back(to_record(rep));
  return out;
}

// ---------------------------------------------------------------------------
// p-adic statements (exact rational arithmetic)

const std::set<std::string> kPadicStatements = {"cor1", "cor2", "cor4", "conj1", "conj2"};

std::vector<Record> run_padic(const std::string& stmt, std::optional<long> upto,
                              const GlobalOpts& g) {
  long bound = upto.value_or(stmt == "cor4" ? 100 : 200);
  if (bound < 3) throw std::invalid_argument(stmt + ": --primes-upto must be at least 3");
  (void)g;
  std::vector<Record> out;
  for (long p : primes_below(bound)) {
    if (p == 2) continue;           // all five statements concern odd primes
    if (stmt == "cor4" && p == 3) continue;  // stated for p > 3
    auto t0 = std::chrono::steady_clock::now();
    Record rec;
    rec.statement = stmt;
    rec.params = {{"p", std::to_string(p)}};
    Rational value, target;
    long r = 0;
    if (stmt == "cor1") {
      value = cor1_sum(p).value, target = 0, r = 1, rec.modulus = "p";
    } else if (stmt == "cor2") {
      value = cor2_sum(p).value, target = 0, r = 1, rec.modulus = "p";
    } else if (stmt == "cor4") {
      value = cor4_sum(p).value, target = Rational(p) * p, r = 3, rec.modulus = "p^3";
    } else if (stmt == "conj1") {
      value = cor1_sum(p).value, target = Rational(-p, 2), r = 2, rec.modulus = "p^2";
    } else {
      value = cor2_sum(p).value, target = Rational(p), r = 2, rec.modulus = "p^2";
    }
    bool ok = congruent_mod_prime_power(value, target, p, r);
    rec.verdict = ok ? "holds" : "fails";
    if (!ok || g.verbose) rec.note = "sum = " + value.get_str();
    if (!ok && (stmt == "conj1" || stmt == "conj2"))
      rec.note += "; CONTRADICTS the reported computational evidence";
    rec.ms = timed_ms(t0);
    out.push_back(rec);
  }
  return out;
}

// ---------------------------------------------------------------------------
// numeric statements (high-precision floating checks)

HpFloat half_precision_tolerance(unsigned precision) {
  HpFloat t = 1;
  for (unsigned i = 0; i < precision / 2; ++i) t /= 10;
  return t;
}

std::string q_label(double q) {
  std::string s = std::to_string(q);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::vector<Record> run_identity(int which, std::optional<long> m, const GlobalOpts& g) {
  ScopedPrecision prec(g.precision);
  HpFloat tol = half_precision_tolerance(g.precision);
  std::vector<double> qs = g.quick ? std::vector<double>{0.1, 0.3}
                                   : std::vector<double>{0.05, 0.1, 0.2, 0.3};
  std::vector<SeriesId> ids;
  if (which == 4) ids = {SeriesId::s1()};
  if (which == 5) ids = {SeriesId::s2()};
  if (which == 6) {
    std::vector<long> ms = m ? std::vector<long>{*m} : std::vector<long>{1, 2};
    for (long mm : ms) ids.push_back(SeriesId::s3(mm));
  }
  std::vector<Record> out;
  for (const SeriesId& id : ids) {
    for (double q : qs) {
      auto t0 = std::chrono::steady_clock::now();
      IdentityResult res = identity_check(id, HpFloat(q), tol, g.precision / 2);
      Record rec;
      rec.statement = "identity" + std::to_string(which);
      rec.params = {{"q", q_label(q)}};
      if (id.kind == SeriesKind::S3) rec.params.emplace_back("m", std::to_string(id.m));
      rec.verdict = res.ok ? "holds" : "fails";
      rec.note = "|series - product| = " + res.error.str(3) + " (tol " + tol.str(2) + ")";
      rec.ms = timed_ms(t0);
      out.push_back(rec);
    }
  }
  return out;
}

std::vector<Record> run_zeta(const GlobalOpts& g) {
  ScopedPrecision prec(g.precision);
  HpFloat tol = 1;
  for (unsigned i = 0; i + 10 < g.precision; ++i) tol /= 10;
  std::vector<Record> out;
  for (long d : {3L, 5L, 7L, 9L}) {
    auto t0 = std::chrono::steady_clock::now();
    ZetaCheckResult res = zeta_pochhammer_check(d, tol);
    Record rec;
    rec.statement = "zeta";
    rec.params = {{"d", std::to_string(d)}};
    rec.verdict = res.ok ? "holds" : "fails";
    rec.note = "max |product - 2| = " + res.max_error.str(3);
    rec.ms = timed_ms(t0);
    out.push_back(rec);
  }
  return out;
}

std::vector<Record> run_limits(const GlobalOpts& g) {
  ScopedPrecision prec(g.precision);
  HpFloat tol("1e-10");
  std::vector<Record> out;
  for (SeriesKind kind : {SeriesKind::S1, SeriesKind::S2}) {
    for (long d : {3L, 5L}) {
      for (long l = 0; l <= (g.quick ? 2L : 4L); ++l) {
        auto t0 = std::chrono::steady_clock::now();
        RootLimitResult res = root_limit_check(kind, d, l, tol);
        Record rec;
        rec.statement = "limits";
        rec.params = {{"series", kind == SeriesKind::S1 ? "S1" : "S2"},
                      {"d", std::to_string(d)},
                      {"l", std::to_string(l)}};
        if (res.non_removable) {
          rec.verdict = "fails";
          rec.note = "singularity at the root did not cancel";
        } else {
          rec.verdict = res.ok ? "holds" : "fails";
          rec.note = "limit vs " + res.target.get_str() + ": error " + res.error.str(3);
        }
        rec.ms = timed_ms(t0);
        out.push_back(rec);
      }
    }
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    CentralLimitResult res = central_limit_alternating(60, HpFloat("1e-8"));
    Record rec;
    rec.statement = "limits";
    rec.params = {{"check", "alternating-sum"}};
    rec.verdict = res.ok ? "holds" : "fails";
    rec.note = "60-term sum vs sqrt(6)/3: error " + res.error.str(3);
    rec.ms = timed_ms(t0);
    out.push_back(rec);
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    CentralLimitResult res = central_limit_divergence(g.quick ? 2000 : 10000);
    Record rec;
    rec.statement = "limits";
    rec.params = {{"check", "divergence"}};
    rec.verdict = res.ok ? "holds" : "fails";
    rec.note = res.detail;
    rec.ms = timed_ms(t0);
    out.push_back(rec);
  }
  return out;
}

// Synthetic sequences obeying the convolution lemma hypotheses: zero in the
// upper half-window below d, multiplicative across blocks.
std::vector<Rational> synthetic_sequence(std::mt19937& rng, long d, long blocks) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  auto rat = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();  // mpq_class(n, d) stores the fraction unreduced
    return r;
  };
  std::vector<Rational> c(d * blocks);
  c[0] = 1;
  for (long k = 1; k <= (d - 1) / 2; ++k) c[k] = rat();
  if (d > 1) c[d - 1] = 0;  // inside the zero window
  for (long l = 1; l < blocks; ++l) {
    c[l * d] = rat();
    for (long k = 1; k < d - 1; ++k) c[l * d + k] = c[l * d] * c[k];
    if (l + 1 < blocks || d > 1) c[l * d + d - 1] = c[l * d] * c[d - 1];
  }
  return c;
}

std::vector<Record> run_lemma1(const GlobalOpts& g) {
  std::mt19937 rng(2025);
  long trials = g.quick ? 20 : 100;
  std::vector<Record> out;
  for (long d : {3L, 5L, 7L}) {
    auto t0 = std::chrono::steady_clock::now();
    bool all_ok = true;
    for (long t = 0; t < trials; ++t) {
      std::vector<Rational> c = synthetic_sequence(rng, d, 5);
      if (!lemma1_part_a(c, d)) all_ok = false;
      for (long l = 0; l <= 3; ++l)
        for (long k = 0; k <= d - 1; ++k)
          if (!lemma1_part_b(c, d, l, k)) all_ok = false;
    }
    Record rec;
    rec.statement = "lemma1";
    rec.params = {{"d", std::to_string(d)}, {"trials", std::to_string(trials)}};
    rec.verdict = all_ok ? "holds" : "fails";
    rec.note = "parts (a) and (b) exact on synthetic sequences";
    rec.ms = timed_ms(t0);
    out.push_back(rec);
  }
  {
    // Hypothesis violations must be rejected, not silently evaluated.
    auto t0 = std::chrono::steady_clock::now();
    bool rejected_window = false, rejected_mult = false;
    std::vector<Rational> bad(5, Rational(1));  // nonzero in the upper window
    try {
      lemma1_part_a(bad, 5);
    } catch (const HypothesisViolation&) {
      rejected_window = true;
    }
    std::vector<Rational> c = synthetic_sequence(rng, 5, 4);
    c[7] += 1;  // break multiplicativity at l=1, k=2
    try {
      lemma1_part_b(c, 5, 2, 1);
    } catch (const HypothesisViolation&) {
      rejected_mult = true;
    }
    Record rec;
    rec.statement = "lemma1";
    rec.params = {{"check", "rejection"}};
    rec.verdict = rejected_window && rejected_mult ? "holds" : "fails";
    rec.note = "hypothesis-violating inputs raise";
    rec.ms = timed_ms(t0);
    out.push_back(rec);
  }
  return out;
}

// ---------------------------------------------------------------------------
// dispatch

std::vector<Record> run_statement(const std::string& stmt, std::optional<long> n,
                                  std::optional<long> upto, std::optional<long> m,
                                  std::optional<long> primes_upto, const GlobalOpts& g) {
  if (kCongruenceStatements.count(stmt))
    return run_congruence(stmt, congruence_points(stmt, n, upto, m), g);
  if (kPadicStatements.count(stmt)) return run_padic(stmt, primes_upto, g);
  if (stmt == "identity4") return run_identity(4, m, g);
  if (stmt == "identity5") return run_identity(5, m, g);
  if (stmt == "identity6") return run_identity(6, m, g);
  if (stmt == "zeta") return run_zeta(g);
  if (stmt == "limits") return run_limits(g);
  if (stmt == "lemma1") return run_lemma1(g);
  throw std::invalid_argument("unknown statement: " + stmt);
}

std::vector<Record> reproduce_all(const GlobalOpts& g, std::ostream& table) {
  struct Step {
    std::string stmt;
    std::function<std::vector<Record>()> run;
  };
  const bool q = g.quick;
  auto cg = [&](const std::string& s, std::optional<long> n, std::optional<long> upto,
                std::optional<long> m) {
    return [=, &g] { return run_congruence(s, congruence_points(s, n, upto, m), g); };
  };
  std::vector<Step> steps;
  steps.push_back({"eq1", cg("eq1", {}, q ? 13 : 25, {})});
  steps.push_back({"eq2", cg("eq2", {}, q ? 13 : 25, {})});
  steps.push_back({"thm1", cg("thm1", {}, q ? 9 : 21, {})});
  steps.push_back({"thm2", cg("thm2", {}, q ? 9 : 21, {})});
  steps.push_back({"thm4", cg("thm4", {}, q ? 7 : 13, {})});
  steps.push_back({"eq3", [&] {
                     std::vector<Record> out;
                     for (long n : q ? std::vector<long>{5} : std::vector<long>{5, 7})
                       for (long m : {2L, 3L})
                         for (const Record& r :
                              run_congruence("eq3", congruence_points("eq3", n, {}, m), g))
                           out.push_back(r);
                     return out;
                   }});
  steps.push_back({"s5", cg("s5", {}, q ? 7 : 13, {})});
  steps.push_back({"cor1", [&] { return run_padic("cor1", q ? 50 : 200, g); }});
  steps.push_back({"cor2", [&] { return run_padic("cor2", q ? 50 : 200, g); }});
  steps.push_back({"cor4", [&] { return run_padic("cor4", q ? 30 : 100, g); }});
  steps.push_back({"conj1", [&] { return run_padic("conj1", q ? 50 : 200, g); }});
  steps.push_back({"conj2", [&] { return run_padic("conj2", q ? 50 : 200, g); }});
  steps.push_back({"identity4", [&] { return run_identity(4, {}, g); }});
  steps.push_back({"identity5", [&] { return run_identity(5, {}, g); }});
  steps.push_back({"identity6", [&] { return run_identity(6, {}, g); }});
  steps.push_back({"zeta", [&] { return run_zeta(g); }});
  steps.push_back({"limits", [&] { return run_limits(g); }});
  steps.push_back({"lemma1", [&] { return run_lemma1(g); }});

  std::vector<Record> all;
  table << "statement    cases  holds  fails  undefined      ms\n";
  for (const Step& step : steps) {
    std::vector<Record> recs = step.run();
    long holds = 0, fails = 0, undef = 0, ms = 0;
    for (const Record& r : recs) {
      holds += r.verdict == "holds";
      fails += r.verdict == "fails";
      undef += r.verdict == "undefined_gcd";
      ms += r.ms;
    }
    char line[128];
    std::snprintf(line, sizeof line, "%-12s %5zu  %5ld  %5ld  %9ld %7ld\n", step.stmt.c_str(),
                  recs.size(), holds, fails, undef, ms);
    table << line << std::flush;
    for (Record& r : recs) all.push_back(std::move(r));
  }
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qsc: exact verification of truncated q-hypergeometric congruences,\n"
      "their p-adic corollaries, and the series-product identities behind them"};
  app.set_config("--config", "", "flat key=value config file (keys = long option names)");

  GlobalOpts g;
  app.add_option("--format", g.format, "report format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write records to this file instead of stdout");
  app.add_option("--precision", g.precision, "working decimal digits for numeric checks")
      ->check(CLI::Range(30u, 10000u))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for scans (1 = sequential)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quick", g.quick, "reduced ranges (smoke-scale run)");
  app.add_flag("--verbose", g.verbose, "include full witnesses and values in notes");
  app.add_option("--inject-fault", g.fault,
                 "negative-control hook: add q^E to each congruence difference");

  std::optional<long> n, upto, m, primes_upto;
  std::string verify_stmt, scan_stmt;
  CLI::App* verify = app.add_subcommand("verify", "verify one statement at given parameters");
  verify->fallthrough();
  verify->add_option("statement", verify_stmt, "statement id")->required();
  verify->add_option("--n", n, "single parameter n");
  verify->add_option("--n-odd-upto", upto, "all odd n up to this bound (inclusive)");
  verify->add_option("--m", m, "exponent m where the statement takes a = q^m");
  verify->add_option("--primes-upto", primes_upto, "primes below this bound");

  CLI::App* scan = app.add_subcommand("scan", "verify a statement across a parameter range");
  scan->fallthrough();
  scan->add_option("statement", scan_stmt, "statement id")->required();
  scan->add_option("--n-odd-upto", upto, "all odd n up to this bound (inclusive)")->required(false);
  scan->add_option("--m", m, "exponent m where the statement takes a = q^m");
  scan->add_option("--primes-upto", primes_upto, "primes below this bound");

  CLI::App* identity = app.add_subcommand("identity", "all numeric identity and limit checks");
  identity->fallthrough();
  identity->add_option("--m", m, "restrict the third identity to one m");

  CLI::App* repro = app.add_subcommand("reproduce-all", "full battery with a summary table");
  repro->fallthrough();

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    std::vector<Record> records;
    bool summary_to_stdout = false;
    if (verify->parsed()) {
      records = run_statement(verify_stmt, n, upto, m, primes_upto, g);
    } else if (scan->parsed()) {
      if (!upto && !primes_upto)
        throw std::invalid_argument("scan: need --n-odd-upto or --primes-upto");
      records = run_statement(scan_stmt, n, upto, m, primes_upto, g);
    } else if (identity->parsed()) {
      for (int which : {4, 5, 6})
        for (Record& r : run_identity(which, which == 6 ? m : std::nullopt, g))
          records.push_back(std::move(r));
      for (Record& r : run_zeta(g)) records.push_back(std::move(r));
      for (Record& r : run_limits(g)) records.push_back(std::move(r));
    } else {
      summary_to_stdout = !g.out.empty();
      std::ostringstream table;
      records = reproduce_all(g, table);
      (summary_to_stdout ? std::cout : std::cerr) << table.str();
    }

    if (!g.out.empty()) {
      std::ofstream f(g.out);
      if (!f) throw std::runtime_error("cannot open output file: " + g.out);
      write_records(f, records, g.format);
    } else {
      write_records(std::cout, records, g.format);
    }
    return exit_code_for(records);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    // degenerate specializations and modulus preconditions: test selection
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
