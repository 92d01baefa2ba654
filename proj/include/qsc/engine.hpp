#pragma once

// Statement-level verifiers. Each congruence or identity of interest becomes
// one operation producing a CongruenceReport; scans evaluate a parameter list
// (optionally in parallel) and always return reports in parameter order.

#include <map>
#include <string>
#include <vector>

#include "qsc/qseries.hpp"

namespace qsc {

enum class Verdict { Holds, Fails, UndefinedGcd, Skipped };

const char* to_string(Verdict v);
Verdict from_congruence(CongruenceVerdict v);

struct CongruenceReport {
  std::string statement;
  std::map<std::string, long> params;
  std::string modulus;  // human-readable description
  Verdict verdict = Verdict::Skipped;
  std::string witness_digest = "-";  // short hash of the remainder ("-" if none)
  std::string note;
  double ms = 0.0;
};

struct EngineOptions {
  int jobs = 1;
  // Append the full remainder polynomial to the note instead of only its
  // digest (remainders can run to thousands of terms).
  bool full_witness = false;
  // Negative control: when >= 0, q^fault_exponent is added to the difference
  // numerator before the congruence test. Any statement whose modulus is not
  // a unit must then fail.
  long fault_exponent = -1;
};

// The squared-sum supercongruence is quoted with right side q^{-(n-1)}[n]^2
// in one place and q^{n-1}[n]^2 in another; likewise the closed form of the
// plain sum circulates as both q^{-(n-1)/2}[n](-3/n) and q^{(n-1)/2}[n](-3/n).
// Exhaustive computation over n in {5,7,11,13} shows exactly one sign works
// in each case, the negative one, consistently; these constants pin that
// finding (see the scans in tests/acceptance.cpp).
inline constexpr int kSquaredExponentSign = -1;     // q^{-(n-1)} [n]^2
inline constexpr int kClosedFormExponentSign = -1;  // q^{-(n-1)/2} [n] (-3/n)

// Truncated plain sums ≡ 0 (mod [n]), n odd.
CongruenceReport verify_eq1(long n, const EngineOptions& opt = {});
CongruenceReport verify_eq2(long n, const EngineOptions& opt = {});

// Truncated convolution-squared sums ≡ 0 (mod [n]), n odd.
CongruenceReport verify_thm1(long n, const EngineOptions& opt = {});
CongruenceReport verify_thm2(long n, const EngineOptions& opt = {});

// Squared sum ≡ q^{sign(n-1)}[n]^2 (mod [n]Phi_n^2), gcd(n,6) = 1.
// verify_thm4 uses the pinned sign; the _with_exponent form exists so tests
// can assert the opposite sign fails.
CongruenceReport verify_thm4(long n, const EngineOptions& opt = {});
CongruenceReport verify_thm4_with_exponent(long n, int sign, const EngineOptions& opt = {});

// Plain sum of the two-parameter family at argument q^m against
// eps * q^{-(n-1)/2} [n] modulo [n](1 - q^{n+m})(q^m - q^n), eps the Jacobi
// symbol (-3/n). The modulus' q-power content is stripped (and noted). The
// congruence is only meaningful when the modulus shares no cyclotomic factor
// with the summand denominators; a collision yields UndefinedGcd.
CongruenceReport verify_eq3_specialized(long n, long m, const EngineOptions& opt = {});

// Exact closed-form identity at argument q^{sign*n}: the truncated plain sum
// collapses to eps * q^{e}[n] with e one of +-(n-1)/2. Both exponents are
// tried; the report records which matched and the verdict is Holds only for
// the pinned negative exponent.
CongruenceReport verify_s5_closed_form(long n, int sign, const EngineOptions& opt = {});

// One parameter point of a scan; the key set depends on the statement
// ("n" always, plus "m" for eq3 / "sign" for s5).
using ParamPoint = std::map<std::string, long>;

// Evaluates the statement at every point. Points are processed concurrently
// when opt.jobs > 1, but reports come back in input order either way; with
// jobs == 1 the mod-[n] statements share one series accumulator across
// ascending n instead of restarting the sum. Unknown statement names throw
// std::invalid_argument.
std::vector<CongruenceReport> run_scan(const std::string& statement,
                                       const std::vector<ParamPoint>& points,
                                       const EngineOptions& opt = {});

// Odd numbers 1, 3, ..., <= bound.
std::vector<long> odd_up_to(long bound);

namespace detail {
// FNV-1a over a canonical coefficient serialization, 16 hex digits.
std::string poly_digest(const Poly& p);
}  // namespace detail

}  // namespace qsc
