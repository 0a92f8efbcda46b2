#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfgenus/local.hpp"
#include "halfgenus/stacky.hpp"

namespace halfgenus {

// ---------------------------------------------------------------------------
// Hypothesis checking
// ---------------------------------------------------------------------------

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct HypothesisReport {
  std::vector<HypothesisCheck> checks;

  bool all_pass() const;
  bool passed(const std::string& name) const;
  std::string first_failure() const;
};

/// Every hypothesis of the verification instance, reported individually:
/// p, q, r prime and distinct, each 7 mod 8, (p|q) = (p|r) = (q|r) = +1,
/// disc(f) = -pqr, f positive definite, (a|q) = +1, (a|p) = (a|r) = -1.
/// Failures are report entries, never throws.
HypothesisReport check_hypotheses(const PrimeTriple& triple,
                                  const BinaryQuadraticForm& f);

// ---------------------------------------------------------------------------
// Local solvability report
// ---------------------------------------------------------------------------

struct LocalWitness {
  enum class Kind { kRealDefinite, kConicPoint, kUnitValue, kGoodReduction };

  Kind kind = Kind::kConicPoint;
  long long t = 1;        // twist class used
  long long x = 0, y = 0, z = 0;
  long long modulus = 0;  // conic: ell or 256; unit: ell; good-reduction: bound
};

struct LocalReport {
  long long good_prime_bound = 0;
  // ordered: "real", then finite places ascending, then "remaining"
  std::vector<std::pair<std::string, LocalWitness>> entries;

  const LocalWitness* find(const std::string& key) const;
};

/// Witnesses for Y_t(Z_ell) != 0 at every place: real definiteness, conic
/// points with t = 1 at 2 and at every good prime up to the bound, unit
/// values t = f(x,y) at p, q, r, and the symbolic good-reduction entry for
/// the remaining primes. Throws VerificationError naming the place if any
/// search fails.
LocalReport verify_local(const PrimeTriple& triple, const BinaryQuadraticForm& f,
                         long long good_prime_bound);

// ---------------------------------------------------------------------------
// Global obstruction table
// ---------------------------------------------------------------------------

/// The five table columns in fixed order: real, 2, p, q, r.
std::array<Place, 5> table_places(const PrimeTriple& triple);

struct ObstructionRow {
  std::array<int, 5> t_exponents{};  // e_{-1}, e_2, e_p, e_q, e_r
  std::array<bool, 5> square_at{};   // per table column

  bool fails_within(const std::array<bool, 5>& considered) const;
};

struct ObstructionTable {
  PrimeTriple triple;
  std::vector<ObstructionRow> rows;  // exactly 32, exponent-vector order

  const ObstructionRow* row_for(const std::array<int, 5>& eps) const;
};

/// For each of the 32 squareclasses t of Z[1/(2pqr)]^x: whether the twisted
/// form t f represents a nonzero square over each of R, Q_2, Q_p, Q_q, Q_r.
/// Succeeds iff every row fails somewhere among the places counted for the
/// verdict ({real, p, q, r}, plus 2 unless excluded); otherwise throws
/// CounterexampleRefutedError naming the unobstructed row.
ObstructionTable verify_global_obstruction(const PrimeTriple& triple,
                                           const BinaryQuadraticForm& f,
                                           DecisionMode mode = DecisionMode::kFast,
                                           bool use_two_adic = true);

// ---------------------------------------------------------------------------
// Brute-force corroboration
// ---------------------------------------------------------------------------

struct BruteForceReport {
  long long height_bound = 0;
  unsigned long long tuples_scanned = 0;
  // solutions (x, y, z, t) to t z^2 = f(x, y) with t a class representative
  std::vector<std::array<long long, 4>> solutions;
};

/// Exhaustive scan for solutions of t z^2 = f(x,y) with |x|,|y|,|z| bounded
/// and t among the 32 class representatives. Returns the full report.
BruteForceReport brute_force_scan(const PrimeTriple& triple,
                                  const BinaryQuadraticForm& f,
                                  long long height_bound);

/// Same scan, throwing CounterexampleRefutedError when a solution exists.
BruteForceReport brute_force_sanity(const PrimeTriple& triple,
                                    const BinaryQuadraticForm& f,
                                    long long height_bound);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct GenusReport {
  Rational chi_value;
  Rational genus_value;
};

struct CertifyConfig {
  long long good_prime_bound = 100;
  long long height_bound = 200;
  DecisionMode mode = DecisionMode::kFast;
  bool use_two_adic = true;  // count a 2-adic failure toward the verdict
};

/// Self-contained machine-checkable record of one verification run. The
/// hypothesis report and failure reason are carried for diagnostics but not
/// serialized; everything recheck needs is recomputable from the serialized
/// fields.
struct Certificate {
  int schema_version = 1;
  PrimeTriple triple;
  BinaryQuadraticForm form;
  GenusReport genus_report;
  LocalReport local_report;
  ObstructionTable obstruction_table;
  bool verdict = false;
  DecisionMode mode = DecisionMode::kFast;

  HypothesisReport hypotheses;  // not serialized
  std::string failure_reason;   // not serialized; empty when verdict is true
};

/// Runs the full pipeline: hypotheses, genus, local witnesses, obstruction
/// table, brute-force corroboration. The verdict is true iff all pass;
/// failures are recorded in the certificate instead of thrown.
Certificate certify(const PrimeTriple& triple, const BinaryQuadraticForm& f,
                    const CertifyConfig& config = {});

struct RecheckResult {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Re-verifies a certificate from its recorded data plus symbol
/// computations only; no witness searches are repeated. A certificate with
/// a false verdict never rechecks.
RecheckResult recheck(const Certificate& cert);

/// Fixed-layout JSON, byte-reproducible for identical inputs and mode.
std::string certificate_to_json(const Certificate& cert);

/// Inverse of certificate_to_json; throws ParseError on malformed input.
Certificate certificate_from_json(const std::string& text);

}  // namespace halfgenus
