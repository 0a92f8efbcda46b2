#include "halfgenus/verify.hpp"

#include <algorithm>
#include <set>

namespace halfgenus {

// ---------------------------------------------------------------------------
// Hypotheses
// ---------------------------------------------------------------------------

bool HypothesisReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const HypothesisCheck& c) { return c.pass; });
}

bool HypothesisReport::passed(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.pass;
  return false;
}

std::string HypothesisReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name;
  return "";
}

HypothesisReport check_hypotheses(const PrimeTriple& triple,
                                  const BinaryQuadraticForm& f) {
  HypothesisReport report;
  auto add = [&report](const std::string& name, bool pass,
                       const std::string& detail = "") {
    report.checks.push_back(HypothesisCheck{name, pass, detail});
  };
  auto prime = [](long long n) { return n >= 2 && is_prime(n); };

  bool p_prime = prime(triple.p), q_prime = prime(triple.q), r_prime = prime(triple.r);
  add("p is prime", p_prime, std::to_string(triple.p));
  add("q is prime", q_prime, std::to_string(triple.q));
  add("r is prime", r_prime, std::to_string(triple.r));
  add("p, q, r are distinct",
      triple.p != triple.q && triple.p != triple.r && triple.q != triple.r);
  add("p = 7 (mod 8)", mod_reduce(triple.p, 8) == 7);
  add("q = 7 (mod 8)", mod_reduce(triple.q, 8) == 7);
  add("r = 7 (mod 8)", mod_reduce(triple.r, 8) == 7);

  bool odd_primes = p_prime && q_prime && r_prime && triple.p > 2 &&
                    triple.q > 2 && triple.r > 2;
  if (odd_primes) {
    add("p is a square mod q", legendre(triple.p, triple.q) == 1);
    add("p is a square mod r", legendre(triple.p, triple.r) == 1);
    add("q is a square mod r", legendre(triple.q, triple.r) == 1);
  } else {
    add("p is a square mod q", false, "skipped: p, q, r not odd primes");
    add("p is a square mod r", false, "skipped: p, q, r not odd primes");
    add("q is a square mod r", false, "skipped: p, q, r not odd primes");
  }

  add("disc(f) = -pqr",
      f.discriminant() == -(triple.p * triple.q * triple.r),
      "disc = " + std::to_string(f.discriminant()));
  add("f is positive definite", f.is_positive_definite(), f.str());

  if (odd_primes) {
    add("a is a nonzero square mod q", legendre(f.a, triple.q) == 1);
    add("a is a nonsquare mod p", legendre(f.a, triple.p) == -1);
    add("a is a nonsquare mod r", legendre(f.a, triple.r) == -1);
  } else {
    add("a is a nonzero square mod q", false, "skipped: p, q, r not odd primes");
    add("a is a nonsquare mod p", false, "skipped: p, q, r not odd primes");
    add("a is a nonsquare mod r", false, "skipped: p, q, r not odd primes");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Local report
// ---------------------------------------------------------------------------

const LocalWitness* LocalReport::find(const std::string& key) const {
  for (const auto& [k, w] : entries)
    if (k == key) return &w;
  return nullptr;
}

LocalReport verify_local(const PrimeTriple& triple, const BinaryQuadraticForm& f,
                         long long good_prime_bound) {
  if (f.discriminant() != -triple.product())
    throw PreconditionError("verify_local requires disc(f) = -pqr");
  if (!f.is_positive_definite())
    throw PreconditionError("verify_local requires a positive definite form");
  if (good_prime_bound < 2)
    throw PreconditionError("good prime bound must be at least 2");

  LocalReport report;
  report.good_prime_bound = good_prime_bound;

  LocalWitness real_w;
  real_w.kind = LocalWitness::Kind::kRealDefinite;
  real_w.t = 1;
  report.entries.emplace_back("real", real_w);

  std::set<long long> ells;
  for (long long ell : primes_up_to(good_prime_bound)) ells.insert(ell);
  ells.insert(2);
  ells.insert(triple.p);
  ells.insert(triple.q);
  ells.insert(triple.r);

  for (long long ell : ells) {
    LocalWitness w;
    if (triple.contains(ell)) {
      UnitValueWitness uv = unit_value_witness(f, ell);
      w.kind = LocalWitness::Kind::kUnitValue;
      w.t = uv.t;
      w.x = uv.x;
      w.y = uv.y;
      w.modulus = ell;
    } else {
      ConicPoint pt = conic_point_good_prime(f, ell);
      w.kind = LocalWitness::Kind::kConicPoint;
      w.t = 1;
      w.x = pt.x;
      w.y = pt.y;
      w.z = pt.z;
      w.modulus = pt.modulus;
    }
    report.entries.emplace_back(std::to_string(ell), w);
  }

  LocalWitness rem;
  rem.kind = LocalWitness::Kind::kGoodReduction;
  rem.t = 1;
  rem.modulus = good_prime_bound;
  report.entries.emplace_back("remaining", rem);
  return report;
}

// ---------------------------------------------------------------------------
// Obstruction table
// ---------------------------------------------------------------------------

std::array<Place, 5> table_places(const PrimeTriple& triple) {
  return {Place::real(), Place::finite(2), Place::finite(triple.p),
          Place::finite(triple.q), Place::finite(triple.r)};
}

bool ObstructionRow::fails_within(const std::array<bool, 5>& considered) const {
  for (int i = 0; i < 5; ++i)
    if (considered[static_cast<size_t>(i)] && fails_at[static_cast<size_t>(i)])
      return true;
  return false;
}

const ObstructionRow* ObstructionTable::row_for(
    const std::array<int, 5>& eps) const {
  for (const auto& row : rows)
    if (row.t_exponents == eps) return &row;
  return nullptr;
}

ObstructionTable verify_global_obstruction(const PrimeTriple& triple,
                                           const BinaryQuadraticForm& f,
                                           DecisionMode mode, bool use_two_adic) {
  DiagonalForm diag = diagonalize_over_q(f);
  auto places = table_places(triple);
  const std::array<bool, 5> considered{true, use_two_adic, true, true, true};

  ObstructionTable table;
  table.triple = triple;
  for (const auto& cls : GlobalSquareClass::all(triple)) {
    Rational t(cls.representative());
    DiagonalForm twisted{diag.alpha * t, diag.beta * t, std::nullopt};
    ObstructionRow row;
    row.t_exponents = cls.exponents();
    for (size_t i = 0; i < places.size(); ++i) {
      bool sq = represents_squareclass(twisted, squareclass_of(Rational(1), places[i]),
                                       places[i], mode);
      row.square_at[i] = sq;
      row.fails_at[i] = !sq;
    }
    if (!row.fails_within(considered))
      throw CounterexampleRefutedError(
          "twist t = " + std::to_string(cls.representative()) +
          " represents squares at every place; the input is not a counterexample");
    table.rows.push_back(row);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

BruteForceReport brute_force_scan(const PrimeTriple& triple,
                                  const BinaryQuadraticForm& f,
                                  long long height_bound) {
  if (height_bound < 0) throw RangeError("height bound must be nonnegative");
  BruteForceReport report;
  report.height_bound = height_bound;
  const long long H = height_bound;
  unsigned long long side = static_cast<unsigned long long>(2 * H + 1);
  report.tuples_scanned = side * side * static_cast<unsigned long long>(H) * 32ULL;

  std::set<long long> reps;
  for (const auto& cls : GlobalSquareClass::all(triple))
    reps.insert(cls.representative());

  for (long long x = -H; x <= H; ++x) {
    for (long long y = -H; y <= H; ++y) {
      long long v = f.evaluate(x, y);
      if (v == 0) continue;  // t z^2 = 0 has no unit t
      long long av = v < 0 ? -v : v;
      for (long long z = 1; z <= H && z * z <= av; ++z) {
        if (v % (z * z) != 0) continue;
        long long t = v / (z * z);
        if (reps.count(t)) report.solutions.push_back({x, y, z, t});
      }
    }
  }
  return report;
}

BruteForceReport brute_force_sanity(const PrimeTriple& triple,
                                    const BinaryQuadraticForm& f,
                                    long long height_bound) {
  BruteForceReport report = brute_force_scan(triple, f, height_bound);
  if (!report.solutions.empty()) {
    const auto& s = report.solutions.front();
    throw CounterexampleRefutedError(
        "global solution found: t = " + std::to_string(s[3]) + ", (x,y,z) = (" +
        std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
        std::to_string(s[2]) + ")");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Certify
// ---------------------------------------------------------------------------

namespace {

StackySignature quotient_signature() {
  // mu_2 quotient of a smooth conic: two tame order-2 stacky points over the
  // z = 0 locus (distinct because the discriminant is nonzero), coarse P^1.
  return StackySignature{0, 0,
                         {RamificationDatum::tame(2), RamificationDatum::tame(2)}};
}

}  // namespace

Certificate certify(const PrimeTriple& triple, const BinaryQuadraticForm& f,
                    const CertifyConfig& config) {
  Certificate cert;
  cert.triple = triple;
  cert.form = f;
  cert.mode = config.mode;

  StackySignature sig = quotient_signature();
  cert.genus_report = GenusReport{chi(sig), genus(sig)};

  cert.hypotheses = check_hypotheses(triple, f);
  if (!cert.hypotheses.all_pass()) {
    cert.verdict = false;
    cert.failure_reason = "hypothesis failed: " + cert.hypotheses.first_failure();
    return cert;
  }

  try {
    cert.local_report = verify_local(triple, f, config.good_prime_bound);
    cert.obstruction_table =
        verify_global_obstruction(triple, f, config.mode, config.use_two_adic);
    brute_force_sanity(triple, f, config.height_bound);
  } catch (const Error& e) {
    cert.verdict = false;
    cert.failure_reason = e.what();
    return cert;
  }

  bool genus_ok = cert.genus_report.genus_value == Rational(1, 2) &&
                  cert.genus_report.chi_value == Rational(1);
  cert.verdict = genus_ok;
  if (!genus_ok) cert.failure_reason = "genus computation did not yield 1/2";
  return cert;
}

// ---------------------------------------------------------------------------
// Recheck
// ---------------------------------------------------------------------------

RecheckResult recheck(const Certificate& cert) {
  RecheckResult res;
  auto bad = [&res](const std::string& msg) { res.problems.push_back(msg); };

  if (cert.schema_version != 1)
    bad("unsupported schema version " + std::to_string(cert.schema_version));
  if (!cert.verdict) bad("verdict is false; certificate proves nothing");

  HypothesisReport hyp = check_hypotheses(cert.triple, cert.form);
  if (!hyp.all_pass()) bad("hypothesis failed: " + hyp.first_failure());

  StackySignature sig = quotient_signature();
  if (!(chi(sig) == cert.genus_report.chi_value)) bad("genus report: chi mismatch");
  if (!(genus(sig) == cert.genus_report.genus_value))
    bad("genus report: genus mismatch");
  if (!(cert.genus_report.genus_value == Rational(1, 2)))
    bad("genus report: genus is not 1/2");

  if (!hyp.all_pass()) {
    res.ok = false;
    return res;  // local and global sections are meaningless without hypotheses
  }

  // Local witnesses, re-evaluated from recorded data only.
  const LocalReport& local = cert.local_report;
  const LocalWitness* real_w = local.find("real");
  if (!real_w || real_w->kind != LocalWitness::Kind::kRealDefinite ||
      real_w->t != 1)
    bad("local: missing or malformed real-place entry");
  else if (!cert.form.is_positive_definite())
    bad("local: real-place witness invalid, form not positive definite");

  const LocalWitness* rem = local.find("remaining");
  long long bound = rem ? rem->modulus : 0;
  if (!rem || rem->kind != LocalWitness::Kind::kGoodReduction || bound < 2)
    bad("local: missing or malformed good-reduction entry");
  if (rem && bound != local.good_prime_bound)
    bad("local: inconsistent good prime bound");

  std::set<long long> expected;
  if (bound >= 2)
    for (long long ell : primes_up_to(bound)) expected.insert(ell);
  expected.insert(2);
  expected.insert(cert.triple.p);
  expected.insert(cert.triple.q);
  expected.insert(cert.triple.r);

  for (long long ell : expected) {
    const std::string key = std::to_string(ell);
    const LocalWitness* w = local.find(key);
    if (!w) {
      bad("local: no witness at ell = " + key);
      continue;
    }
    if (cert.triple.contains(ell)) {
      if (w->kind != LocalWitness::Kind::kUnitValue || w->modulus != ell) {
        bad("local: wrong witness kind at ell = " + key);
        continue;
      }
      long long t = cert.form.evaluate(w->x, w->y);
      if (w->t != t || t == 0 || mod_reduce(t, ell) == 0)
        bad("local: unit-value witness fails at ell = " + key);
    } else {
      long long want_mod = ell == 2 ? 256 : ell;
      if (w->kind != LocalWitness::Kind::kConicPoint || w->modulus != want_mod ||
          w->t != 1) {
        bad("local: wrong witness kind at ell = " + key);
        continue;
      }
      if (!conic_point_is_valid(cert.form, ConicPoint{w->x, w->y, w->z, w->modulus}))
        bad("local: conic point fails Hensel checks at ell = " + key);
    }
  }
  if (local.entries.size() != expected.size() + 2)
    bad("local: unexpected extra or missing entries");

  // Obstruction rows, recomputed via the recorded decision mode.
  const ObstructionTable& table = cert.obstruction_table;
  if (table.rows.size() != 32) {
    bad("obstruction: table must have exactly 32 rows");
  } else {
    DiagonalForm diag = diagonalize_over_q(cert.form);
    auto places = table_places(cert.triple);
    // the verdict-bearing invariant: every row fails inside {real, p, q, r}
    const std::array<bool, 5> strong{true, false, true, true, true};
    for (int i = 0; i < 32; ++i) {
      const auto& row = table.rows[static_cast<size_t>(i)];
      std::array<int, 5> eps{(i >> 4) & 1, (i >> 3) & 1, (i >> 2) & 1,
                             (i >> 1) & 1, i & 1};
      if (row.t_exponents != eps) {
        bad("obstruction: row " + std::to_string(i) + " has wrong exponents");
        continue;
      }
      GlobalSquareClass cls(cert.triple, eps);
      Rational t(cls.representative());
      DiagonalForm twisted{diag.alpha * t, diag.beta * t, std::nullopt};
      std::string t_str = std::to_string(cls.representative());
      for (size_t col = 0; col < places.size(); ++col) {
        bool sq = represents_squareclass(
            twisted, squareclass_of(Rational(1), places[col]), places[col],
            cert.mode);
        if (row.square_at[col] != sq)
          bad("obstruction: row t = " + t_str + " wrong at " + places[col].str());
        if (row.fails_at[col] != !row.square_at[col])
          bad("obstruction: row t = " + t_str +
              " has inconsistent failure set at " + places[col].str());
      }
      if (!row.fails_within(strong))
        bad("obstruction: row t = " + t_str + " has no failure in {real, p, q, r}");
    }
  }

  res.ok = res.problems.empty();
  return res;
}

}  // namespace halfgenus
