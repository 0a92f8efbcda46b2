#pragma once

#include <array>
#include <string>
#include <vector>

#include "halfgenus/forms.hpp"

namespace halfgenus {

/// The three primes (p, q, r) of a verification instance. Plain data; the
/// residue and congruence hypotheses are checked by check_hypotheses, not by
/// construction, so that failing inputs flow into reports instead of throws.
struct PrimeTriple {
  long long p = 0;
  long long q = 0;
  long long r = 0;

  long long product() const { return p * q * r; }
  bool contains(long long ell) const { return ell == p || ell == q || ell == r; }
  std::string str() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," +
           std::to_string(r) + ")";
  }
  friend bool operator==(const PrimeTriple& a, const PrimeTriple& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r;
  }
};

/// An element of Q_v^x modulo squares. Two classes at the real place, four
/// at an odd finite place (valuation parity x unit residue class), eight at
/// the 2-adic place (valuation parity x unit class mod 8).
class LocalSquareClass {
 public:
  static LocalSquareClass at_real(bool positive);
  static LocalSquareClass at_odd(long long ell, int val_parity, bool unit_is_square);
  static LocalSquareClass at_two(int val_parity, int unit_mod8);

  const Place& place() const { return place_; }
  bool positive() const;        // real place only
  int val_parity() const;       // finite places
  bool unit_is_square() const;  // odd places
  int unit_mod8() const;        // 2-adic place

  bool is_identity() const;

  /// A canonical integer representative: +-1 at the real place,
  /// ell^parity * (1 or the smallest nonresidue) at odd ell,
  /// 2^parity * (unit mod 8) at 2.
  Rational representative() const;

  /// Display label: "+"/"-" at the real place, "1"/"u"/"7"/"7u" style at odd
  /// places, the representative at 2.
  std::string label() const;

  /// Group law on Q_v^x / squares.
  friend LocalSquareClass operator*(const LocalSquareClass& a,
                                    const LocalSquareClass& b);
  friend bool operator==(const LocalSquareClass& a, const LocalSquareClass& b);
  friend bool operator!=(const LocalSquareClass& a, const LocalSquareClass& b) {
    return !(a == b);
  }

 private:
  LocalSquareClass(Place v, int parity, int unit) : place_(v), parity_(parity), unit_(unit) {}
  Place place_;
  int parity_;  // real: sign bit (0 positive, 1 negative); finite: valuation parity
  int unit_;    // odd: 0 square, 1 nonsquare; two: residue in {1,3,5,7}
};

/// The class of x in Q_v^x / squares. Throws DomainError for x = 0.
LocalSquareClass squareclass_of(const Rational& x, const Place& v);

/// The full squareclass group at v in a fixed enumeration order.
std::vector<LocalSquareClass> all_squareclasses(const Place& v);

/// The set of squareclasses at one place represented by some form.
struct LocalRepSet {
  Place place;
  std::vector<LocalSquareClass> classes;

  bool contains(const LocalSquareClass& c) const;
  friend bool operator==(const LocalRepSet& a, const LocalRepSet& b);
};

/// An element of Z[1/(2pqr)]^x modulo squares, recorded as the exponent
/// vector (e_{-1}, e_2, e_p, e_q, e_r) over {0,1}. There are exactly 32
/// classes; each twists z^2 = f(x,y) into t z^2 = f(x,y).
class GlobalSquareClass {
 public:
  GlobalSquareClass(const PrimeTriple& triple, std::array<int, 5> exponents);

  /// The 32 classes ordered by the exponent vector read as a binary number
  /// with e_{-1} most significant.
  static std::vector<GlobalSquareClass> all(const PrimeTriple& triple);

  /// Class of a unit t in Z[1/(2pqr)]; throws FactorizationError when the
  /// squarefree support of t is not inside {-1, 2, p, q, r}.
  static GlobalSquareClass of_value(const Rational& t, const PrimeTriple& triple);

  const std::array<int, 5>& exponents() const { return eps_; }
  long long representative() const;
  LocalSquareClass localize(const Place& v) const;

  friend bool operator==(const GlobalSquareClass& a, const GlobalSquareClass& b) {
    return a.eps_ == b.eps_ && a.triple_ == b.triple_;
  }

 private:
  PrimeTriple triple_;
  std::array<int, 5> eps_;  // exponents of -1, 2, p, q, r
};

/// Which of the two independent decision routes to use for local
/// representability: Hilbert symbols (fast) or the exhaustive congruence
/// oracle (paranoid). The test suite pins them pointwise equal.
enum class DecisionMode { kFast, kParanoid };

/// True iff alpha x^2 + beta y^2 = t z^2 has a solution over Q_v with
/// z != 0, i.e. the diagonal form g represents the squareclass t.
/// Fast route: (alpha, beta)_v = (-alpha beta, t)_v.
/// Paranoid route: exhaustive search mod ell^3 (mod 2^8 at the 2-adic place)
/// over representatives with one coordinate scaled to 1.
bool represents_squareclass(const DiagonalForm& g, const LocalSquareClass& t,
                            const Place& v, DecisionMode mode = DecisionMode::kFast);

/// Exhaustive-search route in isolation (also used by tests as the oracle).
bool represents_squareclass_oracle(const DiagonalForm& g,
                                   const LocalSquareClass& t, const Place& v);

/// All squareclasses at v represented by g.
LocalRepSet represented_squareclasses(const DiagonalForm& g, const Place& v,
                                      DecisionMode mode = DecisionMode::kFast);

/// Direct exhaustive test that a (not necessarily diagonal) integral form
/// represents the class of t over Q_v, searching f(x,y) = t z^2 mod ell^3
/// (2^8 at 2) with a unit coordinate. Independent of the symbol machinery.
bool form_represents_oracle(const BinaryQuadraticForm& f, const Rational& t,
                            const Place& v);

/// Localization of the global diagonalization [a, a p q r] at one of the
/// five relevant places, with entries reduced to canonical local
/// squareclass representatives. Requires disc(f) = -pqr and v in
/// {real, 2, p, q, r}; violations raise PreconditionError naming the check.
DiagonalForm local_diagonal(const BinaryQuadraticForm& f,
                            const PrimeTriple& triple, const Place& v);

/// A point on z^2 = f(x,y) over Z/ell^k together with its modulus.
struct ConicPoint {
  long long x = 0;
  long long y = 0;
  long long z = 0;
  long long modulus = 0;
};

/// Witness for Y(Z_ell) != 0 at a prime of good reduction (ell not dividing
/// the discriminant): a point mod ell with nonvanishing gradient for odd
/// ell, and a point mod 2^8 meeting the strong Hensel criterion at ell = 2.
/// Throws WrongRoutineError when ell divides disc(f) and VerificationError
/// if no point is found (impossible for valid inputs).
ConicPoint conic_point_good_prime(const BinaryQuadraticForm& f, long long ell);

/// Validity check used both after the search and at recheck time.
bool conic_point_is_valid(const BinaryQuadraticForm& f, const ConicPoint& pt);

/// Witness for Y_t(Z_ell) != 0 at ell in {p, q, r}: a pair (x, y) with
/// t = f(x,y) a unit at ell, found by scanning (x, y) in increasing
/// max-norm with lexicographic tie-break.
struct UnitValueWitness {
  long long x = 0;
  long long y = 0;
  long long t = 0;
};

UnitValueWitness unit_value_witness(const BinaryQuadraticForm& f, long long ell);

}  // namespace halfgenus
