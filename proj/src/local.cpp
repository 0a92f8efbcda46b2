#include "halfgenus/local.hpp"

#include <algorithm>

namespace halfgenus {

// ---------------------------------------------------------------------------
// LocalSquareClass
// ---------------------------------------------------------------------------

LocalSquareClass LocalSquareClass::at_real(bool positive) {
  return LocalSquareClass(Place::real(), positive ? 0 : 1, 0);
}

LocalSquareClass LocalSquareClass::at_odd(long long ell, int val_parity,
                                          bool unit_is_square) {
  Place v = Place::finite(ell);
  if (!v.is_odd()) throw DomainError("at_odd requires an odd prime");
  return LocalSquareClass(v, val_parity & 1, unit_is_square ? 0 : 1);
}

LocalSquareClass LocalSquareClass::at_two(int val_parity, int unit_mod8) {
  if (unit_mod8 != 1 && unit_mod8 != 3 && unit_mod8 != 5 && unit_mod8 != 7)
    throw DomainError("2-adic unit class must be 1, 3, 5 or 7 mod 8");
  return LocalSquareClass(Place::finite(2), val_parity & 1, unit_mod8);
}

bool LocalSquareClass::positive() const {
  if (!place_.is_real()) throw DomainError("sign only defined at the real place");
  return parity_ == 0;
}

int LocalSquareClass::val_parity() const {
  if (!place_.is_finite()) throw DomainError("valuation parity needs a finite place");
  return parity_;
}

bool LocalSquareClass::unit_is_square() const {
  if (!place_.is_odd()) throw DomainError("unit residue class needs an odd place");
  return unit_ == 0;
}

int LocalSquareClass::unit_mod8() const {
  if (!place_.is_two()) throw DomainError("mod-8 unit class needs the 2-adic place");
  return unit_;
}

bool LocalSquareClass::is_identity() const {
  if (place_.is_real()) return parity_ == 0;
  if (place_.is_two()) return parity_ == 0 && unit_ == 1;
  return parity_ == 0 && unit_ == 0;
}

Rational LocalSquareClass::representative() const {
  if (place_.is_real()) return Rational(parity_ == 0 ? 1 : -1);
  long long ell = place_.ell();
  if (place_.is_two()) {
    long long rep = unit_;
    if (parity_) rep *= 2;
    return Rational(rep);
  }
  long long rep = unit_ == 0 ? 1 : smallest_nonresidue(ell);
  if (parity_) rep *= ell;
  return Rational(rep);
}

std::string LocalSquareClass::label() const {
  if (place_.is_real()) return parity_ == 0 ? "+" : "-";
  if (place_.is_two()) return representative().str();
  if (parity_ == 0) return unit_ == 0 ? "1" : "u";
  std::string ell = std::to_string(place_.ell());
  return unit_ == 0 ? ell : ell + "u";
}

LocalSquareClass operator*(const LocalSquareClass& a, const LocalSquareClass& b) {
  if (a.place_ != b.place_)
    throw DomainError("squareclass product requires matching places");
  if (a.place_.is_real())
    return LocalSquareClass(a.place_, (a.parity_ + b.parity_) & 1, 0);
  if (a.place_.is_two())
    return LocalSquareClass(a.place_, (a.parity_ + b.parity_) & 1,
                            static_cast<int>(a.unit_ * b.unit_ % 8));
  return LocalSquareClass(a.place_, (a.parity_ + b.parity_) & 1,
                          (a.unit_ + b.unit_) & 1);
}

bool operator==(const LocalSquareClass& a, const LocalSquareClass& b) {
  return a.place_ == b.place_ && a.parity_ == b.parity_ && a.unit_ == b.unit_;
}

LocalSquareClass squareclass_of(const Rational& x, const Place& v) {
  if (x.is_zero()) throw DomainError("squareclass of zero is undefined");
  if (v.is_real()) return LocalSquareClass::at_real(x.sign() > 0);
  long long ell = v.ell();
  long long val = valuation(x, ell);
  if (v.is_two())
    return LocalSquareClass::at_two(static_cast<int>(val & 1),
                                    static_cast<int>(unit_part_mod(x, 2, 8)));
  long long u = unit_part_mod(x, ell, ell);
  return LocalSquareClass::at_odd(ell, static_cast<int>(val & 1),
                                  legendre(u, ell) == 1);
}

std::vector<LocalSquareClass> all_squareclasses(const Place& v) {
  std::vector<LocalSquareClass> out;
  if (v.is_real()) {
    out.push_back(LocalSquareClass::at_real(true));
    out.push_back(LocalSquareClass::at_real(false));
    return out;
  }
  if (v.is_two()) {
    for (int par = 0; par <= 1; ++par)
      for (int res : {1, 3, 5, 7}) out.push_back(LocalSquareClass::at_two(par, res));
    return out;
  }
  for (int par = 0; par <= 1; ++par)
    for (int unit = 0; unit <= 1; ++unit)
      out.push_back(LocalSquareClass::at_odd(v.ell(), par, unit == 0));
  return out;
}

bool LocalRepSet::contains(const LocalSquareClass& c) const {
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

bool operator==(const LocalRepSet& a, const LocalRepSet& b) {
  if (a.place != b.place || a.classes.size() != b.classes.size()) return false;
  for (const auto& c : a.classes)
    if (!b.contains(c)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// GlobalSquareClass
// ---------------------------------------------------------------------------

GlobalSquareClass::GlobalSquareClass(const PrimeTriple& triple,
                                     std::array<int, 5> exponents)
    : triple_(triple), eps_(exponents) {
  for (int e : eps_)
    if (e != 0 && e != 1) throw DomainError("squareclass exponents must be 0 or 1");
}

std::vector<GlobalSquareClass> GlobalSquareClass::all(const PrimeTriple& triple) {
  std::vector<GlobalSquareClass> out;
  out.reserve(32);
  for (int i = 0; i < 32; ++i)
    out.emplace_back(triple, std::array<int, 5>{(i >> 4) & 1, (i >> 3) & 1,
                                                (i >> 2) & 1, (i >> 1) & 1, i & 1});
  return out;
}

GlobalSquareClass GlobalSquareClass::of_value(const Rational& t,
                                              const PrimeTriple& triple) {
  if (t.is_zero()) throw DomainError("squareclass of zero is undefined");
  long long sf = squarefree_part(t.num()) * squarefree_part(t.den());
  std::array<int, 5> eps{sf < 0 ? 1 : 0, 0, 0, 0, 0};
  long long m = sf < 0 ? -sf : sf;
  const long long support[4] = {2, triple.p, triple.q, triple.r};
  for (int i = 0; i < 4; ++i) {
    if (m % support[i] == 0) {
      eps[static_cast<size_t>(i) + 1] = 1;
      m /= support[i];
    }
  }
  if (m != 1)
    throw FactorizationError("value " + t.str() +
                             " is not a unit in Z[1/(2pqr)] for triple " +
                             triple.str());
  return GlobalSquareClass(triple, eps);
}

long long GlobalSquareClass::representative() const {
  long long t = eps_[0] ? -1 : 1;
  if (eps_[1]) t *= 2;
  if (eps_[2]) t *= triple_.p;
  if (eps_[3]) t *= triple_.q;
  if (eps_[4]) t *= triple_.r;
  return t;
}

LocalSquareClass GlobalSquareClass::localize(const Place& v) const {
  return squareclass_of(Rational(representative()), v);
}

// ---------------------------------------------------------------------------
// Representation of squareclasses by diagonal forms
// ---------------------------------------------------------------------------

namespace {

void require_nondegenerate(const DiagonalForm& g) {
  if (g.alpha.is_zero() || g.beta.is_zero())
    throw DomainError("degenerate diagonal form");
}

// Canonical integer representative of the squareclass of x at ell, reduced
// mod m (a power of ell with exponent >= 3): ell^(v mod 2) * unit part.
long long class_rep_mod(const Rational& x, long long ell, long long m) {
  long long val = valuation(x, ell);
  long long rep = unit_part_mod(x, ell, m);
  if (val % 2 != 0) rep = mod_mul(rep, ell, m);
  return rep;
}

// Exhaustive solvability of A x^2 + B y^2 = T z^2 over Z/m with at least one
// unit coordinate. Scaling by the inverse of a unit coordinate is a bijection
// on solutions, so it is enough to pin one coordinate to 1 in turn; each case
// is then a single O(m) sweep against a precomputed value-set bitmap. For
// entries of valuation at most 1 a solution mod ell^3 (mod 2^8 at ell = 2)
// lifts to Z_ell by Hensel, and conversely any Z_ell solution scales to a
// primitive one, so this decides solvability over Q_ell exactly.
bool ternary_oracle(long long A, long long B, long long T, long long m) {
  std::vector<bool> t_sq(static_cast<size_t>(m), false);
  std::vector<bool> b_sq(static_cast<size_t>(m), false);
  for (long long w = 0; w < m; ++w) {
    long long w2 = mod_mul(w, w, m);
    t_sq[static_cast<size_t>(mod_mul(T, w2, m))] = true;
    b_sq[static_cast<size_t>(mod_mul(B, w2, m))] = true;
  }
  for (long long y = 0; y < m; ++y) {  // x = 1
    long long lhs = mod_reduce(A + mod_mul(B, mod_mul(y, y, m), m), m);
    if (t_sq[static_cast<size_t>(lhs)]) return true;
  }
  for (long long x = 0; x < m; ++x) {  // y = 1
    long long lhs = mod_reduce(mod_mul(A, mod_mul(x, x, m), m) + B, m);
    if (t_sq[static_cast<size_t>(lhs)]) return true;
  }
  for (long long x = 0; x < m; ++x) {  // z = 1
    long long rhs = mod_reduce(T - mod_mul(A, mod_mul(x, x, m), m), m);
    if (b_sq[static_cast<size_t>(rhs)]) return true;
  }
  return false;
}

long long oracle_modulus(long long ell) { return ell == 2 ? 256 : ell * ell * ell; }

bool represents_by_symbols(const DiagonalForm& g, const LocalSquareClass& t,
                           const Place& v) {
  Rational minus_det = -(g.alpha * g.beta);
  return hilbert_symbol(g.alpha, g.beta, v) ==
         hilbert_symbol(minus_det, t.representative(), v);
}

bool represents_by_oracle(const DiagonalForm& g, const LocalSquareClass& t,
                          const Place& v) {
  if (v.is_real()) {
    int sa = g.alpha.sign(), sb = g.beta.sign();
    if (sa > 0 && sb > 0) return t.positive();
    if (sa < 0 && sb < 0) return !t.positive();
    return true;  // indefinite over R represents everything
  }
  long long ell = v.ell();
  long long m = oracle_modulus(ell);
  return ternary_oracle(class_rep_mod(g.alpha, ell, m),
                        class_rep_mod(g.beta, ell, m),
                        class_rep_mod(t.representative(), ell, m), m);
}

}  // namespace

bool represents_squareclass(const DiagonalForm& g, const LocalSquareClass& t,
                            const Place& v, DecisionMode mode) {
  require_nondegenerate(g);
  if (t.place() != v)
    throw DomainError("squareclass lives at a different place than requested");
  if (mode == DecisionMode::kParanoid) return represents_by_oracle(g, t, v);
  return represents_by_symbols(g, t, v);
}

bool represents_squareclass_oracle(const DiagonalForm& g,
                                   const LocalSquareClass& t, const Place& v) {
  require_nondegenerate(g);
  return represents_by_oracle(g, t, v);
}

LocalRepSet represented_squareclasses(const DiagonalForm& g, const Place& v,
                                      DecisionMode mode) {
  LocalRepSet out{v, {}};
  for (const auto& c : all_squareclasses(v))
    if (represents_squareclass(g, c, v, mode)) out.classes.push_back(c);
  return out;
}

bool form_represents_oracle(const BinaryQuadraticForm& f, const Rational& t,
                            const Place& v) {
  if (t.is_zero()) throw DomainError("representation of zero not supported");
  if (v.is_real()) {
    long long D = f.discriminant();
    if (D < 0) return f.a > 0 ? t.sign() > 0 : t.sign() < 0;
    return true;  // indefinite
  }
  long long ell = v.ell();
  long long m = oracle_modulus(ell);
  long long a = mod_reduce(f.a, m), b = mod_reduce(f.b, m), c = mod_reduce(f.c, m);
  if (ell > 2 && a % ell == 0 && c % ell == 0) {
    // make one outer coefficient a unit via x -> x + y; needs ell not
    // dividing b, which holds whenever f is primitive at ell
    if (b % ell == 0) throw DomainError("form vanishes identically mod " + std::to_string(ell));
    long long na = a, nb = mod_reduce(2 * a + b, m), nc = mod_reduce(a + b + c, m);
    a = na;
    b = nb;
    c = nc;
  }
  long long T = class_rep_mod(t, ell, m);
  std::vector<bool> t_sq(static_cast<size_t>(m), false);
  for (long long w = 0; w < m; ++w)
    t_sq[static_cast<size_t>(mod_mul(T, mod_mul(w, w, m), m))] = true;
  for (long long y = 0; y < m; ++y) {  // x = 1
    long long val = mod_reduce(a + mod_mul(b, y, m) + mod_mul(c, mod_mul(y, y, m), m), m);
    if (t_sq[static_cast<size_t>(val)]) return true;
  }
  for (long long x = 0; x < m; ++x) {  // y = 1
    long long val = mod_reduce(mod_mul(a, mod_mul(x, x, m), m) + mod_mul(b, x, m) + c, m);
    if (t_sq[static_cast<size_t>(val)]) return true;
  }
  // z = 1: does f(x,y) = T (mod m) have any solution at all?
  if (ell == 2) {
    for (long long x = 0; x < m; ++x)
      for (long long y = 0; y < m; ++y)
        if (mod_reduce(f.evaluate(x, y), m) == T) return true;
    return false;
  }
  // 4c f = (2cy + bx)^2 - D x^2 with y -> 2cy + bx bijective when c is a
  // unit; symmetrically in x when a is a unit.
  std::vector<bool> sq(static_cast<size_t>(m), false);
  for (long long w = 0; w < m; ++w) sq[static_cast<size_t>(mod_mul(w, w, m))] = true;
  long long D = mod_reduce(f.discriminant(), m);
  long long outer = c % ell != 0 ? c : a;
  for (long long s = 0; s < m; ++s) {
    long long rhs = mod_reduce(mod_mul(4 * outer % m, T, m) + mod_mul(D, mod_mul(s, s, m), m), m);
    if (sq[static_cast<size_t>(rhs)]) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Local diagonalization and witnesses
// ---------------------------------------------------------------------------

DiagonalForm local_diagonal(const BinaryQuadraticForm& f,
                            const PrimeTriple& triple, const Place& v) {
  if (f.a == 0)
    throw PreconditionError("leading coefficient is zero; reduce first");
  if (f.discriminant() != -triple.product())
    throw PreconditionError("discriminant of " + f.str() + " is not -pqr for " +
                            triple.str());
  if (v.is_finite() && v.ell() != 2 && !triple.contains(v.ell()))
    throw PreconditionError("place " + v.str() + " is not among {real, 2, p, q, r}");
  DiagonalForm global = diagonalize_over_q(f);
  return DiagonalForm{squareclass_of(global.alpha, v).representative(),
                      squareclass_of(global.beta, v).representative(), v};
}

ConicPoint conic_point_good_prime(const BinaryQuadraticForm& f, long long ell) {
  if (ell < 2 || !is_prime(ell))
    throw InvalidModulusError("good-prime witness needs a prime, got " +
                              std::to_string(ell));
  long long D = f.discriminant();
  if (D == 0) throw DomainError("degenerate form");
  if (mod_reduce(D, ell) == 0)
    throw WrongRoutineError("prime " + std::to_string(ell) +
                            " divides the discriminant; use unit_value_witness");
  long long m = ell == 2 ? 256 : ell;
  for (long long x = 0; x < m; ++x)
    for (long long y = 0; y < m; ++y)
      for (long long z = 0; z < m; ++z) {
        ConicPoint pt{x, y, z, m};
        if ((x | y | z) == 0) continue;
        if (conic_point_is_valid(f, pt)) return pt;
      }
  throw VerificationError("no smooth point on z^2 = f mod " + std::to_string(m) +
                          " at ell = " + std::to_string(ell));
}

bool conic_point_is_valid(const BinaryQuadraticForm& f, const ConicPoint& pt) {
  long long m = pt.modulus;
  if (m < 2) return false;
  long long g = mod_reduce(pt.z * pt.z - f.evaluate(pt.x, pt.y), m);
  if (g != 0) return false;
  long long dx = 2 * f.a * pt.x + f.b * pt.y;
  long long dy = f.b * pt.x + 2 * f.c * pt.y;
  long long dz = 2 * pt.z;
  if (m % 2 != 0) {  // odd modulus: point mod ell with nonvanishing gradient
    long long ell = m;
    if (mod_reduce(pt.x, ell) == 0 && mod_reduce(pt.y, ell) == 0 &&
        mod_reduce(pt.z, ell) == 0)
      return false;
    return mod_reduce(dx, ell) != 0 || mod_reduce(dy, ell) != 0 ||
           mod_reduce(dz, ell) != 0;
  }
  // 2-adic: modulus 2^8, one odd coordinate, and a partial derivative of
  // valuation s with 2s + 1 <= 8 so the strong Hensel criterion applies.
  if (m != 256) return false;
  if (pt.x % 2 == 0 && pt.y % 2 == 0 && pt.z % 2 == 0) return false;
  auto val2_capped = [](long long n) {
    if (n % 256 == 0) return 8;
    int v = 0;
    n = mod_reduce(n, 256);
    while (n % 2 == 0) {
      n /= 2;
      ++v;
    }
    return v;
  };
  int s = std::min({val2_capped(dx), val2_capped(dy), val2_capped(dz)});
  return 2 * s + 1 <= 8;
}

UnitValueWitness unit_value_witness(const BinaryQuadraticForm& f, long long ell) {
  if (ell < 2 || !is_prime(ell))
    throw InvalidModulusError("unit witness needs a prime, got " +
                              std::to_string(ell));
  long long D = f.discriminant();
  if (D == 0 || valuation(D, ell) != 1)
    throw PreconditionError("prime " + std::to_string(ell) +
                            " must divide the discriminant exactly once");
  // increasing max-norm shells, lexicographic (x, y) within a shell
  for (long long n = 0; n <= ell; ++n) {
    for (long long x = -n; x <= n; ++x) {
      for (long long y = -n; y <= n; ++y) {
        if (std::max(x < 0 ? -x : x, y < 0 ? -y : y) != n) continue;
        long long t = f.evaluate(x, y);
        if (t != 0 && mod_reduce(t, ell) != 0) return UnitValueWitness{x, y, t};
      }
    }
  }
  throw VerificationError("no unit value of " + f.str() + " found mod " +
                          std::to_string(ell));
}

}  // namespace halfgenus
