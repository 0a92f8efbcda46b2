#pragma once

#include <string>
#include <vector>

#include "halfgenus/rational.hpp"

namespace halfgenus {

/// A place of Q: the real place or a finite prime completion Q_ell.
class Place {
 public:
  static Place real() { return Place(0); }
  static Place finite(long long ell);  // validates primality of ell

  bool is_real() const { return ell_ == 0; }
  bool is_finite() const { return ell_ != 0; }
  bool is_two() const { return ell_ == 2; }
  bool is_odd() const { return ell_ > 2; }

  /// The residue prime; only meaningful at a finite place.
  long long ell() const;

  /// "real" or the decimal prime, as used in certificates.
  std::string str() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.ell_ == b.ell_;
  }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  friend bool operator<(const Place& a, const Place& b) {
    return a.ell_ < b.ell_;  // real place first
  }

 private:
  explicit Place(long long ell) : ell_(ell) {}
  long long ell_;  // 0 encodes the real place
};

// ---------------------------------------------------------------------------
// Modular helpers
// ---------------------------------------------------------------------------

/// (a * b) mod m without overflow, m < 2^62.
long long mod_mul(long long a, long long b, long long m);

/// (base ^ exp) mod m by repeated squaring; exp >= 0.
long long mod_pow(long long base, long long exp, long long m);

/// x reduced into [0, m).
long long mod_reduce(long long x, long long m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
long long mod_inverse(long long a, long long m);

// ---------------------------------------------------------------------------
// Primes and residue symbols
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin over the 12-witness set that is exact for all
/// 64-bit inputs. Throws RangeError for n < 2.
bool is_prime(long long n);

/// All primes <= n in increasing order.
std::vector<long long> primes_up_to(long long n);

/// Legendre symbol (a/p) for odd prime p, by Euler's criterion: 0 when p | a,
/// otherwise a^((p-1)/2) mod p mapped into {+1, -1}. Throws
/// InvalidModulusError unless p is an odd prime.
int legendre(long long a, long long p);

/// Jacobi symbol (a/n) for odd n >= 1, computed by reciprocity without
/// factoring n. Throws InvalidModulusError for even or nonpositive n.
int jacobi(long long a, long long n);

/// ell-adic valuation of a nonzero integer or rational; ell must be prime.
long long valuation(long long x, long long ell);
long long valuation(const Rational& x, long long ell);

/// The smallest positive quadratic nonresidue mod an odd prime. Reporting
/// convenience only; no verification logic depends on the choice.
long long smallest_nonresidue(long long p);

/// Unit part of x at ell (x with all powers of ell removed), reduced mod m.
/// m must be a power of ell or coprime setup compatible with the inverse.
long long unit_part_mod(const Rational& x, long long ell, long long m);

/// Hilbert symbol (a,b)_v: +1 exactly when z^2 = a x^2 + b y^2 has a nonzero
/// solution over the completion at v, -1 otherwise. Never 0. Computed by the
/// closed-form unit/valuation formula at odd ell and the mod-8 formula at 2;
/// both are cross-checked against exhaustive congruence oracles in the test
/// suite. Throws DomainError when a or b is zero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

}  // namespace halfgenus
