#include "halfgenus/arith.hpp"

#include <algorithm>

namespace halfgenus {

Place Place::finite(long long ell) {
  if (ell < 2 || !is_prime(ell))
    throw InvalidModulusError("finite place requires a prime, got " +
                              std::to_string(ell));
  return Place(ell);
}

long long Place::ell() const {
  if (!is_finite()) throw DomainError("the real place has no residue prime");
  return ell_;
}

std::string Place::str() const {
  return is_real() ? std::string("real") : std::to_string(ell_);
}

long long mod_mul(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long mod_pow(long long base, long long exp, long long m) {
  long long result = 1 % m;
  base = mod_reduce(base, m);
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base, m);
    base = mod_mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

long long mod_reduce(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

long long mod_inverse(long long a, long long m) {
  long long old_r = mod_reduce(a, m), r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    std::swap(old_r -= q * r, r);
    std::swap(old_s -= q * s, s);
  }
  if (old_r != 1)
    throw DomainError("no inverse of " + std::to_string(a) + " mod " +
                      std::to_string(m));
  return mod_reduce(old_s, m);
}

bool is_prime(long long n) {
  if (n < 2) throw RangeError("is_prime requires n >= 2, got " + std::to_string(n));
  for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // n - 1 = d * 2^s with d odd
  long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 3.3 * 10^24.
  for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
    long long x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<long long> primes_up_to(long long n) {
  std::vector<long long> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(n + 1), true);
  for (long long i = 2; i <= n; ++i) {
    if (!sieve[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long long j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return out;
}

int legendre(long long a, long long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw InvalidModulusError("legendre symbol needs an odd prime modulus, got " +
                              std::to_string(p));
  long long r = mod_reduce(a, p);
  if (r == 0) return 0;
  long long e = mod_pow(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int jacobi(long long a, long long n) {
  if (n < 1 || n % 2 == 0)
    throw InvalidModulusError("jacobi symbol needs an odd positive modulus, got " +
                              std::to_string(n));
  a = mod_reduce(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long m8 = n % 8;
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

long long valuation(long long x, long long ell) {
  if (x == 0) throw UndefinedValuationError("valuation of zero is undefined");
  if (ell < 2 || !is_prime(ell))
    throw InvalidModulusError("valuation requires a prime, got " +
                              std::to_string(ell));
  long long v = 0;
  while (x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v;
}

long long valuation(const Rational& x, long long ell) {
  if (x.is_zero()) throw UndefinedValuationError("valuation of zero is undefined");
  long long v = valuation(x.num(), ell);
  if (x.den() != 1) v -= valuation(x.den(), ell);
  return v;
}

long long smallest_nonresidue(long long p) {
  for (long long u = 2; u < p; ++u)
    if (legendre(u, p) == -1) return u;
  throw InvalidModulusError("no nonresidue mod " + std::to_string(p));
}

long long unit_part_mod(const Rational& x, long long ell, long long m) {
  if (x.is_zero()) throw DomainError("unit part of zero is undefined");
  long long num = x.num(), den = x.den();
  while (num % ell == 0) num /= ell;
  while (den % ell == 0) den /= ell;
  return mod_mul(mod_reduce(num, m), mod_inverse(mod_reduce(den, m), m), m);
}

namespace {

// (u-1)/2 mod 2 for odd u: 0 when u = 1 (mod 4), 1 when u = 3 (mod 4).
int eps2(long long u_mod8) { return (u_mod8 % 4 == 3) ? 1 : 0; }

// (u^2-1)/8 mod 2 for odd u: 0 when u = +-1 (mod 8), 1 when u = +-3 (mod 8).
int omega2(long long u_mod8) { return (u_mod8 == 3 || u_mod8 == 5) ? 1 : 0; }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a.is_zero() || b.is_zero())
    throw DomainError("hilbert symbol requires nonzero arguments");
  if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;

  long long ell = v.ell();
  long long alpha = valuation(a, ell);
  long long beta = valuation(b, ell);
  if (ell == 2) {
    long long u = unit_part_mod(a, 2, 8);
    long long w = unit_part_mod(b, 2, 8);
    long long e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  long long u = unit_part_mod(a, ell, ell);
  long long w = unit_part_mod(b, ell, ell);
  int result = 1;
  if ((alpha % 2) && (beta % 2) && ((ell - 1) / 2) % 2 == 1) result = -result;
  if (beta % 2) result *= legendre(u, ell);
  if (alpha % 2) result *= legendre(w, ell);
  return result;
}

}  // namespace halfgenus
