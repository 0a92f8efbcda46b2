#include "halfgenus/forms.hpp"

#include <cmath>

namespace halfgenus {

BinaryQuadraticForm reduce(const BinaryQuadraticForm& f) {
  if (!f.is_positive_definite())
    throw DomainError("reduce requires a positive definite form, got " + f.str());
  long long a = f.a, b = f.b, c = f.c;
  while (true) {
    if (a > c) {
      long long t = a;
      a = c;
      c = t;
      b = -b;
      continue;
    }
    if (b > a || b <= -a) {
      // shift b into (-a, a] by x -> x + k y
      long long k = (a - b) / (2 * a);
      if (a - b < 0 && (a - b) % (2 * a) != 0) --k;  // floor division
      long long nb = b + 2 * a * k;
      c = a * k * k + b * k + c;
      b = nb;
      continue;
    }
    if (a == c && b < 0) {
      b = -b;
      continue;
    }
    break;
  }
  return BinaryQuadraticForm{a, b, c};
}

std::vector<BinaryQuadraticForm> enumerate_reduced_forms(long long D) {
  if (D >= 0)
    throw InvalidDiscriminantError("discriminant must be negative, got " +
                                   std::to_string(D));
  long long m = mod_reduce(D, 4);
  if (m != 0 && m != 1)
    throw InvalidDiscriminantError("discriminant must be 0 or 1 mod 4, got " +
                                   std::to_string(D));
  std::vector<BinaryQuadraticForm> out;
  long long abs_d = -D;
  for (long long a = 1; 3 * a * a <= abs_d; ++a) {
    for (long long b = -a; b <= a; ++b) {
      if (mod_reduce(b, 2) != mod_reduce(D, 2)) continue;
      long long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;  // boundary normalization
      out.push_back(BinaryQuadraticForm{a, b, c});
    }
  }
  return out;  // already lexicographic: a ascending, then b, c determined
}

long long squarefree_part(long long n) {
  if (n == 0) throw DomainError("squarefree part of zero is undefined");
  long long sign = n < 0 ? -1 : 1;
  long long m = n < 0 ? -n : n;
  long long out = 1;
  for (long long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * m;  // leftover m is prime or 1
}

DiagonalForm diagonalize_over_q(const BinaryQuadraticForm& f) {
  if (f.a == 0)
    throw DomainError(
        "diagonalization needs a nonzero leading coefficient; reduce first");
  long long D = f.discriminant();
  if (D == 0) throw DomainError("degenerate form: discriminant is zero");
  // 4a f = (2ax + by)^2 - D y^2, so f ~ [a, -aD] modulo squares.
  return DiagonalForm{Rational(squarefree_part(f.a)),
                      Rational(squarefree_part(-f.a * D)), std::nullopt};
}

}  // namespace halfgenus
