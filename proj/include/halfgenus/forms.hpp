#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halfgenus/arith.hpp"

namespace halfgenus {

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct BinaryQuadraticForm {
  long long a = 0;
  long long b = 0;
  long long c = 0;

  long long discriminant() const { return b * b - 4 * a * c; }

  /// True iff f(x,y) > 0 for all real (x,y) != (0,0).
  bool is_positive_definite() const { return a > 0 && discriminant() < 0; }

  long long evaluate(long long x, long long y) const {
    return a * x * x + b * x * y + c * y * y;
  }

  /// |b| <= a <= c with b >= 0 on the boundary cases |b| = a or a = c.
  bool is_reduced() const {
    long long ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
  }

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
  }

  friend bool operator==(const BinaryQuadraticForm& f,
                         const BinaryQuadraticForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c;
  }
  friend bool operator!=(const BinaryQuadraticForm& f,
                         const BinaryQuadraticForm& g) {
    return !(f == g);
  }
  friend bool operator<(const BinaryQuadraticForm& f,
                        const BinaryQuadraticForm& g) {
    if (f.a != g.a) return f.a < g.a;
    if (f.b != g.b) return f.b < g.b;
    return f.c < g.c;
  }
};

/// Diagonal form alpha x^2 + beta y^2 with entries stored as canonical
/// squareclass representatives. `completion` is empty for a form over Q and
/// carries the place for a localized form.
struct DiagonalForm {
  Rational alpha;
  Rational beta;
  std::optional<Place> completion;
};

/// Gauss reduction to the unique reduced representative in the proper
/// equivalence class. Throws DomainError unless f is positive definite.
BinaryQuadraticForm reduce(const BinaryQuadraticForm& f);

/// All reduced positive definite forms of discriminant D < 0, D = 0 or
/// 1 (mod 4), in lexicographic (a, b, c) order. Throws
/// InvalidDiscriminantError otherwise.
std::vector<BinaryQuadraticForm> enumerate_reduced_forms(long long D);

/// Squarefree part of n != 0, keeping the sign.
long long squarefree_part(long long n);

/// Diagonalization of f over Q by completing the square: for nonzero a and
/// discriminant D != 0 the form is equivalent to [a, -aD], returned with
/// squarefree entries. For D < 0 this is (a, a|D|). Throws DomainError when
/// a = 0 (reduce first) or D = 0.
DiagonalForm diagonalize_over_q(const BinaryQuadraticForm& f);

}  // namespace halfgenus
