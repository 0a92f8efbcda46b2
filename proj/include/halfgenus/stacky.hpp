#pragma once

#include <string>
#include <vector>

#include "halfgenus/rational.hpp"

namespace halfgenus {

/// Ramification data of one stacky point: the stabilizer order |G| and the
/// orders of the higher ramification subgroups [|G_0|, |G_1|, ...], stored
/// with |G_0| = |G| and trailing 1s omitted. A point is tame exactly when
/// only G_0 is nontrivial.
class RamificationDatum {
 public:
  RamificationDatum(long long group_order, std::vector<long long> filtration);

  /// Tame point of the given stabilizer order (filtration [|G|]).
  static RamificationDatum tame(long long group_order);

  long long group_order() const { return order_; }
  const std::vector<long long>& filtration() const { return filtration_; }
  bool is_tame() const { return filtration_.size() <= 1; }

  std::string str() const;

 private:
  long long order_;
  std::vector<long long> filtration_;
};

/// Combinatorial signature of a stacky curve: coarse genus, number of
/// punctures, and the ramification data of its stacky points.
struct StackySignature {
  long long coarse_genus = 0;
  long long punctures = 0;
  std::vector<RamificationDatum> points;
};

/// Ramification defect delta_P = sum_i (|G_i| - 1) / |G|; equals
/// (|G| - 1)/|G| for tame points.
Rational delta_p(const RamificationDatum& d);

/// Euler characteristic chi = (2 - 2g~ - #Z) - sum_P delta_P, exact.
Rational chi(const StackySignature& sig);

/// Genus g defined by chi = 2 - 2g, exact (fractional values are normal).
Rational genus(const StackySignature& sig);

/// Structural consequences of genus < 1/2: the coarse space is a complete
/// genus-0 curve, there is at most one stacky point, and it is tame. This
/// is a theorem-checker: `satisfied` must be true for every input, and a
/// violation signals a bug in chi/delta_p.
struct GenusLemmaReport {
  Rational genus_value;
  bool applies = false;  // genus < 1/2
  bool coarse_genus_zero = false;
  bool no_punctures = false;
  bool at_most_one_point = false;
  bool all_tame = false;
  bool satisfied = false;
};

GenusLemmaReport check_genus_lt_half_lemma(const StackySignature& sig);

/// Parse "g;Z;[(2),(2)]" style signatures: coarse genus, punctures, then a
/// bracketed list of points "(|G|)" or "(|G|:|G_1|,|G_2|)". Throws
/// ParseError on malformed input.
StackySignature parse_signature(const std::string& text);

std::string format_signature(const StackySignature& sig);

}  // namespace halfgenus
