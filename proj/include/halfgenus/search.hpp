#pragma once

#include "halfgenus/verify.hpp"

namespace halfgenus {

/// All triples (p, q, r) of distinct primes up to the bound, each 7 mod 8,
/// with p a square mod q and mod r and q a square mod r, in lexicographic
/// order. The hypotheses are order-sensitive: a permutation of an
/// admissible triple is usually not admissible.
std::vector<PrimeTriple> find_prime_triples(long long bound);

/// Reduced positive definite forms of discriminant -pqr whose leading
/// coefficient is a square mod q and a nonsquare mod p and mod r, in
/// enumeration order, at most `limit` of them.
std::vector<BinaryQuadraticForm> find_admissible_forms(const PrimeTriple& triple,
                                                       long long limit);

struct DiscoverReport {
  std::vector<Certificate> certificates;  // verdict-true only, search order
  std::vector<std::string> anomalies;     // admissible inputs that failed certify
};

/// Composes the searches with certify: every admissible (triple, form) pair
/// below the bound is certified, keeping at most `per_triple` forms per
/// triple. A certify failure on an admissible input is recorded as an
/// anomaly: it would mean either a bug or a genuinely new arithmetic event.
DiscoverReport discover(long long bound, long long per_triple,
                        const CertifyConfig& config = {});

}  // namespace halfgenus
