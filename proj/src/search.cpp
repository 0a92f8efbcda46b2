#include "halfgenus/search.hpp"

namespace halfgenus {

std::vector<PrimeTriple> find_prime_triples(long long bound) {
  std::vector<long long> candidates;
  for (long long p : primes_up_to(bound))
    if (p % 8 == 7) candidates.push_back(p);

  std::vector<PrimeTriple> out;
  for (long long p : candidates) {
    for (long long q : candidates) {
      if (q == p) continue;
      // jacobi prefilter, legendre confirmation on survivors
      if (jacobi(p, q) != 1 || legendre(p, q) != 1) continue;
      for (long long r : candidates) {
        if (r == p || r == q) continue;
        if (jacobi(p, r) != 1 || legendre(p, r) != 1) continue;
        if (jacobi(q, r) != 1 || legendre(q, r) != 1) continue;
        out.push_back(PrimeTriple{p, q, r});
      }
    }
  }
  return out;  // candidate loops ascend, so the output is lexicographic
}

std::vector<BinaryQuadraticForm> find_admissible_forms(const PrimeTriple& triple,
                                                       long long limit) {
  std::vector<BinaryQuadraticForm> out;
  if (limit <= 0) return out;
  for (const auto& f : enumerate_reduced_forms(-triple.product())) {
    if (jacobi(mod_reduce(f.a, triple.q), triple.q) != 1) continue;
    if (legendre(f.a, triple.q) != 1) continue;
    if (legendre(f.a, triple.p) != -1) continue;
    if (legendre(f.a, triple.r) != -1) continue;
    out.push_back(f);
    if (static_cast<long long>(out.size()) >= limit) break;
  }
  return out;
}

DiscoverReport discover(long long bound, long long per_triple,
                        const CertifyConfig& config) {
  DiscoverReport report;
  for (const auto& triple : find_prime_triples(bound)) {
    for (const auto& f : find_admissible_forms(triple, per_triple)) {
      Certificate cert = certify(triple, f, config);
      if (cert.verdict) {
        report.certificates.push_back(std::move(cert));
      } else {
        report.anomalies.push_back("certify failed for triple " + triple.str() +
                                   ", form " + f.str() + ": " +
                                   cert.failure_reason);
      }
    }
  }
  return report;
}

}  // namespace halfgenus
