#include "padicmf/profile.hpp"

#include <limits>
#include <string>

#include "padicmf/error.hpp"

namespace padicmf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int p_valuation(std::uint64_t n, std::uint64_t p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Profile Profile::make(std::uint64_t p, int N, int M, int Q) {
  if (!is_prime(p) || p < 5) {
    throw DomainError("profile: p must be a prime >= 5, got " + std::to_string(p));
  }
  if (N < 1 || N > kMaxN) throw DomainError("profile: N must be in [1, 40]");
  if (M < 1) throw DomainError("profile: M must be >= 1");
  if (Q < 2) throw DomainError("profile: Q must be >= 2");

  Profile prof;
  prof.p_ = p;
  prof.N_ = N;
  prof.M_ = M;
  prof.Q_ = Q;
  // Products of two residues are formed in 128 bits; sums must not overflow 64.
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  for (int e = 1; e <= N; ++e) {
    if (prof.modulus_ > kLimit / p) {
      throw DomainError("profile: p^N exceeds 2^62");
    }
    prof.modulus_ *= p;
  }
  return prof;
}

}  // namespace padicmf
