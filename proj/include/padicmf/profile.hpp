#pragma once

#include <cstdint>

namespace padicmf {

/// Working precision shared by every value of a computation.
///
///  - p: the prime, p >= 5 so that 2, 3 and 12 are units.
///  - N: coefficients live in Z/p^N.
///  - M: family elements are polynomials in the disk parameter u of degree < M.
///  - Q: default q-expansion length (coefficients a_0 .. a_{Q-1}).
class Profile {
 public:
  /// Validates and builds a profile. Throws DomainError on bad input.
  static Profile make(std::uint64_t p, int N, int M, int Q);

  static Profile default_profile() { return make(5, 6, 8, 64); }

  std::uint64_t p() const { return p_; }
  int N() const { return N_; }
  int M() const { return M_; }
  int Q() const { return Q_; }

  /// p^N.
  std::uint64_t modulus() const { return modulus_; }
  /// p^e for 0 <= e <= N.
  std::uint64_t pow_p(int e) const {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= p_;
    return r;
  }

  bool operator==(const Profile& o) const {
    return p_ == o.p_ && N_ == o.N_ && M_ == o.M_ && Q_ == o.Q_;
  }

  Profile with_Q(int Q) const { return make(p_, N_, M_, Q); }
  Profile with_M(int M) const { return make(p_, N_, M, Q_); }

  static constexpr int kMaxN = 40;

 private:
  Profile() = default;
  std::uint64_t p_ = 0;
  int N_ = 0;
  int M_ = 0;
  int Q_ = 0;
  std::uint64_t modulus_ = 1;
};

bool is_prime(std::uint64_t n);

/// Exponent of p in n (n != 0).
int p_valuation(std::uint64_t n, std::uint64_t p);

}  // namespace padicmf
