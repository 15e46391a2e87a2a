#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "padicmf/profile.hpp"

namespace padicmf {

/// An element of Z_p known modulo p^prec, prec <= N.
///
/// The residue is always the least non-negative representative modulo p^prec.
/// Multiplication uses the sharp rule prec(ab) = min(prec(a) + v(b), prec(b) + v(a), N),
/// so multiplying by p^e raises the known precision instead of lowering it.
class PadicInt {
 public:
  /// `value` reduced modulo p^N, full precision.
  PadicInt(const Profile& profile, std::int64_t value);

  static PadicInt zero(const Profile& profile) { return PadicInt(profile, 0); }
  static PadicInt one(const Profile& profile) { return PadicInt(profile, 1); }
  static PadicInt constant(const Profile& profile, std::int64_t value) {
    return PadicInt(profile, value);
  }
  static PadicInt from_residue(const Profile& profile, std::uint64_t residue, int prec);
  /// p^e as an exact element (zero at full precision when e >= N).
  static PadicInt p_power(const Profile& profile, int e);

  const Profile& profile() const { return profile_; }
  std::uint64_t residue() const { return residue_; }
  int precision() const { return prec_; }
  /// min(v_p(residue), precision); equals precision() for zero.
  int valuation() const;
  bool is_zero() const { return residue_ == 0; }
  bool is_unit() const { return prec_ > 0 && residue_ % profile_.p() != 0; }

  /// Representative in (-p^prec / 2, p^prec / 2].
  std::int64_t signed_value() const;

  PadicInt operator-() const;
  PadicInt& operator+=(const PadicInt& o);
  PadicInt& operator-=(const PadicInt& o);
  PadicInt& operator*=(const PadicInt& o);
  friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
  friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
  friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }

  /// Equality modulo p^min(prec).
  friend bool operator==(const PadicInt& a, const PadicInt& b);

  /// Same residue and same precision.
  bool identical(const PadicInt& o) const {
    return residue_ == o.residue_ && prec_ == o.prec_;
  }

  /// Exact division by p. Loses one digit of precision.
  PadicInt div_p() const;
  /// Exact division by p^e.
  PadicInt div_p_pow(int e) const;
  /// Multiplication by p^e; gains e digits of precision (capped at N).
  PadicInt mul_p_pow(int e) const;
  /// Inverse of a unit, at the same precision.
  PadicInt inverse() const;
  PadicInt pow(std::uint64_t e) const;
  /// Same value with precision lowered to min(prec, new_prec).
  PadicInt with_precision(int new_prec) const;

  std::string to_string() const;

 private:
  PadicInt(const Profile& profile, std::uint64_t residue, int prec);
  void check_ring(const PadicInt& o) const;

  Profile profile_;
  std::uint64_t residue_ = 0;
  int prec_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PadicInt& x);

/// Inverse of the integer n modulo p^N; n must be prime to p.
PadicInt inverse_of_int(const Profile& profile, std::int64_t n);

/// n mod m as a least non-negative residue.
std::uint64_t reduce_signed(std::int64_t n, std::uint64_t m);
std::uint64_t reduce_signed(__int128 n, std::uint64_t m);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

}  // namespace padicmf
