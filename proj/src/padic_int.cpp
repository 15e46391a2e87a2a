#include "padicmf/padic_int.hpp"

#include <algorithm>
#include <ostream>

#include "padicmf/error.hpp"

namespace padicmf {

std::uint64_t reduce_signed(std::int64_t n, std::uint64_t m) {
  return reduce_signed(static_cast<__int128>(n), m);
}

std::uint64_t reduce_signed(__int128 n, std::uint64_t m) {
  const auto mm = static_cast<__int128>(m);
  __int128 r = n % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

PadicInt::PadicInt(const Profile& profile, std::int64_t value)
    : profile_(profile), residue_(reduce_signed(value, profile.modulus())), prec_(profile.N()) {}

PadicInt::PadicInt(const Profile& profile, std::uint64_t residue, int prec)
    : profile_(profile), prec_(std::clamp(prec, 0, profile.N())) {
  residue_ = residue % profile_.pow_p(prec_);
}

PadicInt PadicInt::from_residue(const Profile& profile, std::uint64_t residue, int prec) {
  return PadicInt(profile, residue, prec);
}

PadicInt PadicInt::p_power(const Profile& profile, int e) {
  if (e >= profile.N()) return PadicInt(profile, std::uint64_t{0}, profile.N());
  return PadicInt(profile, profile.pow_p(e), profile.N());
}

int PadicInt::valuation() const {
  if (residue_ == 0) return prec_;
  return std::min(p_valuation(residue_, profile_.p()), prec_);
}

std::int64_t PadicInt::signed_value() const {
  const std::uint64_t m = profile_.pow_p(prec_);
  if (residue_ > m / 2) return static_cast<std::int64_t>(residue_) - static_cast<std::int64_t>(m);
  return static_cast<std::int64_t>(residue_);
}

void PadicInt::check_ring(const PadicInt& o) const {
  if (profile_.p() != o.profile_.p() || profile_.N() != o.profile_.N()) {
    throw DomainError("p-adic operands come from different profiles");
  }
}

PadicInt PadicInt::operator-() const {
  const std::uint64_t m = profile_.pow_p(prec_);
  return PadicInt(profile_, residue_ == 0 ? 0 : m - residue_, prec_);
}

PadicInt& PadicInt::operator+=(const PadicInt& o) {
  check_ring(o);
  prec_ = std::min(prec_, o.prec_);
  const std::uint64_t m = profile_.pow_p(prec_);
  residue_ = (residue_ % m + o.residue_ % m) % m;
  return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o) { return *this += -o; }

PadicInt& PadicInt::operator*=(const PadicInt& o) {
  check_ring(o);
  const int prec = std::min({profile_.N(), prec_ + o.valuation(), o.prec_ + valuation()});
  const std::uint64_t product = mul_mod(residue_, o.residue_, profile_.modulus());
  prec_ = prec;
  residue_ = product % profile_.pow_p(prec_);
  return *this;
}

bool operator==(const PadicInt& a, const PadicInt& b) {
  if (a.profile_.p() != b.profile_.p() || a.profile_.N() != b.profile_.N()) return false;
  const std::uint64_t m = a.profile_.pow_p(std::min(a.prec_, b.prec_));
  return a.residue_ % m == b.residue_ % m;
}

PadicInt PadicInt::div_p() const { return div_p_pow(1); }

PadicInt PadicInt::div_p_pow(int e) const {
  if (e <= 0) return *this;
  if (prec_ == 0) return *this;
  const int v = valuation();
  if (v < e && residue_ != 0) {
    throw PrecisionError("inexact division by p^" + std::to_string(e) + ": valuation is " +
                         std::to_string(v) + ", deficit " + std::to_string(e - v));
  }
  const int new_prec = std::max(prec_ - e, 0);
  if (residue_ == 0) return PadicInt(profile_, std::uint64_t{0}, new_prec);
  return PadicInt(profile_, residue_ / profile_.pow_p(e), new_prec);
}

PadicInt PadicInt::mul_p_pow(int e) const {
  if (e <= 0) return *this;
  const int new_prec = std::min(prec_ + e, profile_.N());
  if (e >= profile_.N()) return PadicInt(profile_, std::uint64_t{0}, new_prec);
  return PadicInt(profile_, mul_mod(residue_, profile_.pow_p(e), profile_.modulus()), new_prec);
}

PadicInt PadicInt::inverse() const {
  if (!is_unit()) throw DomainError("inverse of a non-unit: " + to_string());
  const auto m = static_cast<__int128>(profile_.pow_p(prec_));
  __int128 old_r = static_cast<__int128>(residue_), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  return PadicInt(profile_, reduce_signed(old_s, static_cast<std::uint64_t>(m)), prec_);
}

PadicInt PadicInt::pow(std::uint64_t e) const {
  PadicInt result = one(profile_);
  PadicInt base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

PadicInt PadicInt::with_precision(int new_prec) const {
  return PadicInt(profile_, residue_, std::min(prec_, new_prec));
}

std::string PadicInt::to_string() const {
  std::string s = std::to_string(residue_);
  if (prec_ < profile_.N()) s += " + O(p^" + std::to_string(prec_) + ")";
  return s;
}

std::ostream& operator<<(std::ostream& os, const PadicInt& x) { return os << x.to_string(); }

PadicInt inverse_of_int(const Profile& profile, std::int64_t n) {
  const PadicInt x(profile, n);
  if (!x.is_unit()) {
    throw DomainError("integer " + std::to_string(n) + " is not invertible modulo p");
  }
  return x.inverse();
}

}  // namespace padicmf
