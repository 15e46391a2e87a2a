#include "padicmf/family_element.hpp"

#include <algorithm>
#include <ostream>

#include "padicmf/error.hpp"

namespace padicmf {

namespace {

int residue_valuation(std::uint64_t r, std::uint64_t p, int cap) {
  if (r == 0) return cap;
  return std::min(p_valuation(r, p), cap);
}

}  // namespace

FamilyElement::FamilyElement(const Profile& profile, std::int64_t constant)
    : profile_(profile),
      coeffs_(static_cast<std::size_t>(profile.M()), 0),
      prec_(profile.N()) {
  coeffs_[0] = reduce_signed(constant, profile.modulus());
}

FamilyElement::FamilyElement(const PadicInt& x)
    : profile_(x.profile()),
      coeffs_(static_cast<std::size_t>(x.profile().M()), 0),
      prec_(x.precision()) {
  coeffs_[0] = x.residue();
}

FamilyElement::FamilyElement(const Profile& profile, std::vector<std::uint64_t> coeffs, int prec)
    : profile_(profile), coeffs_(std::move(coeffs)), prec_(std::clamp(prec, 0, profile.N())) {
  coeffs_.resize(static_cast<std::size_t>(profile_.M()), 0);
  normalize();
}

FamilyElement FamilyElement::variable(const Profile& profile) {
  if (profile.M() < 2) throw DomainError("family variable u needs M >= 2");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(profile.M()), 0);
  c[1] = 1;
  return FamilyElement(profile, std::move(c), profile.N());
}

FamilyElement FamilyElement::from_coefficients(const Profile& profile,
                                               std::span<const std::int64_t> coeffs) {
  if (coeffs.size() > static_cast<std::size_t>(profile.M())) {
    throw DomainError("family element has more than M coefficients");
  }
  std::vector<std::uint64_t> c(static_cast<std::size_t>(profile.M()), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = reduce_signed(coeffs[i], profile.modulus());
  return FamilyElement(profile, std::move(c), profile.N());
}

FamilyElement FamilyElement::from_residues(const Profile& profile,
                                           std::span<const std::uint64_t> residues, int prec) {
  if (residues.size() > static_cast<std::size_t>(profile.M())) {
    throw DomainError("family element has more than M coefficients");
  }
  return FamilyElement(profile, std::vector<std::uint64_t>(residues.begin(), residues.end()), prec);
}

void FamilyElement::normalize() {
  const std::uint64_t m = profile_.pow_p(prec_);
  for (auto& c : coeffs_) c %= m;
}

void FamilyElement::check_ring(const FamilyElement& o) const {
  if (profile_.p() != o.profile_.p() || profile_.N() != o.profile_.N() ||
      profile_.M() != o.profile_.M()) {
    throw DomainError("family operands come from different profiles");
  }
}

int FamilyElement::valuation() const {
  int v = prec_;
  for (auto c : coeffs_) v = std::min(v, residue_valuation(c, profile_.p(), prec_));
  return v;
}

bool FamilyElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

bool FamilyElement::is_unit() const {
  if (prec_ == 0 || coeffs_[0] % profile_.p() == 0) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [&](std::uint64_t c) { return c % profile_.p() == 0; });
}

PadicInt FamilyElement::coefficient(int i) const {
  if (i < 0 || i >= profile_.M()) return PadicInt::from_residue(profile_, 0, prec_);
  return PadicInt::from_residue(profile_, coeffs_[static_cast<std::size_t>(i)], prec_);
}

int FamilyElement::degree() const {
  for (int i = profile_.M() - 1; i >= 0; --i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

FamilyElement FamilyElement::operator-() const {
  const std::uint64_t m = profile_.pow_p(prec_);
  std::vector<std::uint64_t> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                 [m](std::uint64_t x) { return x == 0 ? 0 : m - x; });
  return FamilyElement(profile_, std::move(c), prec_);
}

FamilyElement& FamilyElement::operator+=(const FamilyElement& o) {
  check_ring(o);
  prec_ = std::min(prec_, o.prec_);
  const std::uint64_t m = profile_.pow_p(prec_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = (coeffs_[i] % m + o.coeffs_[i] % m) % m;
  }
  return *this;
}

FamilyElement& FamilyElement::operator-=(const FamilyElement& o) { return *this += -o; }

FamilyElement& FamilyElement::operator*=(const FamilyElement& o) {
  check_ring(o);
  const auto M = static_cast<std::size_t>(profile_.M());
  const std::uint64_t mod = profile_.modulus();
  std::vector<std::uint64_t> full(2 * M - 1, 0);
  for (std::size_t i = 0; i < M; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < M; ++j) {
      full[i + j] = (full[i + j] + mul_mod(coeffs_[i], o.coeffs_[j], mod)) % mod;
    }
  }
  int prec = std::min({profile_.N(), prec_ + o.valuation(), o.prec_ + valuation()});
  for (std::size_t k = M; k < full.size(); ++k) {
    prec = std::min(prec, residue_valuation(full[k], profile_.p(), profile_.N()));
  }
  full.resize(M);
  coeffs_ = std::move(full);
  prec_ = prec;
  normalize();
  return *this;
}

FamilyElement& FamilyElement::operator*=(const PadicInt& s) {
  if (profile_.p() != s.profile().p() || profile_.N() != s.profile().N()) {
    throw DomainError("scalar comes from a different profile");
  }
  const int prec = std::min({profile_.N(), prec_ + s.valuation(), s.precision() + valuation()});
  for (auto& c : coeffs_) c = mul_mod(c, s.residue(), profile_.modulus());
  prec_ = prec;
  normalize();
  return *this;
}

bool operator==(const FamilyElement& a, const FamilyElement& b) {
  if (a.profile_.p() != b.profile_.p() || a.profile_.N() != b.profile_.N() ||
      a.profile_.M() != b.profile_.M()) {
    return false;
  }
  const std::uint64_t m = a.profile_.pow_p(std::min(a.prec_, b.prec_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] % m != b.coeffs_[i] % m) return false;
  }
  return true;
}

FamilyElement FamilyElement::div_p_pow(int e) const {
  if (e <= 0 || prec_ == 0) return *this;
  const std::uint64_t pe = profile_.pow_p(std::min(e, profile_.N()));
  std::vector<std::uint64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      c[i] = 0;
      continue;
    }
    const int v = p_valuation(coeffs_[i], profile_.p());
    if (v < e) {
      throw PrecisionError("inexact division by p^" + std::to_string(e) + " at u^" +
                           std::to_string(i) + ": valuation " + std::to_string(v) +
                           ", deficit " + std::to_string(e - v));
    }
    c[i] = coeffs_[i] / pe;
  }
  return FamilyElement(profile_, std::move(c), std::max(prec_ - e, 0));
}

FamilyElement FamilyElement::mul_p_pow(int e) const {
  if (e <= 0) return *this;
  return *this * PadicInt::p_power(profile_, e);
}

FamilyElement FamilyElement::inverse() const {
  if (!is_unit()) throw DomainError("inverse of a non-unit family element");
  // x = c0 (1 + t) with v(t) >= 1, so 1/x = c0^{-1} sum (-t)^i and t^i vanishes for i >= prec.
  const PadicInt c0_inv = coefficient(0).inverse();
  const FamilyElement t = (*this * c0_inv) - one(profile_);
  FamilyElement sum = one(profile_);
  FamilyElement term = one(profile_);
  for (int i = 1; i <= prec_; ++i) {
    term *= -t;
    sum += term;
  }
  return sum * c0_inv;
}

FamilyElement FamilyElement::pow(std::uint64_t e) const {
  FamilyElement result = one(profile_);
  FamilyElement base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

FamilyElement FamilyElement::with_precision(int new_prec) const {
  return FamilyElement(profile_, coeffs_, std::min(prec_, new_prec));
}

PadicInt FamilyElement::specialize(const PadicInt& u0) const {
  PadicInt acc = coefficient(profile_.M() - 1);
  for (int i = profile_.M() - 2; i >= 0; --i) {
    acc = acc * u0 + coefficient(i);
  }
  return acc.with_precision(prec_);
}

std::string FamilyElement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(coeffs_[i]);
    if (i > 0) s += "*u^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  if (prec_ < profile_.N()) s += " + O(p^" + std::to_string(prec_) + ")";
  return s;
}

std::ostream& operator<<(std::ostream& os, const FamilyElement& x) { return os << x.to_string(); }

}  // namespace padicmf
