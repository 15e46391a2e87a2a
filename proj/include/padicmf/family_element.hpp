#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "padicmf/padic_int.hpp"
#include "padicmf/profile.hpp"

namespace padicmf {

/// An analytic function on the closed unit disk in the weight parameter u,
/// i.e. an element of the Tate algebra Z_p<u>, known modulo p^prec.
///
/// It is stored as a polynomial of degree < M. The stored polynomial is exact
/// modulo p^prec: every coefficient of degree >= M of the true element vanishes
/// modulo p^prec. Multiplication forms the full product and lowers the
/// precision to the smallest valuation it has to drop, so evaluation at any
/// integral point is a ring homomorphism modulo the tracked precision.
class FamilyElement {
 public:
  FamilyElement(const Profile& profile, std::int64_t constant);
  /// Constant function with value x.
  explicit FamilyElement(const PadicInt& x);

  static FamilyElement zero(const Profile& profile) { return FamilyElement(profile, 0); }
  static FamilyElement one(const Profile& profile) { return FamilyElement(profile, 1); }
  static FamilyElement constant(const Profile& profile, std::int64_t value) {
    return FamilyElement(profile, value);
  }
  /// The disk parameter u. Needs M >= 2.
  static FamilyElement variable(const Profile& profile);
  /// Coefficients c_0, c_1, ... (at most M of them), full precision.
  static FamilyElement from_coefficients(const Profile& profile,
                                         std::span<const std::int64_t> coeffs);
  static FamilyElement from_residues(const Profile& profile,
                                     std::span<const std::uint64_t> residues, int prec);

  const Profile& profile() const { return profile_; }
  int precision() const { return prec_; }
  int valuation() const;
  bool is_zero() const;
  /// Units of Z_p<u>: unit constant term, all other coefficients divisible by p.
  bool is_unit() const;

  PadicInt coefficient(int i) const;
  std::span<const std::uint64_t> residues() const { return coeffs_; }
  /// Index of the highest nonzero coefficient, -1 for zero.
  int degree() const;

  FamilyElement operator-() const;
  FamilyElement& operator+=(const FamilyElement& o);
  FamilyElement& operator-=(const FamilyElement& o);
  FamilyElement& operator*=(const FamilyElement& o);
  FamilyElement& operator*=(const PadicInt& s);
  friend FamilyElement operator+(FamilyElement a, const FamilyElement& b) { return a += b; }
  friend FamilyElement operator-(FamilyElement a, const FamilyElement& b) { return a -= b; }
  friend FamilyElement operator*(FamilyElement a, const FamilyElement& b) { return a *= b; }
  friend FamilyElement operator*(FamilyElement a, const PadicInt& s) { return a *= s; }
  friend FamilyElement operator*(const PadicInt& s, FamilyElement a) { return a *= s; }

  friend bool operator==(const FamilyElement& a, const FamilyElement& b);
  bool identical(const FamilyElement& o) const {
    return prec_ == o.prec_ && coeffs_ == o.coeffs_;
  }

  FamilyElement div_p() const { return div_p_pow(1); }
  FamilyElement div_p_pow(int e) const;
  FamilyElement mul_p_pow(int e) const;
  FamilyElement inverse() const;
  FamilyElement pow(std::uint64_t e) const;
  FamilyElement with_precision(int new_prec) const;

  /// Evaluation u -> u0.
  PadicInt specialize(const PadicInt& u0) const;

  std::string to_string() const;

 private:
  FamilyElement(const Profile& profile, std::vector<std::uint64_t> coeffs, int prec);
  void check_ring(const FamilyElement& o) const;
  void normalize();

  Profile profile_;
  std::vector<std::uint64_t> coeffs_;  // size M, each reduced modulo p^prec
  int prec_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FamilyElement& x);

/// specialize_family: evaluation of a family element at u0.
inline PadicInt specialize_family(const FamilyElement& x, const PadicInt& u0) {
  return x.specialize(u0);
}

}  // namespace padicmf
