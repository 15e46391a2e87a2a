#pragma once

#include <concepts>
#include <cstdint>

#include "padicmf/family_element.hpp"
#include "padicmf/padic_int.hpp"
#include "padicmf/profile.hpp"

namespace padicmf {

/// Coefficient rings the q-expansion and connection layers are generic over:
/// PadicInt (a single weight) and FamilyElement (the weight disk).
template <class R>
concept CoefficientRing = requires(R a, const R& b, const PadicInt& s, const Profile& prof,
                                   std::int64_t n, int e) {
  { R::constant(prof, n) } -> std::same_as<R>;
  { R::zero(prof) } -> std::same_as<R>;
  { R::one(prof) } -> std::same_as<R>;
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { a * s } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.identical(b) } -> std::convertible_to<bool>;
  { a.div_p_pow(e) } -> std::same_as<R>;
  { a.mul_p_pow(e) } -> std::same_as<R>;
  { a.valuation() } -> std::convertible_to<int>;
  { a.precision() } -> std::convertible_to<int>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.with_precision(e) } -> std::same_as<R>;
  { a.profile() } -> std::convertible_to<const Profile&>;
};

static_assert(CoefficientRing<PadicInt>);
static_assert(CoefficientRing<FamilyElement>);

/// Embeds a scalar into R.
template <CoefficientRing R>
R embed(const PadicInt& x) {
  if constexpr (std::same_as<R, PadicInt>) {
    return x;
  } else {
    return R(x);
  }
}

/// Image of a family element under evaluation; identity on scalars.
inline PadicInt specialize_value(const FamilyElement& x, const PadicInt& u0) {
  return x.specialize(u0);
}
inline PadicInt specialize_value(const PadicInt& x, const PadicInt& /*u0*/) { return x; }

}  // namespace padicmf
