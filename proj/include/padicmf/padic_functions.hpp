#pragma once

#include <cstdint>

#include "padicmf/error.hpp"
#include "padicmf/padic_int.hpp"
#include "padicmf/ring.hpp"

namespace padicmf {

/// The Teichmueller lift of a: the (p-1)-th root of unity congruent to a mod p.
PadicInt teichmueller(std::int64_t a, const Profile& profile);

/// v_p(n!) by Legendre's formula.
int factorial_valuation(std::uint64_t n, std::uint64_t p);

/// Prime-to-p part of n!, reduced modulo p^N.
PadicInt factorial_unit_part(std::uint64_t n, const Profile& profile);

namespace detail {

/// Number of series terms after which both log and exp terms vanish modulo p^N.
inline int series_term_bound(const Profile& profile) { return 2 * profile.N() + 2; }

}  // namespace detail

/// p-adic logarithm of a principal unit x (x = 1 mod p).
///
/// Writes x - 1 = p*y and sums (-1)^{i+1} p^{i - v(i)} y^i / (i / p^{v(i)}), so every
/// term is formed without dividing by p and the result is exact modulo p^prec(x).
template <CoefficientRing R>
R plog(const R& x) {
  const Profile& prof = x.profile();
  const R t = x - R::one(prof);
  if (t.valuation() < 1) throw DomainError("plog: argument is not congruent to 1 mod p");
  const R y = t.div_p();
  R sum = R::zero(prof);
  R y_pow = R::one(prof);
  for (int i = 1; i <= detail::series_term_bound(prof); ++i) {
    y_pow = y_pow * y;
    const auto iu = static_cast<std::uint64_t>(i);
    const int vi = p_valuation(iu, prof.p());
    const int shift = i - vi;
    if (shift >= prof.N()) continue;
    const std::int64_t unit = static_cast<std::int64_t>(iu / prof.pow_p(vi));
    R term = y_pow.mul_p_pow(shift) * inverse_of_int(prof, unit);
    if (i % 2 == 0) term = -term;
    sum = sum + term;
  }
  return sum.with_precision(x.precision());
}

/// p-adic exponential of x with v(x) >= 1 (convergent because p >= 5).
template <CoefficientRing R>
R pexp(const R& x) {
  const Profile& prof = x.profile();
  if (x.valuation() < 1) throw DomainError("pexp: argument is not divisible by p");
  const R y = x.div_p();
  R sum = R::one(prof);
  R y_pow = R::one(prof);
  for (int i = 1; i <= detail::series_term_bound(prof); ++i) {
    y_pow = y_pow * y;
    const auto iu = static_cast<std::uint64_t>(i);
    const int shift = i - factorial_valuation(iu, prof.p());
    if (shift >= prof.N()) continue;
    sum = sum + y_pow.mul_p_pow(shift) * factorial_unit_part(iu, prof).inverse();
  }
  return sum.with_precision(x.precision());
}

/// p^{shift*i} * binom(s, i) = prod_{j<i} (s - j) * p^{shift*i} / i!.
///
/// The prime-to-p part of i! is inverted; the p-part is removed by exact
/// division, which throws PrecisionError when the numerator is not divisible.
template <CoefficientRing R>
R scaled_binomial(const R& s, std::uint64_t i, int shift) {
  const Profile& prof = s.profile();
  R numerator = R::one(prof);
  for (std::uint64_t j = 0; j < i; ++j) {
    numerator = numerator * (s - R::constant(prof, static_cast<std::int64_t>(j)));
  }
  const int v_fact = factorial_valuation(i, prof.p());
  const auto gain = static_cast<long long>(shift) * static_cast<long long>(i);
  R scaled = numerator;
  if (gain >= v_fact) {
    scaled = scaled.mul_p_pow(static_cast<int>(std::min<long long>(gain - v_fact, prof.N())));
  } else {
    scaled = scaled.div_p_pow(static_cast<int>(v_fact - gain));
  }
  return scaled * factorial_unit_part(i, prof).inverse();
}

/// binom(s, i) = s(s-1)...(s-i+1)/i!.
template <CoefficientRing R>
R binom_series(const R& s, std::uint64_t i) {
  return scaled_binomial(s, i, 0);
}

}  // namespace padicmf
