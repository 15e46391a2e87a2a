#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "padicmf/error.hpp"
#include "padicmf/padic_functions.hpp"
#include "padicmf/ring.hpp"

namespace padicmf {

/// A continuous character chi of Z_p^x with values in R, stored through the
/// decomposition Z_p^x = mu_{p-1} x (1 + pZ_p):
///   tame   - chi restricted to mu_{p-1} is teichmueller^tame,
///   lambda - chi(exp(p)), a principal unit.
template <CoefficientRing R>
struct Character {
  int tame = 0;  // in [0, p-1)
  R lambda;

  const Profile& profile() const { return lambda.profile(); }

  friend bool operator==(const Character& a, const Character& b) {
    return a.tame == b.tame && a.lambda == b.lambda;
  }
};

inline int reduce_tame(std::int64_t t, const Profile& profile) {
  const auto m = static_cast<std::int64_t>(profile.p() - 1);
  return static_cast<int>(((t % m) + m) % m);
}

template <CoefficientRing R>
Character<R> make_character(int tame, R lambda) {
  if ((lambda - R::one(lambda.profile())).valuation() < 1) {
    throw DomainError("character: lambda is not congruent to 1 mod p");
  }
  return Character<R>{reduce_tame(tame, lambda.profile()), std::move(lambda)};
}

/// eps * chi_cycl^k with eps = teichmueller^twist.
Character<PadicInt> classical_char(const Profile& profile, std::int64_t k,
                                   std::int64_t tame_twist = 0);

/// The family over the weight disk: tame part trivial, lambda = 1 + p*u.
Character<FamilyElement> universal_char(const Profile& profile);

/// Disk coordinate of the classical weight k on the universal family:
/// the u with 1 + p*u = exp(p*k).
PadicInt classical_point(const Profile& profile, std::int64_t k);

template <CoefficientRing R>
Character<R> trivial_char(const Profile& profile) {
  return Character<R>{0, R::one(profile)};
}

template <CoefficientRing R>
Character<R> multiply(const Character<R>& a, const Character<R>& b) {
  return Character<R>{reduce_tame(static_cast<std::int64_t>(a.tame) + b.tame, a.profile()),
                      a.lambda * b.lambda};
}

/// chi * chi_cycl^m.
template <CoefficientRing R>
Character<R> twist(const Character<R>& chi, std::int64_t m) {
  const Profile& prof = chi.profile();
  const PadicInt cycl = pexp(PadicInt(prof, static_cast<std::int64_t>(prof.p()) * m));
  return Character<R>{reduce_tame(chi.tame + m, prof), chi.lambda * cycl};
}

/// The p-adic weight log(chi(exp(p)))/p. One digit of precision is consumed by
/// the division by p.
template <CoefficientRing R>
R wt(const Character<R>& chi) {
  return plog(chi.lambda).div_p();
}

/// chi(a) = teichmueller(a)^tame * lambda^{log<a>/p}, <a> = a / teichmueller(a).
template <CoefficientRing R>
R eval_char(const Character<R>& chi, std::int64_t a) {
  const Profile& prof = chi.profile();
  const PadicInt omega = teichmueller(a, prof);  // throws on p | a
  const PadicInt principal = PadicInt(prof, a) * omega.inverse();
  const PadicInt log_ratio = plog(principal).div_p();
  const R exponent = plog(chi.lambda) * log_ratio;
  return pexp(exponent) * omega.pow(static_cast<std::uint64_t>(chi.tame));
}

/// Least n >= 2 with v(chi(exp(p^{n-1})) - 1) >= 1 in every coefficient.
template <CoefficientRing R>
int analytic_level(const Character<R>& chi) {
  const Profile& prof = chi.profile();
  R value = chi.lambda;  // chi(exp(p))
  for (int n = 2; n <= prof.N() + 2; ++n) {
    if ((value - R::one(prof)).valuation() >= 1) return n;
    value = value.pow(prof.p());  // chi(exp(p^n))
  }
  throw DomainError("analytic_level: character is not locally analytic at this precision");
}

/// The canonical section z^{log(lambda_n)/p^n}, lambda_n = chi(exp(p^n)), on the
/// disk |z - 1| <= p^{-n}, expanded in w = (z - 1)/p^n:
///   z^{log(lambda_n)/p^n} = sum_i c_i w^i,   c_i = p^{n i} binom(log(lambda_n)/p^n, i).
/// Since log(lambda_n)/p^n = wt(chi), the c_i are integral and c_i -> 0.
template <CoefficientRing R>
struct SectionSeries {
  int level = 2;
  std::vector<R> coefficients;

  /// Value at an integral point z with z = 1 mod p^level.
  R evaluate(const PadicInt& z) const {
    const Profile& prof = coefficients.front().profile();
    const PadicInt t = z - PadicInt::one(prof);
    if (t.valuation() < level) throw DomainError("section series: z is outside the disk");
    const PadicInt w = t.div_p_pow(level);
    R acc = R::zero(prof);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
      acc = acc * w + *it;
    }
    return acc;
  }
};

/// Builds the section series with `terms` coefficients (0 = until they vanish mod p^N).
template <CoefficientRing R>
SectionSeries<R> char_section_series(const Character<R>& chi, int n, int terms = 0) {
  if (n < analytic_level(chi)) {
    throw DomainError("char_section_series: n is below the analytic level");
  }
  const Profile& prof = chi.profile();
  const R weight = wt(chi);
  SectionSeries<R> out;
  out.level = n;
  const int count = terms > 0 ? terms : 1 + detail::series_term_bound(prof);
  for (int i = 0; i < count; ++i) {
    out.coefficients.push_back(scaled_binomial(weight, static_cast<std::uint64_t>(i), n));
  }
  return out;
}

/// p-conductor of a finite-order character. Only tame (Teichmueller-power)
/// characters are modelled; they factor through (Z/pZ)^x, so n = 1.
struct FiniteOrderCharacter {
  int tame = 0;
  int wild_level = 0;  // > 0 marks a character of p-power order, not modelled
};

int conductor(const FiniteOrderCharacter& eps);

template <CoefficientRing R>
Character<PadicInt> specialize_character(const Character<R>& chi, const PadicInt& u0) {
  return Character<PadicInt>{chi.tame, specialize_value(chi.lambda, u0)};
}

}  // namespace padicmf
