#include "padicmf/weight_space.hpp"

namespace padicmf {

Character<PadicInt> classical_char(const Profile& profile, std::int64_t k, std::int64_t tame_twist) {
  const auto p = static_cast<std::int64_t>(profile.p());
  return Character<PadicInt>{reduce_tame(k + tame_twist, profile), pexp(PadicInt(profile, p * k))};
}

Character<FamilyElement> universal_char(const Profile& profile) {
  FamilyElement lambda =
      FamilyElement::one(profile) + FamilyElement::variable(profile) * PadicInt::p_power(profile, 1);
  return Character<FamilyElement>{0, std::move(lambda)};
}

PadicInt classical_point(const Profile& profile, std::int64_t k) {
  const auto p = static_cast<std::int64_t>(profile.p());
  return (pexp(PadicInt(profile, p * k)) - PadicInt::one(profile)).div_p();
}

int conductor(const FiniteOrderCharacter& eps) {
  if (eps.wild_level > 0) {
    throw UnsupportedError("conductor: characters of p-power order need cyclotomic extensions");
  }
  return 1;
}

}  // namespace padicmf
