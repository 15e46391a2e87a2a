#include "padicmf/padic_functions.hpp"

#include <string>

namespace padicmf {

PadicInt teichmueller(std::int64_t a, const Profile& profile) {
  PadicInt x(profile, a);
  if (!x.is_unit()) {
    throw DomainError("teichmueller: " + std::to_string(a) + " is divisible by p");
  }
  // x -> x^p converges to the lift; each step fixes one more digit.
  for (int i = 0; i <= profile.N(); ++i) {
    const PadicInt next = x.pow(profile.p());
    if (next.identical(x)) break;
    x = next;
  }
  return x;
}

int factorial_valuation(std::uint64_t n, std::uint64_t p) {
  int v = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) v += static_cast<int>(q);
  return v;
}

PadicInt factorial_unit_part(std::uint64_t n, const Profile& profile) {
  PadicInt acc = PadicInt::one(profile);
  for (std::uint64_t k = 2; k <= n; ++k) {
    std::uint64_t unit = k;
    while (unit % profile.p() == 0) unit /= profile.p();
    acc *= PadicInt(profile, static_cast<std::int64_t>(unit));
  }
  return acc;
}

}  // namespace padicmf
