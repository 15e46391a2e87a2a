#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "padicmf/connection.hpp"
#include "padicmf/q_series.hpp"

namespace padicmf {

/// Deterministic generator for test inputs. The seed fully determines the stream.
class InputGenerator {
 public:
  explicit InputGenerator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t residue(std::uint64_t modulus) {
    return std::uniform_int_distribution<std::uint64_t>(0, modulus - 1)(rng_);
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  PadicInt padic(const Profile& profile) {
    return PadicInt::from_residue(profile, residue(profile.modulus()), profile.N());
  }

  /// A family element of u-degree at most `degree` (kept low so products stay
  /// inside the u^M truncation).
  FamilyElement family(const Profile& profile, int degree = 2) {
    std::vector<std::uint64_t> r(static_cast<std::size_t>(profile.M()), 0);
    for (int i = 0; i <= degree && i < profile.M(); ++i) r[static_cast<std::size_t>(i)] = residue(profile.modulus());
    return FamilyElement::from_residues(profile, r, profile.N());
  }

  template <CoefficientRing R>
  R element(const Profile& profile) {
    if constexpr (std::same_as<R, PadicInt>) {
      return padic(profile);
    } else {
      return family(profile);
    }
  }

  template <CoefficientRing R = PadicInt>
  QSeries<R> series(const Profile& profile, int length = -1) {
    const int n = length < 0 ? profile.Q() : length;
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c.push_back(element<R>(profile));
    return QSeries<R>(profile, std::move(c));
  }

  template <CoefficientRing R>
  NearlyOCForm<R> form(const Character<R>& chi, int r, const std::string& splitting) {
    const Profile& prof = chi.profile();
    std::vector<QSeries<R>> comps;
    for (int a = 0; a <= r; ++a) comps.push_back(series<R>(prof));
    return NearlyOCForm<R>(chi, std::move(comps), splitting);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace padicmf
