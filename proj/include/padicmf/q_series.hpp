#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "padicmf/error.hpp"
#include "padicmf/int_series.hpp"
#include "padicmf/padic_int.hpp"
#include "padicmf/ring.hpp"

namespace padicmf {

/// A q-expansion a_0 + a_1 q + ... + a_{n-1} q^{n-1} + O(q^n) over R.
///
/// The length n is the q-adic precision and is part of the value: Hecke
/// operators shorten it, V_p lengthens it, and binary operations keep the
/// shorter of the two.
template <CoefficientRing R>
class QSeries {
 public:
  QSeries(const Profile& profile, std::vector<R> coeffs)
      : profile_(profile), coeffs_(std::move(coeffs)) {}

  static QSeries zero(const Profile& profile, int length) {
    return QSeries(profile, std::vector<R>(static_cast<std::size_t>(length), R::zero(profile)));
  }
  static QSeries zero(const Profile& profile) { return zero(profile, profile.Q()); }
  static QSeries one(const Profile& profile, int length) {
    QSeries s = zero(profile, length);
    s.coeffs_[0] = R::one(profile);
    return s;
  }
  static QSeries one(const Profile& profile) { return one(profile, profile.Q()); }
  /// Reduces exact integer coefficients into R (truncated to `length`, default Q).
  static QSeries from_ints(const Profile& profile, const IntSeries& ints, int length = -1) {
    const std::size_t n = length < 0 ? std::min<std::size_t>(ints.size(), static_cast<std::size_t>(profile.Q()))
                                     : std::min<std::size_t>(ints.size(), static_cast<std::size_t>(length));
    std::vector<R> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.push_back(embed<R>(PadicInt::from_residue(profile, reduce_signed(ints[i], profile.modulus()),
                                                  profile.N())));
    }
    return QSeries(profile, std::move(c));
  }

  const Profile& profile() const { return profile_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  const R& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  R& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  std::span<const R> coefficients() const { return coeffs_; }

  /// Bounds-checked coefficient access.
  const R& at(int n) const {
    if (n < 0 || n >= size()) throw DomainError("q-series coefficient index out of range");
    return (*this)[n];
  }

  QSeries truncated(int length) const {
    const auto n = static_cast<std::size_t>(std::clamp(length, 0, size()));
    return QSeries(profile_, std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  /// Lowest precision among the coefficients (N for the empty series).
  int precision() const {
    int v = profile_.N();
    for (const auto& c : coeffs_) v = std::min(v, c.precision());
    return v;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return c.is_zero(); });
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  QSeries& operator+=(const QSeries& o) {
    shrink_to(o.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return *this;
  }
  QSeries& operator-=(const QSeries& o) {
    shrink_to(o.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return *this;
  }
  QSeries& operator*=(const R& s) {
    for (auto& c : coeffs_) c = c * s;
    return *this;
  }
  QSeries& operator*=(const PadicInt& s)
    requires(!std::same_as<R, PadicInt>)
  {
    for (auto& c : coeffs_) c = c * s;
    return *this;
  }

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const R& s) { return a *= s; }
  friend QSeries operator*(const R& s, QSeries a) { return a *= s; }
  friend QSeries operator*(QSeries a, const PadicInt& s)
    requires(!std::same_as<R, PadicInt>)
  {
    return a *= s;
  }
  friend QSeries operator*(const PadicInt& s, QSeries a)
    requires(!std::same_as<R, PadicInt>)
  {
    return a *= s;
  }

  /// Truncated Cauchy product: (fg)_n = sum_{i+j=n} f_i g_j.
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.size(), b.size());
    std::vector<R> c(static_cast<std::size_t>(n), R::zero(a.profile_));
    for (int i = 0; i < n; ++i) {
      if (a[i].is_zero() && a[i].precision() >= a.profile_.N()) continue;
      for (int j = 0; i + j < n; ++j) {
        c[static_cast<std::size_t>(i + j)] = c[static_cast<std::size_t>(i + j)] + a[i] * b[j];
      }
    }
    return QSeries(a.profile_, std::move(c));
  }

  QSeries scaled(std::int64_t k) const { return *this * embed<R>(PadicInt(profile_, k)); }

  /// Equal length and equal coefficients modulo the common precision.
  friend bool operator==(const QSeries& a, const QSeries& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i) {
      if (!(a[i] == b[i])) return false;
    }
    return true;
  }

  /// Same length, residues and precisions.
  bool identical(const QSeries& o) const {
    if (size() != o.size()) return false;
    for (int i = 0; i < size(); ++i) {
      if (!(*this)[i].identical(o[i])) return false;
    }
    return true;
  }

  /// First index where the two series differ on their common prefix, or -1.
  int first_difference(const QSeries& o) const {
    const int n = std::min(size(), o.size());
    for (int i = 0; i < n; ++i) {
      if (!((*this)[i] == o[i])) return i;
    }
    return -1;
  }

 private:
  void shrink_to(int n) {
    if (n < size()) coeffs_.resize(static_cast<std::size_t>(n), R::zero(profile_));
  }

  Profile profile_;
  std::vector<R> coeffs_;
};

/// theta = q d/dq: a_n -> n a_n.
template <CoefficientRing R>
QSeries<R> theta(const QSeries<R>& f) {
  QSeries<R> r = f;
  for (int n = 0; n < f.size(); ++n) r[n] = f[n] * PadicInt(f.profile(), n);
  return r;
}

/// E_2 = 1 - 24 sum sigma_1(n) q^n.
template <CoefficientRing R = PadicInt>
QSeries<R> eisenstein_e2(const Profile& profile) {
  return QSeries<R>::from_ints(profile, int_e2(profile.Q()));
}

/// 1 + c sum sigma_{k-1}(n) q^n, k even >= 4.
template <CoefficientRing R = PadicInt>
QSeries<R> eisenstein_classical(const Profile& profile, unsigned k, std::int64_t c) {
  return QSeries<R>::from_ints(profile, int_eisenstein(k, c, profile.Q()));
}

/// Normalizations of the weight-4 and weight-6 series.
enum class EisensteinPreset {
  e4_printed,  // 1 + 120 sum sigma_3(n) q^n
  e4_std,    // 1 + 240 sum sigma_3(n) q^n
  e6_std,    // 1 - 504 sum sigma_5(n) q^n
};

template <CoefficientRing R = PadicInt>
QSeries<R> eisenstein_preset(const Profile& profile, EisensteinPreset preset) {
  switch (preset) {
    case EisensteinPreset::e4_printed: return eisenstein_classical<R>(profile, 4, 120);
    case EisensteinPreset::e4_std: return eisenstein_classical<R>(profile, 4, 240);
    case EisensteinPreset::e6_std: return eisenstein_classical<R>(profile, 6, -504);
  }
  throw DomainError("unknown Eisenstein preset");
}

/// Delta = q prod (1 - q^n)^24.
template <CoefficientRing R = PadicInt>
QSeries<R> delta(const Profile& profile) {
  return QSeries<R>::from_ints(profile, int_delta(profile.Q()));
}

/// Lifts a scalar series into the family ring as constant functions.
inline QSeries<FamilyElement> to_family(const QSeries<PadicInt>& f) {
  std::vector<FamilyElement> c;
  c.reserve(static_cast<std::size_t>(f.size()));
  for (const auto& x : f.coefficients()) c.emplace_back(x);
  return QSeries<FamilyElement>(f.profile(), std::move(c));
}

template <CoefficientRing R>
QSeries<R> convert_series(const QSeries<PadicInt>& f) {
  if constexpr (std::same_as<R, PadicInt>) {
    return f;
  } else {
    return to_family(f);
  }
}

/// Coefficient-wise evaluation u -> u0.
template <CoefficientRing R>
QSeries<PadicInt> specialize_series(const QSeries<R>& f, const PadicInt& u0) {
  std::vector<PadicInt> c;
  c.reserve(static_cast<std::size_t>(f.size()));
  for (const auto& x : f.coefficients()) c.push_back(specialize_value(x, u0));
  return QSeries<PadicInt>(f.profile(), std::move(c));
}

}  // namespace padicmf
