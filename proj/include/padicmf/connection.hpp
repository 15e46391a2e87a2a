#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padicmf/error.hpp"
#include "padicmf/q_series.hpp"
#include "padicmf/ring.hpp"
#include "padicmf/weight_space.hpp"

namespace padicmf {

/// A splitting of the Hodge filtration H = omega + omega^{-1}, seen on q-expansions.
///
/// On weight-k forms the induced connection is d^{(k)} f = theta f + k * alpha0 * f,
/// and lambda is the omega^4-section through which the omega^{-1} summand maps
/// into omega under Gauss-Manin.
template <CoefficientRing R>
struct SplittingModel {
  QSeries<R> alpha0;
  QSeries<R> lambda;
  std::string name;
};

inline constexpr const char* kDiagonalSplitting = "diagonal";
inline constexpr const char* kKatzSplitting = "katz";
inline constexpr const char* kSerreSplitting = "serre";
inline constexpr const char* kPrintedKatzSplitting = "katz-printed";

/// d^{(k)} f = theta f + k alpha0 f, the connection on omega^k (k may be negative).
template <CoefficientRing R>
QSeries<R> partial_pow(const QSeries<R>& f, std::int64_t k, const SplittingModel<R>& s) {
  return theta(f) + (s.alpha0 * f).scaled(k);
}

/// The family operator on weight-chi q-expansions: theta f + wt(chi) alpha0 f.
template <CoefficientRing R>
QSeries<R> partial_chi(const QSeries<R>& f, const Character<R>& chi, const SplittingModel<R>& s) {
  return theta(f) + (s.alpha0 * f) * wt(chi);
}

/// Change of splitting: d' = d + alpha, lambda' = lambda - alpha^2 - d^{(2)}(alpha).
template <CoefficientRing R>
SplittingModel<R> splitting_update(const SplittingModel<R>& s, const QSeries<R>& alpha,
                                   std::string name = {}) {
  if (name.empty()) name = s.name + "'";
  return SplittingModel<R>{s.alpha0 + alpha, s.lambda - alpha * alpha - partial_pow(alpha, 2, s),
                           std::move(name)};
}

/// alpha0 = 0. Hecke operators act component-wise in these coordinates; the
/// default lambda = 0 is the one singled out by the Hecke calibration.
template <CoefficientRing R = PadicInt>
SplittingModel<R> diagonal_splitting(const Profile& profile) {
  return SplittingModel<R>{QSeries<R>::zero(profile), QSeries<R>::zero(profile), kDiagonalSplitting};
}

template <CoefficientRing R = PadicInt>
SplittingModel<R> diagonal_splitting(const Profile& profile, QSeries<R> lambda) {
  return SplittingModel<R>{QSeries<R>::zero(profile), std::move(lambda), kDiagonalSplitting};
}

/// E_2/12, the shift from diagonal to Katz coordinates.
template <CoefficientRing R = PadicInt>
QSeries<R> e2_over_12(const Profile& profile) {
  return eisenstein_e2<R>(profile) * embed<R>(inverse_of_int(profile, 12));
}

/// alpha0 = E_2/12, so d^{(k)} f = theta f + k E_2 f / 12; lambda is carried over
/// from the calibrated diagonal splitting by splitting_update.
template <CoefficientRing R = PadicInt>
SplittingModel<R> katz_splitting(const Profile& profile) {
  return splitting_update(diagonal_splitting<R>(profile), e2_over_12<R>(profile), kKatzSplitting);
}

/// alpha0 = -E_2/12: the Serre derivative theta - k E_2/12, which preserves
/// classical forms. Its lambda comes out as -E_4/144.
template <CoefficientRing R = PadicInt>
SplittingModel<R> serre_splitting(const Profile& profile) {
  return splitting_update(diagonal_splitting<R>(profile), -e2_over_12<R>(profile), kSerreSplitting);
}

/// alpha0 = E_2/12 with lambda = 1 + 120 sum sigma_3(n) q^n taken at face value.
template <CoefficientRing R = PadicInt>
SplittingModel<R> printed_katz_splitting(const Profile& profile) {
  return SplittingModel<R>{e2_over_12<R>(profile),
                           eisenstein_preset<R>(profile, EisensteinPreset::e4_printed),
                           kPrintedKatzSplitting};
}

template <CoefficientRing R = PadicInt>
SplittingModel<R> splitting_by_name(const Profile& profile, const std::string& name) {
  if (name == kDiagonalSplitting) return diagonal_splitting<R>(profile);
  if (name == kKatzSplitting) return katz_splitting<R>(profile);
  if (name == kSerreSplitting) return serre_splitting<R>(profile);
  if (name == kPrintedKatzSplitting) return printed_katz_splitting<R>(profile);
  throw DomainError("unknown splitting '" + name + "'");
}

template <CoefficientRing R>
SplittingModel<PadicInt> specialize_splitting(const SplittingModel<R>& s, const PadicInt& u0) {
  return SplittingModel<PadicInt>{specialize_series(s.alpha0, u0), specialize_series(s.lambda, u0),
                                  s.name};
}

/// A nearly overconvergent form of type r in its q-expansion model
/// f_0 + f_1 Y + ... + f_r Y^r. Component a has weight chi * chi_cycl^{-2a};
/// Y marks the complement of omega chosen by `splitting`.
template <CoefficientRing R>
class NearlyOCForm {
 public:
  NearlyOCForm(Character<R> weight, std::vector<QSeries<R>> components, std::string splitting)
      : weight_(std::move(weight)), components_(std::move(components)), splitting_(std::move(splitting)) {
    if (components_.empty()) throw DomainError("nearly overconvergent form needs at least one component");
  }

  /// Type-0 form.
  NearlyOCForm(Character<R> weight, QSeries<R> f, std::string splitting)
      : NearlyOCForm(std::move(weight), std::vector<QSeries<R>>{std::move(f)}, std::move(splitting)) {}

  const Character<R>& weight() const { return weight_; }
  int r() const { return static_cast<int>(components_.size()) - 1; }
  const QSeries<R>& component(int a) const { return components_.at(static_cast<std::size_t>(a)); }
  const std::vector<QSeries<R>>& components() const { return components_; }
  const std::string& splitting() const { return splitting_; }
  const Profile& profile() const { return components_.front().profile(); }

  int length() const {
    int n = components_.front().size();
    for (const auto& c : components_) n = std::min(n, c.size());
    return n;
  }

  /// The inclusion M_r -> M_{r'} for r' >= r (zero padding).
  NearlyOCForm include(int r_prime) const {
    if (r_prime < r()) throw DomainError("include: target type is smaller than the form's type");
    auto comps = components_;
    while (static_cast<int>(comps.size()) <= r_prime) {
      comps.push_back(QSeries<R>::zero(profile(), length()));
    }
    return NearlyOCForm(weight_, std::move(comps), splitting_);
  }

  /// Drops components above r'; they must vanish.
  NearlyOCForm truncate(int r_prime) const {
    if (r_prime < 0) throw DomainError("truncate: negative type");
    for (int a = r_prime + 1; a <= r(); ++a) {
      if (!component(a).is_zero()) throw DomainError("truncate: component " + std::to_string(a) + " is nonzero");
    }
    auto comps = components_;
    comps.resize(static_cast<std::size_t>(std::min(r_prime, r()) + 1), QSeries<R>::zero(profile()));
    return NearlyOCForm(weight_, std::move(comps), splitting_);
  }

  NearlyOCForm relabeled(std::string splitting) const {
    return NearlyOCForm(weight_, components_, std::move(splitting));
  }

  friend bool operator==(const NearlyOCForm& a, const NearlyOCForm& b) {
    return a.weight_ == b.weight_ && a.components_ == b.components_ && a.splitting_ == b.splitting_;
  }

  bool identical(const NearlyOCForm& o) const {
    if (weight_.tame != o.weight_.tame || !weight_.lambda.identical(o.weight_.lambda)) return false;
    if (splitting_ != o.splitting_ || components_.size() != o.components_.size()) return false;
    for (std::size_t a = 0; a < components_.size(); ++a) {
      if (!components_[a].identical(o.components_[a])) return false;
    }
    return true;
  }

  /// Lowest precision among all coefficients.
  int precision() const {
    int v = profile().N();
    for (const auto& c : components_) v = std::min(v, c.precision());
    return v;
  }

 private:
  Character<R> weight_;
  std::vector<QSeries<R>> components_;
  std::string splitting_;
};

namespace detail {

template <CoefficientRing R>
void require_coordinates(const NearlyOCForm<R>& F, const SplittingModel<R>& s) {
  if (F.splitting() != s.name) {
    throw CoordinateError("form is in '" + F.splitting() + "' coordinates, operator expects '" + s.name + "'");
  }
}

template <CoefficientRing R>
std::vector<QSeries<R>> zero_components(const Profile& profile, int count, int length) {
  return std::vector<QSeries<R>>(static_cast<std::size_t>(count), QSeries<R>::zero(profile, length));
}

}  // namespace detail

/// The family Gauss-Manin connection M_r(chi) -> M_{r+1}(chi chi_cycl^2).
///
/// Component a (weight chi chi_cycl^{-2a}) contributes
///   d^{chi chi_cycl^{-2a}}(f_a)  to component a,
///   (WT - a) f_a                 to component a + 1,
///   a lambda f_a                 to component a - 1.
template <CoefficientRing R>
NearlyOCForm<R> nabla(const NearlyOCForm<R>& F, const SplittingModel<R>& s) {
  detail::require_coordinates(F, s);
  const Profile& prof = F.profile();
  const R weight = wt(F.weight());
  const int length = std::min({F.length(), s.alpha0.size(), s.lambda.size()});
  auto out = detail::zero_components<R>(prof, F.r() + 2, length);
  for (int a = 0; a <= F.r(); ++a) {
    const QSeries<R> f = F.component(a).truncated(length);
    const R shifted = weight - R::constant(prof, 2 * a);
    out[static_cast<std::size_t>(a)] += theta(f) + (s.alpha0 * f) * shifted;
    out[static_cast<std::size_t>(a + 1)] += f * (weight - R::constant(prof, a));
    if (a >= 1) out[static_cast<std::size_t>(a - 1)] += (s.lambda * f).scaled(a);
  }
  return NearlyOCForm<R>(twist(F.weight(), 2), std::move(out), F.splitting());
}

/// Gauss-Manin connection on M_{k,r} -> M_{k+2,r+1} for an integer weight k,
/// written with integer coefficients and the connections d^{(k-2a)} directly.
/// The form's weight must be a classical character of weight k.
inline NearlyOCForm<PadicInt> nabla_classical(const NearlyOCForm<PadicInt>& F, std::int64_t k,
                                              const SplittingModel<PadicInt>& s) {
  detail::require_coordinates(F, s);
  const Profile& prof = F.profile();
  const auto p = static_cast<std::int64_t>(prof.p());
  if (!(F.weight().lambda == pexp(PadicInt(prof, p * k)))) {
    throw DomainError("nabla_classical: the form's weight is not classical of weight " + std::to_string(k));
  }
  const int length = std::min({F.length(), s.alpha0.size(), s.lambda.size()});
  std::vector<QSeries<PadicInt>> out(static_cast<std::size_t>(F.r() + 2),
                                     QSeries<PadicInt>::zero(prof, length));
  for (int a = 0; a <= F.r(); ++a) {
    const QSeries<PadicInt> f = F.component(a).truncated(length);
    out[static_cast<std::size_t>(a)] += partial_pow(f, k - 2 * a, s);
    out[static_cast<std::size_t>(a + 1)] += f.scaled(k - a);
    if (a >= 1) out[static_cast<std::size_t>(a - 1)] += (s.lambda * f).scaled(a);
  }
  const Character<PadicInt>& chi = F.weight();
  Character<PadicInt> target{reduce_tame(chi.tame + 2, prof), chi.lambda * pexp(PadicInt(prof, 2 * p))};
  return NearlyOCForm<PadicInt>(std::move(target), std::move(out), F.splitting());
}

/// Which way the Y-coordinate moves when the splitting changes by alpha.
enum class CoordinateSign {
  plus,   // f'_b = sum_{a>=b} binom(a,b) (+alpha)^{a-b} f_a; compatible with splitting_update
  minus,  // f'_b = sum_{a>=b} binom(a,b) (-alpha)^{a-b} f_a
};

/// Rewrites F in the coordinates of the splitting obtained from the current one
/// by splitting_update(., alpha). Weight and type are unchanged.
template <CoefficientRing R>
NearlyOCForm<R> change_coordinates(const NearlyOCForm<R>& F, const QSeries<R>& alpha,
                                   std::string target_splitting,
                                   CoordinateSign sign = CoordinateSign::plus) {
  const Profile& prof = F.profile();
  const int length = std::min(F.length(), alpha.size());
  const QSeries<R> shift = sign == CoordinateSign::plus ? alpha.truncated(length) : -alpha.truncated(length);
  // shift_pows[j] = shift^j
  std::vector<QSeries<R>> shift_pows{QSeries<R>::one(prof, length)};
  for (int j = 1; j <= F.r(); ++j) shift_pows.push_back(shift_pows.back() * shift);

  auto out = detail::zero_components<R>(prof, F.r() + 1, length);
  for (int b = 0; b <= F.r(); ++b) {
    std::int64_t binom = 1;  // binom(a, b), starting at a = b
    for (int a = b; a <= F.r(); ++a) {
      if (a > b) binom = binom * a / (a - b);
      out[static_cast<std::size_t>(b)] +=
          (shift_pows[static_cast<std::size_t>(a - b)] * F.component(a).truncated(length)).scaled(binom);
    }
  }
  return NearlyOCForm<R>(F.weight(), std::move(out), std::move(target_splitting));
}

/// Coefficient-wise evaluation of a family form at u = u0.
template <CoefficientRing R>
NearlyOCForm<PadicInt> specialize_form(const NearlyOCForm<R>& F, const PadicInt& u0) {
  std::vector<QSeries<PadicInt>> comps;
  comps.reserve(F.components().size());
  for (const auto& c : F.components()) comps.push_back(specialize_series(c, u0));
  return NearlyOCForm<PadicInt>(specialize_character(F.weight(), u0), std::move(comps), F.splitting());
}

/// Embeds a scalar form into the family ring (constant in u).
inline NearlyOCForm<FamilyElement> to_family(const NearlyOCForm<PadicInt>& F) {
  std::vector<QSeries<FamilyElement>> comps;
  for (const auto& c : F.components()) comps.push_back(to_family(c));
  Character<FamilyElement> chi{F.weight().tame, FamilyElement(F.weight().lambda)};
  return NearlyOCForm<FamilyElement>(std::move(chi), std::move(comps), F.splitting());
}

/// Checks the conjugation identity behind splitting_update,
///   (1 a; 0 1)(d lambda; 1 d^{(-1)})(1 -a; 0 1) = (d' lambda'; 1 d'^{(-1)}),
/// on test pairs (x, y) with x of weight 1 and y of weight -1.
/// `s_prime` is the splitting claimed to be s changed by alpha.
template <CoefficientRing R>
bool matrix_identity_check(const SplittingModel<R>& s, const QSeries<R>& alpha,
                           const SplittingModel<R>& s_prime,
                           const std::vector<std::pair<QSeries<R>, QSeries<R>>>& pairs) {
  for (const auto& [x, y] : pairs) {
    // right factor, then the connection matrix, then the left factor
    const QSeries<R> x1 = x - alpha * y;
    const QSeries<R>& y1 = y;
    const QSeries<R> x2 = partial_pow(x1, 1, s) + s.lambda * y1;
    const QSeries<R> y2 = x1 + partial_pow(y1, -1, s);
    const QSeries<R> lhs_x = x2 + alpha * y2;
    const QSeries<R>& lhs_y = y2;

    const QSeries<R> rhs_x = partial_pow(x, 1, s_prime) + s_prime.lambda * y;
    const QSeries<R> rhs_y = x + partial_pow(y, -1, s_prime);
    if (!(lhs_x == rhs_x) || !(lhs_y == rhs_y)) return false;
  }
  return true;
}

template <CoefficientRing R>
bool matrix_identity_check(const SplittingModel<R>& s, const QSeries<R>& alpha,
                           const std::vector<std::pair<QSeries<R>, QSeries<R>>>& pairs) {
  return matrix_identity_check(s, alpha, splitting_update(s, alpha), pairs);
}

}  // namespace padicmf
