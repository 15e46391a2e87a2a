#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "padicmf/connection.hpp"
#include "padicmf/error.hpp"
#include "padicmf/q_series.hpp"
#include "padicmf/weight_space.hpp"

namespace padicmf {

enum class HeckeKind { up, vp, tl };

struct HeckeOp {
  HeckeKind kind = HeckeKind::tl;
  std::uint64_t ell = 2;  // only used by T_ell

  std::string to_string() const;
};

namespace detail {

template <CoefficientRing R>
void require_diagonal(const NearlyOCForm<R>& F, const SplittingModel<R>& s) {
  require_coordinates(F, s);
  if (!s.alpha0.is_zero()) {
    throw CoordinateError("Hecke operators act component-wise only in diagonal (alpha0 = 0) coordinates");
  }
}

}  // namespace detail

/// U_p: component a, a_n -> p^a a_{np}.
template <CoefficientRing R>
NearlyOCForm<R> u_p(const NearlyOCForm<R>& F, const SplittingModel<R>& s) {
  detail::require_diagonal(F, s);
  const Profile& prof = F.profile();
  const auto p = static_cast<int>(prof.p());
  std::vector<QSeries<R>> out;
  for (int a = 0; a <= F.r(); ++a) {
    const QSeries<R>& f = F.component(a);
    const int length = (f.size() - 1) / p + 1;
    std::vector<R> c;
    for (int n = 0; n < length; ++n) c.push_back(f[n * p].mul_p_pow(a));
    out.emplace_back(prof, std::move(c));
  }
  return NearlyOCForm<R>(F.weight(), std::move(out), F.splitting());
}

/// V_p: a_n -> a_{n/p} (zero when p does not divide n). Type 0 only: on higher
/// components the p^{-a} factor is not integral.
template <CoefficientRing R>
NearlyOCForm<R> v_p(const NearlyOCForm<R>& F, const SplittingModel<R>& s) {
  detail::require_diagonal(F, s);
  if (F.r() != 0) throw UnsupportedError("V_p is only implemented on type-0 forms");
  const Profile& prof = F.profile();
  const auto p = static_cast<int>(prof.p());
  const QSeries<R>& f = F.component(0);
  const int length = f.size() * p;  // a_m is known for every m < p * size
  std::vector<R> c;
  for (int m = 0; m < length; ++m) c.push_back(m % p == 0 ? f[m / p] : R::zero(prof));
  return NearlyOCForm<R>(F.weight(), QSeries<R>(prof, std::move(c)), F.splitting());
}

/// T_ell on component a:
///   a_n -> ell^a a_{n ell} + chi(ell) ell^{-1-a} a_{n/ell},
/// where chi is the form's weight, so chi(ell) ell^{-1-a} = ell^{k-1-a} at classical k.
template <CoefficientRing R>
NearlyOCForm<R> t_ell(const NearlyOCForm<R>& F, std::uint64_t ell, const SplittingModel<R>& s) {
  detail::require_diagonal(F, s);
  const Profile& prof = F.profile();
  if (!is_prime(ell)) throw DomainError("T_ell: ell must be prime");
  if (ell == prof.p()) throw DomainError("T_ell: ell must differ from p (use U_p)");
  const auto l = static_cast<int>(ell);
  const R chi_ell = eval_char(F.weight(), static_cast<std::int64_t>(ell));
  const PadicInt ell_inv = inverse_of_int(prof, l);
  std::vector<QSeries<R>> out;
  for (int a = 0; a <= F.r(); ++a) {
    const QSeries<R>& f = F.component(a);
    const PadicInt up_factor = PadicInt(prof, l).pow(static_cast<std::uint64_t>(a));
    const R down_factor = chi_ell * ell_inv.pow(static_cast<std::uint64_t>(a + 1));
    const int length = (f.size() - 1) / l + 1;
    std::vector<R> c;
    for (int n = 0; n < length; ++n) {
      R value = f[n * l] * up_factor;
      if (n % l == 0) value = value + f[n / l] * down_factor;
      c.push_back(value);
    }
    out.emplace_back(prof, std::move(c));
  }
  return NearlyOCForm<R>(F.weight(), std::move(out), F.splitting());
}

template <CoefficientRing R>
NearlyOCForm<R> apply_hecke(const NearlyOCForm<R>& F, const HeckeOp& op, const SplittingModel<R>& s) {
  switch (op.kind) {
    case HeckeKind::up: return u_p(F, s);
    case HeckeKind::vp: return v_p(F, s);
    case HeckeKind::tl: return t_ell(F, op.ell, s);
  }
  throw DomainError("unknown Hecke operator");
}

struct NotEigen {
  int component = 0;
  int index = 0;
};

using EigenResult = std::variant<PadicInt, NotEigen>;

/// Returns mu if op(F) = mu F on every stored coefficient of every component,
/// otherwise the first coefficient where that fails.
EigenResult eigenvalue(const NearlyOCForm<PadicInt>& F, const HeckeOp& op,
                       const SplittingModel<PadicInt>& s);

/// Result of the search for the lambda compatible with the Hecke action.
struct LambdaCalibration {
  /// All candidates (c1 E_4 + c2 E_2^2) with c_i = j_i / 144 whose residual
  /// T_2(G) + 96 G, G = nabla^2 Delta in diagonal coordinates, vanishes over Z.
  std::vector<std::pair<std::int64_t, std::int64_t>> passing;
  std::int64_t search_bound = 0;
  /// (j1, j2) spanning the passing set when it is a line through the origin.
  std::optional<std::pair<std::int64_t, std::int64_t>> null_direction;
  /// The passing candidate of least |j1| + |j2|, reduced into the profile.
  std::optional<QSeries<PadicInt>> lambda_diagonal;
  /// The same lambda carried to Katz coordinates by splitting_update(., +E_2/12).
  std::optional<QSeries<PadicInt>> lambda_katz;
  /// First nonzero residual coefficient for lambda = E_4 (-1 if it passes).
  int e4_control_residual_index = -1;

  bool unique() const { return passing.size() == 1; }
};

/// Searches lambda_diag = c1 E_4 + c2 E_2^2 with 144 c_i in [-bound, bound] for the
/// candidates making nabla^2 Delta (diagonal coordinates) a T_2-eigenform with
/// eigenvalue 2^2 tau(2) = -96. At weight 12 every quantity is integral, so the
/// residuals are computed over Z rather than mod p^N (which admits accidental zeros).
LambdaCalibration calibrate_lambda(const Profile& profile, std::int64_t bound = 288);

/// c with lambda = c E_4 if it exists.
std::optional<PadicInt> e4_multiple(const QSeries<PadicInt>& lambda);

}  // namespace padicmf
