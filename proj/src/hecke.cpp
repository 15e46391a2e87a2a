#include "padicmf/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace padicmf {

std::string HeckeOp::to_string() const {
  switch (kind) {
    case HeckeKind::up: return "U_p";
    case HeckeKind::vp: return "V_p";
    case HeckeKind::tl: return "T_" + std::to_string(ell);
  }
  return "?";
}

EigenResult eigenvalue(const NearlyOCForm<PadicInt>& F, const HeckeOp& op,
                       const SplittingModel<PadicInt>& s) {
  const NearlyOCForm<PadicInt> image = apply_hecke(F, op, s);
  const int r = std::min(F.r(), image.r());

  // Pivot on the coefficient of smallest valuation so the division is exact.
  int best_a = -1, best_n = -1, best_v = F.profile().N() + 1;
  for (int a = 0; a <= r; ++a) {
    const int len = std::min(F.component(a).size(), image.component(a).size());
    for (int n = 0; n < len; ++n) {
      const PadicInt& c = F.component(a)[n];
      if (c.is_zero()) continue;
      if (c.valuation() < best_v) {
        best_v = c.valuation();
        best_a = a;
        best_n = n;
      }
    }
  }
  if (best_a < 0) throw DomainError("eigenvalue: the form vanishes on every compared coefficient");

  const PadicInt num = image.component(best_a)[best_n];
  if (num.valuation() < best_v && !num.is_zero()) return NotEigen{best_a, best_n};
  const PadicInt mu = num.div_p_pow(best_v) * F.component(best_a)[best_n].div_p_pow(best_v).inverse();

  for (int a = 0; a <= std::max(F.r(), image.r()); ++a) {
    if (a > F.r() || a > image.r()) return NotEigen{a, 0};
    const int len = std::min(F.component(a).size(), image.component(a).size());
    for (int n = 0; n < len; ++n) {
      if (!(image.component(a)[n] == mu * F.component(a)[n])) return NotEigen{a, n};
    }
  }
  return mu;
}

namespace {

/// nabla over Z in diagonal coordinates at integer weight k; the lambda term is
/// lambda_num / scale times a f_a and must divide exactly.
std::vector<IntSeries> int_nabla(const std::vector<IntSeries>& f, std::int64_t k, const IntSeries& lambda_num,
                                 BigCoeff scale) {
  const std::size_t len = f.front().size();
  std::vector<IntSeries> out(f.size() + 1, IntSeries(len, 0));
  for (std::size_t a = 0; a < f.size(); ++a) {
    const auto ia = static_cast<BigCoeff>(a);
    out[a] = int_add(out[a], int_theta(f[a]));
    out[a + 1] = int_add(out[a + 1], int_scale(f[a], k - ia));
    if (a >= 1) {
      IntSeries term = int_scale(int_mul(lambda_num, f[a]), ia);
      for (auto& c : term) {
        if (c % scale != 0) throw std::logic_error("calibration: inexact division by the lambda scale");
        c /= scale;
      }
      out[a - 1] = int_add(out[a - 1], term);
    }
  }
  return out;
}

/// Flattened T_2(G) + 96 G over Z, G = nabla^2(144 Delta) with lambda = lambda_num / 144.
IntSeries eigen_residual(const IntSeries& delta_ints, const IntSeries& lambda_num) {
  constexpr BigCoeff scale = 144;
  const std::vector<IntSeries> f{int_scale(delta_ints, scale)};
  const auto g = int_nabla(int_nabla(f, 12, lambda_num, scale), 14, lambda_num, scale);
  constexpr int weight = 16;
  IntSeries out;
  for (std::size_t a = 0; a < g.size(); ++a) {
    const IntSeries& c = g[a];
    const std::size_t len = (c.size() - 1) / 2 + 1;
    const BigCoeff up = BigCoeff(1) << a;
    const BigCoeff down = BigCoeff(1) << (weight - 1 - static_cast<int>(a));
    for (std::size_t n = 0; n < len; ++n) {
      BigCoeff v = up * c[2 * n] + 96 * c[n];
      if (n % 2 == 0) v += down * c[n / 2];
      out.push_back(v);
    }
  }
  return out;
}

int first_nonzero(const IntSeries& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

LambdaCalibration calibrate_lambda(const Profile& profile, std::int64_t bound) {
  const int q = profile.Q();
  const IntSeries e4 = int_eisenstein(4, 240, q);
  const IntSeries e2 = int_e2(q);
  const IntSeries e2_sq = int_mul(e2, e2);
  const IntSeries d = int_delta(q);

  // The residual is affine in lambda.
  const IntSeries base = eigen_residual(d, IntSeries(static_cast<std::size_t>(q), 0));
  const IntSeries dir_e4 = int_sub(eigen_residual(d, e4), base);
  const IntSeries dir_e2sq = int_sub(eigen_residual(d, e2_sq), base);

  LambdaCalibration result;
  result.search_bound = bound;
  for (std::int64_t j1 = -bound; j1 <= bound; ++j1) {
    for (std::int64_t j2 = -bound; j2 <= bound; ++j2) {
      bool ok = true;
      for (std::size_t i = 0; i < base.size() && ok; ++i) ok = base[i] + j1 * dir_e4[i] + j2 * dir_e2sq[i] == 0;
      if (ok) result.passing.emplace_back(j1, j2);
    }
  }
  result.e4_control_residual_index = first_nonzero(int_add(base, int_scale(dir_e4, 144)));

  if (result.passing.size() >= 2) {
    // primitive generator of the passing set, if it is a line through 0
    std::pair<std::int64_t, std::int64_t> gen{0, 0};
    for (const auto& [j1, j2] : result.passing) {
      if (j1 == 0 && j2 == 0) continue;
      const std::int64_t g = std::gcd(j1, j2);
      gen = {j1 / g, j2 / g};
      if (gen.first < 0 || (gen.first == 0 && gen.second < 0)) gen = {-gen.first, -gen.second};
      break;
    }
    const bool on_line = std::all_of(result.passing.begin(), result.passing.end(), [&](const auto& c) {
      return c.first * gen.second == c.second * gen.first;
    });
    if (on_line && gen != std::pair<std::int64_t, std::int64_t>{0, 0}) result.null_direction = gen;
  }

  if (!result.passing.empty()) {
    const auto best = *std::min_element(result.passing.begin(), result.passing.end(), [](const auto& x, const auto& y) {
      return std::abs(x.first) + std::abs(x.second) < std::abs(y.first) + std::abs(y.second);
    });
    const PadicInt inv144 = inverse_of_int(profile, 144);
    const auto e4_p = eisenstein_preset(profile, EisensteinPreset::e4_std);
    const auto e2_p = eisenstein_e2(profile);
    QSeries<PadicInt> lambda = (e4_p.scaled(best.first) + (e2_p * e2_p).scaled(best.second)) * inv144;
    const auto diag = diagonal_splitting<PadicInt>(profile, lambda);
    result.lambda_katz = splitting_update(diag, e2_over_12<PadicInt>(profile), kKatzSplitting).lambda;
    result.lambda_diagonal = std::move(lambda);
  }
  return result;
}

std::optional<PadicInt> e4_multiple(const QSeries<PadicInt>& lambda) {
  if (lambda.size() == 0) return std::nullopt;
  const PadicInt c = lambda[0];
  const auto e4 = eisenstein_preset(lambda.profile().with_Q(std::max(lambda.size(), 2)),
                                    EisensteinPreset::e4_std)
                      .truncated(lambda.size());
  if (e4 * c == lambda) return c;
  return std::nullopt;
}

}  // namespace padicmf
