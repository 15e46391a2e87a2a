#include "padicmf/verify.hpp"

#include <functional>
#include <sstream>

#include "padicmf/connection.hpp"
#include "padicmf/error.hpp"
#include "padicmf/hecke.hpp"
#include "padicmf/random.hpp"
#include "padicmf/serialize.hpp"

namespace padicmf {

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome ok(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }
Outcome expect(bool cond, const std::string& what) { return {cond, cond ? std::string() : what}; }

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { report_.name = std::move(name); }

  void check(const std::string& name, const std::function<Outcome()>& body) {
    CheckResult r{name, false, {}};
    try {
      const Outcome o = body();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

template <CoefficientRing R>
std::string form_mismatch(const NearlyOCForm<R>& a, const NearlyOCForm<R>& b) {
  std::ostringstream os;
  if (!(a.weight() == b.weight())) return "weights differ";
  if (a.r() != b.r()) return "types differ";
  for (int c = 0; c <= a.r(); ++c) {
    const int n = a.component(c).first_difference(b.component(c));
    if (n >= 0) {
      os << "component " << c << " differs at q^" << n;
      return os.str();
    }
    if (a.component(c).size() != b.component(c).size()) {
      os << "component " << c << " lengths " << a.component(c).size() << " vs " << b.component(c).size();
      return os.str();
    }
  }
  return "splitting labels differ";
}

template <CoefficientRing R>
Outcome same_form(const NearlyOCForm<R>& a, const NearlyOCForm<R>& b) {
  if (a == b) return ok();
  return fail(form_mismatch(a, b));
}

template <CoefficientRing R>
Outcome same_series(const QSeries<R>& a, const QSeries<R>& b) {
  if (a == b) return ok();
  const int n = a.first_difference(b);
  if (n < 0) return fail("lengths differ");
  return fail("differs at q^" + std::to_string(n));
}

Outcome same_ints(const IntSeries& a, const IntSeries& b) {
  if (a.size() != b.size()) return fail("lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return fail("differs at q^" + std::to_string(i));
  }
  return ok();
}

std::string eigen_detail(const EigenResult& e) {
  if (const auto* mu = std::get_if<PadicInt>(&e)) return "eigenvalue " + std::to_string(mu->signed_value());
  const auto& ne = std::get<NotEigen>(e);
  return "not an eigenform (component " + std::to_string(ne.component) + ", q^" + std::to_string(ne.index) + ")";
}

Outcome expect_eigen(const EigenResult& e, std::int64_t mu) {
  if (const auto* got = std::get_if<PadicInt>(&e)) {
    if (got->signed_value() == mu) return ok(eigen_detail(e));
  }
  return fail(eigen_detail(e) + ", expected " + std::to_string(mu));
}

// --- ramanujan -------------------------------------------------------------

SuiteReport ramanujan_suite(const Profile& profile) {
  SuiteBuilder suite("ramanujan");
  const int q = profile.Q();
  const IntSeries e2 = int_e2(q);
  const IntSeries e4 = int_eisenstein(4, 240, q);
  const IntSeries e6 = int_eisenstein(6, -504, q);

  suite.check("12 theta E2 = E2^2 - E4 over Z", [&] {
    return same_ints(int_scale(int_theta(e2), 12), int_sub(int_mul(e2, e2), e4));
  });
  suite.check("3 theta E4 = E2 E4 - E6 over Z", [&] {
    return same_ints(int_scale(int_theta(e4), 3), int_sub(int_mul(e2, e4), e6));
  });
  suite.check("2 theta E6 = E2 E6 - E4^2 over Z", [&] {
    return same_ints(int_scale(int_theta(e6), 2), int_sub(int_mul(e2, e6), int_mul(e4, e4)));
  });

  const auto E2 = eisenstein_e2(profile);
  const auto E4 = eisenstein_preset(profile, EisensteinPreset::e4_std);
  const auto E6 = eisenstein_preset(profile, EisensteinPreset::e6_std);
  suite.check("Ramanujan identities mod p^N", [&] {
    if (!(theta(E2).scaled(12) == E2 * E2 - E4)) return fail("E2 identity");
    if (!(theta(E4).scaled(3) == E2 * E4 - E6)) return fail("E4 identity");
    if (!(theta(E6).scaled(2) == E2 * E6 - E4 * E4)) return fail("E6 identity");
    return ok();
  });
  suite.check("theta is a derivation", [&] {
    InputGenerator gen(0x7a11);
    for (int t = 0; t < 5; ++t) {
      const auto f = gen.series(profile), g = gen.series(profile);
      if (!(theta(f * g) == theta(f) * g + f * theta(g))) return fail("trial " + std::to_string(t));
    }
    return ok();
  });
  return suite.take();
}

// --- interpolation ---------------------------------------------------------

SuiteReport interpolation_suite(const Profile& profile) {
  SuiteBuilder suite("interpolation");
  const auto p = static_cast<std::int64_t>(profile.p());
  const auto universal = universal_char(profile);

  suite.check("wt(classical k) = k for k in {0,1,3,4,12}", [&] {
    for (std::int64_t k : {0, 1, 3, 4, 12}) {
      if (!(wt(classical_char(profile, k)) == PadicInt(profile, k))) return fail("k = " + std::to_string(k));
    }
    return ok();
  });

  suite.check("universal character specializes to classical weights", [&] {
    for (std::int64_t k : {0, 1, 2, 4, 6, 12}) {
      const auto chi = specialize_character(universal, classical_point(profile, k));
      if (!(chi == classical_char(profile, k, -k))) return fail("k = " + std::to_string(k));
    }
    return ok();
  });

  suite.check("eval_char is multiplicative", [&] {
    InputGenerator gen(0x3c4a);
    for (int t = 0; t < 10; ++t) {
      std::int64_t a = 0, b = 0;
      while (a % p == 0) a = gen.integer(1, 1000);
      while (b % p == 0) b = gen.integer(1, 1000);
      const auto chi = classical_char(profile, gen.integer(-6, 20), gen.integer(0, p - 2));
      if (!(eval_char(chi, a * b) == eval_char(chi, a) * eval_char(chi, b))) {
        return fail("a = " + std::to_string(a) + ", b = " + std::to_string(b));
      }
      if (!(eval_char(universal, a * b) == eval_char(universal, a) * eval_char(universal, b))) {
        return fail("universal, a = " + std::to_string(a) + ", b = " + std::to_string(b));
      }
    }
    return ok();
  });

  suite.check("section series at z = exp(p^2 t) equals lambda^(p t)", [&] {
    for (std::int64_t k : {1, 4, 12}) {
      const auto chi = classical_char(profile, k);
      const auto series = char_section_series(chi, 2);
      for (std::int64_t t : {0, 1, 2}) {
        const PadicInt z = pexp(PadicInt(profile, p * p * t));
        if (!(series.evaluate(z) == chi.lambda.pow(static_cast<std::uint64_t>(p * t)))) {
          return fail("k = " + std::to_string(k) + ", t = " + std::to_string(t));
        }
      }
    }
    const auto series = char_section_series(universal, 2);
    for (std::int64_t t : {0, 1, 2}) {
      const PadicInt z = pexp(PadicInt(profile, p * p * t));
      if (!(series.evaluate(z) == universal.lambda.pow(static_cast<std::uint64_t>(p * t)))) {
        return fail("universal, t = " + std::to_string(t));
      }
    }
    return ok();
  });

  const auto katz = katz_splitting<PadicInt>(profile);
  const auto katz_family = katz_splitting<FamilyElement>(profile);

  suite.check("family partial_chi specializes to the weight-k operator", [&] {
    InputGenerator gen(0x9d01);
    for (int t = 0; t < 5; ++t) {
      const auto f = gen.series<FamilyElement>(profile);
      const auto lhs = partial_chi(f, universal, katz_family);
      for (std::int64_t k : {4, 12}) {
        const PadicInt uk = classical_point(profile, k);
        const auto rhs = partial_chi(specialize_series(f, uk), classical_char(profile, k), katz);
        if (!(specialize_series(lhs, uk) == rhs)) return fail("k = " + std::to_string(k));
      }
    }
    return ok();
  });

  for (int r = 0; r <= 2; ++r) {
    suite.check("specialize(nabla F) = nabla_classical(specialize F), r = " + std::to_string(r), [&, r] {
      InputGenerator gen(0x51a7 + static_cast<std::uint64_t>(r));
      for (int t = 0; t < 20; ++t) {
        const auto F = gen.form(universal, r, katz_family.name);
        const auto G = nabla(F, katz_family);
        for (std::int64_t k : {4, 6, 8, 12}) {
          const PadicInt uk = classical_point(profile, k);
          const auto lhs = specialize_form(G, uk);
          const auto rhs = nabla_classical(specialize_form(F, uk), k, katz);
          if (!(lhs == rhs)) {
            return fail("form " + std::to_string(t) + ", k = " + std::to_string(k) + ": " + form_mismatch(lhs, rhs));
          }
        }
      }
      return ok("20 forms, k in {4, 6, 8, 12}");
    });
  }
  return suite.take();
}

// --- independence ----------------------------------------------------------

SuiteReport independence_suite(const Profile& profile) {
  SuiteBuilder suite("independence");
  const auto katz = katz_splitting<PadicInt>(profile);

  suite.check("change_coordinates . nabla_s = nabla_s' . change_coordinates", [&] {
    InputGenerator gen(0x1dec);
    for (int t = 0; t < 10; ++t) {
      const auto alpha = gen.series(profile);
      const auto moved = splitting_update(katz, alpha, "katz+alpha");
      const int r = t % 3;
      const auto chi = classical_char(profile, gen.integer(0, 16));
      const auto F = gen.form(chi, r, katz.name);
      const auto lhs = change_coordinates(nabla(F, katz), alpha, moved.name);
      const auto rhs = nabla(change_coordinates(F, alpha, moved.name), moved);
      if (!(lhs == rhs)) return fail("trial " + std::to_string(t) + ": " + form_mismatch(lhs, rhs));
    }
    return ok("10 random alpha, r in {0, 1, 2}");
  });

  suite.check("independence over the weight family", [&] {
    InputGenerator gen(0x1ded);
    const auto universal = universal_char(profile);
    const auto katz_family = katz_splitting<FamilyElement>(profile);
    for (int r = 0; r <= 2; ++r) {
      const auto alpha = to_family(gen.series(profile));
      const auto moved = splitting_update(katz_family, alpha, "katz+alpha");
      const auto F = gen.form(universal, r, katz_family.name);
      const auto lhs = change_coordinates(nabla(F, katz_family), alpha, moved.name);
      const auto rhs = nabla(change_coordinates(F, alpha, moved.name), moved);
      if (!(lhs == rhs)) return fail("r = " + std::to_string(r) + ": " + form_mismatch(lhs, rhs));
    }
    return ok();
  });

  suite.check("coordinate round trip with -alpha is the identity", [&] {
    InputGenerator gen(0x1dee);
    for (int r = 0; r <= 3; ++r) {
      const auto alpha = gen.series(profile);
      const auto F = gen.form(classical_char(profile, 6), r, katz.name);
      const auto back = change_coordinates(change_coordinates(F, alpha, "x"), -alpha, katz.name);
      if (!(back == F)) return fail("r = " + std::to_string(r));
    }
    return ok();
  });

  suite.check("opposite coordinate sign breaks independence (control)", [&] {
    InputGenerator gen(0x1def);
    const auto alpha = gen.series(profile);
    const auto moved = splitting_update(katz, alpha, "katz+alpha");
    const auto F = gen.form(classical_char(profile, 4), 1, katz.name);
    const auto lhs = change_coordinates(nabla(F, katz), alpha, moved.name, CoordinateSign::minus);
    const auto rhs = nabla(change_coordinates(F, alpha, moved.name, CoordinateSign::minus), moved);
    return expect(!(lhs == rhs), "minus sign unexpectedly commutes");
  });
  return suite.take();
}

// --- change-of-splitting ---------------------------------------------------

SuiteReport change_of_splitting_suite(const Profile& profile) {
  SuiteBuilder suite("change-of-splitting");
  const auto katz = katz_splitting<PadicInt>(profile);
  const auto universal = universal_char(profile);

  auto random_pairs = [&](InputGenerator& gen) {
    std::vector<std::pair<QSeries<PadicInt>, QSeries<PadicInt>>> pairs;
    for (int i = 0; i < 10; ++i) pairs.emplace_back(gen.series(profile), gen.series(profile));
    return pairs;
  };

  suite.check("matrix identity for 10 random alpha", [&] {
    InputGenerator gen(0xa1fa);
    for (int t = 0; t < 10; ++t) {
      const auto alpha = gen.series(profile);
      if (!matrix_identity_check(katz, alpha, random_pairs(gen))) return fail("trial " + std::to_string(t));
    }
    return ok();
  });

  suite.check("matrix identity rejects a corrupted lambda' (control)", [&] {
    InputGenerator gen(0xa1fb);
    const auto alpha = gen.series(profile);
    auto corrupted = splitting_update(katz, alpha);
    corrupted.lambda[1] = corrupted.lambda[1] + PadicInt::one(profile);
    return expect(!matrix_identity_check(katz, alpha, corrupted, random_pairs(gen)), "corruption not detected");
  });

  suite.check("family operator: d'^chi = d^chi + wt(chi) alpha", [&] {
    InputGenerator gen(0xa1fc);
    const auto katz_family = katz_splitting<FamilyElement>(profile);
    for (int t = 0; t < 5; ++t) {
      const auto alpha = to_family(gen.series(profile));
      const auto moved = splitting_update(katz_family, alpha);
      const auto f = gen.series<FamilyElement>(profile);
      const auto lhs = partial_chi(f, universal, moved);
      const auto rhs = partial_chi(f, universal, katz_family) + (alpha * f) * wt(universal);
      if (!(lhs == rhs)) return fail("trial " + std::to_string(t));
    }
    return ok();
  });

  suite.check("update by alpha then -alpha restores the splitting", [&] {
    InputGenerator gen(0xa1fd);
    for (int t = 0; t < 5; ++t) {
      const auto alpha = gen.series(profile);
      const auto back = splitting_update(splitting_update(katz, alpha), -alpha);
      if (!(back.alpha0 == katz.alpha0) || !(back.lambda == katz.lambda)) return fail("trial " + std::to_string(t));
    }
    return ok();
  });

  suite.check("Katz to alpha0 = 0 shifts lambda by (2 E2^2 - E4)/144", [&] {
    const auto e2 = eisenstein_e2(profile);
    const auto e4 = eisenstein_preset(profile, EisensteinPreset::e4_std);
    const auto moved = splitting_update(katz, -e2_over_12(profile));
    if (!moved.alpha0.is_zero()) return fail("alpha0 does not vanish");
    return same_series(moved.lambda, katz.lambda + (e2 * e2).scaled(2) * inverse_of_int(profile, 144) -
                                         e4 * inverse_of_int(profile, 144));
  });

  suite.check("Katz partial_chi = theta f + wt E2 f / 12", [&] {
    InputGenerator gen(0xa1fe);
    const auto katz_family = katz_splitting<FamilyElement>(profile);
    const auto e2 = QSeries<FamilyElement>::from_ints(profile, int_e2(profile.Q()));
    const FamilyElement twelfth(inverse_of_int(profile, 12));
    for (int t = 0; t < 5; ++t) {
      const auto f = gen.series<FamilyElement>(profile);
      const auto expected = theta(f) + (e2 * f) * (wt(universal) * twelfth);
      if (!(partial_chi(f, universal, katz_family) == expected)) return fail("family trial " + std::to_string(t));
      const auto chi = classical_char(profile, gen.integer(0, 20));
      const auto g = gen.series(profile);
      const auto e2s = QSeries<PadicInt>::from_ints(profile, int_e2(profile.Q()));
      if (!(partial_chi(g, chi, katz) == theta(g) + (e2s * g) * (wt(chi) * inverse_of_int(profile, 12)))) {
        return fail("scalar trial " + std::to_string(t));
      }
    }
    return ok();
  });
  return suite.take();
}

// --- hecke -----------------------------------------------------------------

SuiteReport hecke_suite(const Profile& profile) {
  SuiteBuilder suite("hecke");
  const auto diag = diagonal_splitting<PadicInt>(profile);
  const auto katz = katz_splitting<PadicInt>(profile);
  const HeckeOp t2{HeckeKind::tl, 2};
  const auto e4 = eisenstein_preset(profile, EisensteinPreset::e4_std);
  const NearlyOCForm<PadicInt> e4_form(classical_char(profile, 4), e4, diag.name);
  const NearlyOCForm<PadicInt> delta_form(classical_char(profile, 12), delta(profile), diag.name);

  suite.check("T2 E4 = 9 E4", [&] { return expect_eigen(eigenvalue(e4_form, t2, diag), 9); });
  suite.check("T2 Delta = -24 Delta", [&] { return expect_eigen(eigenvalue(delta_form, t2, diag), -24); });
  suite.check("E4 + Delta is not a T2-eigenform", [&] {
    const NearlyOCForm<PadicInt> sum(classical_char(profile, 4), e4 + delta(profile), diag.name);
    const auto e = eigenvalue(sum, t2, diag);
    return expect(std::holds_alternative<NotEigen>(e), eigen_detail(e));
  });

  suite.check("U_p V_p = id on type 0", [&] {
    InputGenerator gen(0x4ec4);
    for (int t = 0; t < 5; ++t) {
      const NearlyOCForm<PadicInt> F(classical_char(profile, 4), gen.series(profile), diag.name);
      if (!(u_p(v_p(F, diag), diag) == F)) return fail("trial " + std::to_string(t));
    }
    return ok();
  });

  suite.check("T2 T3 = T3 T2 on type 0", [&] {
    InputGenerator gen(0x4ec5);
    for (int t = 0; t < 5; ++t) {
      const NearlyOCForm<PadicInt> F(classical_char(profile, gen.integer(0, 20)), gen.series(profile), diag.name);
      if (!(t_ell(t_ell(F, 2, diag), 3, diag) == t_ell(t_ell(F, 3, diag), 2, diag))) {
        return fail("trial " + std::to_string(t));
      }
    }
    return ok();
  });

  suite.check("nabla Delta is T2-eigen with eigenvalue -48 in diagonal coordinates", [&] {
    const NearlyOCForm<PadicInt> d_katz(classical_char(profile, 12), delta(profile), katz.name);
    const auto g = change_coordinates(nabla(d_katz, katz), -e2_over_12(profile), diag.name);
    const auto image = t_ell(g, 2, diag);
    if (!(g.component(0)[2] == PadicInt(profile, -48))) return fail("a_2 of the theta-Delta component");
    if (!(image.component(0)[2] == PadicInt(profile, 2304))) return fail("a_4 + 2^13 a_1 != 2304");
    return expect_eigen(eigenvalue(g, t2, diag), -48);
  });

  suite.check("T_ell nabla = ell nabla T_ell for r <= 1", [&] {
    InputGenerator gen(0x4ec6);
    for (int t = 0; t < 10; ++t) {
      const std::uint64_t ell = t % 2 == 0 ? 2 : 3;
      const auto F = gen.form(classical_char(profile, gen.integer(0, 16)), t % 2, diag.name);
      const auto lhs = t_ell(nabla(F, diag), ell, diag);
      const auto rhs = nabla(t_ell(F, ell, diag), diag);
      const NearlyOCForm<PadicInt> scaled(rhs.weight(), [&] {
        std::vector<QSeries<PadicInt>> c;
        for (const auto& x : rhs.components()) c.push_back(x.scaled(static_cast<std::int64_t>(ell)));
        return c;
      }(), rhs.splitting());
      if (!(lhs == scaled)) return fail("trial " + std::to_string(t) + ": " + form_mismatch(lhs, scaled));
    }
    return ok();
  });
  return suite.take();
}

// --- calibrate-lambda ------------------------------------------------------

SuiteReport calibrate_lambda_suite(const Profile& profile) {
  SuiteBuilder suite("calibrate-lambda");
  const LambdaCalibration cal = calibrate_lambda(profile);
  const HeckeOp t2{HeckeKind::tl, 2};

  suite.check("exactly one lambda candidate", [&] {
    std::ostringstream os;
    os << cal.passing.size() << " candidate(s) with 144 c in [-" << cal.search_bound << ", " << cal.search_bound
       << "]^2";
    if (cal.null_direction) {
      os << "; all on the line (j1, j2) = t (" << cal.null_direction->first << ", " << cal.null_direction->second
         << ")";
    }
    return Outcome{cal.unique(), os.str()};
  });

  suite.check("lambda = E4 fails the type-2 eigen test (control)", [&] {
    return expect(cal.e4_control_residual_index >= 0, "E4 unexpectedly passes");
  });

  if (!cal.lambda_diagonal) return suite.take();
  const auto diag = diagonal_splitting<PadicInt>(profile, *cal.lambda_diagonal);

  suite.check("nabla^2 Delta is T2-eigen with eigenvalue -96", [&] {
    const NearlyOCForm<PadicInt> d(classical_char(profile, 12), delta(profile), diag.name);
    return expect_eigen(eigenvalue(nabla(nabla(d, diag), diag), t2, diag), -96);
  });

  suite.check("T2 nabla = 2 nabla T2 for r = 2", [&] {
    InputGenerator gen(0xca1b);
    for (int t = 0; t < 5; ++t) {
      const auto F = gen.form(classical_char(profile, gen.integer(0, 16)), 2, diag.name);
      const auto lhs = t_ell(nabla(F, diag), 2, diag);
      const auto rhs = nabla(t_ell(F, 2, diag), diag);
      std::vector<QSeries<PadicInt>> c;
      for (const auto& x : rhs.components()) c.push_back(x.scaled(2));
      const NearlyOCForm<PadicInt> scaled(rhs.weight(), std::move(c), rhs.splitting());
      if (!(lhs == scaled)) return fail("trial " + std::to_string(t) + ": " + form_mismatch(lhs, scaled));
    }
    return ok();
  });

  suite.check("Katz-coordinate lambda is a multiple of E4", [&] {
    const auto c = e4_multiple(*cal.lambda_katz);
    if (c) return ok("lambda = " + std::to_string(c->signed_value()) + " E4");
    return fail("lambda_katz = (E4 - 2 E2^2)/144 is not a multiple of E4");
  });

  suite.check("Serre-coordinate lambda is a multiple of E4", [&] {
    const auto c = e4_multiple(serre_splitting<PadicInt>(profile).lambda);
    if (!c) return fail("not a multiple of E4");
    return expect(*c * PadicInt(profile, -144) == PadicInt::one(profile), "multiple is not -1/144");
  });
  return suite.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ramanujan",           "interpolation", "independence",
                                              "change-of-splitting", "hecke",         "calibrate-lambda"};
  return names;
}

SuiteReport run_suite(const std::string& name, const Profile& profile) {
  if (name == "ramanujan") return ramanujan_suite(profile);
  if (name == "interpolation") return interpolation_suite(profile);
  if (name == "independence") return independence_suite(profile);
  if (name == "change-of-splitting") return change_of_splitting_suite(profile);
  if (name == "hecke") return hecke_suite(profile);
  if (name == "calibrate-lambda") return calibrate_lambda_suite(profile);
  throw DomainError("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_verification(const std::string& selector, const Profile& profile) {
  std::vector<SuiteReport> out;
  if (selector == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, profile));
  } else {
    out.push_back(run_suite(selector, profile));
  }
  return out;
}

nlohmann::json report_json(const std::vector<SuiteReport>& reports, const Profile& profile) {
  nlohmann::json suites = nlohmann::json::array();
  bool all_passed = true;
  for (const auto& rep : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
      nlohmann::json entry{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) entry["detail"] = c.detail;
      checks.push_back(std::move(entry));
    }
    all_passed = all_passed && rep.passed();
    suites.push_back({{"suite", rep.name}, {"passed", rep.passed()}, {"checks", std::move(checks)}});
  }
  return make_document(profile, "verification", "zp", {{"passed", all_passed}, {"suites", std::move(suites)}});
}

}  // namespace padicmf
