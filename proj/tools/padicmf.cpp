// Command-line front end: builds q-expansions and forms, applies the operators,
// and runs the verification suites. Every result is a JSON document on stdout
// (or --output) carrying the precision profile in its header.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 precision error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "padicmf/connection.hpp"
#include "padicmf/error.hpp"
#include "padicmf/hecke.hpp"
#include "padicmf/serialize.hpp"
#include "padicmf/verify.hpp"

namespace {

using nlohmann::json;
using namespace padicmf;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t p = 5;
  int N = 6;
  int M = 8;
  int Q = 64;
  std::string input;
  std::string output;

  // subcommand parameters
  int k = 0;
  std::string norm = "std";
  std::string weight;
  std::string splitting;
  int r = 0;
  std::string op;
  std::uint64_t ell = 2;
  std::string alpha;
  std::string suite = "all";
};

struct ProfileFlags {
  CLI::Option* p = nullptr;
  CLI::Option* N = nullptr;
  CLI::Option* M = nullptr;
  CLI::Option* Q = nullptr;
};

Profile flag_profile(const Options& o) { return Profile::make(o.p, o.N, o.M, o.Q); }

json read_input(const Options& o) {
  std::stringstream buffer;
  if (o.input.empty() || o.input == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open input file '" + o.input + "'");
    buffer << in.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
}

/// The document's profile; explicitly passed flags must agree with it.
Profile input_profile(const json& doc, const Options& o, const ProfileFlags& flags) {
  const Profile prof = document_profile(doc);
  auto clash = [](CLI::Option* opt, auto flag_value, auto doc_value) {
    return opt->count() > 0 && static_cast<std::int64_t>(flag_value) != static_cast<std::int64_t>(doc_value);
  };
  if (clash(flags.p, o.p, prof.p()) || clash(flags.N, o.N, prof.N()) || clash(flags.M, o.M, prof.M()) ||
      clash(flags.Q, o.Q, prof.Q())) {
    throw UsageError("precision flags disagree with the input document header");
  }
  return prof;
}

void write_output(const json& doc, const Options& o) {
  const std::string text = doc.dump(2) + "\n";
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) throw UsageError("cannot open output file '" + o.output + "'");
    out << text;
  }
}

/// "k:INT" (optionally "k:INT:TWIST") or "universal".
struct WeightSpec {
  bool universal = false;
  std::int64_t k = 0;
  std::int64_t twist = 0;
};

WeightSpec parse_weight(const std::string& text) {
  WeightSpec w;
  if (text == "universal") {
    w.universal = true;
    return w;
  }
  if (text.rfind("k:", 0) != 0) throw UsageError("weight must be 'k:INT' or 'universal'");
  try {
    const std::string rest = text.substr(2);
    const auto colon = rest.find(':');
    std::size_t used = 0;
    w.k = std::stoll(rest.substr(0, colon), &used);
    if (used != rest.substr(0, colon).size()) throw std::invalid_argument("trailing");
    if (colon != std::string::npos) {
      w.twist = std::stoll(rest.substr(colon + 1), &used);
      if (used != rest.size() - colon - 1) throw std::invalid_argument("trailing");
    }
  } catch (const std::logic_error&) {
    throw UsageError("weight must be 'k:INT' or 'universal'");
  }
  return w;
}

template <CoefficientRing R>
Character<R> character_for(const Profile& prof, const WeightSpec& w) {
  if constexpr (std::same_as<R, PadicInt>) {
    if (w.universal) throw UsageError("the universal weight needs family-ring input");
    return classical_char(prof, w.k, w.twist);
  } else {
    if (w.universal) return universal_char(prof);
    const auto chi = classical_char(prof, w.k, w.twist);
    return Character<FamilyElement>{chi.tame, FamilyElement(chi.lambda)};
  }
}

/// Reads a form document, or wraps a q-series document into a form using --weight,
/// --r and the given splitting.
template <CoefficientRing R>
NearlyOCForm<R> form_from_document(const json& doc, const Options& o, const std::string& splitting) {
  const std::string kind = document_kind(doc);
  if (kind == "form") return deserialize_form<R>(doc);
  if (kind != "qseries") throw UsageError("expected a 'qseries' or 'form' document");
  if (o.weight.empty()) throw UsageError("--weight is required to build a form from a q-series");
  const auto f = deserialize_series<R>(doc);
  const Profile& prof = f.profile();
  const NearlyOCForm<R> F(character_for<R>(prof, parse_weight(o.weight)), f, splitting);
  return F.include(o.r);
}

json cmd_eisenstein(const Options& o) {
  const Profile prof = flag_profile(o);
  if (o.k == 2) {
    if (o.norm != "std") throw UsageError("E2 has a single normalization");
    return serialize_series(eisenstein_e2(prof));
  }
  std::int64_t c = 0;
  if (o.norm == "paper") {
    if (o.k != 4) throw UsageError("--norm paper only applies to k = 4");
    c = 120;
  } else if (o.norm == "std") {
    c = standard_eisenstein_constant(static_cast<unsigned>(o.k));
  } else {
    throw UsageError("--norm must be 'paper' or 'std'");
  }
  if (o.k < 4 || o.k % 2 != 0) throw DomainError("Eisenstein series need an even weight k >= 4 (or k = 2)");
  return serialize_series(eisenstein_classical(prof, static_cast<unsigned>(o.k), c));
}

json cmd_theta(const Options& o, const ProfileFlags& flags) {
  const json doc = read_input(o);
  input_profile(doc, o, flags);
  if (document_ring(doc) == "family") return serialize_series(theta(deserialize_series<FamilyElement>(doc)));
  return serialize_series(theta(deserialize_series<PadicInt>(doc)));
}

template <CoefficientRing R>
json partial_impl(const json& doc, const Options& o, const Profile& prof) {
  const auto f = deserialize_series<R>(doc);
  const auto chi = character_for<R>(prof, parse_weight(o.weight));
  return serialize_series(partial_chi(f, chi, splitting_by_name<R>(prof, o.splitting)));
}

json cmd_partial(const Options& o, const ProfileFlags& flags) {
  if (o.weight.empty()) throw UsageError("--weight is required");
  const json doc = read_input(o);
  const Profile prof = input_profile(doc, o, flags);
  const bool family = document_ring(doc) == "family" || parse_weight(o.weight).universal;
  if (!family) return partial_impl<PadicInt>(doc, o, prof);
  if (document_ring(doc) == "family") return partial_impl<FamilyElement>(doc, o, prof);
  json lifted = serialize_series(to_family(deserialize_series<PadicInt>(doc)));
  return partial_impl<FamilyElement>(lifted, o, prof);
}

template <CoefficientRing R>
json nabla_impl(const json& doc, const Options& o, const Profile& prof) {
  const auto F = form_from_document<R>(doc, o, o.splitting);
  return serialize_form(nabla(F, splitting_by_name<R>(prof, F.splitting())));
}

json cmd_nabla(const Options& o, const ProfileFlags& flags) {
  const json doc = read_input(o);
  const Profile prof = input_profile(doc, o, flags);
  const bool universal = !o.weight.empty() && parse_weight(o.weight).universal;
  if (document_ring(doc) == "family") return nabla_impl<FamilyElement>(doc, o, prof);
  if (universal) {
    json lifted = serialize_series(to_family(deserialize_series<PadicInt>(doc)));
    return nabla_impl<FamilyElement>(lifted, o, prof);
  }
  return nabla_impl<PadicInt>(doc, o, prof);
}

template <CoefficientRing R>
json hecke_impl(const json& doc, const Options& o, const Profile& prof) {
  const auto F = form_from_document<R>(doc, o, kDiagonalSplitting);
  HeckeOp op;
  if (o.op == "up") {
    op.kind = HeckeKind::up;
  } else if (o.op == "vp") {
    op.kind = HeckeKind::vp;
  } else if (o.op == "tl") {
    op.kind = HeckeKind::tl;
    op.ell = o.ell;
  } else {
    throw UsageError("--op must be up, vp or tl");
  }
  return serialize_form(apply_hecke(F, op, splitting_by_name<R>(prof, F.splitting())));
}

json cmd_hecke(const Options& o, const ProfileFlags& flags) {
  const json doc = read_input(o);
  const Profile prof = input_profile(doc, o, flags);
  if (document_ring(doc) == "family") return hecke_impl<FamilyElement>(doc, o, prof);
  return hecke_impl<PadicInt>(doc, o, prof);
}

json cmd_specialize(const Options& o, const ProfileFlags& flags) {
  const json doc = read_input(o);
  const Profile prof = input_profile(doc, o, flags);
  const PadicInt uk = classical_point(prof, o.k);
  if (document_kind(doc) == "form") {
    return serialize_form(specialize_form(deserialize_form<FamilyElement>(doc), uk));
  }
  return serialize_series(specialize_series(deserialize_series<FamilyElement>(doc), uk));
}

json cmd_wt(const Options& o) {
  const Profile prof = flag_profile(o);
  if (o.weight.empty()) throw UsageError("--weight is required");
  const WeightSpec w = parse_weight(o.weight);
  if (w.universal) {
    const FamilyElement value = wt(universal_char(prof));
    return make_document(prof, "scalar", "family", {{"value", to_json(value)}, {"precision", value.precision()}});
  }
  const PadicInt value = wt(classical_char(prof, w.k, w.twist));
  return make_document(prof, "scalar", "zp", {{"value", to_json(value)}, {"precision", value.precision()}});
}

/// Name of the preset matching `s`, if any.
template <CoefficientRing R>
std::optional<std::string> preset_name(const Profile& prof, const SplittingModel<R>& s) {
  for (const char* name : {kDiagonalSplitting, kKatzSplitting, kSerreSplitting, kPrintedKatzSplitting}) {
    const auto preset = splitting_by_name<R>(prof, name);
    if (preset.alpha0 == s.alpha0 && preset.lambda == s.lambda) return std::string(name);
  }
  return std::nullopt;
}

template <CoefficientRing R>
json change_impl(const json& doc, const Options& o, const Profile& prof) {
  const auto F = deserialize_form<R>(doc);
  QSeries<R> alpha = e2_over_12<R>(prof);
  if (o.alpha == "-e2/12") {
    alpha = -alpha;
  } else if (o.alpha != "e2/12") {
    throw UsageError("--alpha must be 'e2/12' or '-e2/12'");
  }
  const auto moved = splitting_update(splitting_by_name<R>(prof, F.splitting()), alpha);
  const std::string target = preset_name(prof, moved).value_or(moved.name);
  return serialize_form(change_coordinates(F, alpha, target));
}

json cmd_change_coords(const Options& o, const ProfileFlags& flags) {
  const json doc = read_input(o);
  const Profile prof = input_profile(doc, o, flags);
  if (document_ring(doc) == "family") return change_impl<FamilyElement>(doc, o, prof);
  return change_impl<PadicInt>(doc, o, prof);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic families of nearly overconvergent modular forms"};
  app.require_subcommand(1);
  Options o;
  ProfileFlags flags;
  flags.p = app.add_option("--p", o.p, "prime p >= 5")->capture_default_str();
  flags.N = app.add_option("--prec-p", o.N, "p-adic precision N (work mod p^N)")->capture_default_str();
  flags.M = app.add_option("--prec-u", o.M, "family precision M (truncate at u^M)")->capture_default_str();
  flags.Q = app.add_option("--prec-q", o.Q, "q-expansion length Q")->capture_default_str();
  app.add_option("--input", o.input, "input JSON document (default: stdin)");
  app.add_option("--output", o.output, "output file (default: stdout)");
  app.fallthrough();

  auto* eis = app.add_subcommand("eisenstein", "Eisenstein series E_k");
  eis->add_option("--k", o.k, "weight (2 or even >= 4)")->required();
  eis->add_option("--norm", o.norm, "paper|std")->capture_default_str();

  auto* del = app.add_subcommand("delta", "the discriminant form");
  auto* th = app.add_subcommand("theta", "q d/dq of the input series");

  auto* part = app.add_subcommand("partial", "theta f + wt(chi) alpha0 f");
  part->add_option("--weight", o.weight, "k:INT | universal")->required();
  o.splitting = kKatzSplitting;
  part->add_option("--splitting", o.splitting, "diagonal|katz|serre|katz-printed")->capture_default_str();

  auto* nab = app.add_subcommand("nabla", "Gauss-Manin connection on a form");
  nab->add_option("--r", o.r, "type of the form built from a q-series input");
  nab->add_option("--weight", o.weight, "k:INT | universal");
  nab->add_option("--splitting", o.splitting, "coordinates of a q-series input")->capture_default_str();

  auto* hec = app.add_subcommand("hecke", "Hecke operator in diagonal coordinates");
  hec->add_option("--op", o.op, "up|vp|tl")->required();
  hec->add_option("--ell", o.ell, "prime for tl")->capture_default_str();
  hec->add_option("--weight", o.weight, "k:INT | universal (q-series input)");
  hec->add_option("--r", o.r, "type (q-series input)");

  auto* spec = app.add_subcommand("specialize", "evaluate a family at the weight-k point");
  spec->add_option("--k", o.k, "classical weight")->required();

  auto* wtc = app.add_subcommand("wt", "p-adic weight of a character");
  wtc->add_option("--weight", o.weight, "k:INT | universal")->required();

  auto* chg = app.add_subcommand("change-coords", "change of splitting on a form");
  chg->add_option("--alpha", o.alpha, "e2/12|-e2/12")->required();

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", o.suite,
                  "ramanujan|interpolation|independence|change-of-splitting|hecke|calibrate-lambda|all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    json result;
    int code = kExitOk;
    if (eis->parsed()) {
      result = cmd_eisenstein(o);
    } else if (del->parsed()) {
      result = serialize_series(delta(flag_profile(o)));
    } else if (th->parsed()) {
      result = cmd_theta(o, flags);
    } else if (part->parsed()) {
      result = cmd_partial(o, flags);
    } else if (nab->parsed()) {
      result = cmd_nabla(o, flags);
    } else if (hec->parsed()) {
      result = cmd_hecke(o, flags);
    } else if (spec->parsed()) {
      result = cmd_specialize(o, flags);
    } else if (wtc->parsed()) {
      result = cmd_wt(o);
    } else if (chg->parsed()) {
      result = cmd_change_coords(o, flags);
    } else if (ver->parsed()) {
      const Profile prof = flag_profile(o);
      if (o.suite != "all" && std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end()) {
        throw UsageError("unknown suite '" + o.suite + "'");
      }
      result = report_json(run_verification(o.suite, prof), prof);
      if (!result.at("passed").get<bool>()) code = kExitVerification;
    }
    write_output(result, o);
    return code;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
  } catch (const CoordinateError& e) {
    std::cerr << "coordinate error: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return kExitUsage;
}
