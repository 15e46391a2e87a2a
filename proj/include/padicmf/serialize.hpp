#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "padicmf/connection.hpp"
#include "padicmf/q_series.hpp"
#include "padicmf/weight_space.hpp"

namespace padicmf {

/// Malformed or incompatible serialized data.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

/// Ring tag stored next to every payload.
template <CoefficientRing R>
constexpr const char* ring_tag() {
  if constexpr (std::same_as<R, PadicInt>) {
    return "zp";
  } else {
    return "family";
  }
}

nlohmann::json profile_header(const Profile& profile);
/// Reads {p, N, M, Q, schema}; throws FormatError on a schema mismatch or bad field.
Profile profile_from_header(const nlohmann::json& header);

/// Envelope {header, kind, ring, ...payload fields}.
nlohmann::json make_document(const Profile& profile, const std::string& kind, const std::string& ring,
                             nlohmann::json payload);
/// Profile of a document, checking the schema version.
Profile document_profile(const nlohmann::json& doc);
std::string document_kind(const nlohmann::json& doc);
std::string document_ring(const nlohmann::json& doc);

nlohmann::json to_json(const PadicInt& x);
nlohmann::json to_json(const FamilyElement& x);
/// Residues reduced mod p^prec, for payloads whose shared precision is prec.
nlohmann::json to_json(const PadicInt& x, int prec);
nlohmann::json to_json(const FamilyElement& x, int prec);

/// The json value of a coefficient (least residues; precision travels separately).
template <CoefficientRing R>
nlohmann::json series_payload(const QSeries<R>& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(to_json(c, f.precision()));
  nlohmann::json out{{"coefficients", std::move(coeffs)}};
  if (f.precision() < f.profile().N()) out["precision"] = f.precision();
  return out;
}

template <CoefficientRing R>
nlohmann::json character_payload(const Character<R>& chi) {
  nlohmann::json lambda = nlohmann::json::array();
  const Profile& prof = chi.profile();
  if constexpr (std::same_as<R, PadicInt>) {
    lambda.push_back(chi.lambda.residue());
    for (int i = 1; i < prof.M(); ++i) lambda.push_back(0);
  } else {
    for (auto c : chi.lambda.residues()) lambda.push_back(c);
  }
  nlohmann::json out{{"tame", chi.tame}, {"lambda", std::move(lambda)}};
  if (chi.lambda.precision() < prof.N()) out["precision"] = chi.lambda.precision();
  return out;
}

template <CoefficientRing R>
nlohmann::json form_payload(const NearlyOCForm<R>& F) {
  int prec = F.profile().N();
  for (const auto& c : F.components()) prec = std::min(prec, c.precision());
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : F.components()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : c.coefficients()) row.push_back(to_json(x, prec));
    comps.push_back(std::move(row));
  }
  nlohmann::json out{{"weight", character_payload(F.weight())},
                     {"r", F.r()},
                     {"splitting", F.splitting()},
                     {"components", std::move(comps)}};
  if (prec < F.profile().N()) out["precision"] = prec;
  return out;
}

template <CoefficientRing R>
nlohmann::json serialize_series(const QSeries<R>& f) {
  return make_document(f.profile(), "qseries", ring_tag<R>(), series_payload(f));
}

template <CoefficientRing R>
nlohmann::json serialize_form(const NearlyOCForm<R>& F) {
  return make_document(F.profile(), "form", ring_tag<R>(), form_payload(F));
}

namespace detail {

int payload_precision(const nlohmann::json& obj, const Profile& profile);
PadicInt padic_from_json(const nlohmann::json& v, const Profile& profile, int prec);
FamilyElement family_from_json(const nlohmann::json& v, const Profile& profile, int prec);

template <CoefficientRing R>
R coefficient_from_json(const nlohmann::json& v, const Profile& profile, int prec) {
  if constexpr (std::same_as<R, PadicInt>) {
    return padic_from_json(v, profile, prec);
  } else {
    return family_from_json(v, profile, prec);
  }
}

template <CoefficientRing R>
QSeries<R> series_from_array(const nlohmann::json& arr, const Profile& profile, int prec) {
  if (!arr.is_array()) throw FormatError("expected an array of coefficients");
  std::vector<R> c;
  c.reserve(arr.size());
  for (const auto& v : arr) c.push_back(coefficient_from_json<R>(v, profile, prec));
  return QSeries<R>(profile, std::move(c));
}

template <CoefficientRing R>
Character<R> character_from_json(const nlohmann::json& obj, const Profile& profile) {
  if (!obj.is_object() || !obj.contains("tame") || !obj.contains("lambda")) {
    throw FormatError("character needs 'tame' and 'lambda'");
  }
  const auto& lam = obj.at("lambda");
  if (!lam.is_array() || lam.size() != static_cast<std::size_t>(profile.M())) {
    throw FormatError("character lambda must have M entries");
  }
  const int prec = payload_precision(obj, profile);
  const FamilyElement lambda = family_from_json(lam, profile, prec);
  const int tame = obj.at("tame").get<int>();
  if (tame < 0 || tame >= static_cast<int>(profile.p() - 1)) throw FormatError("tame exponent out of range");
  if constexpr (std::same_as<R, PadicInt>) {
    if (lambda.degree() > 0) throw FormatError("scalar character with a non-constant lambda");
    return Character<PadicInt>{tame, lambda.coefficient(0)};
  } else {
    return Character<FamilyElement>{tame, lambda};
  }
}

void require_kind(const nlohmann::json& doc, const std::string& kind, const std::string& ring);

}  // namespace detail

template <CoefficientRing R>
QSeries<R> deserialize_series(const nlohmann::json& doc) {
  detail::require_kind(doc, "qseries", ring_tag<R>());
  const Profile profile = document_profile(doc);
  if (!doc.contains("coefficients")) throw FormatError("qseries document without coefficients");
  return detail::series_from_array<R>(doc.at("coefficients"), profile,
                                      detail::payload_precision(doc, profile));
}

template <CoefficientRing R>
NearlyOCForm<R> deserialize_form(const nlohmann::json& doc) {
  detail::require_kind(doc, "form", ring_tag<R>());
  const Profile profile = document_profile(doc);
  for (const char* key : {"weight", "r", "splitting", "components"}) {
    if (!doc.contains(key)) throw FormatError(std::string("form document without '") + key + "'");
  }
  const int prec = detail::payload_precision(doc, profile);
  const auto& comps = doc.at("components");
  if (!comps.is_array() || comps.empty()) throw FormatError("form components must be a non-empty array");
  std::vector<QSeries<R>> series;
  for (const auto& c : comps) series.push_back(detail::series_from_array<R>(c, profile, prec));
  if (doc.at("r").get<int>() + 1 != static_cast<int>(series.size())) {
    throw FormatError("form type r does not match the number of components");
  }
  return NearlyOCForm<R>(detail::character_from_json<R>(doc.at("weight"), profile), std::move(series),
                         doc.at("splitting").get<std::string>());
}

}  // namespace padicmf
