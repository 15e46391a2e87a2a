#include "padicmf/serialize.hpp"

#include "padicmf/error.hpp"

namespace padicmf {

using nlohmann::json;

json profile_header(const Profile& profile) {
  return json{{"schema", kSchemaVersion},
              {"p", profile.p()},
              {"N", profile.N()},
              {"M", profile.M()},
              {"Q", profile.Q()}};
}

Profile profile_from_header(const json& header) {
  if (!header.is_object()) throw FormatError("header must be an object");
  if (!header.contains("schema") || header.at("schema") != kSchemaVersion) {
    throw FormatError("unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  try {
    return Profile::make(header.at("p").get<std::uint64_t>(), header.at("N").get<int>(),
                         header.at("M").get<int>(), header.at("Q").get<int>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad header: ") + e.what());
  } catch (const DomainError& e) {
    throw FormatError(std::string("bad header: ") + e.what());
  }
}

json make_document(const Profile& profile, const std::string& kind, const std::string& ring, json payload) {
  json doc{{"header", profile_header(profile)}, {"kind", kind}, {"ring", ring}};
  for (auto& [key, value] : payload.items()) doc[key] = value;
  return doc;
}

Profile document_profile(const json& doc) {
  if (!doc.is_object() || !doc.contains("header")) throw FormatError("document without header");
  return profile_from_header(doc.at("header"));
}

std::string document_kind(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
    throw FormatError("document without kind");
  }
  return doc.at("kind").get<std::string>();
}

std::string document_ring(const json& doc) {
  if (!doc.is_object() || !doc.contains("ring") || !doc.at("ring").is_string()) {
    throw FormatError("document without ring");
  }
  return doc.at("ring").get<std::string>();
}

json to_json(const PadicInt& x) { return x.residue(); }

json to_json(const FamilyElement& x) {
  json arr = json::array();
  for (auto c : x.residues()) arr.push_back(c);
  return arr;
}

json to_json(const PadicInt& x, int prec) { return x.residue() % x.profile().pow_p(prec); }

json to_json(const FamilyElement& x, int prec) {
  const std::uint64_t m = x.profile().pow_p(prec);
  json arr = json::array();
  for (auto c : x.residues()) arr.push_back(c % m);
  return arr;
}

namespace detail {

int payload_precision(const json& obj, const Profile& profile) {
  if (!obj.contains("precision")) return profile.N();
  const auto& v = obj.at("precision");
  if (!v.is_number_integer()) throw FormatError("precision must be an integer");
  const int prec = v.get<int>();
  if (prec < 0 || prec > profile.N()) throw FormatError("precision out of range");
  return prec;
}

PadicInt padic_from_json(const json& v, const Profile& profile, int prec) {
  if (!v.is_number_unsigned() && !v.is_number_integer()) throw FormatError("coefficient must be an integer");
  if (v.is_number_integer() && v.get<std::int64_t>() < 0) throw FormatError("coefficients are least residues");
  const auto r = v.get<std::uint64_t>();
  if (r >= profile.pow_p(prec)) throw FormatError("coefficient is not a least residue");
  return PadicInt::from_residue(profile, r, prec);
}

FamilyElement family_from_json(const json& v, const Profile& profile, int prec) {
  if (!v.is_array() || v.size() != static_cast<std::size_t>(profile.M())) {
    throw FormatError("family coefficient must be an array of M residues");
  }
  std::vector<std::uint64_t> residues;
  for (const auto& c : v) residues.push_back(padic_from_json(c, profile, prec).residue());
  return FamilyElement::from_residues(profile, residues, prec);
}

void require_kind(const json& doc, const std::string& kind, const std::string& ring) {
  if (document_kind(doc) != kind) throw FormatError("expected a '" + kind + "' document");
  if (document_ring(doc) != ring) throw FormatError("expected ring '" + ring + "'");
}

}  // namespace detail

}  // namespace padicmf
