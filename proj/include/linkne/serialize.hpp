#pragma once

#include <json.hpp>

#include "linkne/discrete.hpp"
#include "linkne/fixtures.hpp"
#include "linkne/instances.hpp"

namespace linkne {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rat& r);
Json to_json(const Vec& v);
Json to_json(const Poly& p);
Json to_json(const Subspace& s);
Json to_json(const SqfProfile& p);
Json to_json(const Verdict& v);
Json to_json(const InvertibleCertificate& c);
Json to_json(const DiderrichCertificate& c);
Json to_json(const CertificateCheck& c);
Json to_json(const OlsonReport& r);
Json to_json(const KneserReport& r);
Json to_json(const NfoldReport& r);
Json to_json(const ConnectivityReport& r);
Json to_json(const AtomCheck& c);
Json to_json(const HamidouneReport& r);
Json to_json(const TaoReport& r);
Json to_json(const SubsetBits& s);
Json to_json(const StabCorrespondence& r);
Json to_json(const GroupSweepReport& r);
Json to_json(const MonoidHamidouneReport& r);
Json to_json(const MulTable& t);
Json to_json(const AlgebraDesc& d);
Json to_json(const Instance& inst);

/// Accepts "p/q" strings and JSON integers. Throws ParseError.
Rat rat_from_json(const Json& j);
Vec vec_from_json(const Json& j);
Poly poly_from_json(const Json& j);
TablePtr table_from_json(const Json& j);
AlgebraDesc algebra_desc_from_json(const Json& j);

/// Parsed instance file: {"algebra": AlgebraDesc, "subspaces": {name: [[..]..]},
/// "subsets": {name: [labels]}, "parameters": {...}}.
struct InstanceFile {
  AlgebraDesc algebra_desc;
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Subspace>> subspaces;
  std::vector<std::pair<std::string, SubsetBits>> subsets;
  Json parameters = Json::object();
};

InstanceFile instance_from_json(const Json& j);

}  // namespace linkne
