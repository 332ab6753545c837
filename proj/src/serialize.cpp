#include "linkne/serialize.hpp"

#include "linkne/error.hpp"

namespace linkne {

namespace {

Json dims_json(const std::vector<std::size_t>& dims) {
  Json j = Json::array();
  for (auto d : dims) j.push_back(d);
  return j;
}

Json optional_subspace(const std::optional<Subspace>& s) { return s ? to_json(*s) : Json(nullptr); }

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(to_json(c));
  return j;
}

Json to_json(const Poly& p) { return to_json(p.coeffs()); }

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(b));
  return Json{{"algebra", s.algebra()->label()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const SqfProfile& p) {
  Json parts = Json::array();
  for (const auto& part : p.parts) parts.push_back(Json::array({part.multiplicity, to_json(part.factor)}));
  return parts;
}

Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = std::string(to_string(v.kind));
  j["reason"] = std::string(to_string(v.reason));
  j["generator"] = v.generator ? to_json(v.generator->coords) : Json(nullptr);
  j["min_poly"] = v.generator ? to_json(v.min_poly) : Json(nullptr);
  j["profile"] = v.profile ? to_json(*v.profile) : Json(nullptr);
  j["trials_used"] = v.trials_used;
  return j;
}

Json to_json(const InvertibleCertificate& c) {
  static const char* names[] = {"YES", "PROBABLY_NO", "NO_PROVEN"};
  return Json{{"verdict", names[static_cast<int>(c.verdict)]},
              {"witness", c.witness ? to_json(c.witness->coords) : Json(nullptr)},
              {"candidates_tried", c.candidates_tried}};
}

Json to_json(const DiderrichCertificate& c) {
  return Json{{"a", to_json(c.a.coords)},
              {"b", to_json(c.b.coords)},
              {"algebra_part", to_json(c.algebra_part)},
              {"module", to_json(c.module)},
              {"recursion_depth", c.recursion_depth}};
}

Json to_json(const CertificateCheck& c) {
  return Json{{"subalgebra", c.subalgebra},       {"inside_generated", c.inside_generated},
              {"inside_product", c.inside_product}, {"contains_aB", c.contains_aB},
              {"module_closed", c.module_closed}, {"has_invertible", c.has_invertible},
              {"dimension_bound", c.dimension_bound}, {"depth_bound", c.depth_bound},
              {"all", c.all()}};
}

Json to_json(const OlsonReport& r) {
  return Json{{"certificate", to_json(r.certificate)},
              {"dim_v", r.dim_v},
              {"dim_w", r.dim_w},
              {"dim_vw", r.dim_vw},
              {"dim_s", r.dim_s},
              {"dim_h", r.dim_h},
              {"s_meets_units", r.s_meets_units},
              {"h_contains_scalars", r.h_contains_scalars},
              {"hs_equals_s", r.hs_equals_s},
              {"chain_holds", r.chain_holds},
              {"holds", r.holds()}};
}

Json to_json(const KneserReport& r) {
  const long rhs1 = static_cast<long>(r.dim_a + r.dim_b) - static_cast<long>(r.dim_stabilizer);
  const long rhs2 = static_cast<long>(r.dim_ha + r.dim_hb) - static_cast<long>(r.dim_stabilizer);
  Json j{{"dim_a", r.dim_a},
         {"dim_b", r.dim_b},
         {"dim_product", r.dim_product},
         {"dim_stabilizer", r.dim_stabilizer},
         {"dim_ha", r.dim_ha},
         {"dim_hb", r.dim_hb},
         {"periodic", r.periodic},
         {"bound1", Json{{"rhs", rhs1}, {"slack", static_cast<long>(r.dim_product) - rhs1}, {"holds", r.bound1}}}};
  j["bound2"] = r.bound2_applicable
                    ? Json{{"rhs", rhs2}, {"slack", static_cast<long>(r.dim_product) - rhs2}, {"holds", r.bound2}}
                    : Json(nullptr);
  j["generated_verdict"] = to_json(r.generated_verdict);
  j["hypothesis_finite"] = r.hypothesis_finite;
  j["holds"] = r.holds();
  return j;
}

Json to_json(const NfoldReport& r) {
  return Json{{"dims", dims_json(r.dims)},
              {"dims_with_h", dims_json(r.dims_with_h)},
              {"dim_product", r.dim_product},
              {"dim_stabilizer", r.dim_stabilizer},
              {"strong", Json{{"rhs", r.strong_rhs},
                              {"slack", static_cast<long>(r.dim_product) - r.strong_rhs},
                              {"holds", r.strong}}},
              {"weak", Json{{"rhs", r.weak_rhs},
                            {"slack", static_cast<long>(r.dim_product) - r.weak_rhs},
                            {"holds", r.weak}}},
              {"ambient_verdict", to_json(r.ambient_verdict)},
              {"hypothesis_finite", r.hypothesis_finite},
              {"holds", r.holds()}};
}

Json to_json(const ConnectivityReport& r) {
  Json evaluated = Json::array();
  for (const auto& e : r.evaluated) evaluated.push_back(Json::array({e.id, to_json(e.value)}));
  return Json{{"lambda", to_json(r.lambda)},
              {"v", optional_subspace(r.v)},
              {"kappa", to_json(r.kappa)},
              {"atom_id", r.atom_id},
              {"atom", optional_subspace(r.atom)},
              {"exact", r.exact},
              {"tie_break_fired", r.tie_break_fired},
              {"evaluated", evaluated}};
}

Json to_json(const AtomCheck& c) {
  return Json{{"value_matches", c.value_matches}, {"contains_unit", c.contains_unit},
              {"subalgebra", c.subalgebra},       {"contains_stabilizer", c.contains_stabilizer},
              {"minimal", c.minimal},             {"all", c.all()}};
}

Json to_json(const HamidouneReport& r) {
  return Json{{"dim_wv", r.dim_wv}, {"dim_w", r.dim_w},           {"dim_v", r.dim_v},
              {"dim_atom", r.dim_atom}, {"lambda", to_json(r.lambda)}, {"rhs", to_json(r.rhs)},
              {"slack", to_json(r.slack)}, {"holds", r.holds}};
}

Json to_json(const TaoReport& r) {
  Json j{{"epsilon", to_json(r.epsilon)},
         {"hypotheses_met", r.hypotheses_met},
         {"hypothesis_failure", r.hypothesis_failure},
         {"dim_v", r.dim_v},
         {"dim_w", r.dim_w},
         {"dim_wv", r.dim_wv}};
  if (r.hypotheses_met) {
    j["h"] = optional_subspace(r.h);
    j["dim_h"] = r.dim_h;
    j["dim_hv"] = r.dim_hv;
    j["bound_h"] = to_json(r.bound_h);
    j["bound_hv"] = to_json(r.bound_hv);
    j["h_bound"] = r.h_bound;
    j["v_inside_hv"] = r.v_inside_hv;
    j["hv_bound"] = r.hv_bound;
  }
  j["satisfied"] = r.satisfied();
  return j;
}

Json to_json(const SubsetBits& s) {
  Json j = Json::array();
  for (auto i : s.indices()) j.push_back(s.table()->label(i));
  return j;
}

Json to_json(const StabCorrespondence& r) {
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(to_json(b));
  return Json{{"dim_algebraic", r.dim_algebraic}, {"size_combinatorial", r.size_combinatorial},
              {"stabilizer_basis", basis},        {"is_group", r.is_group},
              {"equal", r.equal},                 {"holds", r.holds()}};
}

Json to_json(const GroupSweepReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"pair", f.pair},
                            {"a", f.a},
                            {"b", f.b},
                            {"size_ab", f.size_ab},
                            {"size_h", f.size_h},
                            {"dim_ab", f.dim_ab},
                            {"dim_h", f.dim_h},
                            {"inequality", f.inequality},
                            {"routes_agree", f.routes_agree}});
  }
  return Json{{"group_size", r.group_size},
              {"pairs_checked", r.pairs_checked},
              {"skipped_noncommutative", r.skipped_noncommutative},
              {"violations", r.violations},
              {"mismatches", r.mismatches},
              {"failures", failures},
              {"ok", r.ok()}};
}

Json to_json(const MonoidHamidouneReport& r) {
  return Json{{"a", to_json(r.a)},
              {"b", to_json(r.b)},
              {"ab", to_json(r.ab)},
              {"ba", to_json(r.ba)},
              {"size_ab", r.ab.count()},
              {"size_ba", r.ba.count()},
              {"h_a", to_json(r.h_a)},
              {"h_ab", to_json(r.h_ab)},
              {"lambda", to_json(r.lambda)},
              {"kneser_style", Json{{"rhs", r.kneser_rhs}, {"holds", r.kneser_holds}}},
              {"atom_exact", r.connectivity.exact},
              {"atom_note", r.connectivity.exact ? "exact atom over Q"
                                                 : "bound with candidate atom (upper bound on kappa), computed over Q"},
              {"dim_atom", r.dim_atom},
              {"dim_stabilizer", r.dim_stabilizer},
              {"hamidoune", Json{{"rhs", to_json(r.rhs)}, {"slack", to_json(r.slack)}, {"holds", r.bound}}},
              {"hamidoune_swapped_sizes",
               Json{{"rhs", to_json(r.rhs_swapped)}, {"holds", r.bound_swapped}}},
              {"atom_covers_h_a", r.atom_covers_h_a},
              {"connectivity", to_json(r.connectivity)},
              {"holds", r.holds()}};
}

Json to_json(const MulTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < t.size(); ++k) row.push_back(t.at(i, k));
    rows.push_back(row);
  }
  return Json{{"kind", t.is_group() ? "group_table" : "monoid_table"},
              {"size", t.size()},
              {"unit", t.unit()},
              {"table", rows},
              {"labels", t.labels()}};
}

Json to_json(const AlgebraDesc& d) {
  Json j = std::visit(
      [](const auto& body) -> Json {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, StructureConstantsDesc>) {
          Json table = Json::array();
          for (const auto& row : body.table) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(to_json(v));
            table.push_back(r);
          }
          return Json{{"kind", "structure_constants"}, {"dim", body.unit.size()}, {"unit", to_json(body.unit)},
                      {"table", table}};
        } else if constexpr (std::is_same_v<T, TableDesc>) {
          Json t = to_json(*body.table);
          t["kind"] = body.require_group ? "group_table" : "monoid_table";
          return t;
        } else if constexpr (std::is_same_v<T, PolyQuotientProductDesc>) {
          Json f = Json::array();
          for (const auto& p : body.factors) f.push_back(to_json(p));
          return Json{{"kind", "poly_quotient_product"}, {"factors", f}};
        } else if constexpr (std::is_same_v<T, CompanionDesc>) {
          Json f = Json::array();
          for (const auto& p : body.polys) f.push_back(to_json(p));
          return Json{{"kind", "companion"}, {"polys", f}};
        } else {
          Json f = Json::array();
          for (const auto& sub : body.factors) f.push_back(to_json(sub));
          return Json{{"kind", "direct_product"}, {"factors", f}};
        }
      },
      d.body);
  if (!d.label.empty()) j["label"] = d.label;
  if (d.validation == Validation::SkipAssociativity) j["validation"] = "skip_associativity";
  return j;
}

Json to_json(const Instance& inst) {
  Json subspaces = Json::object();
  for (const auto& [name, s] : inst.subspaces) {
    Json basis = Json::array();
    for (const auto& b : s.basis()) basis.push_back(to_json(b));
    subspaces[name] = basis;
  }
  Json subsets = Json::object();
  for (const auto& [name, s] : inst.subsets) subsets[name] = to_json(s);
  Json j{{"schema_version", kSchemaVersion},
         {"family", inst.family},
         {"seed", inst.seed},
         {"algebra", to_json(inst.algebra_desc)},
         {"subspaces", subspaces}};
  if (!inst.subsets.empty()) j["subsets"] = subsets;
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  bad("rational must be a \"p/q\" string or an integer");
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) bad("vector must be an array");
  Vec v;
  for (const auto& c : j) v.push_back(rat_from_json(c));
  return v;
}

Poly poly_from_json(const Json& j) { return Poly(vec_from_json(j)); }

TablePtr table_from_json(const Json& j) {
  const std::size_t n = index_from_json(field(j, "size"), "size");
  const std::size_t unit = index_from_json(field(j, "unit"), "unit");
  const Json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != n) bad("table must have size rows");
  std::vector<std::uint32_t> flat;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) bad("table rows must have size entries");
    for (const auto& e : row) {
      const std::size_t v = index_from_json(e, "table entry");
      if (v >= n) throw Error(ErrorKind::BadTable, "table entry out of range");
      flat.push_back(static_cast<std::uint32_t>(v));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) bad("labels must be an array");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) bad("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return std::make_shared<const MulTable>(n, std::move(flat), unit, std::move(labels));
}

AlgebraDesc algebra_desc_from_json(const Json& j) {
  if (!j.is_object()) bad("algebra description must be an object");
  const Json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) bad("kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  AlgebraDesc d;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) bad("label must be a string");
    d.label = j.at("label").get<std::string>();
  }
  if (j.contains("validation")) {
    const Json& v = j.at("validation");
    if (v == "skip_associativity") {
      d.validation = Validation::SkipAssociativity;
    } else if (v != "full") {
      bad("validation must be \"full\" or \"skip_associativity\"");
    }
  }
  auto polys = [&](const char* key) {
    const Json& arr = field(j, key);
    if (!arr.is_array()) bad(std::string(key) + " must be an array");
    std::vector<Poly> out;
    for (const auto& p : arr) out.push_back(poly_from_json(p));
    return out;
  };
  if (kind == "structure_constants") {
    StructureConstantsDesc sc;
    sc.unit = vec_from_json(field(j, "unit"));
    const Json& table = field(j, "table");
    if (!table.is_array()) bad("table must be an array");
    for (const auto& row : table) {
      if (!row.is_array()) bad("table rows must be arrays");
      std::vector<Vec> r;
      for (const auto& v : row) r.push_back(vec_from_json(v));
      sc.table.push_back(std::move(r));
    }
    d.body = std::move(sc);
  } else if (kind == "group_table" || kind == "monoid_table") {
    d.body = TableDesc{table_from_json(j), kind == "group_table"};
  } else if (kind == "poly_quotient_product") {
    d.body = PolyQuotientProductDesc{polys("factors")};
  } else if (kind == "companion") {
    d.body = CompanionDesc{polys("polys")};
  } else if (kind == "direct_product") {
    const Json& arr = field(j, "factors");
    if (!arr.is_array()) bad("factors must be an array");
    DirectProductDesc dp;
    for (const auto& f : arr) dp.factors.push_back(algebra_desc_from_json(f));
    d.body = std::move(dp);
  } else {
    bad("unknown algebra kind '" + kind + "'");
  }
  if (d.label.empty()) d.label = kind;
  return d;
}

InstanceFile instance_from_json(const Json& j) {
  if (!j.is_object()) bad("instance must be an object");
  if (j.contains("schema_version") && j.at("schema_version") != kSchemaVersion) {
    bad("unsupported schema_version");
  }
  InstanceFile f;
  f.algebra_desc = algebra_desc_from_json(field(j, "algebra"));
  f.algebra = build_algebra(f.algebra_desc);
  if (j.contains("subspaces")) {
    const Json& subs = j.at("subspaces");
    if (!subs.is_object()) bad("subspaces must be an object");
    for (const auto& [name, basis] : subs.items()) {
      if (!basis.is_array() || basis.empty()) bad("subspace '" + name + "' needs a nonempty list of vectors");
      std::vector<Element> gens;
      for (const auto& v : basis) gens.push_back(make_element(f.algebra, vec_from_json(v)));
      f.subspaces.emplace_back(name, span_of(gens));
    }
  }
  if (j.contains("subsets")) {
    const Json& subs = j.at("subsets");
    if (!subs.is_object()) bad("subsets must be an object");
    const TablePtr& table = f.algebra->source_table();
    if (!table) bad("subsets need a table algebra");
    for (const auto& [name, labels] : subs.items()) {
      if (!labels.is_array()) bad("subset '" + name + "' must be a list of labels");
      std::vector<std::string> ls;
      for (const auto& l : labels) {
        if (l.is_string()) {
          ls.push_back(l.get<std::string>());
        } else if (l.is_number_integer()) {
          const std::size_t i = index_from_json(l, "element");
          if (i >= table->size()) bad("element index out of range in subset '" + name + "'");
          ls.push_back(table->label(i));
        } else {
          bad("subset elements must be labels");
        }
      }
      f.subsets.emplace_back(name, SubsetBits::from_labels(table, ls));
    }
  }
  if (j.contains("parameters")) {
    if (!j.at("parameters").is_object()) bad("parameters must be an object");
    f.parameters = j.at("parameters");
  }
  return f;
}

}  // namespace linkne
