#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "linkne/error.hpp"
#include "linkne/parallel.hpp"
#include "linkne/serialize.hpp"

using namespace linkne;

namespace {

enum Exit { kPass = 0, kViolation = 1, kInputError = 2, kBudget = 3 };

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t trials = 64;
  std::string lambda = "1";
  std::string epsilon = "1";
  std::string fixture;
  std::string in;
  bool exhaustive = false;
  std::size_t cap = kDefaultSplitCap;
  int threads = 0;
  std::string a, b, v, w;
  std::vector<std::string> spaces;
  std::vector<std::string> candidates;
  std::string side = "left";
  std::size_t count = 0;
  std::string family;
  std::size_t n = 4;
  std::string dims;

  // Which of the file-overridable values were given on the command line.
  bool seed_given = false, trials_given = false, lambda_given = false, epsilon_given = false;
};

struct Outcome {
  Json result;
  bool violation = false;
};

// --- input resolution ----------------------------------------------------------------

struct Context {
  AlgebraDesc desc;
  AlgebraPtr algebra;
  std::optional<InstanceFile> instance;
  std::string source;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

void apply_parameters(Options& o, const Json& p) {
  try {
    if (!o.seed_given && p.contains("seed")) o.seed = p.at("seed").get<std::uint64_t>();
    if (!o.trials_given && p.contains("trials")) o.trials = p.at("trials").get<std::size_t>();
    if (!o.lambda_given && p.contains("lambda")) o.lambda = to_string(rat_from_json(p.at("lambda")));
    if (!o.epsilon_given && p.contains("epsilon")) o.epsilon = to_string(rat_from_json(p.at("epsilon")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad parameters: ") + e.what());
  }
}

Context load(Options& o) {
  Context c;
  if (!o.in.empty() && !o.fixture.empty()) throw Error(ErrorKind::ParseError, "give --fixture or --in, not both");
  if (!o.in.empty()) {
    Json j = read_json_file(o.in);
    c.instance = instance_from_json(j);
    c.desc = c.instance->algebra_desc;
    c.algebra = c.instance->algebra;
    c.source = o.in;
    apply_parameters(o, c.instance->parameters);
  } else if (!o.fixture.empty()) {
    c.desc = fixture_algebra_desc(o.fixture);
    c.algebra = build_algebra(c.desc);
    c.source = o.fixture;
  } else {
    throw Error(ErrorKind::ParseError, "an algebra is required: --fixture NAME or --in FILE");
  }
  return c;
}

const TablePtr& require_table(const Context& c) {
  if (!c.algebra->source_table()) throw Error(ErrorKind::ParseError, "this command needs a group or monoid table");
  return c.algebra->source_table();
}

std::optional<SubsetBits> labels_subset(const Context& c, const std::string& tok, bool forced) {
  const TablePtr& t = c.algebra->source_table();
  if (!t) {
    if (forced) throw Error(ErrorKind::ParseError, "subsets need a table algebra");
    return std::nullopt;
  }
  std::vector<std::string> labels;
  for (const auto& part : split(tok, ',')) labels.push_back(trim(part));
  if (!forced) {
    for (const auto& l : labels) {
      if (!t->index_of(l)) return std::nullopt;
    }
  }
  return SubsetBits::from_labels(t, labels);
}

SubsetBits resolve_subset(const Context& c, const std::string& tok, const std::string& flag) {
  if (tok.empty()) throw Error(ErrorKind::ParseError, "missing " + flag);
  require_table(c);
  if (c.instance) {
    for (const auto& [name, s] : c.instance->subsets) {
      if (name == tok) return s;
    }
  }
  const std::string body = tok.rfind("set:", 0) == 0 ? tok.substr(4) : tok;
  return *labels_subset(c, body, true);
}

Subspace resolve_space(const Context& c, const std::string& tok, const std::string& flag) {
  if (tok.empty()) throw Error(ErrorKind::ParseError, "missing " + flag);
  const AlgebraPtr& alg = c.algebra;
  if (tok == "@unit") return Subspace::scalars(alg);
  if (tok == "@whole") return Subspace::whole(alg);
  if (c.instance) {
    for (const auto& [name, s] : c.instance->subspaces) {
      if (name == tok) return s;
    }
    for (const auto& [name, s] : c.instance->subsets) {
      if (name == tok) return lift_subset(s, alg);
    }
  }
  if (tok.rfind("set:", 0) == 0) return lift_subset(*labels_subset(c, tok.substr(4), true), alg);
  std::string body = tok.rfind("span:", 0) == 0 ? tok.substr(5) : tok;
  if (body.size() == tok.size() && tok.find(';') == std::string::npos) {
    if (auto s = labels_subset(c, tok, false)) return lift_subset(*s, alg);
  }
  std::vector<Element> gens;
  for (const auto& vec_tok : split(body, ';')) {
    Vec v;
    for (const auto& entry : split(vec_tok, ',')) v.push_back(parse_rat(trim(entry)));
    gens.push_back(make_element(alg, std::move(v)));
  }
  return span_of(gens);
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw Error(ErrorKind::ParseError, "--side must be left or right");
}

std::vector<std::size_t> parse_dims(const std::string& s, std::vector<std::size_t> fallback) {
  if (s.empty()) return fallback;
  std::vector<std::size_t> out;
  for (const auto& p : split(s, ',')) {
    const std::string t = trim(p);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 4) {
      throw Error(ErrorKind::ParseError, "--dims must be a comma list of positive integers");
    }
    out.push_back(std::stoul(t));
  }
  return out;
}

std::vector<NamedSubalgebra> resolve_candidates(const Context& c, const Options& o) {
  std::vector<NamedSubalgebra> out;
  for (const auto& tok : o.candidates) {
    Subspace s = subalgebra_generated(resolve_space(c, tok, "--candidate"));
    out.push_back({tok, std::move(s)});
  }
  if (!out.empty()) out.insert(out.begin(), NamedSubalgebra{"Q", Subspace::scalars(c.algebra)});
  return out;
}

Json algebra_summary(const Context& c) {
  const Algebra& a = *c.algebra;
  return Json{{"label", a.label()},
              {"dim", a.dim()},
              {"commutative", a.is_commutative()},
              {"split_etale", a.is_split_etale()},
              {"unit", to_json(a.unit())}};
}

// --- instance sweeps --------------------------------------------------------------------

GenSpec sweep_spec(const Options& o, const std::string& default_family, std::vector<std::size_t> default_dims) {
  GenSpec g;
  g.family = o.family.empty() ? default_family : o.family;
  g.n = o.n;
  g.dims = parse_dims(o.dims, std::move(default_dims));
  g.fixture = o.fixture;
  return g;
}

struct SweepItem {
  Json summary;
  bool violation = false;
  bool exploratory = false;  // failure outside the hypotheses; reported only
  std::string error;
};

Outcome run_sweep(const Options& o, const GenSpec& spec, const std::function<SweepItem(const Instance&)>& check) {
  std::vector<SweepItem> items(o.count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(o.count); ++i) {
    SweepItem& item = items[static_cast<std::size_t>(i)];
    try {
      item = check(generate_instance(spec, derive_seed(o.seed, static_cast<std::uint64_t>(i))));
    } catch (const Error& e) {
      item.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
  }
  Json failures = Json::array();
  Json errors = Json::array();
  std::size_t violations = 0, exploratory = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (!it.error.empty()) {
      errors.push_back(Json{{"instance", i}, {"error", it.error}});
      continue;
    }
    if (it.violation) ++violations;
    if (it.exploratory) ++exploratory;
    if ((it.violation || it.exploratory) && failures.size() < 20) {
      Json f = it.summary;
      f["instance"] = i;
      f["seed"] = derive_seed(o.seed, i);
      f["bucket"] = it.violation ? "violation" : "exploratory";
      failures.push_back(f);
    }
  }
  Outcome out;
  out.result = Json{{"family", spec.family},
                    {"instances", o.count},
                    {"violations", violations},
                    {"exploratory_failures", exploratory},
                    {"errors", errors.size()},
                    {"failures", failures},
                    {"error_list", errors}};
  out.violation = violations > 0;
  return out;
}

// --- commands ---------------------------------------------------------------------------

Outcome cmd_validate(Options& o) {
  Context c = load(o);
  Json r = algebra_summary(c);
  r["valid"] = true;
  if (c.instance) {
    r["subspaces"] = c.instance->subspaces.size();
    r["subsets"] = c.instance->subsets.size();
  }
  return {r};
}

Outcome cmd_info(Options& o) {
  Context c = load(o);
  Json r = algebra_summary(c);
  r["description"] = to_json(c.desc);
  if (const auto& t = c.algebra->source_table()) {
    r["group"] = t->is_group();
    r["units"] = to_json(units(t));
  }
  if (c.algebra->is_commutative()) {
    r["classification"] = to_json(finite_subalgebras_verdict(c.algebra, o.trials, o.seed));
  }
  return {r};
}

Outcome cmd_span(Options& o) {
  Context c = load(o);
  const Subspace a = resolve_space(c, o.a, "--A");
  return {Json{{"span", to_json(a)},
               {"meets_units", to_json(contains_invertible(a, SymbolicLine{o.trials, o.seed, 4096}))},
               {"subalgebra", is_subalgebra(a)},
               {"commutative_set", is_commutative_set(a)}}};
}

Outcome cmd_product(Options& o) {
  Context c = load(o);
  const Subspace a = resolve_space(c, o.a, "--A");
  const Subspace b = resolve_space(c, o.b, "--B");
  Json r{{"dim_a", a.dim()}, {"dim_b", b.dim()}, {"product", to_json(product_span(a, b))}};
  if (c.algebra->source_table() && !o.a.empty()) {
    // Minkowski product of the underlying subsets, when both are subsets.
    try {
      SubsetBits sa = resolve_subset(c, o.a, "--A");
      SubsetBits sb = resolve_subset(c, o.b, "--B");
      SubsetBits ab = minkowski(sa, sb);
      r["minkowski"] = to_json(ab);
      r["size_minkowski"] = ab.count();
    } catch (const Error&) {
    }
  }
  return {r};
}

Outcome cmd_stabilizer(Options& o) {
  Context c = load(o);
  const Side side = parse_side(o.side);
  const Subspace a = resolve_space(c, o.a, "--A");
  const Subspace h = stabilizer(a, side);
  Json r{{"side", o.side}, {"stabilizer", to_json(h)}, {"periodic", h.dim() > 1}};
  Outcome out;
  if (c.algebra->source_table() && side == Side::Left) {
    try {
      const SubsetBits sa = resolve_subset(c, o.a, "--A");
      const StabCorrespondence sc = stab_correspondence_check(sa, c.algebra);
      r["combinatorial"] = to_json(combinatorial_stabilizer(sa, Side::Left));
      r["correspondence"] = to_json(sc);
      out.violation = !sc.holds();
    } catch (const Error&) {
    }
  }
  out.result = r;
  return out;
}

Outcome cmd_annihilator(Options& o) {
  Context c = load(o);
  const Subspace a = resolve_space(c, o.a, "--A");
  return {Json{{"side", o.side}, {"annihilator", to_json(annihilator(a, parse_side(o.side)))}}};
}

Outcome cmd_classify(Options& o) {
  Context c = load(o);
  if (!o.a.empty()) {
    const Subspace gen = subalgebra_generated(resolve_space(c, o.a, "--A"));
    Json r = to_json(finite_subalgebras_verdict(gen, o.trials, o.seed));
    r["subalgebra"] = to_json(gen);
    return {r};
  }
  return {to_json(finite_subalgebras_verdict(c.algebra, o.trials, o.seed))};
}

SweepItem certificate_item(const Instance& inst, std::uint64_t seed) {
  const Subspace& a = inst.subspaces.at(0).second;
  const Subspace& b = inst.subspaces.at(1).second;
  const DiderrichCertificate cert = diderrich_certificate(a, b, std::nullopt, seed);
  const CertificateCheck chk = check_certificate(a, b, cert);
  SweepItem it;
  it.violation = !chk.all();
  it.summary = Json{{"check", to_json(chk)}, {"certificate", to_json(cert)}};
  return it;
}

Outcome cmd_certificate(Options& o) {
  if (o.count > 0) {
    return run_sweep(o, sweep_spec(o, "qn", {2, 2}),
                     [&](const Instance& inst) { return certificate_item(inst, o.seed); });
  }
  Context c = load(o);
  const Subspace a = resolve_space(c, o.a, "--A");
  const Subspace b = resolve_space(c, o.b, "--B");
  const DiderrichCertificate cert = diderrich_certificate(a, b, std::nullopt, o.seed);
  const CertificateCheck chk = check_certificate(a, b, cert);
  const OlsonReport olson = olson_weak_certificate(a, b, o.seed);
  Outcome out;
  out.result = Json{{"certificate", to_json(cert)}, {"check", to_json(chk)}, {"olson", to_json(olson)}};
  out.violation = !chk.all() || !olson.holds();
  return out;
}

SweepItem kneser_item(const KneserReport& r) {
  SweepItem it;
  it.summary = to_json(r);
  if (!r.holds()) (r.hypothesis_finite ? it.violation : it.exploratory) = true;
  return it;
}

Outcome cmd_kneser(Options& o) {
  if (o.count > 0) {
    return run_sweep(o, sweep_spec(o, "qn", {2, 2}), [&](const Instance& inst) {
      return kneser_item(kneser_check(inst.subspaces.at(0).second, inst.subspaces.at(1).second, o.trials, o.seed));
    });
  }
  Context c = load(o);
  const KneserReport r =
      kneser_check(resolve_space(c, o.a, "--A"), resolve_space(c, o.b, "--B"), o.trials, o.seed);
  SweepItem it = kneser_item(r);
  Json j = it.summary;
  j["bucket"] = r.hypothesis_finite ? "asserted" : "exploratory";
  return {j, it.violation};
}

Outcome cmd_nfold(Options& o) {
  auto item = [&](const std::vector<Subspace>& spaces) {
    const NfoldReport r = kneser_nfold_check(spaces, o.trials, o.seed);
    SweepItem it;
    it.summary = to_json(r);
    if (!r.holds()) (r.hypothesis_finite ? it.violation : it.exploratory) = true;
    return it;
  };
  if (o.count > 0) {
    return run_sweep(o, sweep_spec(o, "qn", {2, 2, 2}), [&](const Instance& inst) {
      std::vector<Subspace> spaces;
      for (const auto& [name, s] : inst.subspaces) spaces.push_back(s);
      return item(spaces);
    });
  }
  Context c = load(o);
  std::vector<std::string> toks = o.spaces;
  if (toks.empty()) {
    if (!o.a.empty()) toks.push_back(o.a);
    if (!o.b.empty()) toks.push_back(o.b);
  }
  if (toks.size() < 2) throw Error(ErrorKind::ParseError, "nfold needs at least two subspaces (--S, repeated)");
  std::vector<Subspace> spaces;
  for (const auto& t : toks) spaces.push_back(resolve_space(c, t, "--S"));
  SweepItem it = item(spaces);
  return {it.summary, it.violation};
}

Outcome cmd_atom(Options& o) {
  Context c = load(o);
  const Subspace v = resolve_space(c, o.v.empty() ? o.a : o.v, "--V");
  const Rat lambda = parse_rat(o.lambda);
  const auto candidates = resolve_candidates(c, o);
  const ConnectivityReport r =
      candidates.empty() ? atom_exact_split(v, lambda, o.cap) : atom_over_candidates(v, lambda, candidates);
  const AtomCheck chk = check_atom(r);
  Outcome out;
  out.result = Json{{"report", to_json(r)}, {"check", to_json(chk)}};
  out.violation = !chk.all();
  return out;
}

Outcome cmd_hamidoune(Options& o) {
  Context c = load(o);
  const Subspace v = resolve_space(c, o.v, "--V");
  const Subspace w = resolve_space(c, o.w, "--W");
  const Rat lambda = parse_rat(o.lambda);
  const auto candidates = resolve_candidates(c, o);
  const ConnectivityReport conn =
      candidates.empty() ? atom_exact_split(v, lambda, o.cap) : atom_over_candidates(v, lambda, candidates);
  const HamidouneReport h = hamidoune_check(w, v, lambda, *conn.atom);
  const AtomCheck chk = check_atom(conn);
  Outcome out;
  out.result = Json{{"atom_id", conn.atom_id},
                    {"atom", to_json(*conn.atom)},
                    {"kappa", to_json(conn.kappa)},
                    {"atom_exact", conn.exact},
                    {"atom_check", to_json(chk)},
                    {"bound", to_json(h)}};
  out.violation = !h.holds || !chk.all();
  return out;
}

SweepItem tao_item(const TaoReport& r) {
  SweepItem it;
  it.summary = to_json(r);
  it.violation = !r.satisfied();
  return it;
}

Outcome cmd_tao(Options& o) {
  const Rat eps = parse_rat(o.epsilon);
  if (o.count > 0) {
    return run_sweep(o, sweep_spec(o, "small", {2, 2}), [&](const Instance& inst) {
      return tao_item(tao_check(inst.subspaces.at(0).second, inst.subspaces.at(1).second, eps, o.cap));
    });
  }
  Context c = load(o);
  const TaoReport r = tao_check(resolve_space(c, o.v, "--V"), resolve_space(c, o.w.empty() ? o.v : o.w, "--W"), eps,
                                o.cap);
  SweepItem it = tao_item(r);
  return {it.summary, it.violation};
}

Outcome cmd_group_sweep(Options& o) {
  Context c = load(o);
  const TablePtr& t = require_table(c);
  SweepMode mode = Exhaustive{};
  if (!o.exhaustive) {
    if (o.count == 0) throw Error(ErrorKind::ParseError, "give --exhaustive or --count N");
    mode = RandomPairs{o.seed, o.count};
  }
  const GroupSweepReport r = group_kneser_sweep(t, mode);
  Json j = to_json(r);
  j["mode"] = o.exhaustive ? "exhaustive" : "random";
  return {j, !r.ok()};
}

Outcome cmd_monoid_check(Options& o) {
  Context c = load(o);
  require_table(c);
  const SubsetBits a = resolve_subset(c, o.a, "--A");
  const SubsetBits b = resolve_subset(c, o.b, "--B");
  const Rat lambda = parse_rat(o.lambda);
  std::vector<NamedSubalgebra> candidates;
  for (const auto& tok : o.candidates) {
    candidates.push_back({tok, subalgebra_generated(resolve_space(c, tok, "--candidate"))});
  }
  if (!candidates.empty()) candidates.insert(candidates.begin(), NamedSubalgebra{"Q", Subspace::scalars(c.algebra)});
  const MonoidHamidouneReport r = monoid_hamidoune_check(a, b, lambda, c.algebra, candidates);
  const StabCorrespondence sc = stab_correspondence_check(a, c.algebra);
  Json j = to_json(r);
  j["units"] = to_json(units(a.table()));
  j["stabilizer_correspondence"] = to_json(sc);
  j["field"] = "Q";
  return {j, !r.holds() || !sc.holds()};
}

Outcome cmd_gen(Options& o) {
  GenSpec g = sweep_spec(o, "qn", {2, 2});
  const Instance inst = generate_instance(g, o.seed);
  return {to_json(inst)};
}

Outcome cmd_fixtures(Options& o) {
  if (!o.fixture.empty()) {
    Json j{{"name", o.fixture}, {"algebra", to_json(fixture_algebra_desc(o.fixture))}};
    return {j};
  }
  Json list = Json::array();
  for (const auto& f : fixture_catalog()) {
    list.push_back(Json{{"name", f.name},
                        {"kind", f.kind == FixtureKind::Table ? "table" : "algebra"},
                        {"description", f.description}});
  }
  return {Json{{"fixtures", list}}};
}

// --- output ---------------------------------------------------------------------------------

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_flat(const Json& j) {
  if (is_scalar(j)) return true;
  if (j.is_object()) return j.empty();
  for (const auto& e : j) {
    if (!is_scalar(e) && !(e.is_array() && std::all_of(e.begin(), e.end(), is_scalar))) return false;
  }
  return true;
}

std::string flat_text(const Json& j) {
  if (is_scalar(j)) return scalar_text(j);
  if (j.is_object()) return "{}";
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += flat_text(j[i]);
  }
  return out + "]";
}

void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        os << pad << std::left << std::setw(static_cast<int>(width)) << k << "  " << flat_text(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (is_flat(j[i])) {
        os << pad << "- " << flat_text(j[i]) << "\n";
      } else {
        os << pad << "[" << i << "]\n";
        render(os, j[i], indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear Kneser-type sumset checks over finite-dimensional rational algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_flag("--json", o.json, "JSON output");
  auto* seed = app.add_option("--seed", o.seed, "root seed for all randomness");
  auto* trials = app.add_option("--trials", o.trials, "sampling budget");
  auto* lambda = app.add_option("--lambda", o.lambda, "connectivity parameter, p/q in (0,1]");
  auto* epsilon = app.add_option("--epsilon", o.epsilon, "small doubling parameter, p/q in (0,2)");
  app.add_option("--fixture", o.fixture, "built-in algebra or table");
  app.add_option("--in", o.in, "instance file");
  app.add_flag("--exhaustive", o.exhaustive, "sweep every subset pair");
  app.add_option("--cap", o.cap, "largest n for Q^n partition enumeration");
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--A", o.a, "subspace or subset");
  app.add_option("--B", o.b, "subspace or subset");
  app.add_option("--V", o.v, "subspace");
  app.add_option("--W", o.w, "subspace");
  app.add_option("--S", o.spaces, "subspace, repeatable (nfold)");
  app.add_option("--candidate", o.candidates, "candidate atom generators, repeatable");
  app.add_option("--side", o.side, "left or right");
  app.add_option("--count", o.count, "random pairs or generated instances");
  app.add_option("--family", o.family, "generator family: qn, group, polyquot, fixture, small");
  app.add_option("--n", o.n, "generator size parameter");
  app.add_option("--dims", o.dims, "generator dimensions, comma separated");

  const std::vector<std::pair<std::string, std::function<Outcome(Options&)>>> commands = {
      {"validate", cmd_validate},       {"info", cmd_info},
      {"span", cmd_span},               {"product", cmd_product},
      {"stabilizer", cmd_stabilizer},   {"annihilator", cmd_annihilator},
      {"classify", cmd_classify},       {"certificate", cmd_certificate},
      {"kneser", cmd_kneser},           {"nfold", cmd_nfold},
      {"atom", cmd_atom},               {"hamidoune", cmd_hamidoune},
      {"tao", cmd_tao},                 {"group-sweep", cmd_group_sweep},
      {"monoid-check", cmd_monoid_check}, {"gen", cmd_gen},
      {"fixtures", cmd_fixtures}};
  const std::map<std::string, std::string> help = {
      {"validate", "check an algebra or instance file"},
      {"info", "dimension, unit, commutativity, split flag"},
      {"span", "canonical basis of --A"},
      {"product", "k<AB> with dimensions"},
      {"stabilizer", "stabilizer of --A (--side left|right)"},
      {"annihilator", "annihilator of --A (--side left|right)"},
      {"classify", "finitely-many-subalgebras verdict"},
      {"certificate", "Diderrich certificate for (A, B) and its checks"},
      {"kneser", "two-set Kneser bounds for (A, B)"},
      {"nfold", "n-fold Kneser bounds for repeated --S"},
      {"atom", "connectivity and atom of --V at --lambda"},
      {"hamidoune", "Hamidoune bound for (--W, --V) at --lambda"},
      {"tao", "small doubling check for (--V, --W) at --epsilon"},
      {"group-sweep", "Kneser over subset pairs of a group table"},
      {"monoid-check", "monoid Hamidoune and Kneser-style bounds for subsets A, B"},
      {"gen", "generate a seeded random instance"},
      {"fixtures", "list built-in algebras and tables"}};
  for (const auto& [name, fn] : commands) app.add_subcommand(name, help.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  o.seed_given = seed->count() > 0;
  o.trials_given = trials->count() > 0;
  o.lambda_given = lambda->count() > 0;
  o.epsilon_given = epsilon->count() > 0;
  set_thread_count(o.threads);

  std::string command;
  std::function<Outcome(Options&)> fn;
  for (const auto& [name, f] : commands) {
    if (app.got_subcommand(name)) {
      command = name;
      fn = f;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  int code = kPass;
  Json error = nullptr;
  try {
    out = fn(o);
    code = out.violation ? kViolation : kPass;
  } catch (const Error& e) {
    code = is_budget_error(e.kind()) ? kBudget : kInputError;
    // what() starts with "<kind>: "; keep only the detail
    const std::string kind(to_string(e.kind()));
    std::string message = e.what();
    if (message.rfind(kind + ": ", 0) == 0) message.erase(0, kind.size() + 2);
    error = Json{{"kind", kind}, {"message", message}};
  } catch (const std::exception& e) {
    code = kInputError;
    error = Json{{"kind", "ParseError"}, {"message", e.what()}};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json report{{"schema_version", kSchemaVersion}, {"command", command}, {"seed", o.seed}};
  if (!error.is_null()) {
    report["error"] = error;
  } else {
    report["result"] = out.result;
  }
  report["exit_code"] = code;

  if (o.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    if (!error.is_null()) {
      std::cerr << "error: " << error["kind"].get<std::string>() << ": " << error["message"].get<std::string>()
                << "\n";
    } else {
      render(std::cout, report, 0);
      std::cout << "wall_time  " << std::fixed << std::setprecision(3) << seconds << " s\n";
    }
  }
  return code;
}
