// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Independent recomputations use the plain Gauss-Jordan and dense product
// oracles from the unit tests, never the production elimination.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../golden/golden.hpp"
#include "../unit/oracles.hpp"
#include "linkne/error.hpp"
#include "linkne/serialize.hpp"

using namespace linkne;

namespace {

// Pinned limits.
constexpr double kMonoidSeconds = 1.0;
constexpr double kClassifierSeconds = 5.0;
constexpr double kGroupSweepSeconds = 60.0;
constexpr double kCertificateSeconds = 120.0;
constexpr std::size_t kInstances = 500;
constexpr std::size_t kNfoldInstances = 100;
constexpr std::size_t kConnectivitySamples = 200;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Rat R(long p, long q = 1) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::size_t oracle_dim(const std::vector<Vec>& rows) { return oracle::rank(rows); }

// rows of X plus rows of Y have the rank of Y alone
bool oracle_within(const std::vector<Vec>& x, const std::vector<Vec>& y) {
  std::vector<Vec> both = y;
  both.insert(both.end(), x.begin(), x.end());
  return oracle::rank(both) == oracle::rank(y);
}

std::vector<Vec> oracle_products(const Algebra& alg, const std::vector<Vec>& x, const std::vector<Vec>& y) {
  std::vector<Vec> out;
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(oracle::mul(alg, a, b));
  return out;
}

// --- 1 ---------------------------------------------------------------------------

Outcome monoid_counterexample() {
  TablePtr m = fixture_table("kneser-m5");
  SubsetBits a = SubsetBits::from_labels(m, {"1", "a", "b"});
  SubsetBits a2 = minkowski(a, a);
  SubsetBits h = combinatorial_stabilizer(a2, Side::Left);
  const long rhs = 2 * static_cast<long>(a.count()) - static_cast<long>(h.count());
  MonoidHamidouneReport r = monoid_hamidoune_check(a, a, Rat(1), table_algebra(m));
  const bool ok = a2 == SubsetBits::from_labels(m, {"1", "a", "b", "a2"}) && a2.count() == 4 &&
                  h == SubsetBits::from_labels(m, {"1"}) && rhs == 5 && r.kneser_rhs == 5 && !r.kneser_holds &&
                  r.holds();
  std::ostringstream d;
  d << "|A^2| = " << a2.count() << " " << a2.to_string() << ", H = " << h.to_string() << ", 2|A| - |H| = " << rhs
    << ", Hamidoune bound holds: " << (r.holds() ? "yes" : "no");
  return {ok, d.str()};
}

// --- 2 ---------------------------------------------------------------------------

Outcome classifier_truth_table() {
  struct Row {
    const char* fixture;
    VerdictKind kind;
    InfiniteReason reason;
  };
  const Row rows[] = {
      {"QT2", VerdictKind::Finite, InfiniteReason::None},
      {"QT3", VerdictKind::Finite, InfiniteReason::None},
      {"QT4", VerdictKind::Infinite, InfiniteReason::BadProfileWithGenerator},
      {"QP2", VerdictKind::Infinite, InfiniteReason::BadProfileWithGenerator},
      {"QT2xQT2", VerdictKind::Infinite, InfiniteReason::BadProfileWithGenerator},
      {"Q1", VerdictKind::Finite, InfiniteReason::None},
      {"Q2", VerdictKind::Finite, InfiniteReason::None},
      {"Q3", VerdictKind::Finite, InfiniteReason::None},
      {"Q4", VerdictKind::Finite, InfiniteReason::None},
      {"Q5", VerdictKind::Finite, InfiniteReason::None},
      {"M2", VerdictKind::Infinite, InfiniteReason::NonCommutative},
      {"S3", VerdictKind::Infinite, InfiniteReason::NonCommutative},
  };
  std::size_t wrong = 0, checked = 0;
  std::string first;
  for (const Row& row : rows) {
    for (std::uint64_t seed : {0u, 1u, 2024u}) {
      ++checked;
      // same seed twice: identical JSON
      const Verdict v = finite_subalgebras_verdict(fixture_algebra(row.fixture), 64, seed);
      const Verdict again = finite_subalgebras_verdict(fixture_algebra(row.fixture), 64, seed);
      if (v.kind != row.kind || v.reason != row.reason || to_json(v).dump() != to_json(again).dump()) {
        ++wrong;
        if (first.empty()) first = std::string(", first wrong: ") + row.fixture;
      }
    }
  }
  return {wrong == 0, std::to_string(checked) + " verdicts over 3 seeds, " + std::to_string(wrong) + " wrong" + first};
}

// --- 3 ---------------------------------------------------------------------------

Outcome subalgebra_census() {
  const std::size_t bell[] = {1, 2, 5, 15, 52};
  std::ostringstream d;
  bool ok = true;
  for (std::size_t n = 1; n <= 5; ++n) {
    AlgebraPtr q = split_etale_algebra(n);
    const auto subs = enumerate_subalgebras_split(q);
    const std::size_t brute = oracle::partitions(n).size();
    ok = ok && subs.size() == bell[n - 1] && brute == bell[n - 1];
    for (const auto& s : subs) {
      const std::vector<Vec>& b = s.basis();
      ok = ok && oracle_within({q->unit()}, b) && oracle_within(oracle_products(*q, b, b), b);
    }
    d << (n > 1 ? ", " : "") << subs.size();
  }
  return {ok, "counts " + d.str() + " (brute force agrees), closure and unit checked"};
}

// --- 4 ---------------------------------------------------------------------------

Outcome group_sweep() {
  std::size_t pairs = 0, violations = 0, mismatches = 0;
  bool counts_ok = true;
  for (std::size_t n = 2; n <= 7; ++n) {
    GroupSweepReport r = group_kneser_sweep(cyclic_group(n), Exhaustive{});
    const std::size_t nonempty = (std::size_t{1} << n) - 1;
    counts_ok = counts_ok && r.pairs_checked == nonempty * nonempty;
    pairs += r.pairs_checked;
    violations += r.violations;
    mismatches += r.mismatches;
  }
  std::ostringstream d;
  d << pairs << " pairs over Z/2..Z/7, " << violations << " violations, " << mismatches << " algebra mismatches";
  return {counts_ok && violations == 0 && mismatches == 0, d.str()};
}

// --- 5, 6 --------------------------------------------------------------------------

// 500 commutative instances: Q^n (n 3..6), Q[Z/m] (m 3..8), products of
// squarefree quotients.
Instance acceptance_instance(std::size_t i) {
  GenSpec g;
  Rng rng(derive_seed(0xacce, i));
  switch (i % 3) {
    case 0: {
      g.family = "qn";
      g.n = 3 + rng.index(4);
      g.dims = {1 + rng.index(g.n), 1 + rng.index(g.n)};
      break;
    }
    case 1: {
      const std::size_t m = 3 + rng.index(6);
      g.family = "group";
      g.fixture = "Z" + std::to_string(m);
      g.dims = {1 + rng.index(m), 1 + rng.index(m)};
      break;
    }
    default: {
      g.family = "polyquot";
      g.n = 3;
      g.dims = {1 + rng.index(3), 1 + rng.index(3)};
    }
  }
  return generate_instance(g, derive_seed(7, i));
}

// The certificate invariants, re-derived with the oracles.
bool oracle_certificate_ok(const Subspace& a, const Subspace& b, const DiderrichCertificate& c) {
  const Algebra& alg = *a.algebra();
  const auto& h = c.algebra_part.basis();
  const auto& v = c.module.basis();
  const bool subalgebra = oracle_within({alg.unit()}, h) && oracle_within(oracle_products(alg, h, h), h);
  const bool inside_generated = oracle_within(h, subalgebra_generated(a).basis());
  const bool inside_product = oracle_within(v, oracle_products(alg, a.basis(), b.basis()));
  const bool contains_ab = oracle_within(oracle_products(alg, {c.a.coords}, b.basis()), v);
  const bool module = oracle_within(oracle_products(alg, h, v), v);
  const bool invertible = contains_invertible(c.module, SymbolicLine{}).verdict == InvertibleVerdict::Yes;
  const bool dims = oracle_dim(v) + oracle_dim(h) >= a.dim() + b.dim();
  return subalgebra && inside_generated && inside_product && contains_ab && module && invertible && dims &&
         oracle::invertible(alg, c.a.coords) && a.contains(c.a.coords);
}

Outcome certificate_suite(const std::vector<Instance>& instances) {
  std::size_t failures = 0, errors = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Subspace& a = instances[i].subspaces[0].second;
    const Subspace& b = instances[i].subspaces[1].second;
    try {
      DiderrichCertificate cert = diderrich_certificate(a, b, std::nullopt, i);
      if (!check_certificate(a, b, cert).all() || !oracle_certificate_ok(a, b, cert)) ++failures;
    } catch (const Error&) {
      ++errors;
    }
  }
  std::ostringstream d;
  d << instances.size() << " instances, " << failures << " failed invariants, " << errors << " errors";
  return {instances.size() == kInstances && failures == 0 && errors == 0, d.str()};
}

Outcome kneser_suite(const std::vector<Instance>& instances) {
  std::size_t finite = 0, violations = 0, exploratory = 0, errors = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Subspace& a = instances[i].subspaces[0].second;
    const Subspace& b = instances[i].subspaces[1].second;
    try {
      KneserReport r = kneser_check(a, b, 64, i);
      const std::size_t dim_ab = oracle_dim(oracle_products(*a.algebra(), a.basis(), b.basis()));
      const bool ok = r.holds() && dim_ab == r.dim_product;
      if (r.hypothesis_finite) {
        ++finite;
        if (!ok) ++violations;
      } else if (!ok) {
        ++exploratory;
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  std::size_t nfold_finite = 0, nfold_violations = 0;
  for (std::size_t i = 0; i < kNfoldInstances; ++i) {
    GenSpec g;
    Rng rng(derive_seed(0x3f01d, i));
    if (i % 2 == 0) {
      g.family = "qn";
      g.n = 3 + rng.index(3);
    } else {
      g.family = "group";
      g.fixture = "Z" + std::to_string(3 + rng.index(6));
      g.n = 3;
    }
    const std::size_t cap = g.family == "qn" ? g.n : std::stoul(g.fixture.substr(1));
    g.dims = {1 + rng.index(cap), 1 + rng.index(cap), 1 + rng.index(cap)};
    try {
      Instance inst = generate_instance(g, derive_seed(13, i));
      std::vector<Subspace> spaces;
      for (const auto& [name, s] : inst.subspaces) spaces.push_back(s);
      NfoldReport r = kneser_nfold_check(spaces, 64, i);
      if (r.hypothesis_finite) {
        ++nfold_finite;
        if (!r.holds()) ++nfold_violations;
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  std::ostringstream d;
  d << finite << "/" << instances.size() << " with finite A(A), " << violations << " violations ("
    << exploratory << " exploratory); n = 3: " << nfold_finite << " instances, " << nfold_violations
    << " violations; " << errors << " errors";
  return {violations == 0 && nfold_violations == 0 && errors == 0 && nfold_finite == kNfoldInstances &&
              finite > 0,
          d.str()};
}

// --- 7 ---------------------------------------------------------------------------

Outcome connectivity_suite() {
  const char* fixtures[] = {"Q4", "Q6", "Z5", "Z6", "QT3", "comp-sep", "QT2xQT2"};
  std::size_t translation_bad = 0, submodular_bad = 0;
  Rng rng(derive_seed(0xc0, 0));
  for (std::size_t k = 0; k < kConnectivitySamples; ++k) {
    AlgebraPtr alg = fixture_algebra(fixtures[k % 7]);
    const std::size_t n = alg->dim();
    Subspace v = random_unit_subspace(alg, 1 + rng.index(n), rng);
    Subspace w = random_subspace(alg, 1 + rng.index(n), rng);
    const Rat lambda = R(1 + static_cast<long>(rng.index(6)), 6);
    Element x = random_invertible(alg, rng);
    if (connectivity_value(left_translate(x.coords, w), v, lambda) != connectivity_value(w, v, lambda))
      ++translation_bad;

    Subspace w1 = random_subspace(alg, 1 + rng.index(n), rng);
    Subspace w2 = random_subspace(alg, 1 + rng.index(n), rng);
    // evaluate both sides straight from the definition with the oracle rank
    auto c = [&](const Subspace& s) -> Rat {
      if (s.dim() == 0) return Rat(0);
      return Rat(static_cast<long>(oracle_dim(oracle_products(*alg, s.basis(), v.basis())))) -
             lambda * Rat(static_cast<long>(s.dim()));
    };
    if (c(lattice_sum(w1, w2)) + c(lattice_intersect(w1, w2)) > c(w1) + c(w2)) ++submodular_bad;
  }

  std::size_t atom_bad = 0, bound_bad = 0;
  for (std::size_t k = 0; k < kConnectivitySamples; ++k) {
    const std::size_t n = 2 + k % 5;
    AlgebraPtr q = split_etale_algebra(n);
    Subspace v = random_unit_subspace(q, 1 + rng.index(n), rng);
    const Rat lambda = R(1 + static_cast<long>(rng.index(4)), 4);
    ConnectivityReport r = atom_exact_split(v, lambda);

    // Independent minimum over partitions: c(S) = rank(S V) - lambda |blocks|,
    // plus the least dimension reaching it.
    Rat best = -1;
    std::size_t best_dim = 0;
    for (const auto& blocks : oracle::partitions(n)) {
      std::vector<Vec> s;
      for (const auto& blk : blocks) {
        Vec ind(n);
        for (auto i : blk) ind[i] = 1;
        s.push_back(ind);
      }
      const Rat val = Rat(static_cast<long>(oracle_dim(oracle_products(*q, s, v.basis())))) -
                      lambda * Rat(static_cast<long>(blocks.size()));
      if (best < 0 || val < best || (val == best && blocks.size() < best_dim)) {
        best = val;
        best_dim = blocks.size();
      }
    }
    const bool atom_ok = check_atom(r).all() && r.kappa == best && r.atom->dim() == best_dim &&
                         is_within(stabilizer(v, Side::Left), *r.atom) && !r.tie_break_fired;
    if (!atom_ok) ++atom_bad;

    Subspace w = random_unit_subspace(q, 1 + rng.index(n), rng);
    HamidouneReport h = hamidoune_check(w, v, lambda, *r.atom);
    const Rat rhs = lambda * Rat(static_cast<long>(w.dim())) + Rat(static_cast<long>(v.dim())) -
                    lambda * Rat(static_cast<long>(r.atom->dim()));
    const Rat lhs(static_cast<long>(oracle_dim(oracle_products(*q, w.basis(), v.basis()))));
    if (!h.holds || lhs < rhs || h.rhs != rhs) ++bound_bad;
  }
  std::ostringstream d;
  d << "translation " << translation_bad << "/" << kConnectivitySamples << ", submodularity " << submodular_bad << "/"
    << kConnectivitySamples << ", atom invariants " << atom_bad << "/" << kConnectivitySamples
    << ", Hamidoune bound " << bound_bad << "/" << kConnectivitySamples << " failures";
  return {translation_bad == 0 && submodular_bad == 0 && atom_bad == 0 && bound_bad == 0, d.str()};
}

// --- 8 ---------------------------------------------------------------------------

Outcome tao_suite() {
  const Rat epsilons[] = {R(1, 2), R(1), R(3, 2)};
  std::size_t met[3] = {0, 0, 0}, violations = 0, total = 0;
  for (std::size_t i = 0; i < 120; ++i) {
    GenSpec g;
    g.family = i % 4 == 3 ? "qn" : "small";
    g.n = 3 + i % 4;
    g.dims = {1 + i % 3, 1 + i % 3};
    Instance inst = generate_instance(g, derive_seed(0x7a0, i));
    const Subspace& v = inst.subspaces[0].second;
    const Subspace& w = inst.subspaces[1].second;
    for (int e = 0; e < 3; ++e) {
      ++total;
      TaoReport t = tao_check(v, w, epsilons[e]);
      if (!t.hypotheses_met) continue;
      ++met[e];
      // conclusions recomputed from the returned H
      const Rat ratio = 2 / epsilons[e] - 1;
      const auto& hb = t.h->basis();
      const std::vector<Vec> hv = oracle_products(*v.algebra(), hb, v.basis());
      const bool ok = t.satisfied() && Rat(static_cast<long>(hb.size())) <= ratio * Rat(static_cast<long>(v.dim())) &&
                      oracle_within(v.basis(), hv) &&
                      Rat(static_cast<long>(oracle_dim(hv))) <= ratio * Rat(static_cast<long>(hb.size()));
      if (!ok) ++violations;
    }
  }
  std::ostringstream d;
  d << total << " checks; hypotheses met at eps 1/2: " << met[0] << ", 1: " << met[1] << ", 3/2: " << met[2]
    << "; " << violations << " violations";
  // eps = 3/2 needs dim WV <= dim V / 2, impossible when W meets the units.
  return {violations == 0 && met[0] > 0 && met[1] > 0, d.str()};
}

// --- 9 ---------------------------------------------------------------------------

Outcome determinism() {
  const golden::Summary s = golden::check_all(LINKNE_CLI, GOLDEN_DIR);
  std::ostringstream d;
  d << s.cases << " golden cases x " << golden::kRepeats << " runs x threads {1, 8}: " << s.failures.size()
    << " mismatches";
  if (!s.failures.empty()) d << " (first: " << s.failures.front() << ")";
  return {s.ok(), d.str()};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  std::vector<Instance> instances;
  int failed = 0;

  auto report = [&](int id, const char* name, double limit, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0 && secs >= limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << "  ["
              << std::fixed << std::setprecision(2) << secs << " s";
    if (limit > 0) std::cout << " < " << std::setprecision(0) << limit << " s";
    std::cout << "]\n" << std::flush;
  };

  report(1, "monoid counterexample", kMonoidSeconds, monoid_counterexample);
  report(2, "classifier truth table", kClassifierSeconds, classifier_truth_table);
  report(3, "subalgebra census", 0, subalgebra_census);
  report(4, "group Kneser recovery", kGroupSweepSeconds, group_sweep);
  report(5, "Diderrich certificates", kCertificateSeconds, [&] {
    for (std::size_t i = 0; i < kInstances; ++i) instances.push_back(acceptance_instance(i));
    return certificate_suite(instances);
  });
  report(6, "Kneser-Diderrich bounds", 0, [&] { return kneser_suite(instances); });
  report(7, "connectivity", 0, connectivity_suite);
  report(8, "small doubling", 0, tao_suite);
  report(9, "determinism", 0, determinism);
  return failed == 0 ? 0 : 1;
}
