#include "linkne/sumsets.hpp"

#include <utility>

#include "linkne/error.hpp"

namespace linkne {

std::pair<Subspace, Subspace> e_transform(const Subspace& a, const Subspace& b, const Element& e) {
  if (e.algebra != a.algebra() || a.algebra() != b.algebra()) {
    throw Error(ErrorKind::AlgebraMismatch, "e-transform across algebras");
  }
  if (!b.contains(e.coords)) throw Error(ErrorKind::NotInB, "e must lie in B");
  auto inv = a.algebra()->inverse(e.coords);
  if (!inv) throw Error(ErrorKind::NotInvertible, "e must be invertible");
  Subspace a_e = lattice_intersect(a, right_translate(b, *inv));
  Subspace b_e = lattice_sum(b, right_translate(a, e.coords));
  return {std::move(a_e), std::move(b_e)};
}

namespace {

struct CoreResult {
  Subspace algebra_part;
  Subspace module;
  std::size_t depth;
};

// 1 ∈ A ∩ B. Induction on dim A.
CoreResult diderrich_core(const Subspace& a, const Subspace& b, std::size_t depth, std::uint64_t seed) {
  const AlgebraPtr& alg = a.algebra();
  if (a.dim() == 1) return {Subspace::scalars(alg), b, depth};
  // An invertible basis of B spans k<B>, so either some basis vector e moves A
  // (A(e) != A) or A e ⊆ B for the whole basis, i.e. k<AB> ⊆ k<B>.
  for (const auto& e : invertible_basis(b, seed)) {
    auto [a_e, b_e] = e_transform(a, b, e);
    if (a_e.dim() < a.dim()) return diderrich_core(a_e, b_e, depth + 1, seed);
  }
  if (!is_within(product_span(a, b), b)) {
    throw Error(ErrorKind::BudgetExhausted, "no e-transform shrinks A but k<AB> is not inside k<B>");
  }
  return {subalgebra_generated(a), b, depth};
}

Element find_invertible(const Subspace& s, std::uint64_t seed, ErrorKind missing) {
  auto cert = contains_invertible(s, SymbolicLine{64, seed, 4096});
  if (cert.verdict != InvertibleVerdict::Yes) throw Error(missing, "subspace has no invertible element");
  return *cert.witness;
}

}  // namespace

DiderrichCertificate diderrich_certificate(const Subspace& a, const Subspace& b, const std::optional<Element>& anchor,
                                           std::uint64_t seed) {
  if (a.algebra() != b.algebra()) throw Error(ErrorKind::AlgebraMismatch, "A and B in different algebras");
  if (a.dim() == 0) throw Error(ErrorKind::NoInvertibleInA, "A is zero");
  if (b.dim() == 0) throw Error(ErrorKind::NoInvertibleInB, "B is zero");
  if (!is_commutative_set(a)) throw Error(ErrorKind::NotCommutative, "A is not a commutative set");
  const Algebra& alg = *a.algebra();

  Element x = anchor ? *anchor : find_invertible(a, seed, ErrorKind::NoInvertibleInA);
  if (!a.contains(x.coords)) throw Error(ErrorKind::NoInvertibleInA, "anchor is not in A");
  auto xinv = alg.inverse(x.coords);
  if (!xinv) throw Error(ErrorKind::NoInvertibleInA, "anchor is not invertible");
  Element y = find_invertible(b, seed, ErrorKind::NoInvertibleInB);
  auto yinv = alg.inverse(y.coords);

  const Subspace a1 = left_translate(*xinv, a);
  const Subspace b1 = right_translate(b, *yinv);
  CoreResult core = diderrich_core(a1, b1, 0, seed);

  Subspace module = right_translate(left_translate(x.coords, core.module), y.coords);
  return {std::move(x), std::move(y), std::move(core.algebra_part), std::move(module), core.depth};
}

CertificateCheck check_certificate(const Subspace& a, const Subspace& b, const DiderrichCertificate& cert) {
  CertificateCheck c;
  const Algebra& alg = *a.algebra();
  c.subalgebra = is_subalgebra(cert.algebra_part);
  c.inside_generated = is_within(cert.algebra_part, subalgebra_generated(a));
  c.inside_product = is_within(cert.module, product_span(a, b));
  c.contains_aB = is_within(left_translate(cert.a.coords, b), cert.module);
  c.module_closed = product_span(cert.algebra_part, cert.module) == cert.module;
  const Vec ab = alg.mul(cert.a.coords, cert.b.coords);
  if (cert.module.contains(ab) && alg.is_invertible(ab)) {
    c.has_invertible = true;
  } else if (cert.module.dim() > 0) {
    c.has_invertible = contains_invertible(cert.module, SymbolicLine{}).verdict == InvertibleVerdict::Yes;
  }
  c.dimension_bound = cert.module.dim() + cert.algebra_part.dim() >= a.dim() + b.dim();
  c.depth_bound = cert.recursion_depth < a.dim();
  return c;
}

OlsonReport olson_weak_certificate(const Subspace& v, const Subspace& w, std::uint64_t seed) {
  OlsonReport r{diderrich_certificate(v, w, std::nullopt, seed)};
  const auto& cert = r.certificate;
  const Algebra& alg = *v.algebra();
  r.dim_v = v.dim();
  r.dim_w = w.dim();
  r.dim_vw = product_span(v, w).dim();
  r.dim_s = cert.module.dim();
  r.dim_h = cert.algebra_part.dim();
  const Vec ab = alg.mul(cert.a.coords, cert.b.coords);
  r.s_meets_units = cert.module.contains(ab) && alg.is_invertible(ab);
  r.h_contains_scalars = cert.algebra_part.contains_unit() && is_subalgebra(cert.algebra_part);
  r.hs_equals_s = product_span(cert.algebra_part, cert.module) == cert.module;
  r.chain_holds = is_within(cert.module, product_span(v, w)) && r.dim_vw >= r.dim_s &&
                  r.dim_s + r.dim_h >= r.dim_v + r.dim_w;
  return r;
}

KneserReport kneser_check(const Subspace& a, const Subspace& b, std::size_t trials, std::uint64_t seed) {
  if (a.algebra() != b.algebra()) throw Error(ErrorKind::AlgebraMismatch, "A and B in different algebras");
  if (!is_commutative_set(a)) throw Error(ErrorKind::NotCommutative, "A is not a commutative set");
  if (a.dim() == 0 || contains_invertible(a, SymbolicLine{64, seed, 4096}).verdict != InvertibleVerdict::Yes) {
    throw Error(ErrorKind::NoInvertibleInA, "A has no invertible element");
  }
  if (b.dim() == 0 || contains_invertible(b, SymbolicLine{64, seed, 4096}).verdict != InvertibleVerdict::Yes) {
    throw Error(ErrorKind::NoInvertibleInB, "B has no invertible element");
  }
  KneserReport r;
  const Subspace p = product_span(a, b);
  const Subspace h = stabilizer(p, Side::Left);
  r.dim_a = a.dim();
  r.dim_b = b.dim();
  r.dim_product = p.dim();
  r.dim_stabilizer = h.dim();
  r.periodic = h.dim() > 1;
  r.bound1 = r.dim_product + r.dim_stabilizer >= r.dim_a + r.dim_b;
  r.bound2_applicable = a.algebra()->is_commutative();
  r.dim_ha = product_span(h, a).dim();
  r.dim_hb = product_span(h, b).dim();
  if (r.bound2_applicable) {
    r.bound2 = r.dim_product + r.dim_stabilizer >= r.dim_ha + r.dim_hb && r.dim_ha + r.dim_hb >= r.dim_a + r.dim_b;
  }
  r.generated_verdict = finite_subalgebras_verdict(subalgebra_generated(a), trials, seed);
  r.hypothesis_finite = r.generated_verdict.kind == VerdictKind::Finite;
  return r;
}

NfoldReport kneser_nfold_check(const std::vector<Subspace>& spaces, std::size_t trials, std::uint64_t seed) {
  if (spaces.size() < 2) throw Error(ErrorKind::EmptyGeneratingSet, "n-fold check needs at least two subspaces");
  const AlgebraPtr& alg = spaces.front().algebra();
  if (!alg->is_commutative()) throw Error(ErrorKind::NotCommutative, "n-fold bound needs a commutative algebra");
  for (const auto& s : spaces) {
    if (s.algebra() != alg) throw Error(ErrorKind::AlgebraMismatch, "subspaces of different algebras");
    if (s.dim() == 0 || contains_invertible(s, SymbolicLine{64, seed, 4096}).verdict != InvertibleVerdict::Yes) {
      throw Error(ErrorKind::NoInvertibleInA, "a factor has no invertible element");
    }
  }
  NfoldReport r;
  Subspace p = spaces.front();
  for (std::size_t i = 1; i < spaces.size(); ++i) p = product_span(p, spaces[i]);
  const Subspace h = stabilizer(p, Side::Left);
  r.dim_product = p.dim();
  r.dim_stabilizer = h.dim();
  const long n = static_cast<long>(spaces.size());
  long sum_h = 0, sum = 0;
  for (const auto& s : spaces) {
    r.dims.push_back(s.dim());
    r.dims_with_h.push_back(product_span(s, h).dim());
    sum += static_cast<long>(s.dim());
    sum_h += static_cast<long>(r.dims_with_h.back());
  }
  r.strong_rhs = sum_h - (n - 1) * static_cast<long>(h.dim());
  r.weak_rhs = sum - (n - 1) * static_cast<long>(h.dim());
  r.strong = static_cast<long>(r.dim_product) >= r.strong_rhs;
  r.weak = static_cast<long>(r.dim_product) >= r.weak_rhs;
  r.ambient_verdict = finite_subalgebras_verdict(alg, trials, seed);
  r.hypothesis_finite = r.ambient_verdict.kind == VerdictKind::Finite;
  return r;
}

void require_lambda(const Rat& lambda) {
  if (sgn(lambda) <= 0 || lambda > 1) {
    throw Error(ErrorKind::LambdaOutOfRange, "lambda must satisfy 0 < lambda <= 1, got " + to_string(lambda));
  }
}

Rat connectivity_value(const Subspace& w, const Subspace& v, const Rat& lambda) {
  require_lambda(lambda);
  const auto dwv = static_cast<long>(product_span(w, v).dim());
  return Rat(dwv) - lambda * static_cast<long>(w.dim());
}

AtomCheck check_atom(const ConnectivityReport& report) {
  AtomCheck c;
  if (!report.atom || !report.v) return c;
  const Subspace& atom = *report.atom;
  c.value_matches = connectivity_value(atom, *report.v, report.lambda) == report.kappa;
  c.contains_unit = atom.contains_unit();
  c.subalgebra = is_subalgebra(atom);
  c.contains_stabilizer = is_within(stabilizer(*report.v, Side::Left), atom);
  c.minimal = true;
  for (const auto& e : report.evaluated) {
    if (e.value < report.kappa) c.minimal = false;
  }
  return c;
}

HamidouneReport hamidoune_check(const Subspace& w, const Subspace& v, const Rat& lambda, const Subspace& atom) {
  require_lambda(lambda);
  if (w.dim() == 0 || contains_invertible(w, SymbolicLine{}).verdict != InvertibleVerdict::Yes) {
    throw Error(ErrorKind::NoInvertibleInA, "W has no invertible element");
  }
  HamidouneReport r;
  r.lambda = lambda;
  r.dim_wv = product_span(w, v).dim();
  r.dim_w = w.dim();
  r.dim_v = v.dim();
  r.dim_atom = atom.dim();
  r.rhs = lambda * static_cast<long>(r.dim_w) + Rat(static_cast<long>(r.dim_v)) -
          lambda * static_cast<long>(r.dim_atom);
  r.slack = Rat(static_cast<long>(r.dim_wv)) - r.rhs;
  r.holds = sgn(r.slack) >= 0;
  return r;
}

TaoReport tao_check(const Subspace& v, const Subspace& w, const Rat& epsilon, std::size_t cap) {
  if (sgn(epsilon) <= 0 || epsilon >= 2) {
    throw Error(ErrorKind::EpsilonOutOfRange, "epsilon must satisfy 0 < eps < 2, got " + to_string(epsilon));
  }
  require_split(v.algebra(), cap);
  TaoReport r;
  r.epsilon = epsilon;
  r.dim_v = v.dim();
  r.dim_w = w.dim();
  const Subspace wv = product_span(w, v);
  r.dim_wv = wv.dim();
  auto meets_units = [](const Subspace& s) {
    return s.dim() > 0 && contains_invertible(s, SymbolicLine{}).verdict == InvertibleVerdict::Yes;
  };
  if (!meets_units(v)) {
    r.hypothesis_failure = "V does not meet the units";
  } else if (!meets_units(w)) {
    r.hypothesis_failure = "W does not meet the units";
  } else if (r.dim_w < r.dim_v) {
    r.hypothesis_failure = "dim W < dim V";
  } else if (Rat(static_cast<long>(r.dim_wv)) > (2 - epsilon) * static_cast<long>(r.dim_v)) {
    r.hypothesis_failure = "dim WV > (2 - eps) dim V";
  } else {
    r.hypotheses_met = true;
  }
  const Rat factor = 2 / epsilon - 1;
  r.bound_h = factor * static_cast<long>(r.dim_v);
  if (!r.hypotheses_met) return r;

  const Rat lambda = 1 - epsilon / 2;
  ConnectivityReport conn = atom_exact_split(v, lambda, cap);
  const Subspace& h = *conn.atom;
  const Subspace hv = product_span(h, v);
  r.h = h;
  r.dim_h = h.dim();
  r.dim_hv = hv.dim();
  r.bound_hv = factor * static_cast<long>(r.dim_h);
  r.h_bound = Rat(static_cast<long>(r.dim_h)) <= r.bound_h;
  r.v_inside_hv = is_within(v, hv);
  r.hv_bound = Rat(static_cast<long>(r.dim_hv)) <= r.bound_hv;
  return r;
}

}  // namespace linkne
