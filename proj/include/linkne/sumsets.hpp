#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkne/classify.hpp"
#include "linkne/subspace.hpp"

namespace linkne {

// --- Diderrich e-transform ----------------------------------------------------

/// (A(e), B(e)) = (A ∩ B e^{-1}, B + A e). Throws NotInvertible or NotInB.
std::pair<Subspace, Subspace> e_transform(const Subspace& a, const Subspace& b, const Element& e);

/// A subalgebra `algebra_part` and a module `module` over it, built by the
/// e-transform recursion for the pair (A, B).
struct DiderrichCertificate {
  Element a;  // invertible element of A the certificate is anchored at
  Element b;  // invertible element of B used to normalize
  Subspace algebra_part;
  Subspace module;
  std::size_t recursion_depth = 0;
};

struct CertificateCheck {
  bool subalgebra = false;          // unit in algebra_part, closed under product
  bool inside_generated = false;    // algebra_part ⊆ 𝔸(A)
  bool inside_product = false;      // module ⊆ k<AB>
  bool contains_aB = false;         // k<aB> ⊆ module
  bool module_closed = false;       // algebra_part * module = module
  bool has_invertible = false;      // module meets the units
  bool dimension_bound = false;     // dim module + dim algebra_part >= dim A + dim B
  bool depth_bound = false;         // recursion_depth < dim A

  bool all() const {
    return subalgebra && inside_generated && inside_product && contains_aB && module_closed && has_invertible &&
           dimension_bound && depth_bound;
  }
};

/// Throws NotCommutative, NoInvertibleInA, NoInvertibleInB, BudgetExhausted.
/// When `anchor` is given it must be an invertible element of A.
DiderrichCertificate diderrich_certificate(const Subspace& a, const Subspace& b,
                                           const std::optional<Element>& anchor = std::nullopt,
                                           std::uint64_t seed = 0);

CertificateCheck check_certificate(const Subspace& a, const Subspace& b, const DiderrichCertificate& cert);

/// Weak Olson form: S = module, H = algebra_part.
struct OlsonReport {
  DiderrichCertificate certificate;
  std::size_t dim_v = 0, dim_w = 0, dim_vw = 0, dim_s = 0, dim_h = 0;
  bool s_meets_units = false;
  bool h_contains_scalars = false;
  bool hs_equals_s = false;
  bool chain_holds = false;  // dim VW >= dim S >= dim V + dim W - dim H

  bool holds() const { return s_meets_units && h_contains_scalars && hs_equals_s && chain_holds; }
};

OlsonReport olson_weak_certificate(const Subspace& v, const Subspace& w, std::uint64_t seed = 0);

// --- Kneser-Diderrich bounds ---------------------------------------------------

struct KneserReport {
  std::size_t dim_a = 0, dim_b = 0, dim_product = 0, dim_stabilizer = 0;
  std::size_t dim_ha = 0, dim_hb = 0;
  bool periodic = false;           // stabilizer strictly larger than Q
  bool bound1 = false;             // dim AB >= dim A + dim B - dim H
  bool bound2_applicable = false;  // ambient algebra commutative
  bool bound2 = false;             // dim AB >= dim HA + dim HB - dim H
  Verdict generated_verdict;       // verdict for 𝔸(A)
  bool hypothesis_finite = false;  // generated_verdict is Finite

  bool holds() const { return bound1 && (!bound2_applicable || bound2); }
};

/// Throws NotCommutative, NoInvertibleInA, NoInvertibleInB.
KneserReport kneser_check(const Subspace& a, const Subspace& b, std::size_t trials = 64, std::uint64_t seed = 0);

struct NfoldReport {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> dims_with_h;  // dim k<A_i H>
  std::size_t dim_product = 0, dim_stabilizer = 0;
  long strong_rhs = 0;  // sum dim A_i H - (n-1) dim H
  long weak_rhs = 0;    // sum dim A_i - (n-1) dim H
  bool strong = false;
  bool weak = false;
  Verdict ambient_verdict;
  bool hypothesis_finite = false;

  bool holds() const { return strong && weak; }
};

/// Needs a commutative algebra and n >= 2 subspaces meeting the units.
NfoldReport kneser_nfold_check(const std::vector<Subspace>& spaces, std::size_t trials = 64, std::uint64_t seed = 0);

// --- Hamidoune connectivity ------------------------------------------------------

void require_lambda(const Rat& lambda);

/// c(W) = dim k<WV> - lambda dim W. Throws LambdaOutOfRange unless 0 < lambda <= 1.
Rat connectivity_value(const Subspace& w, const Subspace& v, const Rat& lambda);

struct EvaluatedCandidate {
  std::string id;  // partition string or candidate label
  Rat value;
};

struct ConnectivityReport {
  Rat lambda;
  std::optional<Subspace> v;
  Rat kappa;
  std::optional<Subspace> atom;
  std::string atom_id;
  std::vector<EvaluatedCandidate> evaluated;
  bool exact = true;              // minimum over the full subalgebra lattice
  bool tie_break_fired = false;   // two minimal-dimension minimizers (never expected)
};

/// Exact kappa and atom over Q^n by minimizing c over every partition
/// subalgebra. OpenMP-parallel over partitions with a deterministic reduction.
ConnectivityReport atom_exact_split(const Subspace& v, const Rat& lambda, std::size_t cap = kDefaultSplitCap);

struct NamedSubalgebra {
  std::string id;
  Subspace space;
};

/// Minimum of c over caller-supplied candidate subalgebras (an upper bound on
/// kappa); report.exact is false.
ConnectivityReport atom_over_candidates(const Subspace& v, const Rat& lambda,
                                        const std::vector<NamedSubalgebra>& candidates);

struct AtomCheck {
  bool value_matches = false;    // c(atom) == kappa
  bool contains_unit = false;
  bool subalgebra = false;
  bool contains_stabilizer = false;
  bool minimal = false;          // kappa <= every evaluated value

  bool all() const { return value_matches && contains_unit && subalgebra && contains_stabilizer && minimal; }
};

AtomCheck check_atom(const ConnectivityReport& report);

struct HamidouneReport {
  std::size_t dim_wv = 0, dim_w = 0, dim_v = 0, dim_atom = 0;
  Rat lambda;
  Rat rhs;    // lambda dim W + dim V - lambda dim atom
  Rat slack;  // dim WV - rhs
  bool holds = false;
};

HamidouneReport hamidoune_check(const Subspace& w, const Subspace& v, const Rat& lambda, const Subspace& atom);

// --- small doubling ---------------------------------------------------------------

struct TaoReport {
  Rat epsilon;
  bool hypotheses_met = false;
  std::string hypothesis_failure;
  std::size_t dim_v = 0, dim_w = 0, dim_wv = 0;
  std::optional<Subspace> h;
  std::size_t dim_h = 0, dim_hv = 0;
  Rat bound_h;   // (2/eps - 1) dim V
  Rat bound_hv;  // (2/eps - 1) dim H
  bool h_bound = false;
  bool v_inside_hv = false;
  bool hv_bound = false;

  bool satisfied() const { return !hypotheses_met || (h_bound && v_inside_hv && hv_bound); }
};

/// Throws EpsilonOutOfRange unless 0 < eps < 2; NotSplitEtale from the atom oracle.
TaoReport tao_check(const Subspace& v, const Subspace& w, const Rat& epsilon, std::size_t cap = kDefaultSplitCap);

namespace reference {

/// Serial, direct-definition version of atom_exact_split kept for testing.
ConnectivityReport atom_exact_split(const Subspace& v, const Rat& lambda, std::size_t cap = kDefaultSplitCap);

}  // namespace reference

}  // namespace linkne
