#include "linkne/classify.hpp"

#include "linkne/error.hpp"
#include "linkne/random.hpp"

namespace linkne {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Finite: return "Finite";
    case VerdictKind::Infinite: return "Infinite";
    case VerdictKind::ProbablyInfinite: return "ProbablyInfinite";
  }
  return "?";
}

std::string_view to_string(InfiniteReason reason) {
  switch (reason) {
    case InfiniteReason::None: return "None";
    case InfiniteReason::NonCommutative: return "NonCommutative";
    case InfiniteReason::BadProfileWithGenerator: return "BadProfileWithGenerator";
  }
  return "?";
}

bool profile_ok(const SqfProfile& profile) {
  int repeated = 0;
  for (const auto& part : profile.parts) {
    if (part.multiplicity == 1) continue;
    if (part.multiplicity > 3 || part.factor.degree() != 1) return false;
    ++repeated;
  }
  return repeated <= 1;
}

namespace {

Verdict classify_basis(const AlgebraPtr& algebra, const std::vector<Vec>& basis, bool commutative,
                       std::size_t trials, std::uint64_t seed) {
  Verdict out;
  if (!commutative) {
    out.kind = VerdictKind::Infinite;
    out.reason = InfiniteReason::NonCommutative;
    return out;
  }
  const Algebra& alg = *algebra;
  const std::size_t target = basis.size();
  auto decide = [&](const Vec& g) {
    ++out.trials_used;
    Poly mu = alg.min_poly(g);
    if (static_cast<std::size_t>(mu.degree()) != target) return false;
    SqfProfile profile = squarefree_decompose(mu);
    const bool ok = profile_ok(profile);
    out.kind = ok ? VerdictKind::Finite : VerdictKind::Infinite;
    out.reason = ok ? InfiniteReason::None : InfiniteReason::BadProfileWithGenerator;
    out.generator = Element{algebra, g};
    out.min_poly = std::move(mu);
    out.profile = std::move(profile);
    return true;
  };

  std::size_t used = 0;
  for (const auto& b : basis) {
    if (used++ >= trials) return out;
    if (decide(b)) return out;
  }
  const std::size_t line = trials / 2;
  for (std::size_t k = 1; k <= line && used < trials; ++k, ++used) {
    if (decide(vandermonde_point(basis, Rat(static_cast<long>(k))))) return out;
  }
  Rng rng(derive_seed(seed, 0xC1A55));
  for (std::size_t k = 0; used < trials; ++k, ++used) {
    const auto bound = static_cast<std::int64_t>(1 + k / 8);
    Vec g(alg.dim());
    for (const auto& b : basis) axpy(g, rng.small_int(bound), b);
    if (decide(g)) return out;
  }
  return out;
}

}  // namespace

Verdict finite_subalgebras_verdict(const AlgebraPtr& algebra, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) trials = 1;
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < algebra->dim(); ++i) basis.push_back(algebra->basis_vec(i));
  return classify_basis(algebra, basis, algebra->is_commutative(), trials, seed);
}

Verdict finite_subalgebras_verdict(const Subspace& subalgebra, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) trials = 1;
  return classify_basis(subalgebra.algebra(), subalgebra.basis(), is_commutative_set(subalgebra), trials, seed);
}

void require_split(const AlgebraPtr& algebra, std::size_t cap) {
  if (!algebra->is_split_etale()) {
    throw Error(ErrorKind::NotSplitEtale, "'" + algebra->label() + "' is not Q^n in an idempotent basis");
  }
  if (algebra->dim() > cap) {
    throw Error(ErrorKind::CapExceeded, "dimension " + std::to_string(algebra->dim()) + " exceeds cap " +
                                            std::to_string(cap));
  }
}

Subspace partition_subalgebra(const AlgebraPtr& algebra, const Partition& partition) {
  Echelon e;
  e.ncols = algebra->dim();
  for (const auto& block : partition.blocks) {
    Vec row(e.ncols);
    for (auto i : block) row[i] = 1;
    e.rows.push_back(std::move(row));
    e.pivots.push_back(block.front());
  }
  return Subspace::from_echelon(algebra, std::move(e));
}

std::vector<Subspace> enumerate_subalgebras_split(const AlgebraPtr& algebra, std::size_t cap) {
  require_split(algebra, cap);
  std::vector<Subspace> out;
  for_each_rgs(algebra->dim(), [&](const std::vector<std::uint8_t>& rgs) {
    out.push_back(partition_subalgebra(algebra, partition_from_rgs(rgs)));
  });
  return out;
}

}  // namespace linkne
