#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "linkne/partition.hpp"
#include "linkne/subspace.hpp"

namespace linkne {

enum class VerdictKind { Finite, Infinite, ProbablyInfinite };
enum class InfiniteReason { None, NonCommutative, BadProfileWithGenerator };

std::string_view to_string(VerdictKind kind);
std::string_view to_string(InfiniteReason reason);

/// Whether an algebra has finitely many subalgebras.
/// Finite and Infinite(BadProfile) carry a generator g with deg mu_g equal to
/// the dimension, so the algebra is Q[T]/(mu_g) and the verdict is exact.
struct Verdict {
  VerdictKind kind = VerdictKind::ProbablyInfinite;
  InfiniteReason reason = InfiniteReason::None;
  std::optional<Element> generator;
  Poly min_poly;
  std::optional<SqfProfile> profile;
  std::size_t trials_used = 0;
};

/// Every part squarefree (multiplicity 1) except at most one part of
/// multiplicity 2 or 3 whose factor is linear.
bool profile_ok(const SqfProfile& profile);

Verdict finite_subalgebras_verdict(const AlgebraPtr& algebra, std::size_t trials, std::uint64_t seed);
/// Verdict for a subalgebra S, viewed as an algebra in its own right.
Verdict finite_subalgebras_verdict(const Subspace& subalgebra, std::size_t trials, std::uint64_t seed);

/// Span of the block indicator vectors of a partition of the idempotent basis.
Subspace partition_subalgebra(const AlgebraPtr& algebra, const Partition& partition);

constexpr std::size_t kDefaultSplitCap = 10;

/// All subalgebras of Q^n, one per set partition, in restricted-growth-string
/// order. Throws NotSplitEtale or CapExceeded.
std::vector<Subspace> enumerate_subalgebras_split(const AlgebraPtr& algebra, std::size_t cap = kDefaultSplitCap);

void require_split(const AlgebraPtr& algebra, std::size_t cap);

}  // namespace linkne
