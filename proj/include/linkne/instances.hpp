#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linkne/discrete.hpp"
#include "linkne/random.hpp"

namespace linkne {

/// Generator families:
///   qn        Q^n, random subspaces
///   group     group algebra of a table fixture (default Z/n), lifted random subsets
///   polyquot  product of random squarefree polynomials of degree <= 3
///   fixture   random subspaces of a named algebra fixture
///   small     Q^n, V a translate of a subspace of a partition subalgebra S and
///             W a translate of S, so the product stays small
struct GenSpec {
  std::string family = "qn";
  std::size_t n = 4;
  std::vector<std::size_t> dims = {2, 2};  // subspace dims, or subset sizes for `group`
  std::string fixture;                     // for `group` and `fixture`
  std::size_t max_retries = 64;
};

struct Instance {
  std::string family;
  std::uint64_t seed = 0;
  AlgebraDesc algebra_desc;
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Subspace>> subspaces;  // named "A", "B", ...
  std::vector<std::pair<std::string, SubsetBits>> subsets;  // group family only
};

std::string subspace_name(std::size_t i);

/// Random subspace of the given dimension certified to contain an invertible.
/// Throws RetryBudgetExhausted.
Subspace random_unit_subspace(const AlgebraPtr& algebra, std::size_t dim, Rng& rng, std::size_t max_retries = 64);

/// Random subspace with no invertibility requirement.
Subspace random_subspace(const AlgebraPtr& algebra, std::size_t dim, Rng& rng);

/// Random invertible element. Throws RetryBudgetExhausted.
Element random_invertible(const AlgebraPtr& algebra, Rng& rng, std::size_t max_retries = 64);

/// Deterministic in (spec, seed). Throws ParseError for bad specs and
/// RetryBudgetExhausted.
Instance generate_instance(const GenSpec& spec, std::uint64_t seed);

}  // namespace linkne
