#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <utility>

#include "linkne/error.hpp"
#include "linkne/sumsets.hpp"

namespace linkne {

namespace {

void require_meets_units(const Subspace& v) {
  if (v.dim() == 0 || contains_invertible(v, SymbolicLine{}).verdict != InvertibleVerdict::Yes) {
    throw Error(ErrorKind::MissesUnits, "V does not meet the units");
  }
}

struct Candidate {
  Rat value;
  std::size_t dim;
  std::size_t order;
};

// Strict total order on (c, dim, enumeration order).
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.order < b.order;
}

std::size_t pick_minimum(const std::vector<Candidate>& cands, bool& tie) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (better(cands[i], cands[best])) best = i;
  }
  tie = false;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (i != best && cands[i].value == cands[best].value && cands[i].dim == cands[best].dim) tie = true;
  }
  return best;
}

}  // namespace

ConnectivityReport atom_exact_split(const Subspace& v, const Rat& lambda, std::size_t cap) {
  require_lambda(lambda);
  require_split(v.algebra(), cap);
  require_meets_units(v);
  const std::size_t n = v.algebra()->dim();

  // For a partition subalgebra S, k<S V> is the direct sum over blocks of the
  // block-idempotent projections of V, so its dimension is a sum of ranks of V
  // restricted to coordinate subsets.
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::size_t> restricted_rank(masks, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t m = 1; m < static_cast<std::int64_t>(masks); ++m) {
    std::vector<Vec> rows;
    for (const auto& b : v.basis()) {
      Vec r(n);
      for (std::size_t i = 0; i < n; ++i) {
        if ((static_cast<std::uint64_t>(m) >> i) & 1u) r[i] = b[i];
      }
      rows.push_back(std::move(r));
    }
    restricted_rank[static_cast<std::size_t>(m)] = rank_of(rows, n);
  }

  std::vector<std::vector<std::uint8_t>> all;
  for_each_rgs(n, [&](const std::vector<std::uint8_t>& rgs) { all.push_back(rgs); });

  std::vector<Candidate> cands(all.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(all.size()); ++idx) {
    const auto& rgs = all[static_cast<std::size_t>(idx)];
    std::vector<std::uint64_t> block_mask;
    for (std::size_t i = 0; i < n; ++i) {
      if (rgs[i] >= block_mask.size()) block_mask.resize(rgs[i] + 1u, 0);
      block_mask[rgs[i]] |= std::uint64_t{1} << i;
    }
    long prod_dim = 0;
    for (auto bm : block_mask) prod_dim += static_cast<long>(restricted_rank[bm]);
    const long blocks = static_cast<long>(block_mask.size());
    cands[static_cast<std::size_t>(idx)] = {Rat(prod_dim) - lambda * blocks, block_mask.size(),
                                            static_cast<std::size_t>(idx)};
  }

  ConnectivityReport report;
  report.lambda = lambda;
  report.v = v;
  report.evaluated.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    report.evaluated.push_back({partition_from_rgs(all[i]).to_string(), cands[i].value});
  }
  const std::size_t best = pick_minimum(cands, report.tie_break_fired);
  const Partition atom_partition = partition_from_rgs(all[best]);
  report.kappa = cands[best].value;
  report.atom = partition_subalgebra(v.algebra(), atom_partition);
  report.atom_id = atom_partition.to_string();
  report.exact = true;
  return report;
}

ConnectivityReport atom_over_candidates(const Subspace& v, const Rat& lambda,
                                        const std::vector<NamedSubalgebra>& candidates) {
  require_lambda(lambda);
  require_meets_units(v);
  if (candidates.empty()) throw Error(ErrorKind::EmptyGeneratingSet, "no candidate subalgebras");
  std::vector<Candidate> cands(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size()); ++i) {
    const auto& s = candidates[static_cast<std::size_t>(i)].space;
    cands[static_cast<std::size_t>(i)] = {connectivity_value(s, v, lambda), s.dim(), static_cast<std::size_t>(i)};
  }
  ConnectivityReport report;
  report.lambda = lambda;
  report.v = v;
  for (std::size_t i = 0; i < candidates.size(); ++i) report.evaluated.push_back({candidates[i].id, cands[i].value});
  const std::size_t best = pick_minimum(cands, report.tie_break_fired);
  report.kappa = cands[best].value;
  report.atom = candidates[best].space;
  report.atom_id = candidates[best].id;
  report.exact = false;
  return report;
}

namespace reference {

ConnectivityReport atom_exact_split(const Subspace& v, const Rat& lambda, std::size_t cap) {
  require_lambda(lambda);
  require_split(v.algebra(), cap);
  require_meets_units(v);
  ConnectivityReport report;
  report.lambda = lambda;
  report.v = v;
  std::vector<Candidate> cands;
  std::vector<Partition> parts;
  for_each_rgs(v.algebra()->dim(), [&](const std::vector<std::uint8_t>& rgs) {
    Partition p = partition_from_rgs(rgs);
    Subspace s = partition_subalgebra(v.algebra(), p);
    Rat c = connectivity_value(s, v, lambda);
    report.evaluated.push_back({p.to_string(), c});
    cands.push_back({c, s.dim(), cands.size()});
    parts.push_back(std::move(p));
  });
  const std::size_t best = pick_minimum(cands, report.tie_break_fired);
  report.kappa = cands[best].value;
  report.atom = partition_subalgebra(v.algebra(), parts[best]);
  report.atom_id = parts[best].to_string();
  return report;
}

}  // namespace reference

}  // namespace linkne
