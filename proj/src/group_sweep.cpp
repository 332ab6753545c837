#include <omp.h>

#include <algorithm>
#include <bit>

#include "linkne/discrete.hpp"
#include "linkne/error.hpp"
#include "linkne/random.hpp"

namespace linkne {

namespace {

using Mask = std::uint64_t;

struct PairPlan {
  std::vector<std::pair<Mask, Mask>> pairs;
};

void require_group(const TablePtr& table) {
  if (!table->is_group()) throw Error(ErrorKind::NotAGroup, "table is not a group");
  if (table->size() > 63) throw Error(ErrorKind::CapExceeded, "subset sweeps need at most 63 elements");
}

PairPlan plan_pairs(const TablePtr& table, const SweepMode& mode) {
  PairPlan plan;
  const Mask full = (Mask{1} << table->size()) - 1;
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (table->size() > 12) throw Error(ErrorKind::CapExceeded, "exhaustive sweeps need at most 12 elements");
    plan.pairs.reserve(full * full);
    for (Mask a = 1; a <= full; ++a) {
      for (Mask b = 1; b <= full; ++b) plan.pairs.emplace_back(a, b);
    }
  } else {
    const auto& r = std::get<RandomPairs>(mode);
    plan.pairs.reserve(r.count);
    for (std::size_t i = 0; i < r.count; ++i) {
      Rng rng(derive_seed(r.seed, i));
      auto draw = [&] {
        Mask m = 0;
        while (m == 0) m = rng.next() & full;
        return m;
      };
      const Mask a = draw();
      plan.pairs.emplace_back(a, draw());
    }
  }
  return plan;
}

Mask product_mask(const MulTable& t, Mask a, Mask b) {
  Mask out = 0;
  for (Mask x = a; x; x &= x - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(x));
    for (Mask y = b; y; y &= y - 1) out |= Mask{1} << t.at(i, static_cast<std::size_t>(std::countr_zero(y)));
  }
  return out;
}

Mask left_stabilizer_mask(const MulTable& t, Mask a) {
  Mask h = 0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (product_mask(t, Mask{1} << x, a) == a) h |= Mask{1} << x;
  }
  return h;
}

bool commuting_mask(const MulTable& t, Mask a) {
  for (Mask x = a; x; x &= x - 1) {
    for (Mask y = a; y; y &= y - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(x));
      const auto j = static_cast<std::size_t>(std::countr_zero(y));
      if (t.at(i, j) != t.at(j, i)) return false;
    }
  }
  return true;
}

Subspace lift_mask(const AlgebraPtr& alg, Mask m) {
  std::vector<Vec> rows;
  for (Mask x = m; x; x &= x - 1) rows.push_back(alg->basis_vec(static_cast<std::size_t>(std::countr_zero(x))));
  return Subspace::from_vecs(alg, rows);
}

struct PairOutcome {
  bool skipped = false;
  bool inequality = true;
  bool routes_agree = true;
  std::size_t size_ab = 0, size_h = 0, dim_ab = 0, dim_h = 0;
};

void fold(GroupSweepReport& report, const TablePtr& table, const PairPlan& plan,
          const std::vector<PairOutcome>& outcomes) {
  report.group_size = table->size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.skipped) {
      ++report.skipped_noncommutative;
      continue;
    }
    ++report.pairs_checked;
    if (!o.inequality) ++report.violations;
    if (!o.routes_agree) ++report.mismatches;
    if ((!o.inequality || !o.routes_agree) && report.failures.size() < GroupSweepReport::kMaxRecordedFailures) {
      report.failures.push_back({i, SubsetBits::from_mask(table, plan.pairs[i].first).to_string(),
                                 SubsetBits::from_mask(table, plan.pairs[i].second).to_string(), o.size_ab, o.size_h,
                                 o.dim_ab, o.dim_h, o.inequality, o.routes_agree});
    }
  }
}

}  // namespace

GroupSweepReport group_kneser_sweep(const TablePtr& table, const SweepMode& mode) {
  require_group(table);
  const PairPlan plan = plan_pairs(table, mode);
  const MulTable& t = *table;
  const AlgebraPtr alg = table_algebra(table);
  const std::size_t n = t.size();

  // Once dim k<AB> = |AB| is confirmed the product span is the lift of AB, so
  // its stabilizer depends only on the mask and can be shared across pairs.
  const bool cache_all = std::holds_alternative<Exhaustive>(mode);
  std::vector<int> stab_dim(cache_all ? (std::size_t{1} << n) : 0, -1);
  if (cache_all) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t m = 1; m < static_cast<std::int64_t>(stab_dim.size()); ++m) {
      stab_dim[static_cast<std::size_t>(m)] =
          static_cast<int>(stabilizer(lift_mask(alg, static_cast<Mask>(m)), Side::Left).dim());
    }
  }

  std::vector<PairOutcome> outcomes(plan.pairs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(plan.pairs.size()); ++k) {
    const auto [a, b] = plan.pairs[static_cast<std::size_t>(k)];
    PairOutcome& o = outcomes[static_cast<std::size_t>(k)];
    if (!t.is_commutative() && !commuting_mask(t, a)) {
      o.skipped = true;
      continue;
    }
    const Mask ab = product_mask(t, a, b);
    const Mask h = left_stabilizer_mask(t, ab);
    o.size_ab = static_cast<std::size_t>(std::popcount(ab));
    o.size_h = static_cast<std::size_t>(std::popcount(h));
    o.inequality = o.size_ab + o.size_h >= static_cast<std::size_t>(std::popcount(a) + std::popcount(b));
    const Subspace p = product_span(lift_mask(alg, a), lift_mask(alg, b));
    o.dim_ab = p.dim();
    if (o.dim_ab == o.size_ab && cache_all) {
      o.dim_h = static_cast<std::size_t>(stab_dim[ab]);
    } else {
      o.dim_h = stabilizer(p, Side::Left).dim();
    }
    o.routes_agree = o.dim_ab == o.size_ab && o.dim_h == o.size_h;
  }

  GroupSweepReport report;
  fold(report, table, plan, outcomes);
  return report;
}

namespace reference {

GroupSweepReport group_kneser_sweep(const TablePtr& table, const SweepMode& mode) {
  require_group(table);
  const PairPlan plan = plan_pairs(table, mode);
  const AlgebraPtr alg = table_algebra(table);
  std::vector<PairOutcome> outcomes(plan.pairs.size());
  for (std::size_t k = 0; k < plan.pairs.size(); ++k) {
    const SubsetBits a = SubsetBits::from_mask(table, plan.pairs[k].first);
    const SubsetBits b = SubsetBits::from_mask(table, plan.pairs[k].second);
    PairOutcome& o = outcomes[k];
    if (!table->is_commutative() && !is_commutative_set(lift_subset(a, alg))) {
      o.skipped = true;
      continue;
    }
    const SubsetBits ab = minkowski(a, b);
    o.size_ab = ab.count();
    o.size_h = combinatorial_stabilizer(ab, Side::Left).count();
    o.inequality = o.size_ab + o.size_h >= a.count() + b.count();
    const Subspace p = product_span(lift_subset(a, alg), lift_subset(b, alg));
    o.dim_ab = p.dim();
    o.dim_h = stabilizer(p, Side::Left).dim();
    o.routes_agree = o.dim_ab == o.size_ab && o.dim_h == o.size_h;
  }
  GroupSweepReport report;
  fold(report, table, plan, outcomes);
  return report;
}

}  // namespace reference

}  // namespace linkne
