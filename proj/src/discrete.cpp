#include "linkne/discrete.hpp"

#include <algorithm>
#include <utility>

#include "linkne/error.hpp"

namespace linkne {

SubsetBits::SubsetBits(TablePtr table) : table_(std::move(table)), bits_(table_->size(), false) {}

SubsetBits SubsetBits::from_indices(TablePtr table, const std::vector<std::size_t>& indices) {
  SubsetBits s(std::move(table));
  for (auto i : indices) {
    if (i >= s.bits_.size()) throw Error(ErrorKind::ParseError, "element index out of range");
    s.bits_[i] = true;
  }
  return s;
}

SubsetBits SubsetBits::from_labels(TablePtr table, const std::vector<std::string>& labels) {
  SubsetBits s(table);
  for (const auto& l : labels) {
    auto i = table->index_of(l);
    if (!i) throw Error(ErrorKind::ParseError, "unknown element label '" + l + "'");
    s.bits_[*i] = true;
  }
  return s;
}

SubsetBits SubsetBits::from_mask(TablePtr table, std::uint64_t mask) {
  SubsetBits s(std::move(table));
  for (std::size_t i = 0; i < s.bits_.size() && i < 64; ++i) s.bits_[i] = (mask >> i) & 1u;
  return s;
}

SubsetBits SubsetBits::all(TablePtr table) {
  SubsetBits s(std::move(table));
  s.bits_.assign(s.bits_.size(), true);
  return s;
}

std::size_t SubsetBits::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::size_t> SubsetBits::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

std::string SubsetBits::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) out += ',';
    out += table_->label(i);
    first = false;
  }
  return out + "}";
}

SubsetBits units(const TablePtr& table) {
  SubsetBits u(table);
  const std::size_t n = table->size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table->at(x, y) == table->unit() && table->at(y, x) == table->unit()) {
        u.set(x);
        break;
      }
    }
  }
  return u;
}

namespace {

void require_nonempty(const SubsetBits& s) {
  if (!s.table() || s.empty()) throw Error(ErrorKind::EmptySubset, "subset is empty");
}

}  // namespace

SubsetBits minkowski(const SubsetBits& a, const SubsetBits& b) {
  require_nonempty(a);
  require_nonempty(b);
  if (a.table() != b.table() && !(*a.table() == *b.table())) {
    throw Error(ErrorKind::TableMismatch, "subsets come from different tables");
  }
  SubsetBits out(a.table());
  for (auto x : a.indices()) {
    for (auto y : b.indices()) out.set(a.table()->at(x, y));
  }
  return out;
}

SubsetBits combinatorial_stabilizer(const SubsetBits& a, Side side) {
  require_nonempty(a);
  const auto& t = *a.table();
  SubsetBits h(a.table());
  const auto members = a.indices();
  for (std::size_t x = 0; x < t.size(); ++x) {
    SubsetBits moved(a.table());
    for (auto m : members) moved.set(side == Side::Left ? t.at(x, m) : t.at(m, x));
    if (moved == a) h.set(x);
  }
  return h;
}

bool is_submonoid(const SubsetBits& s) {
  if (!s.table() || !s.test(s.table()->unit())) return false;
  const auto members = s.indices();
  for (auto x : members) {
    for (auto y : members) {
      if (!s.test(s.table()->at(x, y))) return false;
    }
  }
  return true;
}

AlgebraPtr table_algebra(const TablePtr& table) {
  AlgebraDesc desc;
  desc.body = TableDesc{table, false};
  desc.label = "Q[M]";
  return build_algebra(desc);
}

Subspace lift_subset(const SubsetBits& a, const AlgebraPtr& algebra) {
  const auto& src = algebra->source_table();
  if (!src || !a.table() || (src != a.table() && !(*src == *a.table()))) {
    throw Error(ErrorKind::TableMismatch, "algebra was not built from this table");
  }
  std::vector<Vec> rows;
  for (auto i : a.indices()) rows.push_back(algebra->basis_vec(i));
  return Subspace::from_vecs(algebra, rows);
}

StabCorrespondence stab_correspondence_check(const SubsetBits& a, const AlgebraPtr& algebra) {
  require_nonempty(a);
  StabCorrespondence out;
  const Subspace h = stabilizer(lift_subset(a, algebra), Side::Left);
  out.dim_algebraic = h.dim();
  out.basis = h.basis();
  out.size_combinatorial = combinatorial_stabilizer(a, Side::Left).count();
  out.is_group = a.table()->is_group();
  out.equal = out.dim_algebraic == out.size_combinatorial;
  return out;
}

std::vector<NamedSubalgebra> default_candidates(const SubsetBits& a, const AlgebraPtr& algebra) {
  std::vector<NamedSubalgebra> out;
  auto push = [&](std::string id, Subspace s) {
    for (const auto& c : out) {
      if (c.space == s) return;
    }
    out.push_back({std::move(id), std::move(s)});
  };
  push("Q", Subspace::scalars(algebra));
  push("stabilizer", stabilizer(lift_subset(a, algebra), Side::Left));
  const auto& table = a.table();
  const std::size_t n = table->size();
  if (n <= 16) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      if (!((mask >> table->unit()) & 1u)) continue;
      SubsetBits s = SubsetBits::from_mask(table, mask);
      if (is_submonoid(s)) push("Q" + s.to_string(), lift_subset(s, algebra));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    push("Q[" + table->label(i) + "]", subalgebra_generated(std::vector<Element>{basis_element(algebra, i)}));
  }
  push("whole", Subspace::whole(algebra));
  return out;
}

MonoidHamidouneReport monoid_hamidoune_check(const SubsetBits& a, const SubsetBits& b, const Rat& lambda,
                                             const AlgebraPtr& algebra,
                                             const std::vector<NamedSubalgebra>& candidates) {
  require_lambda(lambda);
  require_nonempty(a);
  require_nonempty(b);
  const SubsetBits u = units(a.table());
  auto meets = [&](const SubsetBits& s) {
    for (auto i : s.indices()) {
      if (u.test(i)) return true;
    }
    return false;
  };
  if (!meets(a)) throw Error(ErrorKind::NoUnitInA, "A contains no unit of the monoid");
  if (!meets(b)) throw Error(ErrorKind::NoUnitInB, "B contains no unit of the monoid");

  MonoidHamidouneReport r;
  r.a = a;
  r.b = b;
  r.lambda = lambda;
  r.ba = minkowski(b, a);
  r.h_a = combinatorial_stabilizer(a, Side::Left);
  r.ab = minkowski(a, b);
  r.h_ab = combinatorial_stabilizer(r.ab, Side::Left);

  const Subspace v = lift_subset(a, algebra);
  if (algebra->is_split_etale() && candidates.empty()) {
    r.connectivity = atom_exact_split(v, lambda);
  } else {
    r.connectivity = atom_over_candidates(v, lambda, candidates.empty() ? default_candidates(a, algebra) : candidates);
  }
  r.dim_atom = r.connectivity.atom->dim();
  r.dim_stabilizer = stabilizer(v, Side::Left).dim();

  const Rat size_a(static_cast<long>(a.count()));
  const Rat size_b(static_cast<long>(b.count()));
  const Rat size_ba(static_cast<long>(r.ba.count()));
  const Rat dim_atom(static_cast<long>(r.dim_atom));
  r.rhs = lambda * size_b + size_a - lambda * dim_atom;
  r.slack = size_ba - r.rhs;
  r.bound = r.slack >= 0;
  r.rhs_swapped = lambda * size_a + size_b - lambda * dim_atom;
  r.bound_swapped = size_ba >= r.rhs_swapped;
  r.atom_covers_h_a = r.dim_atom >= r.h_a.count();
  r.kneser_rhs = static_cast<long>(a.count() + b.count()) - static_cast<long>(r.h_ab.count());
  r.kneser_holds = static_cast<long>(r.ab.count()) >= r.kneser_rhs;
  return r;
}

}  // namespace linkne
