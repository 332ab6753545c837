#include "linkne/instances.hpp"

#include <algorithm>

#include "linkne/classify.hpp"
#include "linkne/error.hpp"
#include "linkne/fixtures.hpp"

namespace linkne {

std::string subspace_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "S" + std::to_string(i);
}

namespace {

Vec random_vec(std::size_t n, Rng& rng, std::int64_t bound) {
  Vec v(n);
  for (auto& c : v) c = rng.small_int(bound);
  return v;
}

bool meets_units(const Subspace& s) {
  return s.dim() > 0 && contains_invertible(s, SymbolicLine{}).verdict == InvertibleVerdict::Yes;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParseError, what);
}

Poly random_squarefree(Rng& rng, std::size_t max_degree) {
  for (;;) {
    const std::size_t d = 1 + rng.index(max_degree);
    std::vector<Rat> c(d + 1);
    for (std::size_t i = 0; i < d; ++i) c[i] = rng.small_int(3);
    c[d] = 1;
    Poly p(c);
    if (poly_gcd(p, p.derivative()).degree() == 0) return p;
  }
}

}  // namespace

Subspace random_subspace(const AlgebraPtr& algebra, std::size_t dim, Rng& rng) {
  const std::size_t n = algebra->dim();
  require(dim >= 1 && dim <= n, "subspace dimension out of range");
  for (;;) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      // Sparse 0/1 rows half of the time; they give structured products.
      if (rng.coin()) {
        Vec v(n);
        for (auto& c : v) c = rng.index(3) == 0 ? 1 : 0;
        rows.push_back(std::move(v));
      } else {
        rows.push_back(random_vec(n, rng, 3));
      }
    }
    Subspace s = Subspace::from_vecs(algebra, rows);
    if (s.dim() == dim) return s;
  }
}

Subspace random_unit_subspace(const AlgebraPtr& algebra, std::size_t dim, Rng& rng, std::size_t max_retries) {
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    Subspace s = random_subspace(algebra, dim, rng);
    if (meets_units(s)) return s;
  }
  throw Error(ErrorKind::RetryBudgetExhausted, "no subspace meeting the units within the retry budget");
}

Element random_invertible(const AlgebraPtr& algebra, Rng& rng, std::size_t max_retries) {
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    Vec v = random_vec(algebra->dim(), rng, 4);
    if (algebra->is_invertible(v)) return make_element(algebra, std::move(v));
  }
  throw Error(ErrorKind::RetryBudgetExhausted, "no invertible element within the retry budget");
}

Instance generate_instance(const GenSpec& spec, std::uint64_t seed) {
  Instance inst;
  inst.family = spec.family;
  inst.seed = seed;
  Rng rng(derive_seed(seed, 0));
  require(!spec.dims.empty(), "at least one subspace dimension is needed");

  if (spec.family == "qn" || spec.family == "small") {
    require(spec.n >= 1 && spec.n <= 10, "n must be in 1..10");
    inst.algebra_desc = split_etale_desc(spec.n);
  } else if (spec.family == "group") {
    const std::string name = spec.fixture.empty() ? "Z" + std::to_string(spec.n) : spec.fixture;
    require(is_table_fixture(name), "unknown table fixture '" + name + "'");
    require(fixture_table(name)->is_group(), "group family needs a group table");
    inst.algebra_desc = fixture_algebra_desc(name);
  } else if (spec.family == "polyquot") {
    require(spec.n >= 1 && spec.n <= 4, "polyquot needs 1..4 factors");
    std::vector<Poly> factors;
    for (std::size_t i = 0; i < spec.n; ++i) factors.push_back(random_squarefree(rng, 3));
    inst.algebra_desc = poly_quotient_desc(std::move(factors), "polyquot");
  } else if (spec.family == "fixture") {
    require(!spec.fixture.empty(), "fixture family needs a fixture name");
    inst.algebra_desc = fixture_algebra_desc(spec.fixture);
  } else {
    throw Error(ErrorKind::ParseError, "unknown family '" + spec.family + "'");
  }
  inst.algebra = build_algebra(inst.algebra_desc);
  const std::size_t n = inst.algebra->dim();

  for (std::size_t i = 0; i < spec.dims.size(); ++i) {
    Rng sub(derive_seed(seed, i + 1));
    const std::size_t d = spec.dims[i];
    require(d >= 1 && d <= n, "subspace dimension out of range");
    if (spec.family == "group") {
      const TablePtr& table = inst.algebra->source_table();
      std::vector<std::size_t> idx(n);
      for (std::size_t k = 0; k < n; ++k) idx[k] = k;
      for (std::size_t k = 0; k < d; ++k) std::swap(idx[k], idx[k + sub.index(n - k)]);
      idx.resize(d);
      std::sort(idx.begin(), idx.end());
      SubsetBits s = SubsetBits::from_indices(table, idx);
      inst.subspaces.emplace_back(subspace_name(i), lift_subset(s, inst.algebra));
      inst.subsets.emplace_back(subspace_name(i), std::move(s));
    } else if (spec.family == "small") {
      // S a random partition subalgebra of dimension >= d, V = x U with U a
      // subspace of S through 1, W = y S.
      Subspace s = Subspace::whole(inst.algebra);
      for (std::size_t attempt = 0; attempt < spec.max_retries; ++attempt) {
        std::vector<std::uint8_t> rgs(n, 0);
        std::uint8_t top = 0;
        for (std::size_t k = 1; k < n; ++k) {
          rgs[k] = static_cast<std::uint8_t>(sub.index(top + 2u));
          top = std::max(top, rgs[k]);
        }
        Subspace cand = partition_subalgebra(inst.algebra, partition_from_rgs(rgs));
        if (cand.dim() >= d) {
          s = cand;
          break;
        }
      }
      const Element x = random_invertible(inst.algebra, sub, spec.max_retries);
      std::vector<Vec> rows = {inst.algebra->unit()};
      const auto sb = s.basis();
      while (Subspace::from_vecs(inst.algebra, rows).dim() < d) {
        Vec v(n);
        for (const auto& b : sb) axpy(v, sub.small_int(2), b);
        rows.push_back(std::move(v));
      }
      Subspace u = Subspace::from_vecs(inst.algebra, rows);
      // Every other subspace is the full translate y S.
      inst.subspaces.emplace_back(subspace_name(i), i % 2 == 0 ? left_translate(x.coords, u)
                                                                : left_translate(x.coords, s));
    } else {
      inst.subspaces.emplace_back(subspace_name(i), random_unit_subspace(inst.algebra, d, sub, spec.max_retries));
    }
  }
  return inst;
}

}  // namespace linkne
