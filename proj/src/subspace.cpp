#include "linkne/subspace.hpp"

#include <utility>

#include "linkne/error.hpp"
#include "linkne/random.hpp"

namespace linkne {

namespace {

void require_same(const Subspace& v, const Subspace& w) {
  if (v.algebra() != w.algebra()) throw Error(ErrorKind::AlgebraMismatch, "subspaces of different algebras");
}

}  // namespace

Subspace Subspace::zero(const AlgebraPtr& algebra) { return from_vecs(algebra, {}); }

Subspace Subspace::whole(const AlgebraPtr& algebra) {
  Echelon e;
  e.ncols = algebra->dim();
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    e.rows.push_back(algebra->basis_vec(i));
    e.pivots.push_back(i);
  }
  return from_echelon(algebra, std::move(e));
}

Subspace Subspace::scalars(const AlgebraPtr& algebra) { return from_vecs(algebra, {algebra->unit()}); }

Subspace Subspace::from_vecs(const AlgebraPtr& algebra, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != algebra->dim()) throw Error(ErrorKind::ParseError, "vector length differs from algebra dim");
  }
  return from_echelon(algebra, row_reduce(vectors, algebra->dim()));
}

Subspace Subspace::from_echelon(const AlgebraPtr& algebra, Echelon echelon) {
  Subspace s;
  s.algebra_ = algebra;
  s.echelon_ = std::move(echelon);
  return s;
}

std::vector<Element> Subspace::elements() const {
  std::vector<Element> out;
  for (const auto& row : basis()) out.push_back({algebra_, row});
  return out;
}

Subspace span_of(const std::vector<Element>& vectors) {
  if (vectors.empty()) throw Error(ErrorKind::EmptyGeneratingSet, "span of an empty list");
  std::vector<Vec> raw;
  for (const auto& e : vectors) {
    if (e.algebra != vectors.front().algebra) throw Error(ErrorKind::AlgebraMismatch, "generators of different algebras");
    raw.push_back(e.coords);
  }
  return Subspace::from_vecs(vectors.front().algebra, raw);
}

Subspace lattice_sum(const Subspace& v, const Subspace& w) {
  require_same(v, w);
  std::vector<Vec> rows = v.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace::from_vecs(v.algebra(), rows);
}

Subspace lattice_intersect(const Subspace& v, const Subspace& w) {
  require_same(v, w);
  const std::size_t n = v.algebra()->dim();
  if (v.dim() == 0 || w.dim() == 0) return Subspace::zero(v.algebra());
  std::vector<Vec> cols = v.basis();
  cols.insert(cols.end(), w.basis().begin(), w.basis().end());
  auto ker = kernel_of_columns(cols, n);
  std::vector<Vec> out;
  for (const auto& k : ker) {
    Vec x(n);
    for (std::size_t i = 0; i < v.dim(); ++i) axpy(x, k[i], v.basis()[i]);
    out.push_back(std::move(x));
  }
  return Subspace::from_vecs(v.algebra(), out);
}

bool contains(const Subspace& v, const Element& x) {
  if (v.algebra() != x.algebra) throw Error(ErrorKind::AlgebraMismatch, "element of a different algebra");
  return v.contains(x.coords);
}

bool is_within(const Subspace& v, const Subspace& w) {
  require_same(v, w);
  for (const auto& row : v.basis()) {
    if (!w.contains(row)) return false;
  }
  return true;
}

Subspace product_span(const Subspace& v, const Subspace& w) {
  require_same(v, w);
  const Algebra& alg = *v.algebra();
  std::vector<Vec> prods;
  prods.reserve(v.dim() * w.dim());
  for (const auto& a : v.basis()) {
    for (const auto& b : w.basis()) prods.push_back(alg.mul(a, b));
  }
  return Subspace::from_vecs(v.algebra(), prods);
}

Subspace left_translate(const Vec& x, const Subspace& v) {
  std::vector<Vec> rows;
  for (const auto& b : v.basis()) rows.push_back(v.algebra()->mul(x, b));
  return Subspace::from_vecs(v.algebra(), rows);
}

Subspace right_translate(const Subspace& v, const Vec& x) {
  std::vector<Vec> rows;
  for (const auto& b : v.basis()) rows.push_back(v.algebra()->mul(b, x));
  return Subspace::from_vecs(v.algebra(), rows);
}

namespace {

// Kernel of the linear map x -> (constraint(x * v_j))_j (or v_j * x).
template <typename Project>
Subspace solve_multiplier_system(const Subspace& v, Side side, Project project) {
  const Algebra& alg = *v.algebra();
  const std::size_t n = alg.dim();
  std::vector<Vec> columns(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec bi = alg.basis_vec(i);
    Vec col;
    for (const auto& vj : v.basis()) {
      Vec prod = side == Side::Left ? alg.mul(bi, vj) : alg.mul(vj, bi);
      project(prod, col);
    }
    columns[i] = std::move(col);
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  if (rows == 0) return Subspace::whole(v.algebra());
  return Subspace::from_vecs(v.algebra(), kernel_of_columns(columns, rows));
}

}  // namespace

Subspace stabilizer(const Subspace& v, Side side) {
  std::vector<std::size_t> free_coords;
  {
    std::vector<bool> is_pivot(v.algebra()->dim(), false);
    for (auto p : v.pivots()) is_pivot[p] = true;
    for (std::size_t k = 0; k < is_pivot.size(); ++k) {
      if (!is_pivot[k]) free_coords.push_back(k);
    }
  }
  return solve_multiplier_system(v, side, [&](const Vec& prod, Vec& col) {
    Vec r = v.echelon().residual(prod);
    for (auto k : free_coords) col.push_back(r[k]);
  });
}

Subspace annihilator(const Subspace& v, Side side) {
  return solve_multiplier_system(v, side, [](const Vec& prod, Vec& col) { col.insert(col.end(), prod.begin(), prod.end()); });
}

bool is_subalgebra(const Subspace& v) {
  if (!v.contains_unit()) return false;
  const Algebra& alg = *v.algebra();
  for (const auto& a : v.basis()) {
    for (const auto& b : v.basis()) {
      if (!v.contains(alg.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_commutative_set(const Subspace& v) {
  const Algebra& alg = *v.algebra();
  if (alg.is_commutative()) return true;
  const auto& b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!alg.commute(b[i], b[j])) return false;
    }
  }
  return true;
}

Vec vandermonde_point(const std::vector<Vec>& basis, const Rat& alpha) {
  Vec x(basis.front().size());
  Rat power = 1;
  for (const auto& b : basis) {
    axpy(x, power, b);
    power *= alpha;
  }
  return x;
}

namespace {

InvertibleCertificate monte_carlo(const Subspace& v, std::size_t trials, std::uint64_t seed) {
  const Algebra& alg = *v.algebra();
  InvertibleCertificate cert;
  auto accept = [&](const Vec& x) {
    ++cert.candidates_tried;
    if (is_zero_vec(x) || !alg.is_invertible(x)) return false;
    cert.verdict = InvertibleVerdict::Yes;
    cert.witness = Element{v.algebra(), x};
    return true;
  };
  if (v.contains_unit() && accept(alg.unit())) return cert;
  for (const auto& b : v.basis()) {
    if (accept(b)) return cert;
  }
  if (v.dim() == 1) return cert;
  const std::size_t line_trials = trials / 2;
  for (std::size_t k = 1; k <= line_trials; ++k) {
    if (accept(vandermonde_point(v.basis(), Rat(static_cast<long>(k))))) return cert;
  }
  Rng rng(derive_seed(seed, 0x1A7E));
  for (std::size_t k = line_trials; k < trials; ++k) {
    const auto bound = static_cast<std::int64_t>(1 + k / 4);
    Vec x(alg.dim());
    for (const auto& b : v.basis()) axpy(x, rng.small_int(bound), b);
    if (accept(x)) return cert;
  }
  return cert;
}

}  // namespace

InvertibleCertificate contains_invertible(const Subspace& v, const InvertibleMode& mode) {
  if (v.dim() == 0) throw Error(ErrorKind::ZeroSubspace, "invertibility search in the zero subspace");
  if (const auto* mc = std::get_if<MonteCarlo>(&mode)) return monte_carlo(v, mc->trials, mc->seed);

  const auto& sym = std::get<SymbolicLine>(mode);
  InvertibleCertificate cert = monte_carlo(v, sym.trials, sym.seed);
  if (cert.verdict == InvertibleVerdict::Yes) return cert;

  const Algebra& alg = *v.algebra();
  const std::size_t n = alg.dim();
  const std::size_t r = v.dim();
  // det L(sum t_i v_i) is homogeneous of degree n, degree <= n in each t_i;
  // base (n+1) exponents keep distinct monomials distinct.
  std::vector<Int> exponents(r);
  Int degree = n;
  {
    Int e = 1;
    for (std::size_t i = 0; i < r; ++i) {
      exponents[i] = e;
      if (i + 1 < r) degree *= static_cast<unsigned long>(n + 1);
      e *= static_cast<unsigned long>(n + 1);
    }
  }
  if (degree + 1 > static_cast<unsigned long>(sym.max_degree)) return cert;
  const unsigned long points = degree.get_ui() + 1;
  for (unsigned long a = 0; a < points; ++a) {
    Vec x(n);
    for (std::size_t i = 0; i < r; ++i) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), Int(a).get_mpz_t(), exponents[i].get_ui());
      axpy(x, Rat(pw), v.basis()[i]);
    }
    ++cert.candidates_tried;
    if (!is_zero_vec(x) && alg.is_invertible(x)) {
      cert.verdict = InvertibleVerdict::Yes;
      cert.witness = Element{v.algebra(), x};
      return cert;
    }
  }
  cert.verdict = InvertibleVerdict::NoProven;
  return cert;
}

std::vector<Element> invertible_basis(const Subspace& v, std::uint64_t seed) {
  if (v.dim() == 0) throw Error(ErrorKind::ZeroSubspace, "invertible basis of the zero subspace");
  auto cert = contains_invertible(v, MonteCarlo{64, seed});
  if (cert.verdict != InvertibleVerdict::Yes) {
    throw Error(ErrorKind::NoInvertibleFound, "no invertible element found in the subspace");
  }
  const Algebra& alg = *v.algebra();
  const Vec& x = cert.witness->coords;
  const Vec xinv = *alg.inverse(x);
  // x^{-1} V contains 1: extend {1} to a basis, then shift each other vector
  // off the spectrum of its own left multiplication.
  const Subspace shifted = left_translate(xinv, v);
  std::vector<Vec> chosen{alg.unit()};
  for (const auto& row : shifted.basis()) {
    std::vector<Vec> trial = chosen;
    trial.push_back(row);
    if (rank_of(trial, alg.dim()) == trial.size()) chosen.push_back(row);
  }
  std::vector<Element> out;
  out.push_back({v.algebra(), x});
  for (std::size_t i = 1; i < chosen.size(); ++i) {
    const Poly mu = alg.min_poly(chosen[i]);
    long lambda = 0;
    for (long step = 0;; ++step) {
      lambda = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
      if (!is_zero(mu.eval(Rat(lambda)))) break;
    }
    Vec shifted_vec = chosen[i];
    axpy(shifted_vec, Rat(-lambda), alg.unit());
    out.push_back({v.algebra(), alg.mul(x, shifted_vec)});
  }
  return out;
}

Subspace subalgebra_generated(const Subspace& v) {
  const AlgebraPtr& alg = v.algebra();
  Subspace s = lattice_sum(Subspace::scalars(alg), v);
  for (std::size_t round = 0; round <= alg->dim(); ++round) {
    Subspace next = lattice_sum(s, product_span(s, s));
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
  return s;
}

Subspace subalgebra_generated(const std::vector<Element>& generators) {
  if (generators.empty()) throw Error(ErrorKind::EmptyGeneratingSet, "no generators");
  return subalgebra_generated(span_of(generators));
}

}  // namespace linkne
