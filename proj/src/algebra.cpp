#include "linkne/algebra.hpp"

#include <algorithm>
#include <utility>

#include "linkne/error.hpp"

namespace linkne {

// --- MulTable ----------------------------------------------------------------

MulTable::MulTable(std::size_t size, std::vector<std::uint32_t> table, std::size_t unit,
                   std::vector<std::string> labels)
    : size_(size), table_(std::move(table)), unit_(unit), labels_(std::move(labels)) {
  if (size_ == 0) throw Error(ErrorKind::EmptyDescription, "multiplication table of size 0");
  if (table_.size() != size_ * size_) throw Error(ErrorKind::BadTable, "table must be size x size");
  if (unit_ >= size_) throw Error(ErrorKind::BadUnit, "unit index out of range");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < size_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != size_) throw Error(ErrorKind::BadTable, "label count differs from size");
  for (auto v : table_) {
    if (v >= size_) throw Error(ErrorKind::BadTable, "table entry out of range");
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (at(unit_, i) != i || at(i, unit_) != i) throw Error(ErrorKind::BadUnit, "unit law fails at " + labels_[i]);
  }
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      for (std::size_t c = 0; c < size_; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw Error(ErrorKind::NotAssociative,
                      "(" + labels_[a] + "*" + labels_[b] + ")*" + labels_[c] + " differs");
        }
      }
    }
  }
  commutative_ = true;
  for (std::size_t a = 0; a < size_ && commutative_; ++a) {
    for (std::size_t b = a + 1; b < size_; ++b) {
      if (at(a, b) != at(b, a)) {
        commutative_ = false;
        break;
      }
    }
  }
  group_ = true;
  for (std::size_t a = 0; a < size_ && group_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < size_; ++b) {
      if (at(a, b) == unit_ && at(b, a) == unit_) {
        found = true;
        break;
      }
    }
    group_ = found;
  }
}

std::optional<std::size_t> MulTable::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

// --- Algebra -----------------------------------------------------------------

AlgebraPtr Algebra::create(std::vector<std::vector<Vec>> table, Vec unit, std::string label,
                           Validation validation, TablePtr source) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::EmptyDescription, "algebra of dimension 0");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::ParseError, "structure constants must be n x n");
    for (const auto& v : row) {
      if (v.size() != n) throw Error(ErrorKind::ParseError, "structure constant vectors must have length n");
    }
  }
  if (unit.size() != n) throw Error(ErrorKind::BadUnit, "unit vector has wrong length");

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->dim_ = n;
  alg->dense_ = std::move(table);
  alg->unit_ = std::move(unit);
  alg->label_ = std::move(label);
  alg->source_ = std::move(source);
  alg->sparse_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& c = alg->dense_[i][j][k];
        if (!is_zero(c)) alg->sparse_[i * n + j].push_back({static_cast<std::uint32_t>(k), c});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vec b = alg->basis_vec(i);
    if (alg->mul(alg->unit_, b) != b || alg->mul(b, alg->unit_) != b) {
      throw Error(ErrorKind::BadUnit, "unit law fails on basis vector " + std::to_string(i));
    }
  }
  if (validation == Validation::Full) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          Vec lhs(n);
          for (const auto& t : alg->sparse_[i * n + j]) axpy(lhs, t.coeff, alg->dense_[t.index][k]);
          Vec rhs(n);
          for (const auto& t : alg->sparse_[j * n + k]) axpy(rhs, t.coeff, alg->dense_[i][t.index]);
          if (lhs != rhs) {
            throw Error(ErrorKind::NotAssociative, "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" +
                                                       std::to_string(k) + " differs");
          }
        }
      }
    }
  }

  bool comm = true;
  for (std::size_t i = 0; i < n && comm; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alg->dense_[i][j] != alg->dense_[j][i]) {
        comm = false;
        break;
      }
    }
  }
  alg->commutative_ = comm;

  bool split = true;
  for (std::size_t i = 0; i < n && split; ++i) {
    if (alg->unit_[i] != 1) split = false;
    for (std::size_t j = 0; j < n && split; ++j) {
      const auto& terms = alg->sparse_[i * n + j];
      if (i == j) {
        split = terms.size() == 1 && terms[0].index == i && terms[0].coeff == 1;
      } else {
        split = terms.empty();
      }
    }
  }
  alg->split_etale_ = split;
  return alg;
}

Vec Algebra::basis_vec(std::size_t i) const {
  Vec v(dim_);
  v[i] = 1;
  return v;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  Rat c;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      c = x[i] * y[j];
      for (const auto& t : sparse_[i * dim_ + j]) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

bool Algebra::commute(const Vec& x, const Vec& y) const { return mul(x, y) == mul(y, x); }

std::vector<Vec> Algebra::left_mul_columns(const Vec& x) const {
  std::vector<Vec> cols(dim_);
  for (std::size_t i = 0; i < dim_; ++i) cols[i] = mul(x, basis_vec(i));
  return cols;
}

std::vector<Vec> Algebra::right_mul_columns(const Vec& x) const {
  std::vector<Vec> cols(dim_);
  for (std::size_t i = 0; i < dim_; ++i) cols[i] = mul(basis_vec(i), x);
  return cols;
}

Vec Algebra::eval_poly(const Poly& p, const Vec& x) const {
  Vec acc(dim_);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = mul(acc, x);
    axpy(acc, c[k], unit_);
  }
  return acc;
}

Poly Algebra::min_poly(const Vec& x) const {
  return first_dependence(unit_, [&](const Vec& v) { return mul(x, v); }, dim_);
}

std::optional<Vec> Algebra::inverse(const Vec& x) const {
  Vec y;
  if (!solve_columns(left_mul_columns(x), unit_, y)) return std::nullopt;
  return y;
}

bool Algebra::is_invertible(const Vec& x) const {
  return rank_of(transpose(left_mul_columns(x), dim_), dim_) == dim_;
}

// --- Element -----------------------------------------------------------------

namespace {

void require_same(const Element& x, const Element& y) {
  if (!x.algebra || x.algebra != y.algebra) throw Error(ErrorKind::AlgebraMismatch, "elements of different algebras");
}

}  // namespace

Element make_element(const AlgebraPtr& algebra, Vec coords) {
  if (coords.size() != algebra->dim()) {
    throw Error(ErrorKind::ParseError, "element has " + std::to_string(coords.size()) + " coordinates, algebra dim is " +
                                           std::to_string(algebra->dim()));
  }
  return {algebra, std::move(coords)};
}

Element unit_element(const AlgebraPtr& algebra) { return {algebra, algebra->unit()}; }
Element basis_element(const AlgebraPtr& algebra, std::size_t i) { return {algebra, algebra->basis_vec(i)}; }

Element elem_mul(const Element& x, const Element& y) {
  require_same(x, y);
  return {x.algebra, x.algebra->mul(x.coords, y.coords)};
}

Element elem_add(const Element& x, const Element& y) {
  require_same(x, y);
  return {x.algebra, add(x.coords, y.coords)};
}

Element elem_sub(const Element& x, const Element& y) {
  require_same(x, y);
  return {x.algebra, sub(x.coords, y.coords)};
}

Element elem_scale(const Rat& c, const Element& x) { return {x.algebra, scale(c, x.coords)}; }

Poly elem_min_poly(const Element& x) { return x.algebra->min_poly(x.coords); }

InvertResult elem_invert(const Element& x) {
  const Algebra& alg = *x.algebra;
  InvertResult out;
  auto cols = alg.left_mul_columns(x.coords);
  auto kernel = kernel_of_columns(cols, alg.dim());
  if (!kernel.empty()) {
    out.kernel_witness = Element{x.algebra, kernel.front()};
    return out;
  }
  Vec y;
  solve_columns(cols, alg.unit(), y);
  out.inverse = Element{x.algebra, std::move(y)};
  return out;
}

// --- builders ----------------------------------------------------------------

namespace {

AlgebraPtr from_table(const TableDesc& d, const std::string& label) {
  if (!d.table) throw Error(ErrorKind::EmptyDescription, "missing multiplication table");
  const MulTable& m = *d.table;
  if (d.require_group && !m.is_group()) throw Error(ErrorKind::BadTable, "group_table is not a group");
  const std::size_t n = m.size();
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b][m.at(a, b)] = 1;
  }
  Vec unit(n);
  unit[m.unit()] = 1;
  // MulTable construction already checked associativity of the table.
  return Algebra::create(std::move(table), std::move(unit), label, Validation::SkipAssociativity, d.table);
}

AlgebraPtr from_quotients(const std::vector<Poly>& raw, const std::string& label, Validation validation) {
  if (raw.empty()) throw Error(ErrorKind::EmptyDescription, "no polynomial factors");
  std::vector<Poly> factors;
  std::size_t n = 0;
  for (const auto& p : raw) {
    if (p.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "quotient factor must have degree >= 1");
    factors.push_back(p.monic());
    n += static_cast<std::size_t>(p.degree());
  }
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n)));
  Vec unit(n);
  std::size_t offset = 0;
  for (const auto& p : factors) {
    const auto d = static_cast<std::size_t>(p.degree());
    unit[offset] = 1;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        Poly r = Poly::monomial(1, a + b) % p;
        for (std::size_t k = 0; k < d; ++k) table[offset + a][offset + b][offset + k] = r.coeff(k);
      }
    }
    offset += d;
  }
  return Algebra::create(std::move(table), std::move(unit), label, validation);
}

std::vector<Vec> mat_mul(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  const std::size_t n = a.size();
  std::vector<Vec> c(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a[i][k])) continue;
      axpy(c[i], a[i][k], b[k]);
    }
  }
  return c;
}

Vec flatten(const std::vector<Vec>& m) {
  Vec out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<Vec> unflatten(const Vec& v, std::size_t n) {
  std::vector<Vec> m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = v[i * n + j];
  }
  return m;
}

AlgebraPtr from_companion(const CompanionDesc& d, const std::string& label, Validation validation) {
  if (d.polys.empty()) throw Error(ErrorKind::EmptyDescription, "no companion polynomials");
  const auto m = companion_matrix(d.polys);
  const std::size_t big = m.size();
  std::vector<Vec> id(big, Vec(big));
  for (std::size_t i = 0; i < big; ++i) id[i][i] = 1;
  Poly mu = first_dependence(
      flatten(id), [&](const Vec& v) { return flatten(mat_mul(m, unflatten(v, big))); }, big);
  // Q[M] with basis M^0..M^{d-1} multiplies exactly like Q[T]/(mu_M).
  return from_quotients({mu}, label, validation);
}

AlgebraPtr build(const AlgebraDesc& desc) {
  return std::visit(
      [&](const auto& body) -> AlgebraPtr {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, StructureConstantsDesc>) {
          return Algebra::create(body.table, body.unit, desc.label, desc.validation);
        } else if constexpr (std::is_same_v<T, TableDesc>) {
          return from_table(body, desc.label);
        } else if constexpr (std::is_same_v<T, PolyQuotientProductDesc>) {
          return from_quotients(body.factors, desc.label, desc.validation);
        } else if constexpr (std::is_same_v<T, CompanionDesc>) {
          return from_companion(body, desc.label, desc.validation);
        } else {
          if (body.factors.empty()) throw Error(ErrorKind::EmptyDescription, "direct product of nothing");
          AlgebraPtr acc = build_algebra(body.factors.front());
          for (std::size_t i = 1; i < body.factors.size(); ++i) {
            acc = direct_product(acc, build_algebra(body.factors[i]), desc.label);
          }
          if (body.factors.size() == 1) {
            return Algebra::create(acc->structure_constants(), acc->unit(), desc.label,
                                   Validation::SkipAssociativity, acc->source_table());
          }
          return acc;
        }
      },
      desc.body);
}

}  // namespace

AlgebraPtr build_algebra(const AlgebraDesc& desc) { return build(desc); }

std::vector<Vec> companion_matrix(const std::vector<Poly>& polys) {
  std::size_t n = 0;
  for (const auto& p : polys) {
    if (p.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "companion polynomial must have degree >= 1");
    n += static_cast<std::size_t>(p.degree());
  }
  std::vector<Vec> m(n, Vec(n));
  std::size_t off = 0;
  for (const auto& raw : polys) {
    Poly p = raw.monic();
    const auto d = static_cast<std::size_t>(p.degree());
    for (std::size_t i = 1; i < d; ++i) m[off + i][off + i - 1] = 1;
    for (std::size_t i = 0; i < d; ++i) m[off + i][off + d - 1] = -p.coeff(i);
    off += d;
  }
  return m;
}

StructureConstantsDesc matrix_algebra_desc(std::size_t n) {
  const std::size_t dim = n * n;
  StructureConstantsDesc d;
  d.table.assign(dim, std::vector<Vec>(dim, Vec(dim)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) d.table[i * n + j][j * n + l][i * n + l] = 1;
    }
  }
  d.unit.assign(dim, Rat(0));
  for (std::size_t i = 0; i < n; ++i) d.unit[i * n + i] = 1;
  return d;
}

AlgebraPtr split_etale_algebra(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyDescription, "Q^0");
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t i = 0; i < n; ++i) table[i][i][i] = 1;
  return Algebra::create(std::move(table), Vec(n, Rat(1)), "Q^" + std::to_string(n), Validation::SkipAssociativity);
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b, std::string label) {
  const std::size_t na = a->dim();
  const std::size_t nb = b->dim();
  const std::size_t n = na + nb;
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < na; ++k) table[i][j][k] = a->structure_constants()[i][j][k];
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < nb; ++k) table[na + i][na + j][na + k] = b->structure_constants()[i][j][k];
    }
  }
  Vec unit = a->unit();
  unit.insert(unit.end(), b->unit().begin(), b->unit().end());
  return Algebra::create(std::move(table), std::move(unit), std::move(label), Validation::SkipAssociativity);
}

}  // namespace linkne
