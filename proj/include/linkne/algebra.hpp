#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linkne/linalg.hpp"
#include "linkne/multable.hpp"
#include "linkne/poly.hpp"

namespace linkne {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

enum class Validation { Full, SkipAssociativity };

/// One nonzero structure constant: b_i * b_j has `coeff` on b_index.
struct Term {
  std::uint32_t index;
  Rat coeff;
};

/// Finite-dimensional unital associative algebra over Q, stored as dense
/// structure constants (with a sparse view used by the multiplication kernel).
/// Immutable once created.
class Algebra {
 public:
  /// table[i][j] holds the coordinates of b_i * b_j.
  /// Throws NotAssociative, BadUnit or EmptyDescription.
  static AlgebraPtr create(std::vector<std::vector<Vec>> table, Vec unit, std::string label,
                           Validation validation = Validation::Full, TablePtr source = nullptr);

  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::string& label() const { return label_; }
  bool is_commutative() const { return commutative_; }
  /// The basis is a family of orthogonal idempotents summing to the unit,
  /// i.e. the algebra is Q^n in its standard coordinates.
  bool is_split_etale() const { return split_etale_; }
  /// Multiplication table the algebra was built from, if any.
  const TablePtr& source_table() const { return source_; }
  const std::vector<std::vector<Vec>>& structure_constants() const { return dense_; }
  const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }

  Vec basis_vec(std::size_t i) const;
  Vec mul(const Vec& x, const Vec& y) const;
  bool commute(const Vec& x, const Vec& y) const;
  /// Columns x * b_i (the matrix of left multiplication by x).
  std::vector<Vec> left_mul_columns(const Vec& x) const;
  std::vector<Vec> right_mul_columns(const Vec& x) const;
  Vec eval_poly(const Poly& p, const Vec& x) const;
  Poly min_poly(const Vec& x) const;
  /// Two-sided inverse, if any.
  std::optional<Vec> inverse(const Vec& x) const;
  bool is_invertible(const Vec& x) const;

 private:
  Algebra() = default;

  std::size_t dim_ = 0;
  std::vector<std::vector<Vec>> dense_;
  std::vector<std::vector<Term>> sparse_;
  Vec unit_;
  std::string label_;
  bool commutative_ = false;
  bool split_etale_ = false;
  TablePtr source_;
};

/// An algebra element: coordinates tied to the owning algebra.
struct Element {
  AlgebraPtr algebra;
  Vec coords;

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra == b.algebra && a.coords == b.coords;
  }
};

Element make_element(const AlgebraPtr& algebra, Vec coords);
Element unit_element(const AlgebraPtr& algebra);
Element basis_element(const AlgebraPtr& algebra, std::size_t i);

Element elem_mul(const Element& x, const Element& y);
Element elem_add(const Element& x, const Element& y);
Element elem_sub(const Element& x, const Element& y);
Element elem_scale(const Rat& c, const Element& x);
Poly elem_min_poly(const Element& x);

/// Either an inverse (x*y = y*x = 1) or a nonzero v with x*v = 0.
struct InvertResult {
  std::optional<Element> inverse;
  std::optional<Element> kernel_witness;

  bool invertible() const { return inverse.has_value(); }
};

InvertResult elem_invert(const Element& x);

/// Minimal polynomial of a sequence v, x v, x^2 v, ... generated by `step`:
/// the first linear dependence, returned monic.
template <typename Step>
Poly first_dependence(Vec start, Step step, std::size_t max_len);

// --- descriptions -----------------------------------------------------------

struct StructureConstantsDesc {
  std::vector<std::vector<Vec>> table;
  Vec unit;
};

struct TableDesc {
  TablePtr table;
  bool require_group = false;
};

/// Q[T]/(P_1) x ... x Q[T]/(P_k), basis = concatenated power bases.
struct PolyQuotientProductDesc {
  std::vector<Poly> factors;
};

/// Q[M] inside a matrix algebra, M the block-diagonal companion matrix of
/// the given polynomials. Basis 1, M, ..., M^{d-1}.
struct CompanionDesc {
  std::vector<Poly> polys;
};

struct AlgebraDesc;

struct DirectProductDesc {
  std::vector<AlgebraDesc> factors;
};

struct AlgebraDesc {
  std::variant<StructureConstantsDesc, TableDesc, PolyQuotientProductDesc, CompanionDesc, DirectProductDesc> body;
  std::string label;
  Validation validation = Validation::Full;
};

AlgebraPtr build_algebra(const AlgebraDesc& desc);

/// Block-diagonal companion matrix (row-major, N x N).
std::vector<Vec> companion_matrix(const std::vector<Poly>& polys);

/// Full matrix algebra M_n(Q) with basis E_ij (index i*n + j).
StructureConstantsDesc matrix_algebra_desc(std::size_t n);

/// Q^n with the standard orthogonal idempotent basis.
AlgebraPtr split_etale_algebra(std::size_t n);

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b, std::string label);

// --- template implementation -------------------------------------------------

template <typename Step>
Poly first_dependence(Vec start, Step step, std::size_t max_len) {
  struct Reduced {
    Vec vec;
    std::size_t pivot;
    Vec comb;  // coefficients over the powers
  };
  std::vector<Reduced> stored;
  Vec current = std::move(start);
  for (std::size_t k = 0; k <= max_len; ++k) {
    Vec r = current;
    Vec comb(k + 1);
    comb[k] = 1;
    for (const auto& s : stored) {
      if (is_zero(r[s.pivot])) continue;
      Rat f = r[s.pivot] / s.vec[s.pivot];
      axpy(r, -f, s.vec);
      for (std::size_t i = 0; i < s.comb.size(); ++i) {
        if (!is_zero(s.comb[i])) comb[i] -= f * s.comb[i];
      }
    }
    std::size_t pivot = r.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!is_zero(r[i])) {
        pivot = i;
        break;
      }
    }
    if (pivot == r.size()) return Poly(std::move(comb));
    stored.push_back({std::move(r), pivot, std::move(comb)});
    if (k < max_len) current = step(current);
  }
  return {};
}

}  // namespace linkne
