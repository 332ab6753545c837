#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "linkne/algebra.hpp"

namespace linkne {

enum class Side { Left, Right };

/// Linear subspace of an algebra in canonical reduced row-echelon form, so
/// equal subspaces compare equal field by field.
class Subspace {
 public:
  static Subspace zero(const AlgebraPtr& algebra);
  static Subspace whole(const AlgebraPtr& algebra);
  /// Q * 1
  static Subspace scalars(const AlgebraPtr& algebra);
  /// Span of raw coordinate vectors; an empty list gives the zero subspace.
  static Subspace from_vecs(const AlgebraPtr& algebra, const std::vector<Vec>& vectors);
  /// Caller guarantees `echelon` is already in canonical form.
  static Subspace from_echelon(const AlgebraPtr& algebra, Echelon echelon);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return echelon_.rank(); }
  const std::vector<Vec>& basis() const { return echelon_.rows; }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }
  const Echelon& echelon() const { return echelon_; }

  bool contains(const Vec& v) const { return echelon_.contains(v); }
  bool contains_unit() const { return contains(algebra_->unit()); }
  std::vector<Element> elements() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.algebra_ == b.algebra_ && a.echelon_ == b.echelon_;
  }

 private:
  AlgebraPtr algebra_;
  Echelon echelon_;
};

/// k<A>. Throws EmptyGeneratingSet or AlgebraMismatch.
Subspace span_of(const std::vector<Element>& vectors);

Subspace lattice_sum(const Subspace& v, const Subspace& w);
Subspace lattice_intersect(const Subspace& v, const Subspace& w);
bool contains(const Subspace& v, const Element& x);
/// v is a subspace of w
bool is_within(const Subspace& v, const Subspace& w);

/// k<VW>: span of all products v_i w_j.
Subspace product_span(const Subspace& v, const Subspace& w);
/// x V
Subspace left_translate(const Vec& x, const Subspace& v);
/// V x
Subspace right_translate(const Subspace& v, const Vec& x);

/// Left: {x : x V in V}. Right: {x : V x in V}.
Subspace stabilizer(const Subspace& v, Side side);
/// Left: {x : x V = 0}. Right: {x : V x = 0}.
Subspace annihilator(const Subspace& v, Side side);

bool is_subalgebra(const Subspace& v);
/// Basis vectors pairwise commute.
bool is_commutative_set(const Subspace& v);

struct MonteCarlo {
  std::size_t trials = 64;
  std::uint64_t seed = 0;
};

/// Monte Carlo first; on failure, an exact test along the line
/// t -> sum_i t^{(n+1)^i} v_i, whose determinant polynomial vanishes
/// identically iff no element of V is invertible. Needs deg <= max_degree.
struct SymbolicLine {
  std::size_t trials = 64;
  std::uint64_t seed = 0;
  std::size_t max_degree = 4096;
};

using InvertibleMode = std::variant<MonteCarlo, SymbolicLine>;

enum class InvertibleVerdict { Yes, ProbablyNo, NoProven };

struct InvertibleCertificate {
  InvertibleVerdict verdict = InvertibleVerdict::ProbablyNo;
  std::optional<Element> witness;
  std::size_t candidates_tried = 0;
};

/// Throws ZeroSubspace when dim V = 0.
InvertibleCertificate contains_invertible(const Subspace& v, const InvertibleMode& mode = MonteCarlo{});

/// Basis of V made of invertible elements. Throws NoInvertibleFound.
std::vector<Element> invertible_basis(const Subspace& v, std::uint64_t seed = 0);

/// Least subalgebra containing 1 and the given elements.
Subspace subalgebra_generated(const std::vector<Element>& generators);
Subspace subalgebra_generated(const Subspace& v);

/// Points x_1 + a x_2 + ... + a^{r-1} x_r on the Vandermonde line of a basis.
Vec vandermonde_point(const std::vector<Vec>& basis, const Rat& alpha);

}  // namespace linkne
