#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linkne/multable.hpp"
#include "linkne/sumsets.hpp"

namespace linkne {

/// Subset of the elements of a finite monoid.
class SubsetBits {
 public:
  SubsetBits() = default;
  explicit SubsetBits(TablePtr table);
  static SubsetBits from_indices(TablePtr table, const std::vector<std::size_t>& indices);
  /// Labels resolved through the table; throws ParseError on unknown labels.
  static SubsetBits from_labels(TablePtr table, const std::vector<std::string>& labels);
  static SubsetBits from_mask(TablePtr table, std::uint64_t mask);
  static SubsetBits all(TablePtr table);

  const TablePtr& table() const { return table_; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool test(std::size_t i) const { return bits_[i]; }
  void set(std::size_t i) { bits_[i] = true; }
  std::vector<std::size_t> indices() const;
  std::string to_string() const;  // "{1,a,b}"

  friend bool operator==(const SubsetBits& a, const SubsetBits& b) { return a.bits_ == b.bits_; }

 private:
  TablePtr table_;
  std::vector<bool> bits_;
};

SubsetBits units(const TablePtr& table);

/// AB. Throws EmptySubset, TableMismatch.
SubsetBits minkowski(const SubsetBits& a, const SubsetBits& b);

/// Left: {h : hA = A}. Right: {h : Ah = A}. Throws EmptySubset.
SubsetBits combinatorial_stabilizer(const SubsetBits& a, Side side);

/// Contains the unit and is closed under the table product.
bool is_submonoid(const SubsetBits& s);

/// Monoid algebra Q[M] with basis e_m, one per table element.
AlgebraPtr table_algebra(const TablePtr& table);

/// Span of the e_a for a in A. `algebra` must be built from A's table.
Subspace lift_subset(const SubsetBits& a, const AlgebraPtr& algebra);

struct StabCorrespondence {
  std::size_t dim_algebraic = 0;      // dim of the left stabilizer of the lift
  std::size_t size_combinatorial = 0; // |H_A|
  std::vector<Vec> basis;             // basis of the algebraic stabilizer
  bool is_group = false;
  bool equal = false;

  /// Equality is only claimed for groups.
  bool holds() const { return !is_group || equal; }
};

StabCorrespondence stab_correspondence_check(const SubsetBits& a, const AlgebraPtr& algebra);

// --- group Kneser sweep -------------------------------------------------------------

struct Exhaustive {};
struct RandomPairs {
  std::uint64_t seed = 0;
  std::size_t count = 1000;
};
using SweepMode = std::variant<Exhaustive, RandomPairs>;

struct SweepFailure {
  std::size_t pair = 0;  // position in the sweep order
  std::string a, b;
  std::size_t size_ab = 0, size_h = 0, dim_ab = 0, dim_h = 0;
  bool inequality = false;
  bool routes_agree = false;
};

struct GroupSweepReport {
  std::size_t group_size = 0;
  std::size_t pairs_checked = 0;
  std::size_t skipped_noncommutative = 0;  // pairs whose A is not a commuting set
  std::size_t violations = 0;              // combinatorial inequality fails
  std::size_t mismatches = 0;              // algebra route disagrees
  std::vector<SweepFailure> failures;      // at most kMaxRecordedFailures, in sweep order

  static constexpr std::size_t kMaxRecordedFailures = 20;
  bool ok() const { return violations == 0 && mismatches == 0; }
};

/// |AB| >= |A| + |B| - |H_AB| over subset pairs, re-derived through the group
/// algebra. Subsets are bitmasks, so the group has at most 63 elements.
/// Throws NotAGroup.
GroupSweepReport group_kneser_sweep(const TablePtr& table, const SweepMode& mode);

// --- monoid Hamidoune -----------------------------------------------------------------

struct MonoidHamidouneReport {
  SubsetBits a, b, ab, ba, h_a, h_ab;
  Rat lambda;
  ConnectivityReport connectivity;  // for V = lift(A); exact only over a split algebra
  std::size_t dim_atom = 0;
  std::size_t dim_stabilizer = 0;   // left stabilizer of lift(A)
  Rat rhs;           // lambda |B| + |A| - lambda dim atom
  Rat slack;         // |BA| - rhs
  bool bound = false;
  Rat rhs_swapped;   // lambda |A| + |B| - lambda dim atom, reported only
  bool bound_swapped = false;
  bool atom_covers_h_a = false;  // dim atom >= |H_A|
  long kneser_rhs = 0;           // |A| + |B| - |H_AB|
  bool kneser_holds = false;     // |AB| >= kneser_rhs; reported only, fails for monoids in general

  bool holds() const { return bound && atom_covers_h_a; }
};

/// Candidate atoms used when the monoid algebra is not split: Q, the left
/// stabilizer of lift(A), the whole algebra, lifted submonoids and the
/// subalgebras generated by single basis elements, deduplicated.
std::vector<NamedSubalgebra> default_candidates(const SubsetBits& a, const AlgebraPtr& algebra);

/// Throws NoUnitInA, NoUnitInB, LambdaOutOfRange. With no candidates and a
/// non-split algebra the defaults above are used.
MonoidHamidouneReport monoid_hamidoune_check(const SubsetBits& a, const SubsetBits& b, const Rat& lambda,
                                             const AlgebraPtr& algebra,
                                             const std::vector<NamedSubalgebra>& candidates = {});

namespace reference {

GroupSweepReport group_kneser_sweep(const TablePtr& table, const SweepMode& mode);

}  // namespace reference

}  // namespace linkne
