#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkne/algebra.hpp"
#include "linkne/multable.hpp"

namespace linkne {

enum class FixtureKind { Algebra, Table };

struct FixtureInfo {
  std::string name;
  FixtureKind kind;
  std::string description;
};

/// Catalog in a fixed order.
const std::vector<FixtureInfo>& fixture_catalog();

/// Algebra description for a named algebra fixture; table fixtures give their
/// monoid algebra. Throws ParseError on unknown names.
AlgebraDesc fixture_algebra_desc(const std::string& name);
AlgebraPtr fixture_algebra(const std::string& name);

/// Throws ParseError when the name is not a table fixture.
TablePtr fixture_table(const std::string& name);
bool is_table_fixture(const std::string& name);

TablePtr cyclic_group(std::size_t n);
TablePtr table_product(const TablePtr& a, const TablePtr& b);
TablePtr symmetric_group3();
/// {1, a, b, a2, a3} with a2 = b2 = ab = ba and a4 = a.
TablePtr kneser_counterexample_monoid();
/// Words in a, b with a2 = b2 = ab = ba, graded by length, cut at length 3
/// with an absorbing zero: {1, a, b, a2, a3, 0}.
TablePtr graded_truncated_monoid();

/// Q^n as a structure-constant description.
AlgebraDesc split_etale_desc(std::size_t n);
AlgebraDesc poly_quotient_desc(std::vector<Poly> factors, std::string label);

}  // namespace linkne
