#pragma once

#include <cstddef>
#include <vector>

#include "linkne/rational.hpp"

namespace linkne {

using Vec = std::vector<Rat>;

bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
/// acc += c * v
void axpy(Vec& acc, const Rat& c, const Vec& v);

/// Reduced row-echelon form of a row space. Rows are linearly independent,
/// each pivot entry is 1, pivot columns are strictly increasing and every
/// other row is zero in each pivot column. The form is unique per row space.
struct Echelon {
  std::size_t ncols = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }

  /// v minus its projection along the pivot coordinates; zero iff v lies in
  /// the row space.
  Vec residual(const Vec& v) const;
  bool contains(const Vec& v) const;

  friend bool operator==(const Echelon& a, const Echelon& b) {
    return a.ncols == b.ncols && a.rows == b.rows;
  }
};

/// Fraction-free forward elimination over Z (rows are first scaled to
/// primitive integer vectors) followed by rational back-substitution.
Echelon row_reduce(const std::vector<Vec>& rows, std::size_t ncols);

/// Basis of {x : sum_j x_j * columns[j] = 0}, i.e. the kernel of the matrix
/// whose columns are given. Each column has length `nrows`.
std::vector<Vec> kernel_of_columns(const std::vector<Vec>& columns, std::size_t nrows);

/// Basis of {x : rows * x = 0}.
std::vector<Vec> kernel_of_rows(const std::vector<Vec>& rows, std::size_t ncols);

/// Solves sum_j y_j * columns[j] = target; false when inconsistent.
bool solve_columns(const std::vector<Vec>& columns, const Vec& target, Vec& solution);

std::size_t rank_of(const std::vector<Vec>& rows, std::size_t ncols);

/// Transpose of a row list with `ncols` columns.
std::vector<Vec> transpose(const std::vector<Vec>& rows, std::size_t ncols);

}  // namespace linkne
