#include "linkne/linalg.hpp"

#include <utility>

namespace linkne {

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Rat& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

void axpy(Vec& acc, const Rat& c, const Vec& v) {
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) acc[i] += c * v[i];
  }
}

Vec Echelon::residual(const Vec& v) const {
  Vec r = v;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Rat c = r[pivots[k]];
    if (!is_zero(c)) axpy(r, -c, rows[k]);
  }
  return r;
}

bool Echelon::contains(const Vec& v) const { return is_zero_vec(residual(v)); }

namespace {

using IntRow = std::vector<Int>;

IntRow primitive_int_row(const Vec& v) {
  Int lcm = 1;
  for (const auto& c : v) {
    if (!is_zero(c)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  IntRow row(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    row[i] = lcm / v[i].get_den() * v[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& c : row) {
      if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
  return row;
}

void divide_content(IntRow& row) {
  Int g = 0;
  for (const auto& c : row) {
    if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : row) {
      if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
}

}  // namespace

Echelon row_reduce(const std::vector<Vec>& input, std::size_t ncols) {
  std::vector<IntRow> m;
  m.reserve(input.size());
  for (const auto& v : input) {
    if (!is_zero_vec(v)) m.push_back(primitive_int_row(v));
  }
  Echelon out;
  out.ncols = ncols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t sel = m.size();
    for (std::size_t r = rank; r < m.size(); ++r) {
      if (sgn(m[r][col]) != 0) {
        sel = r;
        break;
      }
    }
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const IntRow& piv = m[rank];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Int a = m[r][col];
      Int p = piv[col];
      Int g = gcd(a, p);
      a /= g;
      p /= g;
      IntRow& row = m[r];
      for (std::size_t j = col; j < ncols; ++j) {
        if (sgn(piv[j]) == 0) {
          if (sgn(row[j]) != 0) row[j] *= p;
        } else {
          row[j] = p * row[j] - a * piv[j];
        }
      }
      divide_content(row);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  m.resize(rank);

  out.rows.resize(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const Int& p = m[k][out.pivots[k]];
    Vec row(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      if (sgn(m[k][j]) != 0) {
        row[j] = Rat(m[k][j], p);
        row[j].canonicalize();
      }
    }
    out.rows[k] = std::move(row);
  }
  for (std::size_t k = rank; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      const Rat c = out.rows[i][out.pivots[k]];
      if (!is_zero(c)) axpy(out.rows[i], -c, out.rows[k]);
    }
  }
  return out;
}

std::vector<Vec> kernel_of_rows(const std::vector<Vec>& rows, std::size_t ncols) {
  Echelon e = row_reduce(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols);
    x[free] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) x[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vec> transpose(const std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<Vec> out(ncols, Vec(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) out[j][i] = rows[i][j];
  }
  return out;
}

std::vector<Vec> kernel_of_columns(const std::vector<Vec>& columns, std::size_t nrows) {
  return kernel_of_rows(transpose(columns, nrows), columns.size());
}

bool solve_columns(const std::vector<Vec>& columns, const Vec& target, Vec& solution) {
  const std::size_t nrows = target.size();
  const std::size_t ncols = columns.size();
  // Augmented rows [A | b].
  std::vector<Vec> rows(nrows, Vec(ncols + 1));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < nrows; ++i) rows[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < nrows; ++i) rows[i][ncols] = target[i];
  Echelon e = row_reduce(rows, ncols + 1);
  solution.assign(ncols, Rat(0));
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] == ncols) return false;
    solution[e.pivots[k]] = e.rows[k][ncols];
  }
  return true;
}

std::size_t rank_of(const std::vector<Vec>& rows, std::size_t ncols) { return row_reduce(rows, ncols).rank(); }

}  // namespace linkne
