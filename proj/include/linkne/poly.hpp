#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "linkne/rational.hpp"

namespace linkne {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients; a nonzero polynomial never has a
/// trailing zero coefficient.
class Poly {
 public:
  /// Degree reported for the zero polynomial. Compare against it, never
  /// do arithmetic with it.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t degree);
  /// T - root
  static Poly linear_root(const Rat& root);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return is_zero() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of T^i, zero beyond the degree.
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const Rat& leading() const;

  Poly monic() const;
  Poly derivative() const;
  Rat eval(const Rat& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over Q. Throws on division by zero.
  struct DivMod;
  DivMod divmod(const Poly& divisor) const;
  Poly operator/(const Poly& divisor) const;
  Poly operator%(const Poly& divisor) const;

  std::string pretty(char var = 'T') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct Poly::DivMod {
  Poly quotient;
  Poly remainder;
};

Poly pow(const Poly& p, unsigned exponent);

/// Monic gcd; gcd(f, 0) = monic(f) and gcd(0, 0) = 0.
/// Runs a primitive pseudo-remainder sequence over Z and normalizes at the end.
Poly poly_gcd(const Poly& f, const Poly& g);

struct SqfPart {
  unsigned multiplicity;
  Poly factor;  // monic, squarefree, non-constant

  friend bool operator==(const SqfPart&, const SqfPart&) = default;
};

/// f = content * prod factor^multiplicity, parts sorted by multiplicity.
struct SqfProfile {
  std::vector<SqfPart> parts;
  Rat content;

  Poly reconstruct() const;
};

/// Yun's squarefree decomposition. Throws Error(ConstantPolynomial) when
/// deg f < 1.
SqfProfile squarefree_decompose(const Poly& f);

}  // namespace linkne
