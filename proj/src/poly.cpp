#include "linkne/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "linkne/error.hpp"

namespace linkne {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && linkne::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rat& root) { return Poly(std::vector<Rat>{-root, Rat(1)}); }

const Rat& Poly::leading() const {
  if (is_zero()) throw Error(ErrorKind::ConstantPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rat inv = 1 / leading();
  std::vector<Rat> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * inv;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(v));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rat> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rat& c, const Poly& a) {
  std::vector<Rat> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
  return Poly(std::move(v));
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::ConstantPolynomial, "polynomial division by zero");
  std::vector<Rat> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {Poly{}, *this};
  std::vector<Rat> quo(rem.size() - dd);
  const Rat inv = 1 / divisor.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (linkne::is_zero(rem[k])) continue;
    Rat q = rem[k] * inv;
    quo[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::operator/(const Poly& divisor) const { return divmod(divisor).quotient; }
Poly Poly::operator%(const Poly& divisor) const { return divmod(divisor).remainder; }

std::string Poly::pretty(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (linkne::is_zero(c)) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << to_string(mag);
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly acc = Poly::constant(1);
  for (unsigned i = 0; i < exponent; ++i) acc = acc * p;
  return acc;
}

namespace {

using IntPoly = std::vector<Int>;  // lowest degree first, no trailing zeros

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

IntPoly to_primitive_int(const Poly& f) {
  Int lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntPoly p;
  p.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Int v = lcm / c.get_den() * c.get_num();
    p.push_back(v);
  }
  make_primitive(p);
  return p;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Int la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  if (g.is_zero()) return f.monic();
  if (f.is_zero()) return g.monic();
  IntPoly a = to_primitive_int(f);
  IntPoly b = to_primitive_int(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rat> coeffs;
  coeffs.reserve(a.size());
  for (auto& c : a) coeffs.emplace_back(c);
  return Poly(std::move(coeffs)).monic();
}

Poly SqfProfile::reconstruct() const {
  Poly acc = Poly::constant(content);
  for (const auto& part : parts) acc = acc * pow(part.factor, part.multiplicity);
  return acc;
}

SqfProfile squarefree_decompose(const Poly& f) {
  if (f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "squarefree decomposition needs deg >= 1");
  SqfProfile out;
  out.content = f.leading();
  const Poly monic_f = f.monic();
  const Poly df = monic_f.derivative();
  const Poly a0 = poly_gcd(monic_f, df);
  Poly b = monic_f / a0;
  Poly c = df / a0;
  Poly d = c - b.derivative();
  unsigned mult = 1;
  while (!b.is_constant()) {
    Poly a = poly_gcd(b, d);
    if (!a.is_constant()) out.parts.push_back({mult, a});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

}  // namespace linkne
