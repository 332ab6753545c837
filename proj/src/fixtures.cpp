#include "linkne/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "linkne/error.hpp"

namespace linkne {

namespace {

Poly t_power(unsigned k) { return Poly::monomial(Rat(1), k); }

Poly t2_plus_1() { return Poly({Rat(1), Rat(0), Rat(1)}); }

std::vector<FixtureInfo> build_catalog() {
  std::vector<FixtureInfo> c = {
      {"QT2", FixtureKind::Algebra, "Q[T]/(T^2)"},
      {"QT3", FixtureKind::Algebra, "Q[T]/(T^3)"},
      {"QT4", FixtureKind::Algebra, "Q[T]/(T^4)"},
      {"QT2xQT2", FixtureKind::Algebra, "Q[T]/(T^2) x Q[T]/(T^2)"},
      {"QT2xQT3", FixtureKind::Algebra, "Q[T]/(T^2) x Q[T]/(T^3)"},
      {"QP2", FixtureKind::Algebra, "Q[T]/((T^2+1)^2)"},
      {"Qi", FixtureKind::Algebra, "Q[T]/(T^2+1)"},
      {"M2", FixtureKind::Algebra, "2x2 rational matrices, basis E00 E01 E10 E11"},
      {"comp-nilp", FixtureKind::Algebra, "Q[C] for C the companion matrix of diag(T^2, T^3)"},
      {"comp-sep", FixtureKind::Algebra, "Q[C] for C the companion matrix of diag(T, T-1, T+1)"},
  };
  for (std::size_t n = 1; n <= 10; ++n) {
    c.push_back({"Q" + std::to_string(n), FixtureKind::Algebra, "Q^" + std::to_string(n) + ", orthogonal idempotent basis"});
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    c.push_back({"Z" + std::to_string(n), FixtureKind::Table, "cyclic group Z/" + std::to_string(n)});
  }
  c.push_back({"Z2xZ2", FixtureKind::Table, "Klein four-group"});
  c.push_back({"S3", FixtureKind::Table, "symmetric group on 3 letters"});
  c.push_back({"kneser-m5", FixtureKind::Table, "monoid {1,a,b,a2,a3} with a2=b2=ab=ba, a4=a"});
  c.push_back({"graded-m", FixtureKind::Table, "a2=b2=ab=ba monoid, words of length <= 3, absorbing zero"});
  return c;
}

std::optional<std::size_t> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::size_t n = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || n > 100) return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  if (name[prefix.size()] == '0') return std::nullopt;
  return n;
}

TablePtr make_table(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul, std::size_t unit,
                    std::vector<std::string> labels) {
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<std::uint32_t>(mul(i, j));
  }
  return std::make_shared<const MulTable>(n, std::move(t), unit, std::move(labels));
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog = build_catalog();
  return catalog;
}

TablePtr cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyDescription, "Z/0");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_table(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }, 0, std::move(labels));
}

TablePtr table_product(const TablePtr& a, const TablePtr& b) {
  const std::size_t na = a->size();
  const std::size_t nb = b->size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a->label(i) + "," + b->label(j) + ")");
  }
  return make_table(
      na * nb,
      [&](std::size_t x, std::size_t y) { return a->at(x / nb, y / nb) * nb + b->at(x % nb, y % nb); },
      a->unit() * nb + b->unit(), std::move(labels));
}

TablePtr symmetric_group3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::string> labels = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
  return make_table(
      6,
      [&](std::size_t x, std::size_t y) {
        // (xy)(i) = x(y(i))
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];
        return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      },
      0, std::move(labels));
}

TablePtr kneser_counterexample_monoid() {
  // 0 = 1, 1 = a, 2 = b, 3 = a2, 4 = a3. Every non-unit element is a power a^k
  // with k in {1, 2, 3} (b counts as degree 1 but squares like a), and
  // a^k a^l = a^{k+l} with a^4 = a. A product never lands on b.
  auto degree = [](std::size_t x) -> std::size_t { return x == 0 ? 0 : x == 2 ? 1 : x == 1 ? 1 : x - 1; };
  auto from_degree = [](std::size_t d) -> std::size_t { return d == 0 ? 0 : d == 1 ? 1 : d + 1; };
  return make_table(
      5,
      [&](std::size_t x, std::size_t y) {
        if (x == 0) return y;
        if (y == 0) return x;
        std::size_t d = degree(x) + degree(y);
        while (d >= 4) d -= 3;
        return from_degree(d);
      },
      0, {"1", "a", "b", "a2", "a3"});
}

TablePtr graded_truncated_monoid() {
  // 0 = 1, 1 = a, 2 = b, 3 = a2, 4 = a3, 5 = zero.
  auto degree = [](std::size_t x) -> std::size_t { return x == 0 ? 0 : x <= 2 ? 1 : x - 1; };
  return make_table(
      6,
      [&](std::size_t x, std::size_t y) -> std::size_t {
        if (x == 5 || y == 5) return 5;
        if (x == 0) return y;
        if (y == 0) return x;
        const std::size_t d = degree(x) + degree(y);
        return d > 3 ? 5 : d + 1;
      },
      0, {"1", "a", "b", "a2", "a3", "0"});
}

AlgebraDesc split_etale_desc(std::size_t n) {
  StructureConstantsDesc sc;
  sc.table.assign(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t i = 0; i < n; ++i) sc.table[i][i][i] = 1;
  sc.unit = Vec(n, Rat(1));
  AlgebraDesc d;
  d.body = std::move(sc);
  d.label = "Q^" + std::to_string(n);
  return d;
}

AlgebraDesc poly_quotient_desc(std::vector<Poly> factors, std::string label) {
  AlgebraDesc d;
  d.body = PolyQuotientProductDesc{std::move(factors)};
  d.label = std::move(label);
  return d;
}

bool is_table_fixture(const std::string& name) {
  for (const auto& f : fixture_catalog()) {
    if (f.name == name) return f.kind == FixtureKind::Table;
  }
  return false;
}

TablePtr fixture_table(const std::string& name) {
  if (!is_table_fixture(name)) throw Error(ErrorKind::ParseError, "unknown table fixture '" + name + "'");
  if (auto n = suffix_number(name, "Z")) return cyclic_group(*n);
  if (name == "Z2xZ2") return table_product(cyclic_group(2), cyclic_group(2));
  if (name == "S3") return symmetric_group3();
  if (name == "kneser-m5") return kneser_counterexample_monoid();
  return graded_truncated_monoid();
}

AlgebraDesc fixture_algebra_desc(const std::string& name) {
  if (is_table_fixture(name)) {
    AlgebraDesc d;
    d.body = TableDesc{fixture_table(name), false};
    d.label = "Q[" + name + "]";
    return d;
  }
  const bool known = std::any_of(fixture_catalog().begin(), fixture_catalog().end(),
                                 [&](const FixtureInfo& f) { return f.name == name; });
  if (!known) throw Error(ErrorKind::ParseError, "unknown fixture '" + name + "'");
  if (auto n = suffix_number(name, "Q")) return split_etale_desc(*n);
  if (name == "QT2") return poly_quotient_desc({t_power(2)}, name);
  if (name == "QT3") return poly_quotient_desc({t_power(3)}, name);
  if (name == "QT4") return poly_quotient_desc({t_power(4)}, name);
  if (name == "QT2xQT2") return poly_quotient_desc({t_power(2), t_power(2)}, name);
  if (name == "QT2xQT3") return poly_quotient_desc({t_power(2), t_power(3)}, name);
  if (name == "QP2") return poly_quotient_desc({pow(t2_plus_1(), 2)}, name);
  if (name == "Qi") return poly_quotient_desc({t2_plus_1()}, name);
  AlgebraDesc d;
  d.label = name;
  if (name == "M2") {
    d.body = matrix_algebra_desc(2);
  } else if (name == "comp-nilp") {
    d.body = CompanionDesc{{t_power(2), t_power(3)}};
  } else {
    d.body = CompanionDesc{{t_power(1), Poly::linear_root(Rat(1)), Poly::linear_root(Rat(-1))}};
  }
  return d;
}

AlgebraPtr fixture_algebra(const std::string& name) { return build_algebra(fixture_algebra_desc(name)); }

}  // namespace linkne
