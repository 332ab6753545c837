#include <doctest.h>

#include "linkne/error.hpp"
#include "linkne/fixtures.hpp"
#include "linkne/random.hpp"
#include "oracles.hpp"

using namespace linkne;

namespace {

Vec V(std::initializer_list<long> c) {
  Vec v;
  for (long x : c) v.emplace_back(x);
  return v;
}

Poly P(std::initializer_list<long> c) { return Poly(V(c)); }

Vec random_vec(Rng& rng, std::size_t n) {
  Vec v(n);
  for (auto& c : v) c = rng.small_int(3);
  return v;
}

const char* kFixtures[] = {"QT2", "QT3", "QT4", "QT2xQT2", "QT2xQT3", "QP2", "Qi", "M2", "comp-nilp",
                           "comp-sep", "Q1", "Q4", "Z3", "Z2xZ2", "S3", "kneser-m5", "graded-m"};

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("fixtures satisfy associativity and the unit law on random elements") {
    Rng rng(5);
    for (const char* name : kFixtures) {
      CAPTURE(name);
      AlgebraPtr a = fixture_algebra(name);
      for (int k = 0; k < 10; ++k) {
        Vec x = random_vec(rng, a->dim()), y = random_vec(rng, a->dim()), z = random_vec(rng, a->dim());
        CHECK(a->mul(a->mul(x, y), z) == a->mul(x, a->mul(y, z)));
        CHECK(a->mul(a->unit(), x) == x);
        CHECK(a->mul(x, a->unit()) == x);
        CHECK(a->mul(x, y) == oracle::mul(*a, x, y));
      }
    }
  }

  TEST_CASE("construction rejects bad tables") {
    // b0 b0 = b1, b1 b1 = b0, unit b0: unit law fails.
    std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2, Vec(2)));
    t[0][0] = V({0, 1});
    t[0][1] = V({0, 1});
    t[1][0] = V({0, 1});
    t[1][1] = V({1, 0});
    CHECK_THROWS_AS(Algebra::create(t, V({1, 0}), "bad"), Error);

    std::vector<std::vector<Vec>> u(3, std::vector<Vec>(3, Vec(3)));
    for (std::size_t i = 0; i < 3; ++i) {
      u[0][i][i] = 1;
      u[i][0][i] = 1;
    }
    u[1][1] = V({0, 0, 1});
    u[1][2] = V({1, 0, 0});
    u[2][1] = V({0, 1, 0});
    u[2][2] = V({0, 0, 0});
    try {
      Algebra::create(u, V({1, 0, 0}), "nonassoc");
      FAIL("expected NotAssociative");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAssociative);
    }

    CHECK_THROWS_AS(Algebra::create({}, {}, "empty"), Error);
    CHECK_THROWS_AS(MulTable(2, {0, 1, 1, 0}, 5, {}), Error);
    CHECK_THROWS_AS(MulTable(2, {0, 1, 1, 2}, 0, {}), Error);
    CHECK_NOTHROW(MulTable(2, {0, 1, 1, 1}, 0, {}));
  }

  TEST_CASE("build_algebra shapes") {
    AlgebraDesc qq;
    qq.body = PolyQuotientProductDesc{{P({0, 1}), P({0, 1})}};
    AlgebraPtr a = build_algebra(qq);
    CHECK(a->dim() == 2);
    CHECK(a->mul(a->basis_vec(0), a->basis_vec(0)) == V({1, 0}));
    CHECK(a->mul(a->basis_vec(0), a->basis_vec(1)) == V({0, 0}));

    AlgebraPtr z3 = fixture_algebra("Z3");
    CHECK(z3->dim() == 3);
    CHECK(elem_mul(basis_element(z3, 1), basis_element(z3, 2)).coords == V({1, 0, 0}));

    CHECK(fixture_algebra("kneser-m5")->dim() == 5);
    CHECK_FALSE(fixture_algebra("M2")->is_commutative());
    CHECK(fixture_algebra("Q4")->is_split_etale());
    CHECK_FALSE(fixture_algebra("QT2")->is_split_etale());

    AlgebraDesc empty;
    empty.body = PolyQuotientProductDesc{};
    CHECK_THROWS_AS(build_algebra(empty), Error);
  }

  TEST_CASE("element arithmetic") {
    AlgebraPtr t3 = fixture_algebra("QT3");
    CHECK(elem_mul(basis_element(t3, 1), basis_element(t3, 2)).coords == V({0, 0, 0}));
    Element x = make_element(t3, V({1, 2, 3}));
    CHECK(elem_mul(unit_element(t3), x) == x);
    CHECK_THROWS_AS(elem_mul(x, unit_element(fixture_algebra("QT2"))), Error);
    CHECK_THROWS_AS(make_element(t3, V({1, 2})), Error);
  }

  TEST_CASE("minimal polynomial examples") {
    AlgebraPtr t4 = fixture_algebra("QT4");
    CHECK(elem_min_poly(unit_element(t4)) == P({-1, 1}));
    CHECK(elem_min_poly(basis_element(t4, 1)) == P({0, 0, 0, 0, 1}));
    AlgebraPtr q2 = fixture_algebra("Q2");
    CHECK(elem_min_poly(basis_element(q2, 0)) == P({0, -1, 1}));
  }

  TEST_CASE("minimal polynomial annihilates and is minimal") {
    Rng rng(17);
    for (const char* name : kFixtures) {
      CAPTURE(name);
      AlgebraPtr a = fixture_algebra(name);
      for (int k = 0; k < 8; ++k) {
        Vec x = random_vec(rng, a->dim());
        Poly mu = a->min_poly(x);
        CHECK(mu.leading() == 1);
        CHECK(is_zero_vec(a->eval_poly(mu, x)));
        // 1, x, ..., x^{d-1} are independent.
        std::vector<Vec> powers;
        Vec p = a->unit();
        for (long d = 0; d < mu.degree(); ++d) {
          powers.push_back(p);
          p = oracle::mul(*a, p, x);
        }
        CHECK(oracle::rank(powers) == static_cast<std::size_t>(mu.degree()));
      }
    }
  }

  TEST_CASE("invertibility matches the minimal polynomial and the regular representation") {
    Rng rng(99);
    int checked = 0;
    for (int round = 0; checked < 500; ++round) {
      for (const char* name : kFixtures) {
        AlgebraPtr a = fixture_algebra(name);
        Vec x = random_vec(rng, a->dim());
        if (rng.coin()) x[0] = 0;
        const bool inv = a->is_invertible(x);
        CHECK(inv == oracle::invertible(*a, x));
        if (a->is_commutative()) CHECK(inv == (a->min_poly(x).coeff(0) != 0));
        InvertResult r = elem_invert(make_element(a, x));
        CHECK(r.invertible() == inv);
        if (inv) {
          CHECK(a->mul(x, r.inverse->coords) == a->unit());
          CHECK(a->mul(r.inverse->coords, x) == a->unit());
        } else {
          REQUIRE(r.kernel_witness.has_value());
          CHECK_FALSE(is_zero_vec(r.kernel_witness->coords));
          const bool kills = is_zero_vec(a->mul(x, r.kernel_witness->coords)) ||
                             is_zero_vec(a->mul(r.kernel_witness->coords, x));
          CHECK(kills);
        }
        ++checked;
      }
    }
  }

  TEST_CASE("inverse examples") {
    AlgebraPtr t3 = fixture_algebra("QT3");
    InvertResult u = elem_invert(unit_element(t3));
    CHECK(u.inverse->coords == t3->unit());
    InvertResult t = elem_invert(basis_element(t3, 1));
    CHECK_FALSE(t.invertible());
    REQUIRE(t.kernel_witness.has_value());
    CHECK(is_zero_vec(t3->mul(basis_element(t3, 1).coords, t.kernel_witness->coords)));
    AlgebraPtr z5 = fixture_algebra("Z5");
    CHECK(elem_invert(basis_element(z5, 2)).inverse->coords == basis_element(z5, 3).coords);
  }

  TEST_CASE("companion and direct product") {
    AlgebraPtr c = fixture_algebra("comp-nilp");
    CHECK(c->dim() == 3);  // lcm(T^2, T^3) = T^3
    CHECK(elem_min_poly(basis_element(c, 1)) == P({0, 0, 0, 1}));
    auto m = companion_matrix({P({0, 0, 1})});
    CHECK(m.size() == 2);
    AlgebraPtr d = direct_product(fixture_algebra("QT2"), fixture_algebra("Q1"), "QT2xQ");
    CHECK(d->dim() == 3);
    CHECK(d->unit() == V({1, 0, 1}));
    CHECK(d->is_commutative());
  }
}
