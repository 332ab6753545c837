#include <doctest.h>

#include "linkne/error.hpp"
#include "linkne/fixtures.hpp"
#include "linkne/instances.hpp"
#include "oracles.hpp"

using namespace linkne;

namespace {

Vec V(std::initializer_list<long> c) {
  Vec v;
  for (long x : c) v.emplace_back(x);
  return v;
}

Subspace S(const AlgebraPtr& a, std::vector<Vec> rows) { return Subspace::from_vecs(a, rows); }

Subspace basis_span(const AlgebraPtr& a, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> rows;
  for (auto i : idx) rows.push_back(a->basis_vec(i));
  return S(a, rows);
}

// {(x, y, y)} in Q^3
Subspace xyy(const AlgebraPtr& q3) { return S(q3, {V({1, 0, 0}), V({0, 1, 1})}); }

Rat R(long p, long q = 1) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_SUITE("sumsets") {
  TEST_CASE("e-transform") {
    AlgebraPtr z5 = fixture_algebra("Z5");
    Subspace a = basis_span(z5, {0, 1, 2});
    Subspace b = basis_span(z5, {0, 3});
    auto [ae, be] = e_transform(a, b, unit_element(z5));
    CHECK(ae == lattice_intersect(a, b));
    CHECK(be == lattice_sum(a, b));

    AlgebraPtr q3 = fixture_algebra("Q3");
    auto [s1, s2] = e_transform(xyy(q3), xyy(q3), make_element(q3, V({1, 2, 2})));
    CHECK(s1 == xyy(q3));
    CHECK(s2 == xyy(q3));

    CHECK_THROWS_AS(e_transform(a, b, basis_element(z5, 1)), Error);  // e_1 not in B
    AlgebraPtr q2 = fixture_algebra("Q2");
    Subspace whole = Subspace::whole(q2);
    CHECK_THROWS_AS(e_transform(whole, whole, make_element(q2, V({1, 0}))), Error);

    Rng rng(5);
    int done = 0;
    for (int k = 0; k < 200 && done < 60; ++k) {
      Subspace x = random_subspace(z5, 1 + rng.index(4), rng);
      Subspace y = random_subspace(z5, 1 + rng.index(4), rng);
      x = lattice_sum(x, Subspace::scalars(z5));
      y = lattice_sum(y, Subspace::scalars(z5));
      y = lattice_sum(y, basis_span(z5, {1}));
      auto [xe, ye] = e_transform(x, y, basis_element(z5, 1));
      // Independent rank computation: A ∩ B e^{-1} and B + A e.
      std::vector<Vec> ae_rows;
      for (const auto& r : x.basis()) ae_rows.push_back(z5->mul(r, z5->basis_vec(1)));
      std::vector<Vec> sum_rows = y.basis();
      sum_rows.insert(sum_rows.end(), ae_rows.begin(), ae_rows.end());
      CHECK(ye.dim() == oracle::rank(sum_rows));
      CHECK(xe.dim() + ye.dim() == x.dim() + y.dim());
      CHECK(is_within(xe, x));
      CHECK(is_within(y, ye));
      ++done;
    }
    CHECK(done == 60);
  }

  TEST_CASE("certificate examples") {
    AlgebraPtr z5 = fixture_algebra("Z5");
    Subspace b = basis_span(z5, {0, 2, 3});
    auto base = diderrich_certificate(Subspace::scalars(z5), b);
    CHECK(base.algebra_part == Subspace::scalars(z5));
    CHECK(base.module.dim() >= b.dim());
    CHECK(check_certificate(Subspace::scalars(z5), b, base).all());

    AlgebraPtr q3 = fixture_algebra("Q3");
    auto idem = diderrich_certificate(xyy(q3), xyy(q3));
    CHECK(idem.algebra_part == xyy(q3));
    CHECK(idem.module == xyy(q3));
    CHECK(check_certificate(xyy(q3), xyy(q3), idem).all());

    Subspace a5 = basis_span(z5, {0, 1});
    Subspace b5 = basis_span(z5, {0, 1, 2});
    auto ap = diderrich_certificate(a5, b5);
    CHECK(ap.algebra_part.dim() == 1);
    CHECK(ap.module.dim() >= 4);
    CHECK(check_certificate(a5, b5, ap).all());

    OlsonReport o = olson_weak_certificate(a5, b5);
    CHECK(o.holds());
    CHECK(o.dim_vw == 4);
    CHECK(o.dim_vw >= o.dim_s);
    OlsonReport oi = olson_weak_certificate(xyy(q3), xyy(q3));
    CHECK(oi.holds());
    CHECK(oi.dim_s == 2);
    CHECK(oi.dim_h == 2);
  }

  TEST_CASE("certificate preconditions") {
    AlgebraPtr m2 = fixture_algebra("M2");
    Subspace w = Subspace::whole(m2);
    try {
      diderrich_certificate(w, w);
      FAIL("expected NotCommutative");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotCommutative);
    }
    AlgebraPtr q2 = fixture_algebra("Q2");
    Subspace hole = S(q2, {V({1, 0})});
    try {
      diderrich_certificate(hole, Subspace::whole(q2));
      FAIL("expected NoInvertibleInA");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoInvertibleInA);
    }
    try {
      diderrich_certificate(Subspace::whole(q2), hole);
      FAIL("expected NoInvertibleInB");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoInvertibleInB);
    }
  }

  TEST_CASE("random certificates satisfy every invariant") {
    for (const char* family : {"qn", "group", "polyquot"}) {
      for (std::uint64_t s = 0; s < 25; ++s) {
        GenSpec g;
        g.family = family;
        g.n = 4;
        g.dims = {2, 3};
        Instance inst = generate_instance(g, s);
        const Subspace& a = inst.subspaces[0].second;
        const Subspace& b = inst.subspaces[1].second;
        auto cert = diderrich_certificate(a, b, std::nullopt, s);
        CAPTURE(family);
        CAPTURE(s);
        CHECK(check_certificate(a, b, cert).all());
      }
    }
  }

  TEST_CASE("kneser examples") {
    AlgebraPtr q3 = fixture_algebra("Q3");
    KneserReport r = kneser_check(xyy(q3), xyy(q3));
    CHECK(r.dim_product == 2);
    CHECK(r.dim_stabilizer == 2);
    CHECK(r.periodic);
    CHECK(r.holds());

    AlgebraPtr z5 = fixture_algebra("Z5");
    KneserReport ap = kneser_check(basis_span(z5, {0, 1}), basis_span(z5, {0, 1, 2}));
    CHECK(ap.dim_product == 4);
    CHECK(ap.dim_stabilizer == 1);
    CHECK(ap.bound1);
    CHECK(ap.hypothesis_finite);

    KneserReport one = kneser_check(Subspace::scalars(z5), Subspace::scalars(z5));
    CHECK(one.dim_product == 1);
    CHECK(one.holds());

    // Sumset brute force in Z/7 for random subsets.
    AlgebraPtr z7 = fixture_algebra("Z7");
    Rng rng(17);
    for (int k = 0; k < 50; ++k) {
      std::set<int> x{0}, y{0};
      std::vector<std::size_t> xi{0}, yi{0};
      for (int e = 1; e < 7; ++e) {
        if (rng.coin()) x.insert(e), xi.push_back(e);
        if (rng.coin()) y.insert(e), yi.push_back(e);
      }
      std::vector<Vec> xr, yr;
      for (auto i : xi) xr.push_back(z7->basis_vec(i));
      for (auto i : yi) yr.push_back(z7->basis_vec(i));
      KneserReport kr = kneser_check(S(z7, xr), S(z7, yr));
      CHECK(kr.dim_product == oracle::sumset_mod(x, y, 7).size());
      CHECK(kr.holds());
    }
  }

  TEST_CASE("n-fold examples") {
    AlgebraPtr z7 = fixture_algebra("Z7");
    Subspace a = basis_span(z7, {0, 1});
    NfoldReport r = kneser_nfold_check({a, a, a});
    CHECK(r.dim_product == 4);
    CHECK(r.dim_stabilizer == 1);
    CHECK(r.weak_rhs == 4);
    CHECK(r.holds());

    Subspace w = Subspace::whole(z7);
    NfoldReport full = kneser_nfold_check({w, w, w, w});
    CHECK(full.dim_product == 7);
    CHECK(full.dim_stabilizer == 7);
    CHECK(full.weak_rhs == 7);
    CHECK(full.holds());

    // n = 2 matches the commutative two-set bound.
    AlgebraPtr z6 = fixture_algebra("Z6");
    Subspace x = basis_span(z6, {0, 3}), y = basis_span(z6, {0, 2});
    NfoldReport two = kneser_nfold_check({x, y});
    KneserReport kr = kneser_check(x, y);
    CHECK(two.dim_product == kr.dim_product);
    CHECK(two.strong == kr.bound2);
    CHECK_THROWS_AS(kneser_nfold_check({x}), Error);
  }

  TEST_CASE("connectivity formulas") {
    AlgebraPtr q4 = fixture_algebra("Q4");
    Rng rng(3);
    for (int k = 0; k < 40; ++k) {
      Subspace w = random_subspace(q4, 1 + rng.index(4), rng);
      Subspace v = random_unit_subspace(q4, 1 + rng.index(4), rng);
      Rat lambda = R(1 + static_cast<long>(rng.index(4)), 4);
      CHECK(connectivity_value(w, Subspace::scalars(q4), lambda) == (1 - lambda) * Rat(static_cast<long>(w.dim())));
      CHECK(connectivity_value(Subspace::scalars(q4), v, lambda) == Rat(static_cast<long>(v.dim())) - lambda);
    }
    Subspace v = Subspace::scalars(q4);
    CHECK_THROWS_AS(connectivity_value(v, v, Rat(0)), Error);
    CHECK_THROWS_AS(connectivity_value(v, v, R(3, 2)), Error);
    CHECK_NOTHROW(connectivity_value(v, v, Rat(1)));
  }

  TEST_CASE("connectivity is translation invariant and submodular") {
    for (const char* name : {"Q5", "Z6", "QT3"}) {
      AlgebraPtr alg = fixture_algebra(name);
      Rng rng(derive_seed(11, alg->dim()));
      for (int k = 0; k < 30; ++k) {
        Subspace v = random_unit_subspace(alg, 1 + rng.index(alg->dim()), rng);
        Subspace w1 = random_subspace(alg, 1 + rng.index(alg->dim()), rng);
        Subspace w2 = random_subspace(alg, 1 + rng.index(alg->dim()), rng);
        Rat lambda = R(1 + static_cast<long>(rng.index(3)), 3);
        Element x = random_invertible(alg, rng);
        CHECK(connectivity_value(left_translate(x.coords, w1), v, lambda) == connectivity_value(w1, v, lambda));
        Subspace sum = lattice_sum(w1, w2);
        Subspace meet = lattice_intersect(w1, w2);
        Rat lhs = connectivity_value(sum, v, lambda);
        if (meet.dim() > 0) lhs += connectivity_value(meet, v, lambda);
        CHECK(lhs <= connectivity_value(w1, v, lambda) + connectivity_value(w2, v, lambda));
      }
    }
  }

  TEST_CASE("atom examples") {
    AlgebraPtr q3 = fixture_algebra("Q3");
    ConnectivityReport one = atom_exact_split(Subspace::scalars(q3), Rat(1));
    CHECK(one.kappa == 0);
    CHECK(one.atom->dim() == 1);
    CHECK(check_atom(one).all());

    ConnectivityReport r = atom_exact_split(xyy(q3), Rat(1));
    CHECK(r.kappa == 0);
    CHECK(*r.atom == xyy(q3));
    CHECK(r.atom_id == "{0}{1,2}");
    CHECK(r.evaluated.size() == 5);
    CHECK(check_atom(r).all());
    CHECK_FALSE(r.tie_break_fired);

    ConnectivityReport full = atom_exact_split(Subspace::whole(q3), Rat(1));
    CHECK(full.kappa == 0);
    CHECK(full.atom->dim() == 3);
    CHECK(connectivity_value(Subspace::scalars(q3), Subspace::whole(q3), Rat(1)) == 2);

    CHECK_THROWS_AS(atom_exact_split(Subspace::whole(fixture_algebra("QT2")), Rat(1)), Error);
    CHECK_THROWS_AS(atom_exact_split(Subspace::whole(q3), Rat(2)), Error);
  }

  TEST_CASE("atom oracle agrees with the serial reference") {
    for (std::size_t n = 2; n <= 6; ++n) {
      AlgebraPtr q = fixture_algebra("Q" + std::to_string(n));
      Rng rng(100 + n);
      for (int k = 0; k < 8; ++k) {
        Subspace v = random_unit_subspace(q, 1 + rng.index(n), rng);
        Rat lambda = R(1 + static_cast<long>(rng.index(4)), 4);
        ConnectivityReport fast = atom_exact_split(v, lambda);
        ConnectivityReport slow = reference::atom_exact_split(v, lambda);
        CHECK(fast.kappa == slow.kappa);
        CHECK(*fast.atom == *slow.atom);
        CHECK(fast.atom_id == slow.atom_id);
        CHECK(fast.evaluated.size() == slow.evaluated.size());
        CHECK(check_atom(fast).all());
        // Independent minimum: block indicators times V, ranked by plain Gauss-Jordan.
        Rat best = -1;
        for (const auto& blocks : oracle::partitions(n)) {
          std::vector<Vec> rows;
          for (const auto& blk : blocks) {
            Vec ind(n);
            for (auto i : blk) ind[i] = 1;
            for (const auto& r : v.basis()) rows.push_back(oracle::mul(*q, ind, r));
          }
          Rat c = Rat(static_cast<long>(oracle::rank(rows))) - lambda * Rat(static_cast<long>(blocks.size()));
          if (best < 0 || c < best) best = c;
        }
        CHECK(best == fast.kappa);
      }
    }
  }

  TEST_CASE("hamidoune bound against the exact atom") {
    AlgebraPtr q5 = fixture_algebra("Q5");
    Rng rng(55);
    for (int k = 0; k < 40; ++k) {
      Subspace v = random_unit_subspace(q5, 1 + rng.index(5), rng);
      Rat lambda = R(1 + static_cast<long>(rng.index(4)), 4);
      ConnectivityReport c = atom_exact_split(v, lambda);
      Subspace w = random_unit_subspace(q5, 1 + rng.index(5), rng);
      HamidouneReport h = hamidoune_check(w, v, lambda, *c.atom);
      CHECK(h.holds);
      CHECK(h.slack >= 0);
      HamidouneReport at = hamidoune_check(*c.atom, v, lambda, *c.atom);
      CHECK(at.holds);
      CHECK(at.slack == Rat(static_cast<long>(at.dim_wv)) - Rat(static_cast<long>(v.dim())));
    }
  }

  TEST_CASE("tao examples") {
    AlgebraPtr q3 = fixture_algebra("Q3");
    TaoReport t = tao_check(xyy(q3), xyy(q3), Rat(1));
    CHECK(t.hypotheses_met);
    CHECK(t.satisfied());
    CHECK(t.h_bound);
    CHECK(t.v_inside_hv);
    CHECK(t.hv_bound);

    TaoReport unit = tao_check(Subspace::scalars(q3), Subspace::scalars(q3), Rat(1));
    CHECK(unit.hypotheses_met);
    CHECK(unit.dim_h == 1);
    CHECK(unit.satisfied());

    AlgebraPtr q4 = fixture_algebra("Q4");
    Subspace part = S(q4, {V({1, 1, 0, 0}), V({0, 0, 1, 1})});
    TaoReport p = tao_check(part, part, R(1, 2));
    CHECK(p.hypotheses_met);
    CHECK(p.satisfied());

    // dim VV = 3 > (2 - 3/2) * 2
    Subspace v2 = S(q4, {V({1, 1, 1, 1}), V({1, 2, 3, 4})});
    TaoReport miss = tao_check(v2, v2, R(3, 2));
    CHECK_FALSE(miss.hypotheses_met);
    CHECK(miss.satisfied());

    CHECK_THROWS_AS(tao_check(part, part, Rat(2)), Error);
    CHECK_THROWS_AS(tao_check(part, part, Rat(0)), Error);
  }

  TEST_CASE("tao on the small family") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      GenSpec g;
      g.family = "small";
      g.n = 5;
      Instance inst = generate_instance(g, s);
      for (Rat eps : {R(1, 2), R(1), R(3, 2)}) {
        TaoReport t = tao_check(inst.subspaces[0].second, inst.subspaces[1].second, eps);
        CHECK(t.satisfied());
      }
    }
  }
}
