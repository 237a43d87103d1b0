#include "superpbw/bases.hpp"

#include "oracles.hpp"
#include "superpbw/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace superpbw;

TEST_CASE("type I polytopes: counts factor as 2^d times the classical dimensions") {
  SECTION("sl(2|1): 4(k+1)") {
    RootSystem rs = build_root_system(AlgebraId::A(1, 0));
    for (long long k = 0; k <= 3; ++k) {
      long long count = count_lattice_points(type_one_polytope(rs, {k}));
      CHECK(count == 4 * (k + 1));
      Rat c = find_typical_charge(rs, {k});
      CHECK(count == dim_typical(rs, ambient_weight(rs, {k}, c)));
    }
  }
  SECTION("C(2): 4(k+1)") {
    RootSystem rs = build_root_system(AlgebraId::C(2));
    for (long long k = 0; k <= 3; ++k)
      CHECK(count_lattice_points(type_one_polytope(rs, {k})) == 4 * (k + 1));
  }
  SECTION("sl(3|1): 8 x A2 dimension") {
    RootSystem rs = build_root_system(AlgebraId::A(2, 0));
    for (long long k1 = 0; k1 <= 2; ++k1)
      for (long long k2 = 0; k2 <= 2; ++k2)
        CHECK(count_lattice_points(type_one_polytope(rs, {k1, k2})) ==
              8 * oracles::dim_a2(k1, k2));
  }
  SECTION("sl(3|2): 64 x A1 x A2 dimensions") {
    RootSystem rs = build_root_system(AlgebraId::A(2, 1));
    for (long long l = 0; l <= 1; ++l)
      for (long long k1 = 0; k1 <= 1; ++k1)
        for (long long k2 = 0; k2 <= 1; ++k2)
          CHECK(count_lattice_points(type_one_polytope(rs, {l, k1, k2})) ==
                64 * oracles::dim_a1(l) * oracles::dim_a2(k1, k2));
  }
  SECTION("C(3): 16 x C2 dimension") {
    RootSystem rs = build_root_system(AlgebraId::C(3));
    for (long long a = 0; a <= 2; ++a)
      for (long long b = 0; b <= 2; ++b)
        CHECK(count_lattice_points(type_one_polytope(rs, {a, b})) ==
              16 * oracles::dim_sp4(a, b));
  }
  SECTION("type II algebras are rejected") {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    CHECK_THROWS_AS(type_one_polytope(rs, {1, 0}), std::invalid_argument);
  }
}

TEST_CASE("orthosymplectic polytopes: counts equal the typical dimension") {
  SECTION("n = 1") {
    RootSystem rs = build_root_system(AlgebraId::B0(1));
    for (long long m = 0; m <= 4; ++m)
      CHECK(count_lattice_points(osp_polytope(rs, {m})) == 2 * m + 1);
  }
  SECTION("n = 2 fundamental weights") {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    CHECK(count_lattice_points(osp_polytope(rs, {1, 0})) == 5);
    CHECK(count_lattice_points(osp_polytope(rs, {0, 1})) == 10);
  }
  SECTION("n = 2 sweep") {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    for (long long a = 0; a <= 3; ++a)
      for (long long b = 0; a + b <= 3; ++b)
        CHECK(count_lattice_points(osp_polytope(rs, {a, b})) ==
              dim_typical(rs, ambient_weight(rs, {a, b})));
  }
}

TEST_CASE("exceptional polytopes") {
  SECTION("D(2,1;alpha): full polytope") {
    RootSystem rs = build_root_system(AlgebraId::D21(Rat(1)));
    auto ep = exceptional_polytope(rs, {3, 0, 0});
    CHECK(ep.even_factor_dim == 1);
    CHECK(count_lattice_points(ep.spec) == 32);
    for (const Rat& a : {Rat(1), Rat(1, 2)}) {
      RootSystem sys = build_root_system(AlgebraId::D21(a));
      auto e2 = exceptional_polytope(sys, {3, 1, 2});
      CHECK(count_lattice_points(e2.spec) == 192);
      CHECK(count_lattice_points(e2.spec) == dim_typical(sys, ambient_weight(sys, {3, 1, 2})));
    }
  }
  SECTION("weights outside the desk class are rejected") {
    RootSystem rs = build_root_system(AlgebraId::D21(Rat(1)));
    CHECK_THROWS_AS(exceptional_polytope(rs, {2, 0, 0}), std::invalid_argument);
    RootSystem g3 = build_root_system(AlgebraId::G3());
    CHECK_THROWS_AS(exceptional_polytope(g3, {5, 0, 0}), std::invalid_argument);
  }
  SECTION("G(3): odd factor count and even plugin") {
    RootSystem rs = build_root_system(AlgebraId::G3());
    auto ep = exceptional_polytope(rs, {6, 0, 0});
    CHECK(count_lattice_points(ep.spec) == 448);
    CHECK(ep.even_factor_dim == 1);
    // (6,1,0) is atypical ((lambda+rho, d-e3) vanishes), so step up to m1 = 7
    auto ep2 = exceptional_polytope(rs, {7, 1, 0});
    CHECK(ep2.even_factor_dim == 7);
    CHECK(count_lattice_points(ep2.spec) * ep2.even_factor_dim ==
          dim_typical(rs, ambient_weight(rs, {7, 1, 0})));
  }
  SECTION("F(4): odd factor count") {
    RootSystem rs = build_root_system(AlgebraId::F4());
    auto ep = exceptional_polytope(rs, {7, 0, 0, 0});
    CHECK(count_lattice_points(ep.spec) == 1024);
    CHECK(count_lattice_points(ep.spec) == dim_typical(rs, ambient_weight(rs, {7, 0, 0, 0})));
  }
}

TEST_CASE("counting lemma") {
  CHECK(comb_count(1, 1).value == 3);
  CHECK(comb_count(3, 4).value == 32);
  CHECK(comb_count(6, 7).value == 448);
  CHECK(comb_count(7, 8).value == 1024);
  SECTION("closed form against literal enumeration") {
    for (int l = 1; l <= 6; ++l)
      for (long long m = l - 1; m <= 8; ++m) {
        auto cc = comb_count(m, l);
        CHECK(cc.closed_form);
        CHECK(cc.value == oracles::comb_brute(m, l));
      }
  }
  SECTION("below the precondition the count is enumerated and flagged") {
    auto cc = comb_count(0, 3);
    CHECK_FALSE(cc.closed_form);
    CHECK(cc.value == oracles::comb_brute(0, 3));
    CHECK(cc.value == 1);
  }
}

TEST_CASE("fundamental split") {
  SECTION("n = 1, label 2, the (2,0) point") {
    RootSystem rs = build_root_system(AlgebraId::B0(1));
    auto r = minkowski_split(rs, {2}, {2, 0});
    CHECK(r.part == MultiExponent{1, 0});
    CHECK(r.remainder == MultiExponent{1, 0});
  }
  SECTION("the origin splits trivially") {
    RootSystem rs = build_root_system(AlgebraId::B0(1));
    auto r = minkowski_split(rs, {1}, {0, 0});
    CHECK(r.part == MultiExponent{0, 0});
    CHECK(r.remainder == MultiExponent{0, 0});
  }
  SECTION("n = 2 worked example keeps the whole point") {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    // s = e_{2d1} + e_{delta_2}; coordinates (2d2, d1-d2, d1+d2, 2d1, delta1, delta2)
    MultiExponent s = {0, 0, 0, 1, 0, 1};
    auto r = minkowski_split(rs, {1, 1}, s);
    CHECK(r.part == s);
    CHECK(r.remainder == MultiExponent(6, 0));
  }
  SECTION("errors") {
    RootSystem rs = build_root_system(AlgebraId::B0(1));
    CHECK_THROWS_AS(minkowski_split(rs, {1}, {2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(minkowski_split(rs, {0}, {0, 0}), std::invalid_argument);
  }
  SECTION("iterated splits decompose every point into fundamental parts") {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    for (long long a = 0; a <= 2; ++a)
      for (long long b = 0; b <= 2; ++b) {
        if (a == 0 && b == 0) continue;
        std::vector<long long> labels = {a, b};
        for_each_lattice_point(osp_polytope(rs, labels), [&](const MultiExponent& s) {
          std::vector<long long> rest = labels;
          MultiExponent acc(s.size(), 0), rem = s;
          while (rest[0] + rest[1] > 0) {
            MinkowskiSplitter splitter(rs, rest);
            auto r = splitter.split(rem);
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += r.part[k];
            rem = r.remainder;
            rest[splitter.split_index() - 1] -= 1;
          }
          REQUIRE(rem == MultiExponent(s.size(), 0));
          REQUIRE(acc == s);
        });
      }
  }
}

TEST_CASE("capped Minkowski equality for B(0,2)") {
  RootSystem rs = build_root_system(AlgebraId::B0(2));
  auto reports = verify_minkowski(2, 1);
  for (const auto& r : reports) {
    INFO(r.instance);
    CHECK(r.pass);
  }
}

TEST_CASE("one-column tableaux") {
  SECTION("n = 2, i = 1: five boxes") {
    auto ts = kt_tableaux(2, 1);
    std::set<std::string> got;
    for (const auto& t : ts) got.insert(kt_tableau_str(t));
    CHECK(got == std::set<std::string>{"[#1]", "[1]", "[1b]", "[2]", "[2b]"});
  }
  SECTION("n = 1, i = 1: three boxes") {
    auto ts = kt_tableaux(1, 1);
    std::set<std::string> got;
    for (const auto& t : ts) got.insert(kt_tableau_str(t));
    CHECK(got == std::set<std::string>{"[#1]", "[1]", "[1b]"});
  }
  CHECK(kt_tableaux(2, 2).size() == 10);
  CHECK(kt_tableaux(3, 2).size() == 21);
}

TEST_CASE("tableau map") {
  RootSystem rs = build_root_system(AlgebraId::B0(2));
  // canonical coordinate order: (2d2, d1-d2, d1+d2, 2d1, delta1, delta2)
  const int D1_PLUS_D2 = 2, TWO_D1 = 3, DELTA1 = 4, DELTA2 = 5;

  MultiExponent zero(6, 0);
  CHECK(kt_tableau_str(kt_map(rs, 2, zero)) == "[1,2]");

  MultiExponent s1(6, 0);
  s1[TWO_D1] = 1;
  CHECK(kt_tableau_str(kt_map(rs, 2, s1)) == "[1b,2]");

  MultiExponent s2(6, 0);
  s2[DELTA1] = 1;
  CHECK(kt_tableau_str(kt_map(rs, 2, s2)) == "[#1,2]");

  SECTION("sorting can move a marked letter above its own row") {
    MultiExponent s(6, 0);
    s[D1_PLUS_D2] = 1;  // replaces 1 by 2bar
    s[DELTA2] = 1;
    CHECK(kt_tableau_str(kt_map(rs, 2, s)) == "[#2,2b]");
  }
  SECTION("points outside S(w_i) are rejected") {
    MultiExponent s(6, 0);
    s[TWO_D1] = 2;
    CHECK_THROWS_AS(kt_map(rs, 2, s), std::invalid_argument);
  }
  SECTION("injectivity and counts for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      RootSystem sys = build_root_system(AlgebraId::B0(n));
      for (int i = 1; i <= n; ++i) {
        std::vector<long long> unit(n, 0);
        unit[i - 1] = 1;
        auto pts = lattice_points(osp_polytope(sys, unit));
        std::set<KTTableau> images;
        for (const auto& s : pts) images.insert(kt_map(sys, i, s));
        long long dim = dim_typical(sys, ambient_weight(sys, unit));
        CHECK(static_cast<long long>(images.size()) == dim);
        CHECK(static_cast<long long>(pts.size()) == dim);
        CHECK(static_cast<long long>(kt_tableaux(n, i).size()) == dim);
      }
    }
  }
}

TEST_CASE("assembled bases match the typical dimension") {
  {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    MonomialBasis b = monomial_basis(rs, {1, 0});
    CHECK(b.size() == 5);
    CHECK(b.even_factor_dim == 1);
  }
  {
    RootSystem rs = build_root_system(AlgebraId::A(1, 0));
    MonomialBasis b = monomial_basis(rs, {1});
    CHECK(b.size() == 8);
    REQUIRE(b.charge.has_value());
    CHECK(is_typical(rs, ambient_weight(rs, {1}, b.charge)));
  }
  {
    RootSystem rs = build_root_system(AlgebraId::F4());
    MonomialBasis b = monomial_basis(rs, {7, 0, 0, 1});
    CHECK(b.size() == dim_typical(rs, ambient_weight(rs, {7, 0, 0, 1})));
    CHECK(b.even_factor_dim == 7);
  }
}
