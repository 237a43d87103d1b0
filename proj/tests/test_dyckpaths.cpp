#include "superpbw/dyckpaths.hpp"

#include "oracles.hpp"
#include "superpbw/bases.hpp"
#include "superpbw/weights.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace superpbw;

namespace {
std::vector<std::string> path_names(const RootSystem& rs, const DyckPath& p) {
  std::vector<std::string> out;
  for (int idx : p.roots) out.push_back(format_root(rs, rs.positive[idx].coords));
  return out;
}

std::set<std::vector<std::string>> path_set(const RootSystem& rs,
                                            const std::vector<DyckPath>& paths) {
  std::set<std::vector<std::string>> out;
  for (const auto& p : paths) {
    auto names = path_names(rs, p);
    REQUIRE(out.insert(names).second);  // duplicate-free
  }
  return out;
}
}  // namespace

TEST_CASE("type A Dyck paths") {
  SECTION("rank 1") {
    RootSystem rs = build_root_system(AlgebraId::A(1, 0));
    auto paths = dyck_paths_A(rs, 0);
    REQUIRE(paths.size() == 1);
    CHECK(path_names(rs, paths[0]) == std::vector<std::string>{"e1-e2"});
  }
  SECTION("rank 2") {
    RootSystem rs = build_root_system(AlgebraId::A(2, 0));
    auto got = path_set(rs, dyck_paths_A(rs, 0));
    std::set<std::vector<std::string>> want = {
        {"e1-e2"}, {"e2-e3"}, {"e1-e2", "e1-e3", "e2-e3"}};
    CHECK(got == want);
  }
  SECTION("rank 3 has seven paths, including the one through the middle simple root") {
    RootSystem rs = build_root_system(AlgebraId::A(3, 0));
    auto got = path_set(rs, dyck_paths_A(rs, 0));
    CHECK(got.size() == 7);
    CHECK(got.count({"e1-e2", "e1-e3", "e1-e4", "e2-e4", "e3-e4"}) == 1);
    CHECK(got.count({"e1-e2", "e1-e3", "e2-e3", "e2-e4", "e3-e4"}) == 1);
  }
  SECTION("the through-simple inequality is not redundant at rank 3") {
    // With labels (0,2,0) the full polytope has exactly dim-many points; the
    // path through e2-e3 is what excludes the 21st candidate.
    RootSystem rs = build_root_system(AlgebraId::A(3, 0));
    long long count = count_lattice_points(type_one_polytope(rs, {0, 2, 0}));
    CHECK(count == (1 << 4) * oracles::dim_a3(0, 2, 0));
    CHECK(count == (1 << 4) * 20);
  }
}

TEST_CASE("symplectic Dyck paths") {
  SECTION("rank 1 factor of B(0,1)") {
    RootSystem rs = build_root_system(AlgebraId::B0(1));
    auto paths = dyck_paths_C(rs, 0);
    REQUIRE(paths.size() == 1);
    CHECK(path_names(rs, paths[0]) == std::vector<std::string>{"2d1"});
    CHECK(paths[0].kind == PathKind::long_end);
  }
  SECTION("rank 2 factor of B(0,2)") {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    auto paths = dyck_paths_C(rs, 0);
    std::set<std::vector<std::string>> long_end, even_end;
    for (const auto& p : paths)
      (p.kind == PathKind::long_end ? long_end : even_end).insert(path_names(rs, p));
    std::set<std::vector<std::string>> want_long = {
        {"2d2"}, {"d1-d2", "d1+d2", "2d1"}, {"d1-d2", "d1+d2", "2d2"}};
    std::set<std::vector<std::string>> want_even = {{"d1-d2"}};
    CHECK(long_end == want_long);
    CHECK(even_end == want_even);
  }
}

TEST_CASE("orthosymplectic Dyck paths") {
  SECTION("n = 1: the single forced path") {
    RootSystem rs = build_root_system(AlgebraId::B0(1));
    auto paths = dyck_paths_osp(rs);
    REQUIRE(paths.size() == 1);
    CHECK(path_names(rs, paths[0]) == std::vector<std::string>{"2d1", "d1"});
    CHECK(paths[0].kind == PathKind::odd_end);
  }
  SECTION("n = 2: the four paths") {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    auto got = path_set(rs, dyck_paths_osp(rs));
    std::set<std::vector<std::string>> want = {{"d1-d2"},
                                               {"2d2", "d2"},
                                               {"d1-d2", "d1+d2", "2d1", "d1"},
                                               {"d1-d2", "d1+d2", "2d2", "d1"}};
    CHECK(got == want);
  }
  SECTION("every case-(b) path ends with the odd root of its start index") {
    for (int n = 1; n <= 4; ++n) {
      RootSystem rs = build_root_system(AlgebraId::B0(n));
      for (const auto& p : dyck_paths_osp(rs)) {
        if (p.kind != PathKind::odd_end) continue;
        int last = p.roots.back();
        CHECK(last == rs.odd_begin() + p.start - 1);
        CHECK(p.window_hi == n);
      }
    }
  }
  SECTION("regeneration is deterministic") {
    RootSystem rs = build_root_system(AlgebraId::B0(3));
    auto a = dyck_paths_osp(rs);
    auto b = dyck_paths_osp(rs);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].roots == b[i].roots);
  }
  SECTION("no root repeats within a path") {
    for (int n = 1; n <= 4; ++n) {
      RootSystem rs = build_root_system(AlgebraId::B0(n));
      for (const auto& p : dyck_paths_osp(rs)) {
        std::set<int> distinct(p.roots.begin(), p.roots.end());
        CHECK(distinct.size() == p.roots.size());
      }
    }
  }
}

TEST_CASE("compiled polytopes") {
  SECTION("B(0,1): one path inequality plus the odd cap") {
    RootSystem rs = build_root_system(AlgebraId::B0(1));
    PolytopeSpec spec = compile_polytope(rs, dyck_paths_osp(rs), {4});
    REQUIRE(spec.ineqs.size() == 1);
    CHECK(spec.ineqs[0].support == std::vector<int>{0, 1});
    CHECK(spec.ineqs[0].bound == 4);
    CHECK(spec.odd == std::vector<std::uint8_t>{0, 1});
  }
  SECTION("B(0,2): the four inequalities with their windows") {
    RootSystem rs = build_root_system(AlgebraId::B0(2));
    PolytopeSpec spec = compile_polytope(rs, dyck_paths_osp(rs), {2, 5});
    std::set<std::pair<std::set<std::string>, long long>> got;
    for (const auto& q : spec.ineqs) {
      std::set<std::string> names;
      for (int c : q.support) names.insert(format_root(rs, rs.positive[c].coords));
      got.insert({names, q.bound});
    }
    std::set<std::pair<std::set<std::string>, long long>> want = {
        {{"d1-d2"}, 2},
        {{"2d2", "d2"}, 5},
        {{"d1-d2", "d1+d2", "2d1", "d1"}, 7},
        {{"d1-d2", "d1+d2", "2d2", "d1"}, 7}};
    CHECK(got == want);
  }
  SECTION("all labels zero collapses to the origin") {
    RootSystem rs = build_root_system(AlgebraId::B0(3));
    auto pts = lattice_points(compile_polytope(rs, dyck_paths_osp(rs), {0, 0, 0}));
    CHECK(pts == std::vector<MultiExponent>{MultiExponent(rs.total_roots(), 0)});
  }
}

TEST_CASE("path counts against the dimension formula") {
  RootSystem rs = build_root_system(AlgebraId::B0(3));
  auto paths = dyck_paths_osp(rs);
  for (const auto& m : {std::vector<long long>{1, 0, 1}, {0, 1, 1}, {2, 1, 0}}) {
    INFO("labels " << m[0] << "," << m[1] << "," << m[2]);
    CHECK(count_lattice_points(compile_polytope(rs, paths, m)) ==
          dim_typical(rs, ambient_weight(rs, m)));
  }
}
