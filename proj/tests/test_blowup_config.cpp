#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "x4/blowup.hpp"

using namespace x4;

TEST_CASE("pair bookkeeping") {
  CHECK(all_pairs().size() == 10);
  CHECK(all_pair_pairs().size() == 15);
  CHECK(pair_name({0, 1}) == "(01)");
  CHECK(pair_pair_name({{{0, 1}, {2, 3}}}) == "(01)(23)");
  // lexicographic order of the fifteen disjoint pair-pairs
  CHECK(pair_pair_name(all_pair_pairs()[0]) == "(01)(23)");
  CHECK(pair_pair_name(all_pair_pairs()[14]) == "(14)(23)");
}

TEST_CASE("five-point blow-up configuration") {
  Configuration s5 = build_s5();
  CHECK(s5.lattice->rank() == 5);
  CHECK(s5.curves.size() == 10);
  for (const auto& r : s5.curves) CHECK(r.self_int == -1);
  CHECK(pairing(*s5.lattice, s5.canonical_class, s5.canonical_class) == 5);
  CHECK(verify_anticanonical(s5));
  // explicit classes
  CHECK(s5.curve("E(01)").class_vector == ZVec{0, 1, 0, 0, 0});
  CHECK(s5.curve("E(12)").class_vector == ZVec{1, 0, 0, -1, -1});
  CHECK_THROWS(s5.curve("E(99)"));

  IncidenceGraph ig = incidence_graph(s5);
  CHECK(ig.vertices.size() == 10);
  CHECK(ig.edges.size() == 15);
  // 3-regular, all weights 1 (Petersen)
  std::map<int, int> deg;
  for (const auto& [i, j, w] : ig.edges) {
    CHECK(w == 1);
    ++deg[i];
    ++deg[j];
  }
  for (int v = 0; v < 10; ++v) CHECK(deg[v] == 3);
  // adjacency = disjointness of index pairs
  CHECK(pairing(*s5.lattice, s5.curve("E(01)").class_vector, s5.curve("E(23)").class_vector) == 1);
  CHECK(pairing(*s5.lattice, s5.curve("E(01)").class_vector, s5.curve("E(12)").class_vector) == 0);
}

TEST_CASE("fifteen-point blow-up configuration") {
  Configuration y4 = build_y4();
  CHECK(y4.lattice->rank() == 20);
  CHECK(y4.curves.size() == 25);
  CHECK(pairing(*y4.lattice, y4.canonical_class, y4.canonical_class) == -10);
  int f = 0, g = 0;
  for (const auto& r : y4.curves) {
    if (r.label.kind == CurveKind::strict_F) {
      ++f;
      CHECK(r.self_int == -4);
    } else {
      ++g;
      CHECK(r.self_int == -1);
    }
  }
  CHECK(f == 10);
  CHECK(g == 15);
  // strict transforms are pairwise orthogonal
  for (const Pair& p : all_pairs())
    for (const Pair& q : all_pairs())
      if (p < q)
        CHECK(pairing(*y4.lattice, y4.curve("F" + pair_name(p)).class_vector,
                      y4.curve("F" + pair_name(q)).class_vector) == 0);
  // each F meets exactly the three G's over its incident intersection points
  IncidenceGraph ig = incidence_graph(y4);
  CHECK(ig.edges.size() == 30);
  std::map<int, int> deg;
  for (const auto& [i, j, w] : ig.edges) {
    CHECK(w == 1);
    ++deg[i];
    ++deg[j];
  }
  for (int v = 0; v < 25; ++v) CHECK(deg[v] == (v < 10 ? 3 : 2));
  CHECK(verify_anticanonical(y4));
  // perturbation soundness: altering one class must break the identity
  Configuration bad = y4;
  bad.curves[0].class_vector[0] += 1;
  CHECK_FALSE(verify_anticanonical(bad));
  // spot-check a strict transform expansion: F(01) = E1 - G(01)(23) - G(01)(24) - G(01)(34)
  ZVec f01(20);
  f01[1] = 1;
  f01[5] = f01[6] = f01[7] = -1;
  CHECK(y4.curve("F(01)").class_vector == f01);
}

TEST_CASE("negative class enumeration at bound 8") {
  Configuration y4 = build_y4();
  std::vector<NegativeClass> classes = enumerate_negative_classes(y4, 8);
  CHECK(classes.size() == 25);
  std::set<ZVec> b_set, f2_set;
  for (const auto& nc : classes) {
    REQUIRE(nc.taxonomy != Taxonomy::none);
    CHECK((nc.taxonomy == Taxonomy::b || nc.taxonomy == Taxonomy::f2));
    (nc.taxonomy == Taxonomy::b ? b_set : f2_set).insert(nc.coords);
  }
  std::set<ZVec> f_curves, g_curves;
  for (const auto& r : y4.curves)
    (r.label.kind == CurveKind::strict_F ? f_curves : g_curves).insert(r.class_vector);
  CHECK(b_set == f_curves);
  CHECK(f2_set == g_curves);
  CHECK_THROWS(enumerate_negative_classes(y4, 0));
  CHECK_THROWS(enumerate_negative_classes(build_s5(), 8));
}

TEST_CASE("negative class enumeration at bound 13 reaches the f1 stratum") {
  Configuration y4 = build_y4();
  std::vector<NegativeClass> classes = enumerate_negative_classes(y4, 13);
  CHECK(classes.size() == 60);
  std::map<std::pair<Taxonomy, Z>, int> strata;
  for (const auto& nc : classes) ++strata[{nc.taxonomy, nc.degree}];
  CHECK(strata[{Taxonomy::b, 1}] == 10);
  CHECK(strata[{Taxonomy::f2, 1}] == 15);
  CHECK(strata[{Taxonomy::f2, 10}] == 15);
  CHECK(strata[{Taxonomy::f1, 13}] == 20);
  // the f1 witness 2H - E3 - E4 - G(03)(24) - G(04)(13) - G(14)(23)
  ZVec fl(20);
  fl[0] = 2;
  fl[3] = fl[4] = -1;
  fl[13] = fl[15] = fl[19] = -1;
  bool found = false;
  for (const auto& nc : classes)
    if (nc.coords == fl) {
      found = true;
      CHECK(nc.taxonomy == Taxonomy::f1);
      CHECK(nc.degree == 13);
    }
  CHECK(found);
  // it meets exactly one strict transform, doubly
  for (const Pair& p : all_pairs()) {
    Z m = pairing(*y4.lattice, fl, y4.curve("F" + pair_name(p)).class_vector);
    CHECK(m == (pair_name(p) == "(34)" ? 2 : 0));
  }
  // every f-class satisfies the numerical-fiber constraints
  ZVec branch(20);
  for (const auto& r : y4.curves)
    if (r.label.kind == CurveKind::strict_F)
      for (int i = 0; i < 20; ++i) branch[i] += r.class_vector[i];
  for (const auto& nc : classes) {
    if (nc.taxonomy == Taxonomy::b) continue;
    Z self = pairing(*y4.lattice, nc.coords, nc.coords);
    Z k = pairing(*y4.lattice, nc.coords, y4.canonical_class);
    CHECK(self + k == -2);
    CHECK(pairing(*y4.lattice, nc.coords, branch) == 2);
  }
}

TEST_CASE("ample proxy is positive on the configuration") {
  Configuration y4 = build_y4();
  ZVec a = enumeration_ample_proxy();
  for (const auto& r : y4.curves) CHECK(pairing(*y4.lattice, a, r.class_vector) > 0);
  CHECK(pairing(*y4.lattice, a, a) == 65);
}

TEST_CASE("conic fibrations on the quintic del Pezzo") {
  Configuration s5 = build_s5();
  std::vector<ConicFibration> fibs = find_conic_fibrations(s5);
  REQUIRE(fibs.size() == 5);
  for (const auto& f : fibs) {
    CHECK(pairing(*s5.lattice, f.fiber_class, f.fiber_class) == 0);
    CHECK(f.decompositions.size() == 3);
    for (const auto& [a, b] : f.decompositions) {
      ZVec sum(5);
      const ZVec& va = s5.curve(a).class_vector;
      const ZVec& vb = s5.curve(b).class_vector;
      for (int i = 0; i < 5; ++i) sum[i] = va[i] + vb[i];
      CHECK(sum == f.fiber_class);
    }
  }
  CHECK(fibs[0].fiber_class == ZVec{1, -1, 0, 0, 0});
  CHECK(fibs[0].decompositions[0] == std::array<std::string, 2>{"E(02)", "E(34)"});
  CHECK(fibs[4].fiber_class == ZVec{2, -1, -1, -1, -1});
  CHECK(fibs[4].decompositions ==
        std::vector<std::array<std::string, 2>>{{"E(12)", "E(34)"}, {"E(13)", "E(24)"}, {"E(14)", "E(23)"}});
  CHECK_THROWS(find_conic_fibrations(build_y4()));
}

TEST_CASE("linear equivalence checks") {
  Configuration y4 = build_y4();
  // the two-term statement is false as written
  FormalSum lhs{{2, "F(14)(23)"}, {-2, "F(12)(34)"}};
  FormalSum rhs{{1, "F(14)"}, {1, "F(23)"}, {-1, "F(12)"}, {-1, "F(34)"}};
  CHECK_FALSE(verify_linear_equivalence(y4, lhs, rhs));
  // the total-transform identity holds
  FormalSum t1{{1, "F(14)"}, {1, "F(23)"}, {2, "F(14)(23)"}, {1, "F(02)(14)"}, {1, "F(03)(14)"},
               {1, "F(01)(23)"}, {1, "F(04)(23)"}};
  FormalSum t2{{1, "F(12)"}, {1, "F(34)"}, {2, "F(12)(34)"}, {1, "F(03)(12)"}, {1, "F(04)(12)"},
               {1, "F(01)(34)"}, {1, "F(02)(34)"}};
  CHECK(verify_linear_equivalence(y4, t1, t2));
  CHECK_THROWS(verify_linear_equivalence(y4, FormalSum{{1, "nope"}}, FormalSum{}));
}

TEST_CASE("dot export") {
  Configuration s5 = build_s5();
  std::string dot = incidence_graph_dot(incidence_graph(s5));
  CHECK(dot.find("graph configuration {") == 0);
  CHECK(dot.find("\"E(01)\" -- \"E(23)\" [label=1];") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);  // undirected only
}
