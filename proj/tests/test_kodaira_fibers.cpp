#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "x4/kodaira.hpp"
#include "x4/workbench.hpp"

using namespace x4;

namespace {

// Abstract candidate from an adjacency (off-diagonal intersection) matrix.
FiberCandidate abstract_candidate(const std::vector<std::vector<long>>& adj) {
  int n = static_cast<int>(adj.size());
  FiberCandidate fc;
  fc.int_matrix = Mat(n, n);
  for (int i = 0; i < n; ++i) {
    CurveRecord r;
    r.label = {CurveKind::derived, "C" + std::to_string(i)};
    r.self_int = -2;
    fc.components.push_back(std::move(r));
    for (int j = 0; j < n; ++j) fc.int_matrix(i, j) = i == j ? -2 : adj[i][j];
  }
  return fc;
}

FiberCandidate cycle_candidate(int m) {
  std::vector<std::vector<long>> adj(m, std::vector<long>(m, 0));
  if (m == 2) {
    adj[0][1] = adj[1][0] = 2;  // two components meeting twice
  } else {
    for (int i = 0; i < m; ++i) {
      adj[i][(i + 1) % m] = 1;
      adj[(i + 1) % m][i] = 1;
    }
  }
  return abstract_candidate(adj);
}

FiberCandidate d_candidate(int m) {
  // chain of m-4 central nodes, two tails on each end
  std::vector<std::vector<long>> adj(m, std::vector<long>(m, 0));
  int c = m - 4;  // central nodes are 0..c-1
  auto link = [&](int a, int b) { adj[a][b] = adj[b][a] = 1; };
  for (int i = 0; i + 1 < c; ++i) link(i, i + 1);
  link(c, 0);
  link(c + 1, 0);
  link(c + 2, c - 1);
  link(c + 3, c - 1);
  return abstract_candidate(adj);
}

FiberCandidate chain_with_branch(const std::vector<std::pair<int, int>>& edges, int m) {
  std::vector<std::vector<long>> adj(m, std::vector<long>(m, 0));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = 1;
  return abstract_candidate(adj);
}

}  // namespace

TEST_CASE("cycle fibers are recognized as A-type") {
  for (int m = 2; m <= 18; ++m) {
    KodairaType kt = recognize_fiber(cycle_candidate(m));
    CHECK(kt.family == KodairaFamily::A);
    CHECK(kt.index == m - 1);
    CHECK(kt.m == m);
    CHECK(kt.m1 == m);
    for (const Z& v : kt.multiplicities) CHECK(v == 1);
    CHECK(kt.name() == "A~" + std::to_string(m - 1));
  }
}

TEST_CASE("fork fibers are recognized as D-type") {
  for (int m = 5; m <= 8; ++m) {
    KodairaType kt = recognize_fiber(d_candidate(m));
    CHECK(kt.family == KodairaFamily::D);
    CHECK(kt.index == m - 1);
    CHECK(kt.m == m);
    CHECK(kt.m1 == 4);
    int twos = 0;
    for (const Z& v : kt.multiplicities)
      if (v == 2) ++twos;
    CHECK(twos == m - 4);
  }
}

TEST_CASE("exceptional fibers") {
  // affine E6: chain 0-1-2-3-4 with branch 2-5-6
  KodairaType e6 = recognize_fiber(chain_with_branch({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}, 7));
  CHECK(e6.family == KodairaFamily::E);
  CHECK(e6.index == 6);
  CHECK(e6.m1 == 3);
  // affine E7: chain 0-1-2-3-4-5-6 with branch 3-7
  KodairaType e7 =
      recognize_fiber(chain_with_branch({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}}, 8));
  CHECK(e7.family == KodairaFamily::E);
  CHECK(e7.index == 7);
  CHECK(e7.m1 == 2);
  // affine E8: chain 0-...-7 with branch 5-8
  KodairaType e8 = recognize_fiber(
      chain_with_branch({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}}, 9));
  CHECK(e8.family == KodairaFamily::E);
  CHECK(e8.index == 8);
  CHECK(e8.m1 == 1);
  Z top = *std::max_element(e8.multiplicities.begin(), e8.multiplicities.end());
  CHECK(top == 6);
}

TEST_CASE("recognition is invariant under component relabeling") {
  FiberCandidate base = d_candidate(7);
  std::mt19937 rng(3);
  std::vector<int> perm(7);
  for (int t = 0; t < 10; ++t) {
    for (int i = 0; i < 7; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    FiberCandidate shuffled = base;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) shuffled.int_matrix(perm[i], perm[j]) = base.int_matrix(i, j);
    KodairaType kt = recognize_fiber(shuffled);
    CHECK(kt.family == KodairaFamily::D);
    CHECK(kt.index == 6);
  }
}

TEST_CASE("malformed candidates are rejected") {
  CHECK_THROWS(recognize_fiber(abstract_candidate({})));
  // single (-2)-component: kernel is trivial
  CHECK_THROWS(recognize_fiber(abstract_candidate({{0}})));
  // disconnected pair
  CHECK_THROWS(recognize_fiber(abstract_candidate({{0, 0}, {0, 0}})));
  // negative off-diagonal entry
  CHECK_THROWS(recognize_fiber(abstract_candidate({{0, -1}, {-1, 0}})));
  // self-intersection != -2
  FiberCandidate bad = cycle_candidate(3);
  bad.int_matrix(0, 0) = -1;
  CHECK_THROWS(recognize_fiber(bad));
  // A-chain that is not closed up: kernel rank 0
  CHECK_THROWS(recognize_fiber(chain_with_branch({{0, 1}, {1, 2}}, 3)));
}

TEST_CASE("even rank-2 determinant feasibility") {
  CHECK(even_rank2_feasible(3));
  CHECK(even_rank2_feasible(4));
  CHECK(even_rank2_feasible(7));
  CHECK(even_rank2_feasible(8));
  CHECK_FALSE(even_rank2_feasible(1));
  CHECK_FALSE(even_rank2_feasible(2));
  CHECK_FALSE(even_rank2_feasible(5));
  CHECK_FALSE(even_rank2_feasible(6));
  CHECK_FALSE(even_rank2_feasible(0));
  CHECK_FALSE(even_rank2_feasible(-4));
}

TEST_CASE("shioda-tate bookkeeping") {
  SUBCASE("three D~6 fibers pin the transcendental determinant") {
    std::vector<KodairaType> fibers(3, recognize_fiber(d_candidate(7)));
    FibrationReport fr = shioda_tate(20, fibers, 4, std::nullopt);
    CHECK(fr.r_p == 0);
    REQUIRE(fr.constraint_set.size() == 1);
    CHECK(fr.constraint_set[0] == std::pair<Z, Z>{4, 4});
    CHECK(fr.det_t.value() == 4);
    CHECK(fr.n_p.value() == 4);
  }
  SUBCASE("two A~9 fibers with known determinant") {
    std::vector<KodairaType> fibers(2, recognize_fiber(cycle_candidate(10)));
    FibrationReport fr = shioda_tate(20, fibers, 1, Z(4));
    CHECK(fr.r_p == 0);
    CHECK(fr.n_p.value() == 5);  // sqrt(10*10/4)
  }
  SUBCASE("A~17 plus A~1 with known determinant") {
    std::vector<KodairaType> fibers{recognize_fiber(cycle_candidate(18)), recognize_fiber(cycle_candidate(2))};
    FibrationReport fr = shioda_tate(20, fibers, 1, Z(4));
    CHECK(fr.r_p == 0);
    CHECK(fr.n_p.value() == 3);  // sqrt(18*2/4)
  }
  SUBCASE("no fibers: full section rank") {
    FibrationReport fr = shioda_tate(20, {}, 1, std::nullopt);
    CHECK(fr.r_p == 18);
    CHECK(fr.constraint_set.empty());
  }
  SUBCASE("inconsistencies are rejected") {
    std::vector<KodairaType> fibers(4, recognize_fiber(d_candidate(7)));
    CHECK_THROWS(shioda_tate(20, fibers, 1, std::nullopt));            // negative section rank
    std::vector<KodairaType> two(2, recognize_fiber(cycle_candidate(10)));
    CHECK_THROWS(shioda_tate(20, two, 1, Z(3)));                       // 3 does not divide 100
    CHECK_THROWS(shioda_tate(1, {}, 1, std::nullopt));                 // rho too small
  }
}

TEST_CASE("fibration types from the transcribed component sets") {
  Configuration y4 = build_y4();
  CoverLattice cover = pullback_lattice(y4);
  std::filesystem::path data = X4_DATA_DIR;

  FiberFixture f3 = load_fiber_fixture(data / "fig3.json", cover);
  REQUIRE(f3.fibers.size() == 3);
  std::vector<ZVec> classes3;
  for (size_t i = 0; i < f3.fibers.size(); ++i) {
    FiberCandidate fc = make_fiber_candidate(cover, f3.fibers[i], f3.names[i]);
    KodairaType kt = recognize_fiber(fc);
    CHECK(kt.name() == "D~6");
    classes3.push_back(fiber_class(fc, kt));
  }
  // fiber classes are isotropic and mutually proportional in pairing
  for (const auto& c : classes3) CHECK(pairing(*cover.s_x4, c, c) == 0);
  // a ramification section meets the fiber once: type 1
  CHECK(classify_fibration_type(classes3[0], cover) == FibrationType::type1);

  FiberFixture f4 = load_fiber_fixture(data / "fig4.json", cover);
  FiberCandidate fc4 = make_fiber_candidate(cover, f4.fibers[0], f4.names[0]);
  KodairaType kt4 = recognize_fiber(fc4);
  CHECK(kt4.name() == "A~9");
  ZVec cls4 = fiber_class(fc4, kt4);
  CHECK(classify_fibration_type(cls4, cover, 2) == FibrationType::type2);
  CHECK_THROWS(classify_fibration_type(cls4, cover, 3));  // too many reducible fibers for type 2
}

TEST_CASE("fiber dot export") {
  FiberCandidate fc = d_candidate(5);
  KodairaType kt = recognize_fiber(fc);
  std::string dot = fiber_dot(fc, kt);
  CHECK(dot.find("graph fiber {") == 0);
  CHECK(dot.find("[xlabel=2]") != std::string::npos);
  CHECK(dot.find("[xlabel=1]") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
