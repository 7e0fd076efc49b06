#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operahedra/arrangement.hpp"
#include "oracles.hpp"

using namespace operahedra;

static RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

static std::set<std::vector<int>> d_normals(int m) {
  std::set<std::vector<int>> out;
  for (auto& p : generate_D(m)) {
    std::vector<int> d(m, 0);
    for (int e : edges_of(p.I)) d[e - 1] = 1;
    for (int e : edges_of(p.J)) d[e - 1] = -1;
    out.insert(d);
  }
  return out;
}

// Count of pairs (I,J): choose 2s elements, split them in half, the minimum goes to I.
static long long d_size(int m) {
  auto binom = [](int n, int k) {
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
  };
  long long s = 0;
  for (int k = 1; 2 * k <= m; ++k) s += binom(m, 2 * k) * binom(2 * k - 1, k - 1);
  return s;
}

TEST_CASE("generate_D") {
  auto d2 = generate_D(2);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0] == DPair{edge_set({1}), edge_set({2})});
  CHECK(generate_D(3).size() == 3);
  CHECK(generate_D(4).size() == 9);
  for (int m = 1; m <= 8; ++m) {
    auto D = generate_D(m);
    CHECK(static_cast<long long>(D.size()) == d_size(m));
    for (auto& p : D) {
      CHECK((p.I & p.J) == 0);
      CHECK(popcount(p.I) == popcount(p.J));
      CHECK(min_edge(p.I | p.J) == min_edge(p.I));
    }
  }
  int size2 = 0;
  for (auto& p : generate_D(4)) size2 += popcount(p.I) == 2;
  CHECK(size2 == 3);
}

TEST_CASE("principal vectors") {
  CHECK(principal_vector(3) == vec({4, 2, 1}));
  CHECK(is_principal(vec({4, 2, 1}), 3));
  CHECK(principal_vector(4) == vec({8, 4, 2, 1}));
  CHECK(dot(normal_of({edge_set({1, 4}), edge_set({2, 3})}, 4), principal_vector(4)) == 3);
  CHECK_FALSE(is_principal(vec({1, 1, 1}), 3));
  for (int m = 1; m <= 8; ++m) CHECK(is_principal(principal_vector(m), m));
  // decreasing is not enough: 1+4 < 2+3... with (5,4,3,1): {1,4} vs {2,3} gives 6 < 7
  CHECK_FALSE(is_principal(vec({5, 4, 3, 1}), 4));
}

TEST_CASE("chamber_signature") {
  CHECK(chamber_signature(vec({4, 2, 1}), 3) == std::vector<int>{1, 1, 1});
  auto s = chamber_signature(vec({2, 4, 1}), 3);
  CHECK(s[0] == -1);
  CHECK(s[1] == 1);
  CHECK(s[2] == 1);
  CHECK_THROWS_AS(chamber_signature(vec({1, 1, 0}), 3), WallVector);
  try {
    chamber_signature(vec({1, 1, 0}), 3);
  } catch (const WallVector& e) {
    CHECK(std::string(e.what()).find("({1},{2})") != std::string::npos);
  }
}

TEST_CASE("arrangement_bruteforce") {
  CHECK(arrangement_bruteforce(PlanarTree::linear(3)) == std::set<std::vector<int>>{{1, -1}});
  CHECK(arrangement_bruteforce(PlanarTree::two_leveled(4)) ==
        std::set<std::vector<int>>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
  for (int n = 2; n <= 5; ++n) CHECK(arrangement_bruteforce(PlanarTree::two_leveled(n)) == d_normals(n - 1));
  CHECK(arrangement_bruteforce(PlanarTree::two_leveled(5)).size() == 9);
  for (int n = 2; n <= 5; ++n)
    for (auto& t : enumerate_trees(n)) {
      auto dirs = arrangement_bruteforce(t, 2);
      auto all = d_normals(n - 1);
      for (auto& d : dirs) {
        CHECK(all.count(d) == 1);
        int plus = 0, minus = 0;
        for (int x : d) {
          plus += x == 1;
          minus += x == -1;
        }
        CHECK(plus == minus);
      }
    }
}
