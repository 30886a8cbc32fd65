#include "helpers.hpp"

using namespace kptest;

TEST_SUITE("rootsys") {
  TEST_CASE("A1 data") {
    const auto d = build_root_system("A1");
    CHECK(d.rank == 1);
    CHECK(d.positive_roots.size() == 1);
    CHECK(d.highest_root == d.simple_roots[0]);
    CHECK(d.simple_roots[0] == Weight(1, {2}));
    CHECK(pair(d.simple_coroots[0], d.simple_roots[0]) == 2);
  }

  TEST_CASE("A2 data") {
    const auto d = build_root_system("A2");
    CHECK(d.positive_roots.size() == 3);
    const Weight a1 = d.simple_roots[0], a2 = d.simple_roots[1];
    CHECK(a1 == Weight(2, {2, -1}));
    CHECK(d.highest_root == a1 + a2);
    CHECK(d.highest_coroot == d.simple_coroots[0] + d.simple_coroots[1]);
    for (const Weight& beta : {a1, a2, a1 + a2}) CHECK(d.is_positive_root(beta));
    CHECK(pair(d.simple_coroots[0], a2) == -1);
    CHECK(pair(d.highest_coroot, d.highest_root) == 2);
  }

  TEST_CASE("A3 has six positive roots") { CHECK(build_root_system("A3").positive_roots.size() == 6); }

  TEST_CASE("fundamental weights are dual to simple coroots") {
    const auto d = build_root_system("A3");
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(pair(d.simple_coroots[i], d.fundamental_weight(j + 1)) == (i == j));
  }

  TEST_CASE("simple reflections") {
    const auto d = build_root_system("A2");
    const Weight a1 = d.simple_roots[0], a2 = d.simple_roots[1];
    CHECK(simple_reflection_on_weight(d, 1, a1) == -a1);
    CHECK(simple_reflection_on_weight(d, 1, a2) == a1 + a2);
    CHECK(simple_reflection_on_weight(d, 1, d.fundamental_weight(1)) == d.fundamental_weight(1) - a1);
  }

  TEST_CASE("level-zero roots") {
    const auto d1 = build_root_system("A1");
    CHECK(level_zero_root(d1, 0) == -d1.simple_roots[0]);
    CHECK(level_zero_root(d1, 1) == d1.simple_roots[0]);
    const auto d2 = build_root_system("A2");
    CHECK(level_zero_root(d2, 0) == -d2.simple_roots[0] - d2.simple_roots[1]);
    CHECK_THROWS_AS(level_zero_root(d2, 3), IndexOutOfRange);
  }

  TEST_CASE("root coordinates") {
    const auto d = build_root_system("A2");
    CHECK(d.root_coordinates(d.highest_root) == std::vector<int>{1, 1});
    CHECK_FALSE(d.root_coordinates(d.fundamental_weight(1)).has_value());
    CHECK(d.weight_from_root_coordinates({2, -1}) == 2 * d.simple_roots[0] - d.simple_roots[1]);
  }

  TEST_CASE("simple reflections permute the other positive roots") {
    for (const char* type : {"A1", "A2", "A3"}) {
      const auto d = build_root_system(type);
      for (int i = 1; i <= d.rank; ++i)
        for (const auto& beta : d.positive_roots) {
          const Weight img = simple_reflection_on_weight(d, i, beta);
          if (beta == d.simple_roots[i - 1]) {
            CHECK(img == -beta);
          } else {
            CHECK(d.is_positive_root(img));
          }
          CHECK(simple_reflection_on_weight(d, i, img) == beta);
        }
    }
  }

  TEST_CASE("pairing is Weyl invariant") {
    const auto d = build_root_system("A2");
    const FiniteWeylGroup w(d);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-3, 3);
    for (std::uint32_t k = 0; k < w.size(); ++k)
      for (int trial = 0; trial < 10; ++trial) {
        const Weight lambda(2, {c(rng), c(rng)});
        const Coroot mu(2, {c(rng), c(rng)});
        CHECK(pair(w.act({k}, mu), w.act({k}, lambda)) == pair(mu, lambda));
      }
  }

  TEST_CASE("Cartan matrix input") {
    const auto b2 = build_root_system({{2, -2}, {-1, 2}}, "B2");
    CHECK(b2.positive_roots.size() == 4);
    const auto g2 = build_root_system({{2, -1}, {-3, 2}}, "G2");
    CHECK(g2.positive_roots.size() == 6);
    CHECK_THROWS_AS(build_root_system({{2, -1}, {0, 2}}), InvalidCartanMatrix);
    CHECK_THROWS_AS(build_root_system({{2, -2}, {-2, 2}}), InvalidCartanMatrix);
    CHECK_THROWS_AS(build_root_system({{1, 0}, {0, 2}}), InvalidCartanMatrix);
    CHECK_THROWS_AS(build_root_system("E9"), UnsupportedType);
  }

  TEST_CASE("rank mismatch") {
    const auto d = build_root_system("A2");
    CHECK_THROWS_AS(pair(Coroot(1, {1}), d.simple_roots[0]), RankMismatch);
  }
}
