#include <doctest.h>

#include <algorithm>

#include "hsfact/weights.hpp"

using namespace hsfact;

namespace {
Weight W(const char* s) { return parse_weight(s); }
}  // namespace

TEST_CASE("dominance") {
  CHECK(is_dominant(W("2,1,0")));
  CHECK_FALSE(is_dominant(W("1,2")));
  CHECK(is_dominant(W("0,0,0")));
  CHECK_FALSE(is_dominant(Weight({1, -1})));
}

TEST_CASE("bruhat order and distance") {
  CHECK(bruhat_leq(W("1,0"), W("2,1")));
  CHECK_FALSE(bruhat_leq(W("2,0"), W("1,1")));
  CHECK(bruhat_leq(W("2,1"), W("2,1")));
  CHECK_THROWS(bruhat_leq(W("1"), W("1,0")));
  CHECK(manhattan_distance(W("3,1"), W("1,0")) == 3);
  CHECK(manhattan_distance(W("2,1"), W("2,1")) == 0);
  CHECK(manhattan_distance(W("2,1"), W("1,1")) == 1);
}

TEST_CASE("boxes") {
  CHECK(box(W("2,1")) == std::vector<Weight>{W("2,1"), W("2,0"), W("1,1"), W("1,0")});
  CHECK(box(W("0,0")) == std::vector<Weight>{W("0,0")});
  CHECK(box(W("1,1,1")) == std::vector<Weight>{W("1,1,1"), W("1,1,0")});
  CHECK_THROWS(box(W("1,2")));
}

TEST_CASE("box invariants over a range") {
  for (std::size_t rank = 1; rank <= 3; ++rank)
    for (const auto& mu : dominant_weights(rank, 3)) {
      const auto b = box(mu);
      CHECK(std::find(b.begin(), b.end(), mu) != b.end());
      std::vector<int> shifted(mu.entries.begin() + 1, mu.entries.end());
      shifted.push_back(0);
      CHECK(std::find(b.begin(), b.end(), Weight(shifted)) != b.end());
      int far = 0;
      for (const auto& l : b) {
        CHECK(bruhat_leq(l, mu));
        far = std::max(far, manhattan_distance(mu, l));
      }
      CHECK(far == mu[0]);
    }
}

TEST_CASE("path enumeration") {
  const auto e = enumerate_paths(W("0,0"), W("2,1"), 100);
  REQUIRE(e.paths.size() == 2);
  CHECK(e.paths[0].changes == std::vector<std::size_t>{0, 0, 1});
  CHECK(e.paths[1].changes == std::vector<std::size_t>{0, 1, 0});
  CHECK(enumerate_paths(W("1,0"), W("2,1"), 100).paths.size() == 2);
  const auto same = enumerate_paths(W("1,1"), W("1,1"), 100);
  REQUIRE(same.paths.size() == 1);
  CHECK(same.paths[0].length() == 0);
  CHECK(enumerate_paths(W("0,0,0"), W("3,3,3"), 5).truncated);
  CHECK_THROWS(enumerate_paths(W("2,0"), W("1,1"), 10));
}

TEST_CASE("canonical paths") {
  const Path p = canonical_path(W("0,0"), W("2,1"));
  CHECK(p.nodes == std::vector<Weight>{W("0,0"), W("1,0"), W("2,0"), W("2,1")});
  CHECK(canonical_path(W("0"), W("4")).length() == 4);
  CHECK(canonical_path(W("1,0"), W("2,1")).changes == std::vector<std::size_t>{0, 1});
  for (const auto& mu : dominant_weights(3, 2))
    for (const auto& nu : dominant_weights(3, 2)) {
      if (!bruhat_leq(nu, mu)) continue;
      const auto all = enumerate_paths(nu, mu, 1000);
      const Path c = canonical_path(nu, mu);
      CHECK(std::find(all.paths.begin(), all.paths.end(), c) != all.paths.end());
      for (const auto& q : all.paths) CHECK(static_cast<int>(q.length()) == manhattan_distance(nu, mu));
    }
}

TEST_CASE("summands of V_lambda (x) S") {
  const auto s = summand_weights(W("1,0"));
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == W("1,0").primed());
  CHECK(s[0].second.signs == std::vector<int>{1, 1});
  CHECK(s[1].first == W("0,0").primed());
  CHECK(s[1].second.signs == std::vector<int>{-1, 1});
  CHECK(summand_weights(W("1,1")).size() == 3);
  CHECK(summand_weights(W("0,0,0")).size() == 1);
  for (const auto& l : dominant_weights(3, 2)) CHECK(summand_weights(l).size() <= 8);
}

TEST_CASE("weight rendering and parsing") {
  CHECK(W("2,1").to_string() == "(2,1)");
  CHECK(W("2,1'").spin_shift);
  CHECK(W("2,1").primed().to_string() == "(2,1)'");
  CHECK(W("2,1").plus_unit(1) == W("2,2"));
  CHECK_THROWS(parse_weight("2,,1"));
}
