#include "support.hpp"

using namespace gk;
using namespace gk::test;

namespace {

// 1-indexed transpositions to an involution on n points.
Involution from_cycles(std::size_t n, const std::vector<std::pair<int, int>>& cycles) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i);
  for (auto [a, b] : cycles) {
    img[a - 1] = b - 1;
    img[b - 1] = a - 1;
  }
  return Involution(img);
}

const ExponentSeq kPicture{0, 0, 0, 1, 2, 2, 2, 2, 3, 3, 5, 5, 6, 6, 6, 6, 7, 7, 7};

}  // namespace

TEST_CASE("blocks") {
  BlockStructure b = blocks({0, 2, 2});
  CHECK(b.count() == 2);
  CHECK(b.sizes == std::vector<int>{1, 2});
  CHECK(b.values == std::vector<int>{0, 2});
  CHECK(blocks({0, 0, 0, 0}).sizes == std::vector<int>{4});
  BlockStructure pic = blocks(kPicture);
  CHECK(pic.sizes == std::vector<int>{3, 1, 4, 2, 2, 4, 3});
  CHECK(pic.ends.back() == 19);
  CHECK_THROWS_AS(blocks({1, 0}), InvalidInput);
}

TEST_CASE("involution validation") {
  CHECK_THROWS_AS(Involution({1, 2, 0}), InvalidInput);
  CHECK_THROWS_AS(Involution({0, 3}), InvalidInput);
  CHECK(from_cycles(3, {{1, 2}}).str() == "(1 2)");
}

TEST_CASE("admissibility") {
  Involution pic = from_cycles(19, {{1, 2}, {3, 5}, {4, 17}, {6, 7}, {8, 13}, {9, 10}, {11, 12}, {14, 15}, {18, 19}});
  CHECK(is_admissible(kPicture, pic));
  CHECK(is_standard(kPicture, pic));
  CHECK(is_admissible({0, 2, 2}, from_cycles(3, {{1, 2}})));
  CHECK(is_admissible({0, 2, 2}, from_cycles(3, {{2, 3}})));
  CHECK_FALSE(is_admissible({0, 0}, Involution::identity(2)));
  CHECK(is_admissible({0, 1}, Involution::identity(2)));
}

TEST_CASE("standard involutions") {
  auto s = standard_involutions({0, 2, 2});
  REQUIRE(s.size() == 2);
  CHECK(std::find(s.begin(), s.end(), from_cycles(3, {{1, 2}})) != s.end());
  CHECK(std::find(s.begin(), s.end(), from_cycles(3, {{2, 3}})) != s.end());
  CHECK(standard_involutions({0, 1}) == std::vector<Involution>{Involution::identity(2)});
  CHECK(standard_involutions({0, 0}) == std::vector<Involution>{from_cycles(2, {{1, 2}})});
  CHECK(standard_class_exponent({0, 2, 2}) == 1);
}

TEST_CASE("restriction") {
  GKType t1{{0, 2, 2}, from_cycles(3, {{1, 2}})};
  auto r1 = restrict_type(t1, 2);
  REQUIRE(r1);
  CHECK(r1->ua == ExponentSeq{0, 2});
  CHECK(r1->sigma == from_cycles(2, {{1, 2}}));
  CHECK_FALSE(restrict_type(GKType{{0, 2, 2}, from_cycles(3, {{2, 3}})}, 2));
  auto full = restrict_type(t1, 3);
  REQUIRE(full);
  CHECK(*full == t1);
  CHECK_THROWS_AS(restrict_type(t1, 0), InvalidInput);
}

TEST_CASE("canonicalization") {
  // (1 3) on (0,2,2) pairs 1 with the last slot of the block; the standard form moves it to slot 2.
  Canonical c = canonicalize({0, 2, 2}, from_cycles(3, {{1, 3}}));
  CHECK(c.sigma == from_cycles(3, {{1, 2}}));
  CHECK(conjugate(from_cycles(3, {{1, 3}}), c.perm) == c.sigma);
}

TEST_CASE("involution census sample") { property("involution_bijection", 200); }
