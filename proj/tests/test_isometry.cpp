#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "honeycomb/errors.hpp"
#include "honeycomb/isometry.hpp"

using namespace honeycomb;

namespace {

SignedPermutation random_perm(std::mt19937& rng) {
  return SignedPermutation::from_rank(std::uniform_int_distribution<int>(0, 47)(rng));
}

Isometry random_isometry(std::mt19937& rng) {
  std::uniform_int_distribution<Coord> t(-9, 9);
  return {random_perm(rng), {t(rng), t(rng), t(rng)}};
}

}  // namespace

TEST_SUITE("isometry") {
  TEST_CASE("signed permutations: ranks enumerate all 48, identity first") {
    std::set<std::array<std::array<int, 3>, 3>> seen;
    for (int r = 0; r < SignedPermutation::kCount; ++r) {
      const SignedPermutation p = SignedPermutation::from_rank(r);
      CHECK(p.rank() == r);
      CHECK(std::abs(p.determinant()) == 1);
      seen.insert(p.matrix());
    }
    CHECK(seen.size() == 48);
    CHECK(SignedPermutation{}.rank() == 0);
    CHECK(SignedPermutation::from_rank(0).is_identity());
  }

  TEST_CASE("signed permutation validation") {
    CHECK_THROWS_AS(SignedPermutation({0, 0, 1}, {1, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(SignedPermutation({0, 1, 2}, {1, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(SignedPermutation::from_matrix({{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}),
                    PreconditionError);
    CHECK_THROWS_AS(SignedPermutation::from_matrix({{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}),
                    PreconditionError);
  }

  TEST_CASE("matrix round trip and action") {
    const SignedPermutation p({2, 0, 1}, {1, -1, 1});
    CHECK(SignedPermutation::from_matrix(p.matrix()) == p);
    CHECK(p.apply({1, 2, 3}) == Vertex{3, -1, 2});
    CHECK(p.inverse().apply(p.apply({1, 2, 3})) == Vertex{1, 2, 3});
  }

  TEST_CASE("formula rendering") {
    CHECK(to_formula(Isometry::identity()) == "(x, y, z)");
    CHECK(to_formula({SignedPermutation({0, 1, 2}, {1, 1, -1}), {0, 0, 1}}) == "(x, y, 1-z)");
    CHECK(to_formula({SignedPermutation({0, 2, 1}, {-1, -1, -1}), {1, 1, 1}}) ==
          "(1-x, 1-z, 1-y)");
    CHECK(to_formula(Isometry::pure_translation({0, -2, 0})) == "(x, -2+y, z)");
    std::ostringstream os;
    os << Isometry::pure_translation({3, 0, 0});
    CHECK(os.str() == "(3+x, y, z)");
  }

  TEST_CASE("order") {
    CHECK(order(Isometry::identity()) == 1);
    CHECK(order({SignedPermutation({1, 2, 0}, {1, 1, 1}), {}}) == 3);
    CHECK(order(Isometry::pure_translation({1, 0, 0})) == 0);
    CHECK(order({SignedPermutation({1, 0, 2}, {-1, 1, 1}), {}}) == 4);
  }

  TEST_CASE("property: composition is associative with two-sided inverses") {
    std::mt19937 rng(20261017);
    for (int trial = 0; trial < 500; ++trial) {
      const Isometry a = random_isometry(rng), b = random_isometry(rng), c = random_isometry(rng);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      CHECK(compose(a, invert(a)).is_identity());
      CHECK(compose(invert(a), a).is_identity());
      const Vertex v{trial % 7 - 3, trial % 5, -trial % 11};
      CHECK(apply(compose(a, b), v) == apply(a, apply(b, v)));
      CHECK(compose(a.linear, b.linear).determinant() ==
            a.linear.determinant() * b.linear.determinant());
    }
  }

  TEST_CASE("property: isometries preserve integer distances") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<Coord> c(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
      const Isometry g = random_isometry(rng);
      const Vertex u{c(rng), c(rng), c(rng)}, v{c(rng), c(rng), c(rng)};
      auto d2 = [](const Vertex& a, const Vertex& b) {
        Coord s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
        return s;
      };
      CHECK(d2(apply(g, u), apply(g, v)) == d2(u, v));
    }
  }
}
