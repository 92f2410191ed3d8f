#include <random>

#include "doctest.h"
#include "honeycomb/presentation.hpp"
#include "support.hpp"

using namespace honeycomb;

TEST_SUITE("presentation") {
  TEST_CASE("generators realize the four mirrors") {
    CHECK(to_formula(generator(Generator::P)) == "(x, y, 1-z)");
    CHECK(to_formula(generator(Generator::Q)) == "(z, y, x)");
    CHECK(to_formula(generator(Generator::R)) == "(y, x, z)");
    CHECK(to_formula(generator(Generator::S)) == "(x, -y, z)");
  }

  TEST_CASE("all ten relators hold exactly") {
    const auto checks = check_presentation();
    CHECK(checks.size() == 10);
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
      CHECK(c.value.is_identity());
    }
  }

  TEST_CASE("perturbed P breaks (PQ)^4 and (PS)^2 only") {
    for (const auto& c : check_presentation(GeneratorSet::perturbed())) {
      CAPTURE(c.name);
      const bool expect_fail = c.name == "(PQ)^4" || c.name == "(PS)^2";
      CHECK(c.passed == !expect_fail);
    }
    CHECK_FALSE(dihedral_angle_check(GeneratorSet::perturbed()).passed());
  }

  TEST_CASE("dihedral angles") {
    const DihedralReport r = dihedral_angle_check();
    CHECK(r.passed());
    CHECK(r.multiset_matches);
    REQUIRE(r.angles.size() == 6);
    const char* expected[] = {"pi/4", "pi/3", "pi/4", "pi/2", "pi/2", "pi/2"};
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(r.angles[i].angle.str() == expected[i]);
      CHECK(r.angles[i].consistent);
    }
  }

  TEST_CASE("stabilizer generators of the base vertex") {
    for (const char* w : {"Q", "R", "PQRSRQP"}) {
      CAPTURE(w);
      CHECK(apply(eval_word(GeneratorWord::parse(w)), kBaseVertex) == kBaseVertex);
    }
    CHECK(apply(eval_word(GeneratorWord::parse("S")), kBaseVertex) != kBaseVertex);
  }

  TEST_CASE("words act right to left") {
    const Isometry pq = eval_word(GeneratorWord::parse("PQ"));
    CHECK(pq == compose(generator(Generator::P), generator(Generator::Q)));
    CHECK(to_formula(eval_word(GeneratorWord::parse("PQRPQP"))) == "(1-x, 1-z, 1-y)");
    CHECK(eval_word(GeneratorWord::parse("(SRQPQR)^2")) == Isometry::pure_translation({0, -2, 0}));
  }

  TEST_CASE("conjugation identity R.PQP.R = PQRQP") {
    CHECK(eval_word(GeneratorWord::parse("RPQPR")) == eval_word(GeneratorWord::parse("PQRQP")));
    // An odd palindrome of reflections is a reflection.
    CHECK(eval_word(GeneratorWord::parse("PQRQP")).linear.determinant() == -1);
    CHECK(order(eval_word(GeneratorWord::parse("PQRQP"))) == 2);
  }

  TEST_CASE("property: reversed word evaluates to the inverse") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const GeneratorWord w = GeneratorWord::parse(support::random_letters(rng, 30));
      CHECK(eval_word(w.reversed()) == invert(eval_word(w)));
      CHECK(eval_word(w * w.reversed()).is_identity());
    }
  }

  TEST_CASE("property: the inverse of a word undoes its action on the base vertex") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const GeneratorWord w = GeneratorWord::parse(support::random_letters(rng, 20));
      const Isometry g = eval_word(w);
      const Vertex v = apply(g, kBaseVertex);
      CHECK(apply(invert(g), v) == kBaseVertex);
    }
  }
}
