#include <random>
#include <set>

#include "doctest.h"
#include "honeycomb/crystal.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/presentation.hpp"
#include "honeycomb/quotient.hpp"
#include "support.hpp"

using namespace honeycomb;

namespace {

TorusSubgroup certified(const std::shared_ptr<const TorusGroup>& g, std::vector<std::string> words) {
  return certified_subgroup(g, words);
}

}  // namespace

TEST_SUITE("quotient") {
  TEST_CASE("torus group order is 48 N^3") {
    CHECK(build_group(2)->order() == 384);
    CHECK(build_group(4)->order() == 3072);
    CHECK(build_group(6)->order() == 48u * 216u);
    CHECK_THROWS_AS(build_group(3), PreconditionError);
    CHECK_THROWS_AS(build_group(0), PreconditionError);
    CHECK_THROWS_AS(build_group(-2), PreconditionError);
  }

  TEST_CASE("element ids are canonical and round trip") {
    const auto g = build_group(2);
    CHECK(g->element(0).linear.is_identity());
    CHECK(g->element(0).translation == std::array<int, 3>{0, 0, 0});
    for (ElementId id = 0; id < g->order(); ++id) {
      const TorusElement e = g->element(id);
      CHECK(g->id(e) == id);
      CHECK(id == static_cast<ElementId>(e.linear.rank() * 8 +
                                         (e.translation[0] * 2 + e.translation[1]) * 2 +
                                         e.translation[2]));
    }
  }

  TEST_CASE("property: projection is a homomorphism") {
    std::mt19937 rng(3);
    for (int n : {2, 4}) {
      const auto g = build_group(n);
      for (int trial = 0; trial < 200; ++trial) {
        const Isometry a = eval_word(GeneratorWord::parse(support::random_letters(rng, 16)));
        const Isometry b = eval_word(GeneratorWord::parse(support::random_letters(rng, 16)));
        CHECK(g->project_id(compose(a, b)) == g->compose(g->project_id(a), g->project_id(b)));
        CHECK(g->project_id(invert(a)) == g->inverse(g->project_id(a)));
        const Vertex v{trial % 5, trial % 3, trial % 7};
        CHECK(g->reduce(apply(a, v)) == g->act(g->project_id(a), g->reduce(v)));
      }
    }
  }

  TEST_CASE("vertex indexing") {
    const auto g = build_group(4);
    for (std::size_t i = 0; i < g->vertex_count(); ++i) CHECK(g->vertex_index(g->vertex_at(i)) == i);
    CHECK(g->reduce({-1, 5, 4}) == TorusVertex{3, 1, 0});
  }

  TEST_CASE("indices of the named subgroups, certified, N = 2 and 4") {
    for (int n : {2, 4}) {
      CAPTURE(n);
      const auto g = build_group(n);
      const TorusSubgroup parity = certified(g, subgroups::kParity);
      const TorusSubgroup conj = certified(g, subgroups::kParityConjugate);
      const TorusSubgroup bcc = certified(g, subgroups::kBodyCentred);
      const TorusSubgroup h2 = certified(g, subgroups::kDoubledCell);
      CHECK(index(*g, parity).value == 2);
      CHECK(index(*g, parity).exact);
      CHECK(index(*g, bcc).value == 4);
      CHECK(index(*g, h2).value == 8);
      CHECK(index(bcc, h2).value == 2);
      CHECK(index(bcc, h2).exact);
      // PQRQP = R.PQP.R, so the conjugate words generate the parity group.
      CHECK(conj.same_elements(parity));
      CHECK(index(*g, conj).value == 2);
      CHECK(index(conj, h2).value == 4);
      CHECK(index(*g, full_subgroup(g)).value == 1);
      CHECK(full_subgroup(g).certified());
      CHECK(index(full_subgroup(g), h2).exact);
    }
  }

  TEST_CASE("certificate witnesses evaluate to the period translations") {
    const auto g = build_group(2);
    const TorusSubgroup h2 = certified(g, subgroups::kDoubledCell);
    REQUIRE(h2.certified());
    const auto& cert = *h2.certificate();
    CHECK(cert.modulus == 2);
    CHECK(cert.radius <= kDefaultCertificateRadius);
    CHECK(eval_word(cert.witnesses[0]) == Isometry::pure_translation({2, 0, 0}));
    CHECK(eval_word(cert.witnesses[1]) == Isometry::pure_translation({0, 2, 0}));
    CHECK(eval_word(cert.witnesses[2]) == Isometry::pure_translation({0, 0, 2}));
  }

  TEST_CASE("finite subgroups have no certificate and report a lower bound") {
    const auto g = build_group(2);
    const auto outcome = certify_translations(build_subgroup(g, parse_words({"Q", "R"})));
    CHECK_FALSE(outcome.found);
    CHECK(outcome.exhausted);
    const IndexResult r = index(*g, outcome.subgroup);
    CHECK_FALSE(r.exact);
    CHECK(r.value == 64);
    CHECK(r.label() == "image index (lower bound)");
    CHECK_THROWS_AS(certified_subgroup(g, {"Q", "R"}), VerificationError);
  }

  TEST_CASE("small radius fails where the default succeeds") {
    const auto g = build_group(2);
    const auto outcome = certify_translations(build_subgroup(g, parse_words(subgroups::kParity)), 2);
    CHECK_FALSE(outcome.found);
    CHECK_FALSE(outcome.exhausted);
  }

  TEST_CASE("left cosets: coset 0 is J, P lies in the other coset") {
    const auto g = build_group(2);
    const TorusSubgroup full = full_subgroup(g);
    const TorusSubgroup parity = certified(g, subgroups::kParity);
    const CosetTable t = left_cosets(full, parity);
    REQUIRE(t.count() == 2);
    CHECK(t.representatives[0] == TorusGroup::identity());
    for (ElementId e : parity.elements()) CHECK(t.coset(e) == 0);
    CHECK(t.coset(g->project_id(generator(Generator::P))) == 1);
    CHECK(t.representatives[1] == g->project_id(Isometry::pure_translation({0, 0, 1})));
    CHECK_THROWS_AS(left_cosets(parity, full), PreconditionError);
  }

  TEST_CASE("property: cosets partition H, Lagrange holds") {
    std::mt19937 rng(99);
    const auto g = build_group(2);
    const TorusSubgroup full = full_subgroup(g);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::string> words;
      const int k = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int i = 0; i < k; ++i) words.push_back(support::random_letters(rng, 10));
      const TorusSubgroup j = build_subgroup(g, parse_words(words));
      CHECK(full.order() % j.order() == 0);
      const CosetTable t = left_cosets(full, j);
      CHECK(t.count() * j.order() == full.order());
      std::vector<std::size_t> sizes(t.count(), 0);
      for (ElementId e = 0; e < g->order(); ++e) {
        REQUIRE(t.coset(e) >= 0);
        ++sizes[static_cast<std::size_t>(t.coset(e))];
        // e and its coset representative differ by an element of J.
        const ElementId rep = t.representatives[static_cast<std::size_t>(t.coset(e))];
        CHECK(j.contains(g->compose(g->inverse(rep), e)));
      }
      for (std::size_t s : sizes) CHECK(s == j.order());
    }
  }

  TEST_CASE("property: subgroup closure is closed under products and inverses") {
    std::mt19937 rng(5);
    const auto g = build_group(2);
    for (int trial = 0; trial < 30; ++trial) {
      const TorusSubgroup s = build_subgroup(
          g, parse_words({support::random_letters(rng, 8), support::random_letters(rng, 8)}));
      CHECK(s.contains(TorusGroup::identity()));
      for (ElementId a : s.elements()) {
        CHECK(s.contains(g->inverse(a)));
        CHECK(s.contains(g->compose(a, s.elements()[trial % s.order()])));
      }
      const TorusSubgroup again = TorusSubgroup::from_elements(g, s.elements());
      CHECK(again.same_elements(s));
    }
  }

  TEST_CASE("membership of exact isometries") {
    const auto g = build_group(2);
    const TorusSubgroup bcc = certified(g, subgroups::kBodyCentred);
    CHECK(member(bcc, Isometry::pure_translation({1, 1, 1})).value);
    CHECK(member(bcc, Isometry::pure_translation({1, 1, 1})).exact);
    CHECK_FALSE(member(bcc, Isometry::pure_translation({1, 0, 0})).value);
    CHECK_FALSE(member(bcc, eval_word(GeneratorWord::parse("PQRQPQ"))).value);
    CHECK_FALSE(member(bcc, eval_word(GeneratorWord::parse("QPQRQP"))).value);
  }
}
