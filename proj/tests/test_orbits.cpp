#include <random>

#include "doctest.h"
#include "honeycomb/crystal.hpp"
#include "honeycomb/orbits.hpp"
#include "support.hpp"

using namespace honeycomb;

TEST_SUITE("orbits") {
  TEST_CASE("the full group is vertex-transitive") {
    for (int n : {2, 4}) {
      const auto d = decompose(full_subgroup(build_group(n)));
      CHECK(d.orbit_count() == 1);
      CHECK(d.orbits[0].size() == static_cast<std::size_t>(n * n * n));
    }
  }

  TEST_CASE("stabilizer of the base vertex has order 48") {
    for (int n : {2, 4}) {
      const auto g = build_group(n);
      const Stabilizer st = stabilizer(full_subgroup(g), g->reduce(kBaseVertex));
      CHECK(st.order() == 48);
      const TorusSubgroup gens = build_subgroup(g, parse_words({"Q", "R", "PQRSRQP"}));
      CHECK(gens.order() == 48);
      CHECK(std::equal(st.elements.begin(), st.elements.end(), gens.elements().begin(),
                       gens.elements().end()));
    }
  }

  TEST_CASE("orbits of H2 and of the body-centred group") {
    const auto g = build_group(2);
    const auto h2 = decompose(certified_subgroup(g, subgroups::kDoubledCell));
    REQUIRE(h2.orbit_count() == 4);
    const TorusVertex reps[] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    const std::size_t sizes[] = {1, 3, 3, 1};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(h2.representatives[i] == reps[i]);
      CHECK(h2.orbits[i].size() == sizes[i]);
    }
    const TorusSubgroup bcc = certified_subgroup(g, subgroups::kBodyCentred);
    const auto d = decompose(bcc);
    REQUIRE(d.orbit_count() == 2);
    CHECK(d.orbits[0] == std::vector<TorusVertex>{{0, 0, 0}, {1, 1, 1}});
    CHECK(d.orbits[1].size() == 6);
  }

  TEST_CASE("orbit counts are stable from N=2 to N=4") {
    for (const auto* words : {&subgroups::kFull, &subgroups::kParity, &subgroups::kBodyCentred,
                              &subgroups::kDoubledCell}) {
      const auto a = decompose(certified_subgroup(build_group(2), *words));
      const auto b = decompose(certified_subgroup(build_group(4), *words));
      CHECK(a.orbit_count() == b.orbit_count());
      for (std::size_t i = 0; i < a.orbit_count(); ++i) CHECK(8 * a.orbits[i].size() == b.orbits[i].size());
    }
  }

  TEST_CASE("stabilizers in the body-centred group") {
    const auto g = build_group(2);
    const TorusSubgroup h = certified_subgroup(g, subgroups::kBodyCentred);
    const Stabilizer x1 = stabilizer(h, {1, 0, 1});
    const TorusSubgroup named = build_subgroup(g, parse_words({"Q", "S", "(QPQRQPQS)^2"}));
    CHECK(x1.order() == 16);
    CHECK(named.order() == 16);
    CHECK(TorusSubgroup::from_elements(g, x1.elements).same_elements(named));
    const Stabilizer x2 = stabilizer(h, {1, 1, 1});
    CHECK(TorusSubgroup::from_elements(g, x2.elements)
              .same_elements(build_subgroup(g, parse_words({"Q", "R", "PQRSRQP"}))));
    // The word fixes (1,0,1) exactly, not only mod N.
    CHECK(apply(eval_word(GeneratorWord::parse("(QPQRQPQS)^2")), Vertex{1, 0, 1}) == Vertex{1, 0, 1});
  }

  TEST_CASE("stabilizer escape names an element outside J") {
    const auto g = build_group(2);
    const TorusSubgroup full = full_subgroup(g);
    const TorusSubgroup h2 = certified_subgroup(g, subgroups::kDoubledCell);
    CHECK(stabilizer_contained(full, {0, 0, 0}, certified_subgroup(g, subgroups::kParity)));
    const auto esc = stabilizer_escape(full, {0, 0, 1}, h2);
    REQUIRE(esc.has_value());
    CHECK_FALSE(h2.contains(*esc));
    CHECK(g->act(*esc, TorusVertex{0, 0, 1}) == TorusVertex{0, 0, 1});
  }

  TEST_CASE("property: witnesses, partition and orbit-stabilizer") {
    std::mt19937 rng(17);
    for (int n : {2, 4}) {
      const auto g = build_group(n);
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::string> words;
        for (int i = 0; i < 3; ++i) words.push_back(support::random_letters(rng, 9));
        const TorusSubgroup s = build_subgroup(g, parse_words(words));
        const auto d = decompose(s);
        std::size_t covered = 0;
        for (std::size_t o = 0; o < d.orbit_count(); ++o) {
          covered += d.orbits[o].size();
          CHECK(d.representatives[o] == d.orbits[o].front());
          CHECK(s.order() == d.orbits[o].size() * stabilizer(s, d.representatives[o]).order());
        }
        CHECK(covered == g->vertex_count());
        for (std::size_t i = 0; i < g->vertex_count(); ++i) {
          const TorusVertex v = g->vertex_at(i);
          const ElementId w = d.witness_for(v);
          CHECK(s.contains(w));
          CHECK(g->act(w, d.representatives[d.orbit_index(v)]) == v);
        }
      }
    }
  }
}
