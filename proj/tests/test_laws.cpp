#include "doctest.h"
#include "gamesem/laws.hpp"
#include "gamesem/normal.hpp"

using namespace gs;

TEST_CASE("random morphisms are well formed") {
  MorphismPool pool = randomPool(3, 10, 4);
  REQUIRE(!pool.general.empty());
  REQUIRE(!pool.rigid.empty());
  for (auto& m : pool.general) {
    Fm q = fImp(pool.objects[static_cast<size_t>(m.from)], pool.objects[static_cast<size_t>(m.to)]);
    CAPTURE(show(m.term));
    CHECK(checks({}, m.term, q));
    CHECK(isCanonicalNormalForm(m.term, q));
    CHECK(identical(m.arena.arena, arenaOf(q)));
    CHECK(classify(m.strategy).total);
  }
  for (auto& m : pool.rigid) CHECK(classify(m.strategy).muRigid);
}

TEST_CASE("composition agrees with syntactic composition") {
  MorphismPool pool = randomPool(5, 10, 3);
  int seen = 0;
  for (auto& f : pool.general)
    for (auto& g : pool.general) {
      if (f.to != g.from || seen >= 40) continue;
      ++seen;
      Fm a = pool.objects[static_cast<size_t>(f.from)];
      Tm comp = tLam("x", tApp(g.term, tApp(f.term, tVar("x"))), a);
      Fm q = fImp(a, pool.objects[static_cast<size_t>(g.to)]);
      Tm ann = elaborateClosed(comp, q).term;
      CAPTURE(show(comp));
      CHECK(compose(f.arena, f.strategy, g.arena, g.strategy).second == denote(ann, q).strategy);
    }
  CHECK(seen > 10);
}

TEST_CASE("category laws on sampled triples") {
  MorphismPool pool = randomPool(7, 12, 4);
  LawCounts c = checkCategoryLaws(pool, 1, 60);
  CHECK(c.triples == 60);
  CHECK(c.rigidPairs == 60);
  CHECK(c.all());
  LawCounts s = checkCategoryLaws(pool, 1, 60, true);
  CHECK(s.associative == c.associative);
  CHECK(s.grComposition == c.grComposition);
}
