#include "doctest.h"
#include "gamesem/denote.hpp"
#include "gamesem/io.hpp"

using namespace gs;

TEST_CASE("arenas and strategies survive json") {
  for (auto [m, a] : {std::pair{"lam f. mu al. [al] (f) lam a. mu de. [al] a", "((X -> Y) -> X) -> X"},
                      std::pair{"lam f. (f{x}) Lam y. lam d. mu al. (f{y}) Lam z. lam a. mu de. [al] a",
                                "(forall x. (forall y. X(x) -> X(y)) -> bot) -> bot"}}) {
    Strategy s = denote(parseTerm(m), parseFormula(a)).strategy;
    Json j = toJson(s);
    Strategy t = strategyFromJson(Json::parse(j.dump()));
    CHECK(identical(t.arena, s.arena));
    CHECK(t == s);
    for (auto& k : s.keys()) CHECK(playFromJson(toJson(s.view(k)), s.arena) == s.view(k));
  }
}

TEST_CASE("responding along a play") {
  Strategy s = denote(parseTerm("lam f. mu al. [al] (f) lam a. mu de. [al] a"), parseFormula("((X -> Y) -> X) -> X")).strategy;
  std::vector<Move> open = legalOpponentMoves(s.arena, {});
  REQUIRE(open.size() == 1);
  Seq play{open[0]};
  auto r = respond(s, play);
  REQUIRE(r);
  CHECK(r->node == 1);
  CHECK(r->mu[0] == MuLink{0, 0});
  play.push_back(*r);
  std::vector<Move> next = legalOpponentMoves(s.arena, play);
  CHECK(next.size() == 2);
  for (auto& o : next) {
    Seq p = play;
    p.push_back(o);
    auto q = respond(s, p);
    REQUIRE(q);
    p.push_back(*q);
    CHECK(checkPlay(s.arena, p).verdict == Verdict::Play);
  }
}
