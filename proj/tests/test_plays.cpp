#include "doctest.h"
#include "gamesem/plays.hpp"

#include <random>

using namespace gs;

namespace {

Move mv(int node, int just, std::vector<FoTerm> inst = {}, std::vector<std::optional<MuLink>> mu = {}) {
  return Move{node, just, std::move(mu), std::move(inst)};
}

FoTerm f(FoTerm t) { return FoTerm::app("f", {std::move(t)}); }

Arena bigPlayArena() {
  return arenaOf(parseFormula("forall x. (X(f(x)) -> bot) -> (forall y z. (X(f(z)) -> bot) -> X(y)) -> bot"));
}

Seq bigPlay() {
  auto o = FoTerm::O;
  return {
      mv(0, -1, {o(0)}),
      mv(1, 0),
      mv(2, 1, {}, {std::nullopt}),
      mv(1, 0),
      mv(0, -1, {o(1)}),
      mv(3, 0, {f(o(0)), FoTerm::P("t")}, {MuLink{2, 0}}),
      mv(4, 5),
      mv(1, 4),
      mv(2, 7, {}, {std::nullopt}),
      mv(3, 4, {f(o(1)), o(0)}, {MuLink{8, 0}}),
      mv(4, 9),
      mv(5, 10, {}, {MuLink{2, 0}}),
  };
}

}  // namespace

TEST_CASE("the twelve-move play is a play") {
  Arena a = bigPlayArena();
  REQUIRE(a.size() == 6);
  CHECK(a[3].fo.size() == 2);
  PlayCheck c = checkPlay(a, bigPlay());
  CHECK_MESSAGE(c.verdict == Verdict::Play, c.reason, " at ", c.index);
  CHECK(checkPlay(a, {}).verdict == Verdict::Play);

  Seq bad = bigPlay();
  bad[11].mu[0] = MuLink{8, 0};  // X(f o0) against X(f o1)
  CHECK(checkPlay(a, bad).verdict == Verdict::JustifiedOnly);
  bad = bigPlay();
  bad[5].inst[1] = FoTerm::O(7);
  CHECK(checkPlay(a, bad).reason == "O-variable not introduced before");
  bad = bigPlay();
  bad[7].just = 3;
  CHECK(checkPlay(a, bad).verdict == Verdict::Illegal);
}

TEST_CASE("a justified sequence that is not a play") {
  Arena a = arenaOf(parseFormula("forall x y. Y -> ((forall z. X(f(y, z))) -> bot) -> Y"));
  Seq s = {
      mv(0, -1, {}, {std::nullopt}),     mv(2, 0),      mv(0, -1, {}, {std::nullopt}),
      mv(1, 0, {}, {MuLink{0, 0}}),      mv(3, 1),      mv(0, -1, {}, {MuLink{3, 0}}),
      mv(2, 2),                          mv(2, 5),
  };
  PlayCheck c = checkPlay(a, s);
  CHECK(c.verdict == Verdict::JustifiedOnly);
  s[7].just = 4;
  CHECK(checkPlay(a, s).verdict == Verdict::Illegal);
}

TEST_CASE("views") {
  Arena a = bigPlayArena();
  Seq s = bigPlay();
  Seq v = viewOf(a, s);
  // pre-view: positions 4 to 11
  REQUIRE(v.size() == 8);
  std::vector<int> nodes;
  for (auto& m : v) nodes.push_back(m.node);
  CHECK(nodes == std::vector<int>{0, 3, 4, 1, 2, 3, 4, 5});
  CHECK(v[0].inst[0] == FoTerm::O(0));
  CHECK(v[5].just == 0);
  CHECK(v[5].mu[0] == MuLink{4, 0});
  CHECK(!v[1].mu[0]);  // the target left the view
  CHECK(viewOf(a, Seq{}).empty());

  Seq w = {mv(0, -1, {FoTerm::O(7)}), mv(1, 0)};
  Seq wv = viewOf(a, w);
  CHECK(wv[0].inst[0] == FoTerm::O(0));
  CHECK(viewOf(a, wv) == wv);
  CHECK(isView(a, wv));

  std::map<FoVar, FoTerm> swap{{oVar(0), FoTerm::O(1)}, {oVar(1), FoTerm::O(0)}};
  Seq r = oRename(s, swap);
  CHECK(checkPlay(a, r).verdict == Verdict::Play);
  CHECK(viewOf(a, oRename(wv, {{oVar(0), FoTerm::O(5)}})) == wv);
  CHECK_THROWS(oRename(s, {{oVar(0), FoTerm::O(2)}, {oVar(1), FoTerm::O(2)}}));
  CHECK(grErase(viewOf(a, s)) == viewOf(gr(a), grErase(s)));
}

TEST_CASE("identity") {
  for (const char* txt : {"bot", "X", "forall x. (X(x) -> bot) -> Y(x)", "(X -> Y) /\\ Z", "((X -> Y) -> X) -> X"}) {
    Arena a = arenaOf(parseFormula(txt));
    auto [j, id] = identity(a);
    Classification c = classify(id, j);
    CHECK(c.muRigid);
    CHECK(c.total);
    CHECK(c.linear);
    for (auto& k : id.keys()) CHECK(isView(j.arena, id.view(k)));
    auto [jg, idg] = identity(gr(a));
    CHECK(grStrategy(id) == idg);
    auto [jc, cc] = compose(j, id, j, id);
    CHECK(cc == id);
    for (auto& p : viewClosure(id, 8)) {
      CHECK(checkPlay(j.arena, p).verdict == Verdict::Play);
      CHECK(isZigZag(p, j.arena, [&](int x) { return j.prov[static_cast<size_t>(x)].comp == 0; }));
    }
  }
  auto [jb, idb] = identity(arenaOf(parseFormula("bot")));
  CHECK(idb.resp.size() == 1);
  CHECK(classify(emptyStrategy(jb.arena)).total == false);
}
