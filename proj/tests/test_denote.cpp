#include "doctest.h"
#include "gamesem/denote.hpp"

using namespace gs;

namespace {

Strategy den(const char* m, const char* a) { return denote(parseTerm(m), parseFormula(a)).strategy; }

const char* kDne = "lam f. mu al. (f) lam a. [al] a";
const char* kDneT = "((X -> bot) -> bot) -> X";
const char* kPeirce = "lam f. mu al. [al] (f) lam a. mu de. [al] a";
const char* kPeirceT = "((X -> Y) -> X) -> X";
const char* kM1 = "lam f. (f{x}) Lam y. lam d. mu al. (f{y}) Lam z. lam a. mu de. [al] a";
const char* kM1T = "(forall x. (forall y. X(x) -> X(y)) -> bot) -> bot";

}  // namespace

TEST_CASE("denotation of an instantiation") {
  Strategy s = den("lam a. a{t}", "(forall x. X(x)) -> X(t)");
  REQUIRE(s.resp.size() == 1);
  auto [k, m] = *s.resp.begin();
  CHECK(k == Key{0});
  CHECK(m.node == 1);
  CHECK(m.just == 0);
  CHECK(m.inst == std::vector<FoTerm>{FoTerm::P("t")});
  CHECK(m.mu == std::vector<std::optional<MuLink>>{MuLink{0, 0}});
}

TEST_CASE("the six-move view") {
  Strategy s = den(kM1, kM1T);
  std::vector<Key> ks = s.keys();
  Key longest;
  for (auto& k : ks)
    if (k.size() > longest.size()) longest = k;
  Seq v = s.view(longest);
  REQUIRE(v.size() == 6);
  CHECK(v[1].inst == std::vector<FoTerm>{FoTerm::P("x")});
  CHECK(v[2].inst == std::vector<FoTerm>{FoTerm::O(0)});
  CHECK(v[3].inst == std::vector<FoTerm>{FoTerm::O(0)});
  CHECK(v[3].just == 0);
  CHECK(v[4].inst == std::vector<FoTerm>{FoTerm::O(1)});
  CHECK(v[5].just == 4);
  CHECK(v[5].mu[0] == MuLink{2, 0});
  CHECK(checkPlay(s.arena, v).verdict == Verdict::Play);
  CHECK(ks.size() == 3);
}

TEST_CASE("star denotes the empty strategy") {
  Strategy s = den("*", "top");
  CHECK(s.resp.empty());
  CHECK(s.arena.size() == 0);
  CHECK(alphaEq(readback(s, parseFormula("top")), tStar()));
}

TEST_CASE("linearity verdicts") {
  Linearity d = classifyLinearity(den(kDne, kDneT));
  CHECK(d.lambdaLinear);
  CHECK(d.muLinear);
  Linearity m = classifyLinearity(den("lam f. mu al. (f) lam a. mu de. [al] a", "((X -> Y) -> bot) -> X"));
  CHECK(m.lambdaLinear);
  CHECK(m.muAffine);
  CHECK(!m.muLinear);
  Linearity p = classifyLinearity(den(kPeirce, kPeirceT));
  CHECK(p.lambdaLinear);
  CHECK(!p.muAffine);
  CHECK(!p.lambdaStrategy);
  CHECK(classifyLinearity(den("lam a. mu al. [al] a", "X -> X")).lambdaStrategy);
}

TEST_CASE("peirce strategy") {
  Strategy s = den(kPeirce, kPeirceT);
  Classification c = classify(s);
  CHECK(c.total);
  CHECK(!c.muRigid);  // μ-rigid strategies are λ-strategies
  // views of length 2 and 4
  CHECK(c.size == 6);
  for (auto& k : s.keys()) CHECK(checkPlay(s.arena, s.view(k)).verdict == Verdict::Play);
}

TEST_CASE("forests of the drawn examples") {
  LmForest a = forestOfTerm(parseTerm("lam a. mu d. a"), parseFormula("bot -> X"));
  REQUIRE(a.nodes.size() == 2);
  CHECK(a.nodes[1].lamTarget == 0);
  CHECK(a.nodes[1].lamLabel == 1);
  CHECK(a.nodes[1].muTarget == -1);
  CHECK(!forestDefect(a));

  LmForest h = forestOfTerm(parseTerm("lam f. lam a. lam b. mu ga. [ga] ((f) mu be. [be] b) mu al. [al] a"),
                            parseFormula("(Y -> X -> Z) -> X -> Y -> Z"));
  REQUIRE(h.nodes.size() == 6);
  CHECK(h.nodes[1].lamLabel == 1);
  CHECK(h.nodes[1].muTarget == 0);
  CHECK(h.nodes[3].lamLabel == 3);
  CHECK(h.nodes[3].muTarget == 2);
  CHECK(h.nodes[5].lamLabel == 2);
  CHECK(h.nodes[5].muTarget == 4);

  LmForest t = forestOfTerm(parseTerm("lam a. lam f. (f{t}) mu al. [al] a{h(t)}"),
                            parseFormula("(forall x. X(x)) -> (forall x. X(h(x)) -> bot) -> bot"));
  REQUIRE(t.nodes.size() == 4);
  CHECK(t.nodes[1].lamLabel == 2);
  CHECK(t.nodes[1].terms == std::vector<FoTerm>{FoTerm::P("t")});
  CHECK(t.nodes[3].terms == std::vector<FoTerm>{FoTerm::app("h", {FoTerm::P("t")})});
  CHECK(t.nodes[3].muTarget == 2);

  LmForest m1 = forestOfTerm(parseTerm(kM1), parseFormula(kM1T));
  REQUIRE(m1.nodes.size() == 6);
  CHECK(m1.nodes[2].terms == std::vector<FoTerm>{FoTerm::O(0)});
  CHECK(m1.nodes[4].terms == std::vector<FoTerm>{FoTerm::O(1)});
  CHECK(m1.nodes[5].lamTarget == 4);
  CHECK(m1.nodes[5].muTarget == 2);
}

TEST_CASE("types recover what forests lose") {
  LmForest f;
  f.nodes.resize(2);
  f.roots = {0};
  f.nodes[0].kids = {1};
  f.nodes[1].parent = 0;
  f.nodes[1].odd = true;
  f.nodes[1].lamTarget = 0;
  f.nodes[1].lamLabel = 1;
  f.nodes[1].muTarget = 0;
  CHECK_THROWS(termOfForest(f));
  CHECK(alphaEq(termOfForest(typeForest(f, parseFormula("X -> X"))), parseTerm("lam a. mu al. [al] a")));
  CHECK(alphaEq(termOfForest(typeForest(f, parseFormula("X -> Y -> X"))), parseTerm("lam a. lam b. mu al. [al] a")));
}

TEST_CASE("readback inverts denotation on canonical terms") {
  std::vector<std::pair<const char*, const char*>> cases = {
      {kDne, kDneT},
      {kPeirce, kPeirceT},
      {kM1, kM1T},
      {"lam a. mu d. a", "bot -> X"},
      {"lam f. mu al. (f) lam a. mu de. [al] a", "((X -> Y) -> bot) -> X"},
      {"lam f. lam a. lam b. mu ga. [ga] ((f) mu be. [be] b) mu al. [al] a", "(Y -> X -> Z) -> X -> Y -> Z"},
      {"lam a. lam f. (f{t}) mu al. [al] a{h(t)}", "(forall x. X(x)) -> (forall x. X(h(x)) -> bot) -> bot"},
      {"lam a. mu al. [al] a{t}", "(forall x. X(x)) -> X(t)"},
      {"Lam x. lam a. mu al. [al] a", "forall x. X(x) -> X(x)"},
      {"<lam a. mu al. [al] a, lam b. mu be. [be] b>", "(X -> X) /\\ (Y -> Y)"},
  };
  for (auto& [m, a] : cases) {
    Tm t = parseTerm(m);
    Fm ty = parseFormula(a);
    Denotation d = denote(t, ty);
    Tm r = readback(d.strategy, ty);
    CHECK_MESSAGE(alphaEq(r, t), m, " read back as ", show(r));
    LmForest f = forestOfTerm(t, ty);
    CHECK(!forestDefect(f));
    CHECK(strategyOfForest(f, ty) == d.strategy);
    CHECK(alphaEq(termOfForest(f), t));
    CHECK(checks({}, r, ty));
  }
}

TEST_CASE("first-order equalities hold in the model") {
  auto same = [](const char* m, const char* n, const char* a) {
    Fm ty = parseFormula(a);
    return denote(parseTerm(m), ty).strategy == denote(parseTerm(n), ty).strategy;
  };
  CHECK(same("lam a. (Lam x. lam b: X(x). mu al: X(x). [al] b) {t} a", "lam a. mu al. [al] a", "X(t) -> X(t)"));
  CHECK(same("lam a. Lam x. a{x}", "lam a. a", "(forall x. X(x)) -> forall x. X(x)"));
  CHECK(same("lam f. (mu al: forall x. X(x). [al] f) {t}", "lam f. mu al. [al] f{t}", "(forall x. X(x)) -> X(t)"));
  CHECK(same("lam a. p1 <a, *>", "lam a. a", "X -> X"));
  CHECK(same("lam a. lam b. (lam c: X. c) a", "lam a. lam b. a", "X -> Y -> X"));
  CHECK(!same("lam a. lam b. a", "lam a. lam b. b", "X -> X -> X"));
}
