#include "doctest.h"
#include "gamesem/canon.hpp"
#include "gamesem/corpus.hpp"
#include "gamesem/denote.hpp"
#include "gamesem/kam.hpp"
#include "gamesem/normal.hpp"

using namespace gs;

namespace {

KamState state(const char* m, std::vector<StackItem> items, std::optional<std::string> tail = std::nullopt) {
  return KamState{parseTerm(m), Stack{std::move(items), std::move(tail)}};
}

Key keyOf(const Arena& a, const Seq& v) {
  Key k;
  for (auto& m : v)
    if (a.isO(m.node)) k.push_back(m.node);
  return k;
}

}  // namespace

TEST_CASE("machine steps") {
  auto s = kamStep(state("(f) a", {}));
  REQUIRE(s);
  CHECK(show(*s) == "f |> a.eps");
  s = kamStep(state("lam a. (a) a", {StackItem::of(parseTerm("b"))}));
  REQUIRE(s);
  CHECK(alphaEq(s->code, parseTerm("(b) b")));
  s = kamStep(state("Lam x. a{x}", {StackItem::of(FoTerm::P("t"))}));
  REQUIRE(s);
  CHECK(alphaEq(s->code, parseTerm("a{t}")));
  CHECK(!kamStep(state("a", {})));
  s = kamStep(state("mu al. [al] (f) mu be. [al] b", {StackItem::of(parseTerm("c"))}, "ga"));
  REQUIRE(s);
  CHECK(alphaEq(s->code, parseTerm("[ga] ((f) mu be. [ga] (b) c) c")));
  s = kamStep(state("[al] a", {}));
  REQUIRE(s);
  CHECK(s->stack.tail == std::optional<std::string>("al"));
  s = kamStep(state("mu al. [al] a", {StackItem::of(parseTerm("c"))}));
  REQUIRE(s);
  CHECK(alphaEq(s->code, parseTerm("(a) c")));
  s = kamStep(state("<a, b>", {StackItem::projection(2)}));
  REQUIRE(s);
  CHECK(alphaEq(s->code, parseTerm("b")));
}

TEST_CASE("runs stop at head variables") {
  KamRun r = kamRun(state("lam a. a", {StackItem::of(parseTerm("b"))}));
  CHECK(r.stopped);
  CHECK(r.last.code->name == "b");
  CHECK(r.last.stack.items.empty());
  CHECK(!r.last.stack.tail);
  CHECK_THROWS(kamRun(state("lam a. a", {})));
  KamRun loop = kamRun(state("(lam x. (x) x) lam x. (x) x", {}), 50);
  CHECK(!loop.stopped);
}

TEST_CASE("each machine step is simulated by reduction") {
  KamState s = state("lam f. mu al. (f) lam a. [al] a", {StackItem::of(parseTerm("k"))}, "ga");
  Tm before = embed(s);
  for (int i = 0; i < 10; ++i) {
    auto n = kamStep(s);
    if (!n) break;
    Tm after = embed(*n);
    Tm t = before;
    bool reached = alphaEq(t, after);
    for (int fuel = 0; fuel < 10 && !reached; ++fuel) {
      auto r = reduceStep(t);
      if (!r) break;
      t = r->result;
      reached = alphaEq(t, after);
    }
    CHECK_MESSAGE(reached, show(before), " to ", show(after));
    s = *n;
    before = after;
  }
}

TEST_CASE("provability game moves") {
  UvaPosition p = uvaInitial(parseFormula("X -> X"));
  CHECK(p.u.empty());
  REQUIRE(p.v.size() == 1);
  p = uvaOpponent(p, parseFormula("X -> X"), {});
  CHECK(p.u.size() == 1);
  CHECK(p.a.size() == 1);
  CHECK_THROWS(uvaPlayer(p, parseFormula("Y"), {}));
  UvaPosition f = uvaPlayer(p, parseFormula("X"), {});
  CHECK(f.final());
  UvaPosition q = uvaOpponent(uvaInitial(parseFormula("(Y -> X) -> X")), parseFormula("(Y -> X) -> X"), {});
  CHECK_THROWS(uvaPlayer(q, parseFormula("Y"), {}));
  CHECK(show(uvaInitial(parseFormula("((X -> Y) -> X) -> X"))) == "({}, {((X -> Y) -> X) -> X}, {})");
}

TEST_CASE("extracted plays of the examples") {
  Seq v = extractPlay(parseTerm("lam a. a{t}"), parseFormula("(forall x. X(x)) -> X(t)"), {});
  Strategy s = denote(parseTerm("lam a. a{t}"), parseFormula("(forall x. X(x)) -> X(t)")).strategy;
  CHECK(v == s.view({0}));

  const char* dne = "lam f. mu al. (f) lam a. [al] a";
  Seq d = extractPlay(parseTerm(dne), parseFormula("((X -> bot) -> bot) -> X"), {1});
  REQUIRE(d.size() == 4);
  CHECK(d[3].mu[0] == MuLink{0, 0});
  CHECK(d == denote(parseTerm(dne), parseFormula("((X -> bot) -> bot) -> X")).strategy.view({0, 2}));
  CHECK_THROWS(extractPlay(parseTerm(dne), parseFormula("((X -> bot) -> bot) -> X"), {2}));
}

TEST_CASE("machine and strategy agree on the corpus") {
  int terms = 0;
  for (auto& e : standardCorpus(GS_CORPUS_DIR)) {
    if (!isArrowCanonical(e.type)) continue;
    CAPTURE(e.name);
    ++terms;
    Strategy s = denote(e.term, e.type).strategy;
    auto plays = extractPlays(e.term, e.type, 4);
    std::set<Key> seen;
    for (auto& p : plays) {
      CHECK(checkPlay(s.arena, p.view).verdict == Verdict::Play);
      CHECK(isView(s.arena, p.view));
      Key k = keyOf(s.arena, p.view);
      CHECK(s.view(k) == p.view);
      for (size_t i = 1; i <= k.size(); ++i) seen.insert(Key(k.begin(), k.begin() + static_cast<long>(i)));
      if (p.complete) CHECK(p.positions.back().final());
    }
    for (auto& k : s.keys())
      if (k.size() <= 4) CHECK(seen.count(k));
  }
  CHECK(terms >= 30);
}
