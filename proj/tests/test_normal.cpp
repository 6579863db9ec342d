#include "doctest.h"
#include "gamesem/denote.hpp"
#include "gamesem/normal.hpp"

using namespace gs;

namespace {

Tm cnf(const char* m, const char* a) { return canonicalNormalForm(parseTerm(m), parseFormula(a)).term; }

}  // namespace

TEST_CASE("single reduction steps") {
  auto s = reduceStep(parseTerm("(lam a. a) *"));
  REQUIRE(s);
  CHECK(s->kind == StepKind::Beta);
  CHECK(alphaEq(s->result, tStar()));

  s = reduceStep(parseTerm("lam f. mu be. [be] mu al. [al] f"));
  REQUIRE(s);
  CHECK(s->kind == StepKind::Rho);
  CHECK(alphaEq(s->result, parseTerm("lam f. mu be. [be] f")));

  s = reduceStep(parseTerm("lam f. lam a. lam b. (mu al. [al] (f) a) b"));
  REQUIRE(s);
  CHECK(s->kind == StepKind::Mu);
  CHECK(alphaEq(s->result, parseTerm("lam f. lam a. lam b. mu al. [al] ((f) a) b")));

  CHECK(alphaEq(bmrNormalize(parseTerm("p2 <*, (Lam x. lam a. a{x}) {t}>")), parseTerm("lam a. a{t}")));
  CHECK(!reduceStep(parseTerm("lam a. a")));
}

TEST_CASE("canonical normal forms") {
  CHECK(alphaEq(cnf("lam a. mu d. a", "bot -> X"), parseTerm("lam a. mu d. a")));
  CHECK(alphaEq(cnf("lam a. a", "X -> X"), parseTerm("lam a. mu al. [al] a")));
  const char* peirce = "lam f. mu al. [al] (f) lam a. mu de. [al] a";
  CHECK(alphaEq(cnf(peirce, "((X -> Y) -> X) -> X"), parseTerm(peirce)));
  CHECK(alphaEq(cnf("lam f. lam a. (f) a", "(X -> Y) -> X -> Y"),
                parseTerm("lam f. lam a. mu al. [al] (f) mu be. [be] a")));
  CHECK(alphaEq(cnf("lam p. p1 p", "X /\\ Y -> X"), parseTerm("lam a. lam b. mu al. [al] a")));
  CHECK(alphaEq(cnf("lam a. *", "X -> top"), tStar()));
  CHECK(alphaEq(cnf("lam a. <a, a>", "X -> X /\\ X"),
                parseTerm("<lam a. mu al. [al] a, lam b. mu be. [be] b>")));
  CHECK(alphaEq(cnf("lam f. mu al. (f) lam a. [al] a", "((X -> bot) -> bot) -> X"),
                parseTerm("lam f. mu al. (f) lam a. [al] a")));
  CHECK(alphaEq(cnf("lam a. mu d. [d] a", "bot -> bot"), parseTerm("lam a. a")));
}

TEST_CASE("witnesses of the isomorphism equations") {
  auto eqs = isoEquations();
  REQUIRE(eqs.size() == 12);
  for (auto& e : eqs) {
    CAPTURE(e.name);
    CHECK(checks({}, e.forward, fImp(e.lhs, e.rhs)));
    CHECK(checks({}, e.backward, fImp(e.rhs, e.lhs)));
    for (int side = 0; side < 2; ++side) {
      Fm a = side == 0 ? e.lhs : e.rhs;
      Tm w1 = side == 0 ? e.forward : e.backward;
      Tm w2 = side == 0 ? e.backward : e.forward;
      Tm round = tLam("x", tApp(w2, tApp(w1, tVar("x"))), a);
      Fm t = fImp(a, a);
      CHECK_MESSAGE(alphaEq(canonicalNormalForm(round, t).term, canonicalNormalForm(tLam("x", tVar("x")), t).term),
                    show(round));
    }
  }
  CHECK(alphaEq(isoWitness(Rule::ImpTopL, parseFormula("top -> X"), true), parseTerm("lam a. (a) *")));
  CHECK(alphaEq(isoWitness(Rule::AndTopR, parseFormula("X /\\ top"), false), parseTerm("lam a. <a, *>")));
}

TEST_CASE("coercion along a canonicalization trace") {
  for (const char* f : {"(X /\\ Y -> Z) /\\ top", "X -> forall x. (U(x) /\\ top)", "forall x. (X -> (Y /\\ forall y. U(y)))",
                        "((top -> X) -> Y) -> Z /\\ Z"}) {
    Fm a = parseFormula(f);
    CanonResult cr = canonicalize(a);
    REQUIRE(!cr.trace.empty());
    for (auto& s : cr.trace) {
      CHECK(checks({}, stepWitness(s, true), fImp(s.wholeBefore, s.wholeAfter)));
      CHECK(checks({}, stepWitness(s, false), fImp(s.wholeAfter, s.wholeBefore)));
    }
    Fm id = fImp(a, a);
    CHECK(checks({}, coerceToCanonical(tLam("x", tVar("x"), a), id), canonicalize(id).formula));
  }
}

TEST_CASE("normal forms are idempotent and denotationally sound") {
  std::vector<std::pair<const char*, const char*>> cases = {
      {"lam a. lam b. <b, a>", "X -> Y -> Y /\\ X"},
      {"lam f. lam p. (f) p1 p p2 p", "(X -> Y -> Z) -> X /\\ Y -> Z"},
      {"lam a. Lam x. a{x}", "(forall x. U(x)) -> forall y. U(y)"},
      {"lam a. (lam b: X. mu al: X. [al] b) a", "X -> X"},
      {"lam f. lam g. lam x. (g) ((f) x)", "(X -> Y) -> (Y -> Z) -> X -> Z"},
      {"lam f. (f{x}) Lam y. lam d. mu al. (f{y}) Lam z. lam a. mu de. [al] a",
       "(forall x. (forall y. X(x) -> X(y)) -> bot) -> bot"},
      {"lam a. mu al. [al] a", "(X /\\ top) -> (X /\\ top)"},
  };
  for (auto& [m, a] : cases) {
    CAPTURE(m);
    Fm ty = parseFormula(a);
    NormalForm n = canonicalNormalForm(parseTerm(m), ty);
    CHECK(checks({}, n.term, n.type));
    CHECK(isCanonicalNormalForm(n.term, n.type));
    CHECK(denote(n.term, n.type).strategy == denote(coerceToCanonical(parseTerm(m), ty), n.type).strategy);
  }
}

TEST_CASE("translation to simple types") {
  CHECK(alphaEq(toSimpleType(parseFormula("forall x. X(x)")), parseFormula("O -> X")));
  CHECK(alphaEq(toSimpleType(parseFormula("bot -> X(f(c()))")), parseFormula("F -> X")));
  Tm t = toSimpleTerm(parseTerm("lam a. a{f(t1, t2)}"));
  CHECK(show(t).find("f'f") != std::string::npos);
  REQUIRE(t->l->kind == Term::App);
  CHECK(t->l->r->kind == Term::App);
  CHECK_THROWS(toSimpleType(parseFormula("X /\\ Y")));

  const char* m1 = "lam f. (f{x}) Lam y. lam d. mu al. (f{y}) Lam z. lam a. mu de. [al] a";
  SimpleTranslation s = toSimpleTypes(parseTerm(m1), parseFormula("(forall x. (forall y. X(x) -> X(y)) -> bot) -> bot"));
  CHECK(checks(s.ctx, s.term, s.type));
  CHECK(alphaEq(s.type, parseFormula("(O -> (O -> X -> X) -> F) -> F")));
}

TEST_CASE("reduction steps commute with the simple-types translation") {
  std::vector<std::pair<const char*, const char*>> cases = {
      {"lam a. (Lam x. lam b: X(x). mu al: X(x). [al] b) {t} a", "X(t) -> X(t)"},
      {"lam f. (mu al: forall x. X(x). [al] f) {t}", "(forall x. X(x)) -> X(t)"},
      {"lam f. lam a. lam b. (mu al: Y -> Z. [al] (f) a) b", "(X -> Y -> Z) -> X -> Y -> Z"},
      {"lam f. mu be. [be] mu al. [al] f", "X -> X"},
      {"lam a. (lam b: forall x. U(x). b{g(c())}) a", "(forall x. U(x)) -> U(g(c()))"},
  };
  for (auto& [m, a] : cases) {
    CAPTURE(m);
    Tm t = elaborateClosed(parseTerm(m), parseFormula(a)).term;
    int steps = 0;
    while (auto s = reduceStep(t)) {
      auto st = reduceStep(toSimpleTerm(t));
      REQUIRE(st);
      CHECK(st->kind == s->kind);
      CHECK(alphaEq(st->result, toSimpleTerm(s->result)));
      t = s->result;
      ++steps;
    }
    CHECK(steps > 0);
    CHECK(!reduceStep(toSimpleTerm(t)));
  }
}
