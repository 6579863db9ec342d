#include "doctest.h"
#include "gamesem/typing.hpp"

using namespace gs;

static bool tc(const char* m, const char* a) { return checks(Ctx{}, parseTerm(m), parseFormula(a)); }

TEST_CASE("typechecking the named examples") {
  CHECK(tc("lam a. a", "X -> X"));
  CHECK(alphaEq(typecheck(Ctx{}, parseTerm("lam a:X. a")), parseFormula("X -> X")));
  CHECK(tc("lam f. mu al. (f) lam a. [al] a", "((X -> bot) -> bot) -> X"));
  CHECK(tc("lam a. a{t}", "(forall x. X(x)) -> X(t)"));
  CHECK(tc("lam f. (f{x}) Lam y. lam d. mu al. (f{y}) Lam z. lam a. mu de. [al] a",
           "(forall x. (forall y. X(x) -> X(y)) -> bot) -> bot"));
  CHECK(tc("lam f. mu al. [al] (f) lam a. mu de. [al] a", "((X -> Y) -> X) -> X"));
  CHECK_THROWS_AS(typecheck(Ctx{}, parseTerm("* *")), TypeError);
  CHECK(!tc("lam a. a", "X -> Y"));
  CHECK(!tc("lam a. p1 a", "X -> X"));
  CHECK(!tc("lam a. a{t}", "X -> X"));
}

TEST_CASE("forall introduction uses a fresh eigenvariable") {
  CHECK(tc("lam a. Lam x. a{x}", "(forall x. X(x)) -> forall y. X(y)"));
  CHECK(!tc("lam a. Lam x. a{x}", "(forall x. X(x)) -> forall y. X(t)"));
  CHECK(!tc("lam a. Lam x. a", "X(x) -> forall x. X(x)"));
  Ctx c;
  Elaborated e = elaborate(c, parseTerm("Lam x. lam a:X(x). a"));
  CHECK(alphaEq(e.type, parseFormula("forall z. X(z) -> X(z)")));
}

TEST_CASE("subject is fully annotated after elaboration") {
  Elaborated e = elaborateClosed(parseTerm("lam f. mu al. (f) lam a. [al] a"),
                                 parseFormula("((X -> bot) -> bot) -> X"));
  CHECK(e.term->ann);
  CHECK(e.term->l->ann);
  CHECK(alphaEq(typecheck(Ctx{}, e.term), e.type));
}

TEST_CASE("erasures") {
  Fm a1 = parseFormula("(forall x. (forall y. X(x) -> X(y)) -> bot) -> bot");
  Tm m1 = parseTerm("lam f. (f{x}) Lam y. lam d. mu al. (f{y}) Lam z. lam a. mu de. [al] a");
  auto [m2, a3] = eraseFirstOrder(m1, a1);
  CHECK(alphaEq(m2, parseTerm("lam f. (f) lam d. mu al. (f) lam a. mu de. [al] a")));
  CHECK(alphaEq(a3, parseFormula("((X -> X) -> bot) -> bot")));
  auto [m4, a4] = eraseClassical(m2, a3);
  CHECK(alphaEq(m4, parseTerm("lam f. (f) lam d. (f) lam a. a")));
  CHECK(alphaEq(a4, parseFormula("((bot -> bot) -> bot) -> bot")));
  auto [i, ia] = eraseFirstOrder(parseTerm("lam a. a{t}"), parseFormula("(forall x. X(x)) -> X(t)"));
  CHECK(alphaEq(i, parseTerm("lam a. a")));
  CHECK(alphaEq(ia, parseFormula("X -> X")));
  auto [d, da] = eraseClassical(parseTerm("lam f. mu al. (f) lam a. [al] a"), parseFormula("((X -> bot) -> bot) -> X"));
  CHECK(alphaEq(d, parseTerm("lam f. (f) lam a. a")));
  CHECK(alphaEq(da, parseFormula("((bot -> bot) -> bot) -> bot")));
  auto [s, sa] = eraseFirstOrder(tStar(), fTop());
  CHECK(s->kind == Term::Star);
  CHECK(sa->kind == Formula::Top);
}

TEST_CASE("namings under deeply nested μ-binders") {
  const char* m = "lam a. mu al. [al] mu b1. [b1] mu b2. [b2] mu b3. [b3] mu b4. [b4] mu b5. [b5] mu b6. [al] a";
  CHECK(checks({}, parseTerm(m), parseFormula("X -> X")));
}
