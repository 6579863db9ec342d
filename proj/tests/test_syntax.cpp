#include "doctest.h"
#include "gamesem/syntax.hpp"
#include "gamesem/typing.hpp"

using namespace gs;

TEST_CASE("formula parsing conventions") {
  CHECK(parseFormula("top")->kind == Formula::Top);
  Fm f = parseFormula("X -> Y -> Z");
  REQUIRE(f->kind == Formula::Imp);
  CHECK(f->r->kind == Formula::Imp);
  CHECK(alphaEq(f, fImp(fAtom("X"), fImp(fAtom("Y"), fAtom("Z")))));
  Fm g = parseFormula("A /\\ B /\\ C");
  CHECK(g->l->kind == Formula::And);
  Fm h = parseFormula("forall x. forall y. (Y -> (forall z. X(f(y,z)) -> bot) -> Y)");
  REQUIRE(h->kind == Formula::Forall);
  CHECK(h->bound.cls == VarClass::A);
  CHECK(show(h) == "forall x. forall y. Y -> (forall z. X(f(y,z)) -> bot) -> Y");
}

TEST_CASE("bound variables are renamed apart on parse") {
  Fm f = parseFormula("(forall x. X(x)) /\\ forall x. X(x)");
  CHECK(f->l->bound != f->r->bound);
  CHECK(alphaEq(f->l, f->r));
}

TEST_CASE("formula parse errors") {
  CHECK_THROWS_AS(parseFormula("X ->"), ParseError);
  CHECK_THROWS_AS(parseFormula("X(x) /\\ X"), ParseError);
  Signature sig;
  sig.relations["X"] = 1;
  CHECK_THROWS_AS(parseFormula("Y", &sig), ParseError);
  CHECK_NOTHROW(parseFormula("X(c)", &sig));
}

TEST_CASE("term parsing") {
  Tm a = parseTerm("lam a. a");
  CHECK(a->kind == Term::Lam);
  CHECK(alphaEq(a, tLam("b", tVar("b"))));
  Tm dne = parseTerm("lam f. mu al. (f) lam a. [al] a");
  CHECK(dne->l->kind == Term::Mu);
  CHECK(dne->l->l->kind == Term::App);
  Tm inst = parseTerm("lam a. a{t}");
  REQUIRE(inst->l->kind == Term::FoApp);
  CHECK(inst->l->fo == FoTerm::P("t"));
  CHECK_THROWS_AS(parseTerm("lam a. a{o0}"), ParseError);
  CHECK_THROWS_AS(parseTerm("Lam o1. *"), ParseError);
}

TEST_CASE("print then parse is the identity up to alpha") {
  for (const char* s : {"lam f. mu al. (f) lam a. [al] a", "lam a. a{t}", "lam a. <p1 a, p2 (a *)>",
                        "lam f. (f{x}) Lam y. lam d. mu al. (f{y}) Lam z. lam a. mu de. [al] a",
                        "lam a:X -> Y. lam b:X. a b", "Lam x. Lam y. lam a. a{f(x,y)}{x}"}) {
    Tm m = parseTerm(s);
    CHECK_MESSAGE(alphaEq(parseTerm(show(m)), m), s);
    CHECK(show(parseTerm(show(m))) == show(m));
  }
  CHECK(show(parseTerm("lam a. lam a. a")) == "lam a. lam a1. a1");
}

TEST_CASE("first-order substitution") {
  Fm x = parseFormula("X(x)");
  CHECK(show(substFo(x, FoVar{VarClass::P, "x"}, FoTerm::P("y"))) == "X(y)");
  Fm all = parseFormula("forall x. X(x)");
  CHECK(alphaEq(substFo(all, all->bound, FoTerm::P("t")), all));
  Fm fz = parseFormula("X(f(y,z))");
  CHECK(show(substFo(fz, FoVar{VarClass::P, "z"}, FoTerm::O(0))) == "X(f(y,o0))");
  Fm cap = fForall(FoVar{VarClass::A, "y"}, fAtom("X", {FoTerm::P("x"), FoTerm::mkVar({VarClass::A, "y"})}));
  Fm s = substFo(cap, FoVar{VarClass::P, "x"}, FoTerm::mkVar({VarClass::A, "y"}));
  CHECK(s->bound.name != "y");
  CHECK(alphaEq(substFo(x, FoVar{VarClass::P, "x"}, FoTerm::P("x")), x));
}

TEST_CASE("term substitution") {
  CHECK(substTerm(tVar("a"), tStar(), "a")->kind == Term::Star);
  Tm id = tLam("a", tVar("a"));
  CHECK(alphaEq(substTerm(id, tStar(), "a"), id));
  Tm aa = tApp(tVar("a"), tVar("a"));
  Tm bc = tApp(tVar("b"), tVar("c"));
  CHECK(alphaEq(substTerm(aa, bc, "a"), tApp(bc, bc)));
  Tm cap = tLam("b", tApp(tVar("a"), tVar("b")));
  Tm r = substTerm(cap, tVar("b"), "a");
  CHECK(!alphaEq(r, tLam("b", tApp(tVar("b"), tVar("b")))));
  CHECK(alphaEq(r, tLam("c", tApp(tVar("b"), tVar("c")))));
  Tm m = parseTerm("lam x. mu al. [al] x y");
  CHECK(alphaEq(substTerm(m, tVar("a"), "a"), m));
}

TEST_CASE("mu substitution") {
  Tm r = muSubst(tNamed("al", tVar("a")), "al", muCtxApp("al", tVar("b")));
  CHECK(alphaEq(r, tNamed("al", tApp(tVar("a"), tVar("b")))));
  CHECK(alphaEq(muSubst(tVar("b"), "al", muCtxApp("al", tVar("c"))), tVar("b")));
  Tm nested = tNamed("al", tProj(1, tPair(tVar("a"), tNamed("al", tVar("b")))));
  Tm want = tNamed("al", tProj(1, tProj(1, tPair(tVar("a"), tNamed("al", tProj(1, tVar("b")))))));
  CHECK(alphaEq(muSubst(nested, "al", muCtxProj("al", 1)), want));
  Tm shadow = tMu("al", tNamed("al", tVar("a")));
  CHECK(alphaEq(muSubst(shadow, "al", muCtxProj("al", 2)), shadow));
}

TEST_CASE("alpha equality") {
  CHECK(alphaEq(parseTerm("lam a. a"), parseTerm("lam b. b")));
  CHECK(alphaEq(parseTerm("Lam x. m{x}"), parseTerm("Lam y. m{y}")));
  CHECK(!alphaEq(parseTerm("lam a. a"), parseTerm("lam a. lam b. a")));
  CHECK(!alphaEq(parseTerm("lam a. lam b. a"), parseTerm("lam a. lam b. b")));
  CHECK(alphaEq(parseTerm("lam a:X. a"), parseTerm("lam a. a")));
}

TEST_CASE("fresh names are thread safe and distinct") {
  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i) seen.insert(freshName("a"));
  CHECK(seen.size() == 100);
  CHECK(baseName(*seen.begin()) == "a");
}
