#include "doctest.h"
#include "gamesem/canon.hpp"
#include "gamesem/gen.hpp"

using namespace gs;

static Fm F(const char* s) { return parseFormula(s); }

TEST_CASE("single rewrite examples") {
  CHECK(alphaEq(canonicalize(F("(A /\\ B) -> C")).formula, F("A -> B -> C")));
  CHECK(alphaEq(canonicalize(F("forall x. X(x) /\\ Y")).formula, F("(forall x. X(x)) /\\ forall x. Y")));
  CHECK(alphaEq(canonicalize(F("top -> X")).formula, F("X")));
  CHECK(alphaEq(canonicalize(F("X -> top")).formula, F("top")));
  CHECK(alphaEq(canonicalize(F("A /\\ (B /\\ C)")).formula, F("(A /\\ B) /\\ C")));
  CHECK(alphaEq(canonicalize(F("X -> forall y. Y(y)")).formula, F("forall y. X -> Y(y)")));
}

TEST_CASE("trace records each rewrite in order") {
  auto r = canonicalize(F("(A /\\ top) -> B /\\ C"));
  REQUIRE(r.trace.size() >= 2);
  CHECK(r.trace[0].rule == Rule::AndTopR);
  CHECK(r.trace[0].path == Path{0});
  CHECK(alphaEq(r.trace.back().wholeAfter, r.formula));
  for (size_t i = 1; i < r.trace.size(); ++i) CHECK(alphaEq(r.trace[i - 1].wholeAfter, r.trace[i].wholeBefore));
}

TEST_CASE("canonical grammar membership") {
  CHECK(isCanonical(fTop()));
  CHECK(isCanonical(F("X -> bot")));
  CHECK(!isCanonical(F("(X /\\ Y) -> bot")));
  CHECK(isCanonical(F("forall x. (Y -> (forall z. X(f(y,z)) -> bot) -> Y)")));
  CHECK(isCanonical(F("(X /\\ Y) /\\ Z")));
  CHECK(!isCanonical(F("X /\\ (Y /\\ Z)")));
  CHECK(!isCanonical(F("X /\\ top")));
}

TEST_CASE("measure values") {
  auto m = measure(fBot());
  CHECK(m->phi == 2);
  CHECK(m->psi == 2);
  auto a = measure(F("bot /\\ bot"));
  CHECK(a->phi == 12);
  CHECK(a->psi == 12);
  auto f = measure(F("forall x. bot"));
  CHECK(f->phi == 4);
  CHECK(f->psi == 4);
  auto i = measure(F("(X -> X) -> X"));
  CHECK(i->phi == 16);
  CHECK(!measure(F("((((X -> X) -> X) -> X) -> X) -> X")).has_value());
}

TEST_CASE("random formulas canonicalize with strict descent and idempotence") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Fm a = randomFormula(rng, 1 + static_cast<int>(rng() % 15));
    auto r = canonicalize(a);
    CHECK(isCanonical(r.formula));
    for (auto& s : r.trace) CHECK(checkDescent(s).decreased);
    CHECK(canonicalize(r.formula).trace.empty());
  }
}

TEST_CASE("measure constructors are strictly monotone") {
  std::mt19937_64 rng(3);
  FormulaGenOptions opt;
  for (int i = 0; i < 300; ++i) {
    Fm a = randomFormula(rng, 1 + static_cast<int>(rng() % 5), opt);
    Fm b = randomFormula(rng, 1 + static_cast<int>(rng() % 5), opt);
    Fm c = randomFormula(rng, 1 + static_cast<int>(rng() % 5), opt);
    auto ma = measure(a), mb = measure(b);
    if (!ma || !mb || !lexGreater(*ma, *mb)) continue;
    for (auto [x, y] : {std::pair{fAnd(a, c), fAnd(b, c)}, {fAnd(c, a), fAnd(c, b)}, {fImp(a, c), fImp(b, c)},
                        {fImp(c, a), fImp(c, b)}, {fForall(freshA(), a), fForall(freshA(), b)}}) {
      auto mx = measureBig(x), my = measureBig(y);
      bool phiGt = compare(mx.phi, my.phi) == Cmp::Greater;
      bool phiEq = compare(mx.phi, my.phi) == Cmp::Equal;
      bool psiGt = compare(mx.psi, my.psi) == Cmp::Greater;
      CHECK((phiGt || (phiEq && psiGt)));
    }
  }
}

TEST_CASE("big number comparisons") {
  BigNum two = BigNum::of(2);
  BigNum t = bigPow(two, bigPow(two, BigNum::of(100000)));
  CHECK(!t.exact);
  CHECK(compare(t, two) == Cmp::Greater);
  CHECK(compare(t, bigMul(t, two)) != Cmp::Greater);
  CHECK(compare(t, bigPow(two, bigPow(two, BigNum::of(100100)))) == Cmp::Less);
  CHECK(compare(bigPow(BigNum::of(3), BigNum::of(5)), BigNum::of(243)) == Cmp::Equal);
}
