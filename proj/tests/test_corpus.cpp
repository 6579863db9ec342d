#include "doctest.h"
#include "gamesem/corpus.hpp"
#include "gamesem/denote.hpp"
#include "gamesem/normal.hpp"

using namespace gs;

TEST_CASE("corpus terms typecheck and read back to their normal forms") {
  auto corpus = standardCorpus(GS_CORPUS_DIR);
  CHECK(corpus.size() >= 50);
  for (auto& e : corpus) {
    CAPTURE(e.name);
    if (!checks({}, e.term, e.type)) {
      FAIL_CHECK("ill-typed");
      continue;
    }
    NormalForm n = canonicalNormalForm(e.term, e.type);
    CHECK(checks({}, n.term, n.type));
    CHECK(isCanonicalNormalForm(n.term, n.type));
    Denotation d = denote(e.term, e.type);
    Tm r = readback(d.strategy, e.type);
    CHECK_MESSAGE(alphaEq(r, n.term), show(r), " vs ", show(n.term));
  }
}
