#include "doctest.h"
#include "gamesem/kernels.hpp"

using namespace gs;

TEST_CASE("parallel kernels agree with their serial runs") {
  auto corpus = standardCorpus(GS_CORPUS_DIR);
  auto par = checkRoundTrips(corpus, false);
  auto ser = checkRoundTrips(corpus, true);
  REQUIRE(par.size() == corpus.size());
  for (size_t i = 0; i < par.size(); ++i) {
    CAPTURE(corpus[i].name);
    CHECK(par[i].readback == ser[i].readback);
    CHECK(par[i].sound);
    CHECK(par[i].readback);
  }

  auto fs = randomFormulas(11, 300, 30);
  CHECK(randomFormulas(11, 300, 30).size() == fs.size());
  auto cp = checkCanonicalization(fs, false);
  auto cs = checkCanonicalization(fs, true);
  for (size_t i = 0; i < fs.size(); ++i) {
    CHECK(cp[i].descends);
    CHECK(cp[i].canonical);
    CHECK(cp[i].steps == cs[i].steps);
  }
}
