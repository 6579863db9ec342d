#pragma once

#include <cstdint>
#include <map>

#include "gamesem/canon.hpp"
#include "gamesem/corpus.hpp"

namespace gs {

// Corpus-level kernels: one independent check per item, run under OpenMP unless `serial`.

struct RoundTrip {
  bool typed = false;
  bool normalForm = false;  // the syntactic normal form is canonical and typechecks
  bool readback = false;    // readback of the denotation equals the syntactic normal form
  bool sound = false;       // the term and its normal form denote the same strategy
  std::string detail;
};
std::vector<RoundTrip> checkRoundTrips(const std::vector<CorpusEntry>& corpus, bool serial = false);

struct CanonRun {
  bool descends = false;
  bool canonical = false;
  int steps = 0;
  std::map<DescentMethod, int> methods;  // which check decided each step
};
std::vector<CanonRun> checkCanonicalization(const std::vector<Fm>& formulas, bool serial = false);

// Random formulas drawn serially from the seed, sizes 1..maxSize.
std::vector<Fm> randomFormulas(uint64_t seed, int count, int maxSize);

}  // namespace gs
