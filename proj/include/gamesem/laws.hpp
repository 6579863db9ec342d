#pragma once

#include <cstdint>

#include "gamesem/denote.hpp"

namespace gs {

// A morphism A → B: strategy on the arena of A → B, arena laid out as ΣA → B.
struct Morphism {
  int from = -1, to = -1;
  Tm term;
  JArena arena;
  Strategy strategy;
};

// Random arrow-canonical objects and random normal-form morphisms between them.
struct MorphismPool {
  std::vector<Fm> objects;
  std::vector<Morphism> general, rigid;
};
MorphismPool randomPool(uint64_t seed, int objects = 16, int tries = 8);

struct LawCounts {
  int triples = 0;
  int associative = 0;
  int leftNeutral = 0, rightNeutral = 0;
  int grComposition = 0;
  int grIdentity = 0, objects = 0;
  int rigidPairs = 0, rigidClosed = 0;
  bool all() const;
};

// Category laws on `count` sampled triples and as many μ-rigid pairs; the samples are
// drawn serially from the seed, then checked in parallel unless `serial`.
LawCounts checkCategoryLaws(const MorphismPool& pool, uint64_t seed, int count, bool serial = false);

}  // namespace gs
