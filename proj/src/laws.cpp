#include "gamesem/laws.hpp"

#include <random>

#include "gamesem/canon.hpp"
#include "gamesem/gen.hpp"

namespace gs {

MorphismPool randomPool(uint64_t seed, int objects, int tries) {
  std::mt19937_64 rng(seed);
  FormulaGenOptions fo;
  fo.allowAnd = false;
  fo.allowTop = false;
  fo.atoms = 1;
  MorphismPool pool;
  for (int i = 0; i < objects; ++i) {
    fo.firstOrder = i % 2 == 1;
    pool.objects.push_back(randomArrowType(rng, 1 + i % 9, fo));
  }
  for (int a = 0; a < objects; ++a)
    for (int b = 0; b < objects; ++b) {
      const Fm& fa = pool.objects[static_cast<size_t>(a)];
      const Fm& fb = pool.objects[static_cast<size_t>(b)];
      Fm q = fImp(fa, fb);
      if (!isArrowCanonical(q)) continue;
      for (bool rigid : {false, true}) {
        auto& out = rigid ? pool.rigid : pool.general;
        std::vector<Strategy> seen;
        for (int t = 0; t < tries; ++t) {
          TermGenOptions opt;
          opt.muRigid = rigid;
          auto m = randomNormalTerm(rng, q, opt);
          if (!m) continue;
          Strategy s = denote(*m, q).strategy;
          bool dup = false;
          for (auto& x : seen) dup = dup || x == s;
          if (dup) continue;
          seen.push_back(s);
          out.push_back({a, b, *m, jarena(std::vector<Fm>{fa}, fb, {}), s});
        }
      }
    }
  return pool;
}

bool LawCounts::all() const {
  return associative == triples && leftNeutral == triples && rightNeutral == triples && grComposition == triples &&
         grIdentity == objects && rigidClosed == rigidPairs;
}

namespace {

struct Triple {
  const Morphism *f, *g, *h;
};

std::vector<Triple> sampleChains(const std::vector<Morphism>& ms, std::mt19937_64& rng, int count, int length) {
  std::vector<std::vector<const Morphism*>> from;
  for (auto& m : ms) {
    if (static_cast<int>(from.size()) <= m.from) from.resize(static_cast<size_t>(m.from) + 1);
    from[static_cast<size_t>(m.from)].push_back(&m);
  }
  auto next = [&](int obj) -> const Morphism* {
    if (obj >= static_cast<int>(from.size()) || from[static_cast<size_t>(obj)].empty()) return nullptr;
    auto& v = from[static_cast<size_t>(obj)];
    return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
  };
  std::vector<Triple> out;
  for (long attempt = 0; static_cast<int>(out.size()) < count && attempt < 1000L * count; ++attempt) {
    const Morphism* f = &ms[std::uniform_int_distribution<size_t>(0, ms.size() - 1)(rng)];
    const Morphism* g = next(f->to);
    if (!g) continue;
    const Morphism* h = length > 2 ? next(g->to) : nullptr;
    if (length > 2 && !h) continue;
    out.push_back({f, g, h});
  }
  return out;
}

JArena grJArena(const JArena& j) { return jarena(std::vector<Arena>{gr(j.comps[0])}, gr(j.comps[1]), {}); }

}  // namespace

LawCounts checkCategoryLaws(const MorphismPool& pool, uint64_t seed, int count, bool serial) {
  std::mt19937_64 rng(seed);
  std::vector<Triple> triples = sampleChains(pool.general, rng, count, 3);
  std::vector<Triple> pairs = sampleChains(pool.rigid, rng, count, 2);
  LawCounts c;
  c.triples = static_cast<int>(triples.size());
  c.rigidPairs = static_cast<int>(pairs.size());
  c.objects = static_cast<int>(pool.objects.size());
  int n = static_cast<int>(triples.size());
  int assoc = 0, left = 0, right = 0, grc = 0, rc = 0, gri = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : assoc, left, right, grc) if (!serial)
  for (int i = 0; i < n; ++i) {
    auto [f, g, h] = triples[static_cast<size_t>(i)];
    auto fg = compose(f->arena, f->strategy, g->arena, g->strategy);
    auto gh = compose(g->arena, g->strategy, h->arena, h->strategy);
    assoc += compose(fg.first, fg.second, h->arena, h->strategy).second ==
             compose(f->arena, f->strategy, gh.first, gh.second).second;
    auto ida = identity(f->arena.comps[0]);
    auto idb = identity(f->arena.comps[1]);
    left += compose(ida.first, ida.second, f->arena, f->strategy).second == f->strategy;
    right += compose(f->arena, f->strategy, idb.first, idb.second).second == f->strategy;
    grc += grStrategy(fg.second) ==
           compose(grJArena(f->arena), grStrategy(f->strategy), grJArena(g->arena), grStrategy(g->strategy)).second;
  }
  int np = static_cast<int>(pairs.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : rc) if (!serial)
  for (int i = 0; i < np; ++i) {
    auto [f, g, h] = pairs[static_cast<size_t>(i)];
    rc += classify(compose(f->arena, f->strategy, g->arena, g->strategy).second).muRigid;
  }
  int no = c.objects;
#pragma omp parallel for reduction(+ : gri) if (!serial)
  for (int i = 0; i < no; ++i) {
    Arena a = arenaOf(pool.objects[static_cast<size_t>(i)]);
    gri += grStrategy(identity(a).second) == identity(gr(a)).second;
  }
  c.associative = assoc;
  c.leftNeutral = left;
  c.rightNeutral = right;
  c.grComposition = grc;
  c.rigidClosed = rc;
  c.grIdentity = gri;
  return c;
}

}  // namespace gs
