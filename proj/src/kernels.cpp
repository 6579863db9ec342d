#include "gamesem/kernels.hpp"

#include "gamesem/denote.hpp"
#include "gamesem/gen.hpp"
#include "gamesem/normal.hpp"

namespace gs {

namespace {

RoundTrip roundTrip(const CorpusEntry& e) {
  RoundTrip r;
  try {
    r.typed = checks({}, e.term, e.type);
    if (!r.typed) return r;
    NormalForm n = canonicalNormalForm(e.term, e.type);
    r.normalForm = checks({}, n.term, n.type) && isCanonicalNormalForm(n.term, n.type);
    Strategy s = denote(e.term, e.type).strategy;
    Tm back = readback(s, e.type);
    r.readback = alphaEq(back, n.term);
    r.sound = denote(n.term, n.type).strategy == s;
    if (!r.readback) r.detail = show(back) + " vs " + show(n.term);
  } catch (const std::exception& ex) {
    r.detail = ex.what();
  }
  return r;
}

}  // namespace

std::vector<RoundTrip> checkRoundTrips(const std::vector<CorpusEntry>& corpus, bool serial) {
  std::vector<RoundTrip> out(corpus.size());
  const long n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic) if (!serial)
  for (long i = 0; i < n; ++i) out[static_cast<size_t>(i)] = roundTrip(corpus[static_cast<size_t>(i)]);
  return out;
}

std::vector<CanonRun> checkCanonicalization(const std::vector<Fm>& formulas, bool serial) {
  std::vector<CanonRun> out(formulas.size());
  const long n = static_cast<long>(formulas.size());
#pragma omp parallel for schedule(dynamic) if (!serial)
  for (long i = 0; i < n; ++i) {
    CanonResult c = canonicalize(formulas[static_cast<size_t>(i)]);
    CanonRun& r = out[static_cast<size_t>(i)];
    r.steps = static_cast<int>(c.trace.size());
    r.descends = true;
    for (auto& s : c.trace) {
      DescentCheck d = checkDescent(s);
      r.descends = r.descends && d.decreased;
      ++r.methods[d.method];
    }
    r.canonical = isCanonical(c.formula) && canonicalize(c.formula).trace.empty();
  }
  return out;
}

std::vector<Fm> randomFormulas(uint64_t seed, int count, int maxSize) {
  std::mt19937_64 rng(seed);
  std::vector<Fm> out;
  FormulaGenOptions opt;
  opt.maxSize = maxSize;
  for (int i = 0; i < count; ++i) out.push_back(randomFormula(rng, 1 + static_cast<int>(rng() % static_cast<uint64_t>(maxSize)), opt));
  return out;
}

}  // namespace gs
