#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "gamesem/corpus.hpp"
#include "gamesem/denote.hpp"
#include "gamesem/gen.hpp"
#include "gamesem/kam.hpp"
#include "gamesem/kernels.hpp"
#include "gamesem/laws.hpp"
#include "gamesem/normal.hpp"
#include "gamesem/qa.hpp"

using namespace gs;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
void criterion(int n, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(n, false, std::string("exception: ") + e.what());
  }
}

std::string frac(long a, long b) { return std::to_string(a) + "/" + std::to_string(b); }

const std::vector<CorpusEntry>& corpus() {
  static const auto c = standardCorpus(GS_CORPUS_DIR);
  return c;
}

bool foldable(const Fm& a) {
  try {
    lambdaType(a);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Key keyOf(const Arena& a, const Seq& v) {
  Key k;
  for (auto& m : v)
    if (a.isO(m.node)) k.push_back(m.node);
  return k;
}

// Random propositional normal terms, to widen the strategies seen by criteria 6 and 7.
std::vector<CorpusEntry> randomPropositional(uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  FormulaGenOptions fo;
  fo.firstOrder = false;
  fo.allowAnd = false;
  fo.allowTop = false;
  fo.atoms = 2;
  std::vector<CorpusEntry> out;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < 50 * count; ++tries) {
    Fm q = randomArrowType(rng, 2 + tries % 8, fo);
    if (!foldable(q)) continue;
    if (auto m = randomNormalTerm(rng, q)) out.push_back({"random-" + std::to_string(out.size()), *m, q});
  }
  return out;
}

void isoSuite() {
  auto eqs = isoEquations();
  int ok = 0;
  for (auto& e : eqs) {
    bool good = typesIsomorphic(e.lhs, e.rhs) && checks({}, e.forward, fImp(e.lhs, e.rhs)) &&
                checks({}, e.backward, fImp(e.rhs, e.lhs));
    for (int side = 0; side < 2 && good; ++side) {
      Fm a = side == 0 ? e.lhs : e.rhs;
      Tm w1 = side == 0 ? e.forward : e.backward;
      Tm w2 = side == 0 ? e.backward : e.forward;
      Fm t = fImp(a, a);
      good = alphaEq(canonicalNormalForm(tLam("x", tApp(w2, tApp(w1, tVar("x"))), a), t).term,
                     canonicalNormalForm(tLam("x", tVar("x")), t).term);
    }
    ok += good;
  }
  report(1, ok == 12 && eqs.size() == 12, frac(ok, static_cast<long>(eqs.size())) + " equations");
}

void nonIso() {
  std::ifstream f(std::string(GS_CORPUS_DIR) + "/noniso.txt");
  int pairs = 0, falsePositives = 0;
  std::string bad;
  for (std::string line; std::getline(f, line);) {
    line = line.substr(0, line.find('#'));
    auto bar = line.find('|');
    if (bar == std::string::npos) continue;
    ++pairs;
    if (typesIsomorphic(parseFormula(line.substr(0, bar)), parseFormula(line.substr(bar + 1)))) {
      ++falsePositives;
      bad += " [" + line + "]";
    }
  }
  report(2, pairs >= 20 && falsePositives == 0, std::to_string(pairs) + " pairs, " + std::to_string(falsePositives) + " false positives" + bad);
}

void roundTrips() {
  const std::set<std::string> named = {"dne",       "dne-mod",     "peirce",         "inst",       "six-moves",    "curry-style",
                                       "intuitionistic", "efq", "three-args", "fo-args", "linear-example"};
  auto rs = checkRoundTrips(corpus());
  long ok = 0, namedOk = 0, sound = 0;
  std::string bad;
  for (size_t i = 0; i < rs.size(); ++i) {
    bool good = rs[i].typed && rs[i].normalForm && rs[i].readback;
    ok += good;
    sound += good && rs[i].sound;
    if (named.count(corpus()[i].name)) namedOk += good;
    if (!good) bad += " " + corpus()[i].name;
  }
  report(3, ok == static_cast<long>(rs.size()) && ok >= 50 && namedOk == static_cast<long>(named.size()),
         frac(ok, static_cast<long>(rs.size())) + " corpus terms, " + frac(namedOk, static_cast<long>(named.size())) +
             " named examples" + bad);

  // Normal forms are fixed points of the model: the readback of a normal form is itself.
  std::mt19937_64 rng(4);
  long fixed = 0, total = 0;
  for (int i = 0; i < 2000 && total < 150; ++i) {
    Fm q = randomArrowType(rng, 1 + i % 12);
    auto m = randomNormalTerm(rng, q);
    if (!m) continue;
    ++total;
    fixed += alphaEq(readback(denote(*m, q).strategy, q), *m);
  }
  report(4, sound == static_cast<long>(rs.size()) && fixed == total && total >= 100,
         frac(sound, static_cast<long>(rs.size())) + " corpus terms denote as their normal forms, " + frac(fixed, total) +
             " random normal forms read back to themselves");
}

void laws() {
  MorphismPool pool = randomPool(2024);
  LawCounts c = checkCategoryLaws(pool, 2024, 250);
  std::ostringstream d;
  d << c.triples << " triples: assoc " << c.associative << ", id-left " << c.leftNeutral << ", id-right " << c.rightNeutral
    << ", GR-comp " << c.grComposition << "; GR(id) " << c.grIdentity << "/" << c.objects << "; rigid closure "
    << c.rigidClosed << "/" << c.rigidPairs;
  report(5, c.all() && c.triples >= 200, d.str());
}

bool peirceViews() {
  Fm a = parseFormula("((X -> Y) -> X) -> X");
  Strategy u = unfoldStrategy(denote(parseTerm("lam f. mu al. [al] (f) lam a. mu de. [al] a"), a).strategy);
  std::vector<std::vector<std::pair<int, int>>> maximal;
  for (auto& k : u.keys()) {
    bool prefix = false;
    for (auto& k2 : u.keys()) prefix = prefix || (k2.size() > k.size() && std::equal(k.begin(), k.end(), k2.begin()));
    if (prefix) continue;
    std::vector<std::pair<int, int>> v;
    for (auto& m : u.view(k)) v.emplace_back(m.node, m.just);
    maximal.push_back(v);
  }
  std::vector<std::vector<std::pair<int, int>>> expected = {{{0, -1}, {1, 0}, {2, 1}, {3, 2}, {4, 3}, {7, 0}},
                                                            {{0, -1}, {1, 0}, {6, 1}, {7, 0}}};
  return maximal == expected;
}

void foldUnfold() {
  long n = 0, ok = 0;
  auto entries = randomPropositional(6, 40);
  for (auto& e : corpus())
    if (foldable(e.type) && isPropositional(e.term)) entries.push_back(e);
  for (auto& e : entries) {
    ++n;
    Strategy s = denote(e.term, e.type).strategy;
    Strategy u = unfoldStrategy(s);
    ok += identical(u.arena, arenaOf(lambdaType(e.type))) && identical(foldArena(u.arena), s.arena) &&
          foldStrategy(u) == s && qaClassify(u).labelRigid && unfoldStrategy(foldStrategy(u)) == u;
  }
  bool peirce = peirceViews();
  report(6, ok == n && n > 0 && peirce,
         frac(ok, n) + " strategies fold back, peirce maximal views " + (peirce ? "match" : "differ"));
}

void lambdaTranslation() {
  long n = 0, typed = 0, agree = 0;
  auto entries = randomPropositional(7, 40);
  for (auto& e : corpus())
    if (foldable(e.type) && isPropositional(e.term)) entries.push_back(e);
  for (auto e : entries) {
    LambdaTranslation t;
    try {
      t = toLambda(e.term, e.type);
    } catch (const Error&) {
      // pairs and projections: translate the normal form instead
      NormalForm nf = canonicalNormalForm(e.term, e.type);
      if (!foldable(nf.type)) continue;
      e = {e.name, nf.term, nf.type};
      t = toLambda(e.term, e.type);
    }
    Strategy s = denote(e.term, e.type).strategy;
    ++n;
    typed += checks(t.ctx, t.term, t.type);
    bool wb = qaClassify(unfoldStrategy(s)).wellBracketed;
    agree += wb == isLambdaShaped(readback(s, e.type)) && wb == classifyLinearity(s).lambdaStrategy;
  }
  report(7, typed == n && agree == n && n >= 30,
         frac(typed, n) + " translations typecheck, well-bracketing matches lambda-shape on " + frac(agree, n));
}

void descent() {
  auto fs = randomFormulas(8, 1000, 30);
  auto rs = checkCanonicalization(fs);
  long desc = 0, canon = 0, steps = 0;
  std::map<DescentMethod, long> methods;
  for (auto& r : rs) {
    desc += r.descends;
    canon += r.canonical;
    steps += r.steps;
    for (auto& [m, k] : r.methods) methods[m] += k;
  }
  std::string by;
  for (auto& [m, k] : methods) by += (by.empty() ? " (" : ", ") + descentMethodName(m) + " " + std::to_string(k);
  report(8, desc == 1000 && canon == 1000,
         frac(desc, 1000) + " strictly descending, " + frac(canon, 1000) + " canonical, " + std::to_string(steps) + " steps" + (by.empty() ? "" : by + ")"));
}

void machine() {
  long terms = 0, plays = 0, legal = 0, same = 0, complete = 0, final = 0, covered = 0, keys = 0;
  std::string bad;
  for (auto& e : corpus()) {
    if (!isArrowCanonical(e.type)) continue;
    ++terms;
    Strategy s = denote(e.term, e.type).strategy;
    std::set<Key> seen;
    try {
      for (auto& p : extractPlays(e.term, e.type, 4)) {
        ++plays;
        legal += checkPlay(s.arena, p.view).verdict == Verdict::Play;
        Key k = keyOf(s.arena, p.view);
        same += s.view(k) == p.view;
        for (size_t i = 1; i <= k.size(); ++i) seen.insert(Key(k.begin(), k.begin() + static_cast<long>(i)));
        if (p.complete) {
          ++complete;
          final += p.positions.empty() || p.positions.back().final();
        }
      }
    } catch (const Error& ex) {
      bad += " " + e.name + ": " + ex.what();
    }
    for (auto& k : s.keys())
      if (k.size() <= 4) {
        ++keys;
        covered += seen.count(k);
      }
  }
  report(9, bad.empty() && legal == plays && same == plays && final == complete && covered == keys && terms >= 30,
         std::to_string(terms) + " terms, " + frac(legal, plays) + " plays legal, " + frac(same, plays) +
             " equal to views of the strategy, " + frac(covered, keys) + " views reached, " + frac(final, complete) +
             " complete plays final" + bad);
}

void linearity() {
  auto lin = [](const char* m, const char* a) { return classifyLinearity(denote(parseTerm(m), parseFormula(a)).strategy); };
  Linearity dne = lin("lam f. mu al. (f) lam a. [al] a", "((X -> bot) -> bot) -> X");
  Linearity mod = lin("lam f. mu al. (f) lam a. mu de. [al] a", "((X -> Y) -> bot) -> X");
  Linearity pei = lin("lam f. mu al. [al] (f) lam a. mu de. [al] a", "((X -> Y) -> X) -> X");
  bool a = dne.lambdaLinear && dne.muLinear;
  bool b = mod.muAffine && !mod.muLinear;
  bool c = pei.lambdaLinear && !pei.muAffine;
  report(10, a && b && c,
         std::string("dne ") + (a ? "ok" : "wrong") + ", modified dne " + (b ? "ok" : "wrong") + ", peirce " + (c ? "ok" : "wrong"));
}

}  // namespace

int main() {
  criterion(1, isoSuite);
  criterion(2, nonIso);
  criterion(3, [] { roundTrips(); });
  criterion(5, laws);
  criterion(6, foldUnfold);
  criterion(7, lambdaTranslation);
  criterion(8, descent);
  criterion(9, machine);
  criterion(10, linearity);
  std::printf("%s\n", failures == 0 ? "all criteria pass" : (std::to_string(failures) + " criteria fail").c_str());
  return failures == 0 ? 0 : 1;
}
