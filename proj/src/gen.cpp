#include "gamesem/gen.hpp"

#include <algorithm>

#include "gamesem/canon.hpp"

namespace gs {

namespace {

struct Gen {
  std::mt19937_64& rng;
  const FormulaGenOptions& opt;
  std::vector<FoVar> scope;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Fm leaf() {
    int r = pick(opt.allowTop ? 6 : 5);
    if (r == 5) return fTop();
    if (r == 4) return fBot();
    int k = pick(opt.atoms);
    if (!opt.firstOrder || scope.empty() || pick(2)) return fAtom(std::string(1, static_cast<char>('X' + k % 3)) + suffix(k));
    return fAtom(std::string(1, static_cast<char>('U' + k % 3)) + suffix(k),
                 {FoTerm::mkVar(scope[pick(static_cast<int>(scope.size()))])});
  }

  static std::string suffix(int k) { return k < 3 ? "" : std::to_string(k / 3); }

  Fm gen(int size) {
    if (size <= 1) return leaf();
    int choices = opt.firstOrder ? 3 : 2;
    int c = pick(choices);
    if (c == 0 && !opt.allowAnd) c = 1;
    if (c != 2 && size < 3) {
      if (!opt.firstOrder) return leaf();
      c = 2;
    }
    if (c == 2) {
      FoVar x = freshA("x");
      scope.push_back(x);
      Fm body = gen(size - 1);
      scope.pop_back();
      return fForall(x, body);
    }
    int left = 1 + pick(size - 2 > 0 ? size - 2 : 1);
    if (left > size - 2) left = size - 2;
    if (left < 1) left = 1;
    Fm l = gen(left), r = gen(size - 1 - left);
    return c == 0 ? fAnd(l, r) : fImp(l, r);
  }
};

}  // namespace

Fm randomFormula(std::mt19937_64& rng, int size, const FormulaGenOptions& opt) {
  Gen g{rng, opt, {}};
  return g.gen(size);
}

}  // namespace gs


namespace gs {

Fm randomArrowType(std::mt19937_64& rng, int size, const FormulaGenOptions& opt) {
  for (;;) {
    Fm a = canonicalize(randomFormula(rng, size, opt)).formula;
    if (isArrowCanonical(a)) return a;
  }
}

namespace {

struct Shape {
  std::vector<FoVar> fo;
  std::vector<Fm> args;
  Fm target;
};

Shape shapeOf(Fm a) {
  Shape s;
  while (a->kind == Formula::Forall) {
    s.fo.push_back(a->bound);
    a = a->l;
  }
  while (a->kind == Formula::Imp) {
    s.args.push_back(a->l);
    a = a->r;
  }
  s.target = a;
  return s;
}

bool matchFo(const FoTerm& pat, const FoTerm& t, const std::set<FoVar>& metas, std::map<FoVar, FoTerm>& sub) {
  if (pat.isVar() && metas.count(pat.var)) {
    auto [it, fresh] = sub.emplace(pat.var, t);
    return fresh || it->second == t;
  }
  if (pat.isVar() || t.isVar()) return pat == t;
  if (pat.fn != t.fn || pat.args.size() != t.args.size()) return false;
  for (size_t i = 0; i < pat.args.size(); ++i)
    if (!matchFo(pat.args[i], t.args[i], metas, sub)) return false;
  return true;
}

struct TermGen {
  std::mt19937_64& rng;
  const TermGenOptions& opt;
  std::vector<std::pair<std::string, Fm>> lams, mus;
  std::vector<FoVar> scope;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  FoTerm anyTerm() {
    if (scope.empty() || pick(4) == 0) return FoTerm::P("t");
    return FoTerm::mkVar(scope[static_cast<size_t>(pick(static_cast<int>(scope.size())))]);
  }

  struct Head {
    std::string var;
    std::vector<FoTerm> inst;
    std::vector<Fm> args;
    std::string beta;  // empty when the head ends in ⊥
  };

  std::vector<Head> heads(const std::vector<FoVar>& here, const std::string& alpha, const Fm& r, int depth) {
    std::vector<Head> out;
    for (auto& [b, ty] : lams) {
      Shape sb = shapeOf(ty);
      if (depth == 0 && !sb.args.empty()) continue;
      auto finish = [&](std::map<FoVar, FoTerm> sub, std::string beta) {
        Head h{b, {}, {}, std::move(beta)};
        for (auto& y : sb.fo) {
          if (!sub.count(y)) sub[y] = anyTerm();
          h.inst.push_back(sub[y]);
        }
        for (auto& a : sb.args) h.args.push_back(substFo(a, sub));
        out.push_back(std::move(h));
      };
      std::set<FoVar> metas(sb.fo.begin(), sb.fo.end());
      if (opt.muRigid) {
        if (sb.fo.size() != here.size()) continue;
        std::map<FoVar, FoTerm> sub;
        for (size_t i = 0; i < here.size(); ++i) sub[sb.fo[i]] = FoTerm::mkVar(here[i]);
        Fm s = substFo(sb.target, sub);
        if (r->kind == Formula::Bot ? s->kind == Formula::Bot : alphaEq(s, r)) finish(sub, alpha);
        continue;
      }
      if (sb.target->kind == Formula::Bot) {
        finish({}, "");
        continue;
      }
      for (auto& [beta, bt] : mus) {
        if (bt->rel != sb.target->rel || bt->args.size() != sb.target->args.size()) continue;
        std::map<FoVar, FoTerm> sub;
        bool ok = true;
        for (size_t i = 0; i < bt->args.size() && ok; ++i) ok = matchFo(sb.target->args[i], bt->args[i], metas, sub);
        if (ok) finish(sub, beta);
      }
    }
    return out;
  }

  std::optional<Tm> gen(const Fm& q, int depth) {
    Shape s = shapeOf(q);
    size_t nl = lams.size(), nm = mus.size(), ns = scope.size();
    std::map<FoVar, FoTerm> sub;
    std::vector<FoVar> here;
    for (auto& x : s.fo) {
      FoVar o = freshO();
      here.push_back(o);
      scope.push_back(o);
      sub[x] = FoTerm::mkVar(o);
    }
    std::vector<std::string> names;
    for (auto& a : s.args) {
      names.push_back(freshName("a"));
      lams.emplace_back(names.back(), substFo(a, sub));
    }
    Fm r = substFo(s.target, sub);
    std::string alpha;
    if (r->kind == Formula::Atom) {
      alpha = freshName("al");
      mus.emplace_back(alpha, r);
    }
    std::optional<Tm> body;
    auto hs = heads(here, alpha, r, depth);
    std::shuffle(hs.begin(), hs.end(), rng);
    for (auto& h : hs) {
      Tm t = tVar(h.var);
      for (auto& u : h.inst) t = tFoApp(t, u);
      bool ok = true;
      for (auto& a : h.args) {
        auto m = gen(a, depth - 1);
        if (!m) {
          ok = false;
          break;
        }
        t = tApp(t, *m);
      }
      if (!ok) continue;
      if (!h.beta.empty()) t = tNamed(h.beta, t);
      if (!alpha.empty()) t = tMu(alpha, t, r);
      body = t;
      break;
    }
    lams.resize(nl);
    mus.resize(nm);
    scope.resize(ns);
    if (!body) return std::nullopt;
    Tm t = *body;
    for (size_t i = s.args.size(); i-- > 0;) t = tLam(names[i], t, substFo(s.args[i], sub));
    for (size_t i = here.size(); i-- > 0;) t = tFoLam(here[i], t, "x");
    return t;
  }
};

}  // namespace

std::optional<Tm> randomNormalTerm(std::mt19937_64& rng, const Fm& q, const TermGenOptions& opt) {
  TermGen g{rng, opt, {}, {}, {}};
  return g.gen(q, opt.maxDepth);
}

}  // namespace gs
