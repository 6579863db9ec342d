#include "gamesem/normal.hpp"

namespace gs {

const char* const kIndividual = "O";
const char* const kFalsity = "F";
const char* const kXi = "xi'";

std::string stepName(StepKind k) {
  switch (k) {
    case StepKind::Beta: return "beta";
    case StepKind::Eta: return "eta";
    case StepKind::Mu: return "mu";
    case StepKind::Rho: return "rho";
    case StepKind::Theta: return "theta";
    case StepKind::Nu: return "nu";
  }
  return "?";
}

// ---------------------------------------------------------------- βμρ

namespace {

Fm annAfter(const Fm& a, const Term& elim) {
  if (!a) return a;
  switch (elim.kind) {
    case Term::App: return a->kind == Formula::Imp ? a->r : nullptr;
    case Term::FoApp: return a->kind == Formula::Forall ? substFo(a->l, a->bound, elim.fo) : nullptr;
    case Term::Proj1: return a->kind == Formula::And ? a->l : nullptr;
    case Term::Proj2: return a->kind == Formula::And ? a->r : nullptr;
    default: return nullptr;
  }
}

std::optional<Reduction> headStep(const Tm& m) {
  switch (m->kind) {
    case Term::App:
      if (m->l->kind == Term::Lam) return Reduction{StepKind::Beta, substTerm(m->l->l, m->r, m->l->name)};
      if (m->l->kind == Term::Mu) {
        const Tm& mu = m->l;
        return Reduction{StepKind::Mu, tMu(mu->name, muSubst(mu->l, mu->name, muCtxApp(mu->name, m->r)), annAfter(mu->ann, *m))};
      }
      return std::nullopt;
    case Term::FoApp:
      if (m->l->kind == Term::FoLam) return Reduction{StepKind::Beta, substFo(m->l->l, m->l->fovar, m->fo)};
      if (m->l->kind == Term::Mu) {
        const Tm& mu = m->l;
        return Reduction{StepKind::Mu, tMu(mu->name, muSubst(mu->l, mu->name, muCtxFoApp(mu->name, m->fo)), annAfter(mu->ann, *m))};
      }
      return std::nullopt;
    case Term::Proj1:
    case Term::Proj2: {
      int i = m->kind == Term::Proj1 ? 1 : 2;
      if (m->l->kind == Term::Pair) return Reduction{StepKind::Beta, i == 1 ? m->l->l : m->l->r};
      if (m->l->kind == Term::Mu) {
        const Tm& mu = m->l;
        return Reduction{StepKind::Mu, tMu(mu->name, muSubst(mu->l, mu->name, muCtxProj(mu->name, i)), annAfter(mu->ann, *m))};
      }
      return std::nullopt;
    }
    case Term::Named:
      if (m->l->kind == Term::Mu) return Reduction{StepKind::Rho, renameMu(m->l->l, m->l->name, m->name)};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

Tm rebuild(const Tm& m, const Tm& l, const Tm& r) {
  auto t = std::make_shared<Term>(*m);
  t->l = l;
  t->r = r;
  return t;
}

}  // namespace

std::optional<Reduction> reduceStep(const Tm& m) {
  if (auto s = headStep(m)) return s;
  if (m->l) {
    if (auto s = reduceStep(m->l)) return Reduction{s->kind, rebuild(m, s->result, m->r)};
  }
  if (m->r) {
    if (auto s = reduceStep(m->r)) return Reduction{s->kind, rebuild(m, m->l, s->result)};
  }
  return std::nullopt;
}

Tm bmrNormalize(const Tm& m, long fuel) {
  Tm t = m;
  for (long i = 0; i < fuel; ++i) {
    auto s = reduceStep(t);
    if (!s) return t;
    t = s->result;
  }
  throw Error("βμρ normalization ran out of fuel");
}

// ---------------------------------------------------------------- witnesses

namespace {

Tm lam(const std::string& a, const Fm& ann, Tm body) { return tLam(a, std::move(body), ann); }
Tm v(const std::string& a) { return tVar(a); }
Tm p1(Tm t) { return tProj(1, std::move(t)); }
Tm p2(Tm t) { return tProj(2, std::move(t)); }
Tm app(Tm f, Tm x) { return tApp(std::move(f), std::move(x)); }

// A bound variable's instance: the body of ∀x.A with x replaced by z.
Fm openAt(const Fm& q, const FoVar& z) { return substFo(q->l, q->bound, FoTerm::mkVar(z)); }

}  // namespace

Tm isoWitness(Rule r, const Fm& before, bool forward) {
  const Fm& b = before;
  Fm after;
  if (r == Rule::AndComm) {
    if (b->kind != Formula::And) throw Error("commutativity needs a conjunction");
    after = fAnd(b->r, b->l);
  } else if (r == Rule::ForallSwap) {
    if (b->kind != Formula::Forall || b->l->kind != Formula::Forall) throw Error("swap needs two quantifiers");
    after = fForall(b->l->bound, fForall(b->bound, b->l->l));
  } else {
    auto a = applyRule(r, b);
    if (!a) throw Error(ruleName(r) + " does not apply to " + show(b));
    after = *a;
  }
  const Fm& dom = forward ? b : after;
  std::string a = freshName("a"), c = freshName("b"), d = freshName("c");
  switch (r) {
    case Rule::AndAssoc:
      if (forward) return lam(a, dom, tPair(tPair(p1(v(a)), p1(p2(v(a)))), p2(p2(v(a)))));
      return lam(a, dom, tPair(p1(p1(v(a))), tPair(p2(p1(v(a))), p2(v(a)))));
    case Rule::AndTopR:
      return forward ? lam(a, dom, p1(v(a))) : lam(a, dom, tPair(v(a), tStar()));
    case Rule::AndTopL:
      return forward ? lam(a, dom, p2(v(a))) : lam(a, dom, tPair(tStar(), v(a)));
    case Rule::Curry: {
      Fm x = b->l->l, y = b->l->r;
      if (forward) return lam(a, dom, lam(c, x, lam(d, y, app(v(a), tPair(v(c), v(d))))));
      return lam(a, dom, lam(c, b->l, app(app(v(a), p1(v(c))), p2(v(c)))));
    }
    case Rule::ImpTopL:
      return forward ? lam(a, dom, app(v(a), tStar())) : lam(a, dom, lam(c, fTop(), v(a)));
    case Rule::ImpAnd: {
      Fm x = b->l;
      if (forward) {
        std::string c2 = freshName("b");
        return lam(a, dom, tPair(lam(c, x, p1(app(v(a), v(c)))), lam(c2, x, p2(app(v(a), v(c2))))));
      }
      return lam(a, dom, lam(c, x, tPair(app(p1(v(a)), v(c)), app(p2(v(a)), v(c)))));
    }
    case Rule::ImpTopR:
      return forward ? lam(a, dom, tStar()) : lam(a, dom, lam(c, b->l, v(a)));
    case Rule::ForallAnd: {
      FoVar z = freshO(), z2 = freshO();
      std::string h = b->bound.name;
      if (forward)
        return lam(a, dom, tPair(tFoLam(z, p1(tFoApp(v(a), FoTerm::mkVar(z))), h),
                                 tFoLam(z2, p2(tFoApp(v(a), FoTerm::mkVar(z2))), h)));
      return lam(a, dom, tFoLam(z, tPair(tFoApp(p1(v(a)), FoTerm::mkVar(z)), tFoApp(p2(v(a)), FoTerm::mkVar(z))), h));
    }
    case Rule::ForallTop:
      return forward ? lam(a, dom, tStar()) : lam(a, dom, tFoLam(freshO(), v(a), b->bound.name));
    case Rule::ImpForall: {
      FoVar z = freshO();
      Fm x = b->l;
      std::string h = b->r->bound.name;
      if (forward) return lam(a, dom, tFoLam(z, lam(c, x, tFoApp(app(v(a), v(c)), FoTerm::mkVar(z))), h));
      return lam(a, dom, lam(c, x, tFoLam(z, app(tFoApp(v(a), FoTerm::mkVar(z)), v(c)), h)));
    }
    case Rule::AndComm:
      return lam(a, dom, tPair(p2(v(a)), p1(v(a))));
    case Rule::ForallSwap: {
      FoVar zx = freshO(), zy = freshO();
      // dom = ∀u∀w.A; the result binds w first
      return lam(a, dom, tFoLam(zy, tFoLam(zx, tFoApp(tFoApp(v(a), FoTerm::mkVar(zx)), FoTerm::mkVar(zy)), dom->bound.name),
                                dom->l->bound.name));
    }
  }
  throw Error("no witness");
}

namespace {

struct Lifted {
  Tm fwd, bwd;
};

Lifted lift(Rule r, const Fm& before, const Fm& after, const Path& path, size_t at) {
  if (at == path.size()) return {isoWitness(r, before, true), isoWitness(r, before, false)};
  int dir = path[at];
  std::string a = freshName("a"), b = freshName("b");
  switch (before->kind) {
    case Formula::And: {
      if (dir == 0) {
        Lifted s = lift(r, before->l, after->l, path, at + 1);
        return {lam(a, before, tPair(app(s.fwd, p1(v(a))), p2(v(a)))), lam(a, after, tPair(app(s.bwd, p1(v(a))), p2(v(a))))};
      }
      Lifted s = lift(r, before->r, after->r, path, at + 1);
      return {lam(a, before, tPair(p1(v(a)), app(s.fwd, p2(v(a))))), lam(a, after, tPair(p1(v(a)), app(s.bwd, p2(v(a)))))};
    }
    case Formula::Imp: {
      if (dir == 1) {
        Lifted s = lift(r, before->r, after->r, path, at + 1);
        return {lam(a, before, lam(b, before->l, app(s.fwd, app(v(a), v(b))))),
                lam(a, after, lam(b, after->l, app(s.bwd, app(v(a), v(b)))))};
      }
      Lifted s = lift(r, before->l, after->l, path, at + 1);
      return {lam(a, before, lam(b, after->l, app(v(a), app(s.bwd, v(b))))),
              lam(a, after, lam(b, before->l, app(v(a), app(s.fwd, v(b)))))};
    }
    case Formula::Forall: {
      FoVar z = freshO(), z2 = freshO();
      Lifted s = lift(r, openAt(before, z), openAt(after, z), path, at + 1);
      Lifted s2 = lift(r, openAt(before, z2), openAt(after, z2), path, at + 1);
      return {lam(a, before, tFoLam(z, app(s.fwd, tFoApp(v(a), FoTerm::mkVar(z))), before->bound.name)),
              lam(a, after, tFoLam(z2, app(s2.bwd, tFoApp(v(a), FoTerm::mkVar(z2))), after->bound.name))};
    }
    default:
      throw Error("rewrite path leaves the formula");
  }
}

}  // namespace

Tm stepWitness(const RewriteStep& s, bool forward) {
  Lifted l = lift(s.rule, s.wholeBefore, s.wholeAfter, s.path, 0);
  return forward ? l.fwd : l.bwd;
}

std::vector<IsoEquation> isoEquations() {
  struct Row {
    const char* name;
    const char* lhs;
    const char* rhs;
    Rule rule;
  };
  const Row rows[] = {
      {"and-assoc", "X /\\ (Y /\\ Z)", "(X /\\ Y) /\\ Z", Rule::AndAssoc},
      {"and-top-right", "X /\\ top", "X", Rule::AndTopR},
      {"and-top-left", "top /\\ X", "X", Rule::AndTopL},
      {"curry", "(X /\\ Y) -> Z", "X -> Y -> Z", Rule::Curry},
      {"top-implies", "top -> X", "X", Rule::ImpTopL},
      {"implies-and", "X -> (Y /\\ Z)", "(X -> Y) /\\ (X -> Z)", Rule::ImpAnd},
      {"implies-top", "X -> top", "top", Rule::ImpTopR},
      {"forall-and", "forall x. (U(x) /\\ V(x))", "(forall x. U(x)) /\\ forall x. V(x)", Rule::ForallAnd},
      {"forall-top", "forall x. top", "top", Rule::ForallTop},
      {"implies-forall", "X -> forall x. U(x)", "forall x. X -> U(x)", Rule::ImpForall},
      {"and-comm", "X /\\ Y", "Y /\\ X", Rule::AndComm},
      {"forall-swap", "forall x y. W(x, y)", "forall y x. W(x, y)", Rule::ForallSwap},
  };
  std::vector<IsoEquation> out;
  for (auto& r : rows) {
    Fm l = parseFormula(r.lhs), rh = parseFormula(r.rhs);
    out.push_back({r.name, l, rh, isoWitness(r.rule, l, true), isoWitness(r.rule, l, false)});
  }
  return out;
}

Tm coerceToCanonical(const Tm& m, const Fm& a) {
  CanonResult cr = canonicalize(a);
  Tm t = m;
  for (auto& s : cr.trace) t = app(stepWitness(s, true), t);
  return t;
}

// ---------------------------------------------------------------- canonical normal form

namespace {

Tm stripWith(const Tm& m, std::map<std::string, bool>& botMu) {
  switch (m->kind) {
    case Term::Mu: {
      if (!m->ann) throw Error("stripping needs annotated μ-binders");
      bool bot = m->ann->kind == Formula::Bot;
      auto saved = botMu.find(m->name) != botMu.end() ? std::optional<bool>(botMu[m->name]) : std::nullopt;
      botMu[m->name] = bot;
      Tm body = stripWith(m->l, botMu);
      if (saved)
        botMu[m->name] = *saved;
      else
        botMu.erase(m->name);
      return bot ? body : tMu(m->name, body, m->ann);
    }
    case Term::Named: {
      Tm body = stripWith(m->l, botMu);
      auto it = botMu.find(m->name);
      if (it != botMu.end() && it->second) return body;
      return tNamed(m->name, body);
    }
    default: {
      Tm l = m->l ? stripWith(m->l, botMu) : nullptr;
      Tm r = m->r ? stripWith(m->r, botMu) : nullptr;
      if (l == m->l && r == m->r) return m;
      return rebuild(m, l, r);
    }
  }
}

struct Elim {
  Term::Kind kind;
  Tm arg;
  FoTerm fo;
};

Tm applyElims(Tm t, const std::vector<Elim>& sp) {
  for (auto& e : sp) {
    switch (e.kind) {
      case Term::App: t = tApp(t, e.arg); break;
      case Term::FoApp: t = tFoApp(t, e.fo); break;
      case Term::Proj1: t = tProj(1, t); break;
      default: t = tProj(2, t); break;
    }
  }
  return t;
}

struct Normalizer {
  std::map<std::string, Fm> lamTypes;
  long fuel = 1000000;

  void tick() {
    if (--fuel < 0) throw Error("canonical normal form: fuel exhausted");
  }

  // Head and spine of t after weak head β-reduction.
  std::pair<Tm, std::vector<Elim>> whnf(Tm t) {
    std::vector<Elim> sp;
    for (;;) {
      tick();
      switch (t->kind) {
        case Term::App: sp.insert(sp.begin(), Elim{Term::App, t->r, {}}); t = t->l; continue;
        case Term::FoApp: sp.insert(sp.begin(), Elim{Term::FoApp, nullptr, t->fo}); t = t->l; continue;
        case Term::Proj1:
        case Term::Proj2: sp.insert(sp.begin(), Elim{t->kind, nullptr, {}}); t = t->l; continue;
        default: break;
      }
      if (sp.empty()) return {t, sp};
      const Elim& e = sp.front();
      if (t->kind == Term::Lam && e.kind == Term::App) {
        t = substTerm(t->l, e.arg, t->name);
      } else if (t->kind == Term::FoLam && e.kind == Term::FoApp) {
        t = substFo(t->l, t->fovar, e.fo);
      } else if (t->kind == Term::Pair && (e.kind == Term::Proj1 || e.kind == Term::Proj2)) {
        t = e.kind == Term::Proj1 ? t->l : t->r;
      } else {
        return {t, sp};
      }
      sp.erase(sp.begin());
    }
  }

  struct Command {
    std::string name;  // empty: no naming
    std::string head;
    std::vector<Elim> spine;
  };

  Command command(std::string name, Tm t) {
    for (;;) {
      auto [h, sp] = whnf(t);
      if (h->kind == Term::Var) return {name, h->name, sp};
      if (h->kind == Term::Named && sp.empty()) {
        name = h->name;
        t = h->l;
        continue;
      }
      if (h->kind == Term::Mu) {
        MuCtx c;
        for (auto& e : sp) {
          if (e.arg) {
            for (auto& x : freeLambdaVars(e.arg)) c.lamFree.insert(x);
            for (auto& x : freeMuVars(e.arg)) c.muFree.insert(x);
            for (auto& x : freeFoVars(e.arg)) c.foFree.insert(x);
          } else if (e.kind == Term::FoApp) {
            collectVars(e.fo, c.foFree);
          }
        }
        if (!name.empty()) c.muFree.insert(name);
        std::vector<Elim> spc = sp;
        std::string nm = name;
        c.wrap = [spc, nm](Tm l) {
          Tm r = applyElims(l, spc);
          return nm.empty() ? r : tNamed(nm, r);
        };
        t = muSubst(h->l, h->name, c);
        name.clear();
        continue;
      }
      throw Error("canonical normal form: stuck on " + show(h));
    }
  }

  Tm tree(const Tm& n, const Fm& q) {
    tick();
    Fm cur = q;
    std::vector<FoVar> zs;
    while (cur->kind == Formula::Forall) {
      FoVar z = freshO();
      zs.push_back(z);
      cur = openAt(cur, z);
    }
    std::vector<std::pair<std::string, Fm>> as;
    while (cur->kind == Formula::Imp) {
      as.emplace_back(freshName("a"), cur->l);
      cur = cur->r;
    }
    if (!isAtomic(cur)) throw Error("canonical normal form: type not canonical");
    Tm t = n;
    for (auto& z : zs) t = tFoApp(t, FoTerm::mkVar(z));
    for (auto& [a, ty] : as) {
      t = tApp(t, tVar(a));
      lamTypes[a] = ty;
    }
    std::string alpha = cur->kind == Formula::Atom ? freshName("al") : "";
    Command c = command(alpha, t);
    auto it = lamTypes.find(c.head);
    if (it == lamTypes.end()) throw Error("canonical normal form: free head variable " + c.head);
    Fm bt = it->second;
    Tm body = tVar(c.head);
    size_t i = 0;
    for (; i < c.spine.size() && c.spine[i].kind == Term::FoApp; ++i) {
      if (bt->kind != Formula::Forall) throw Error("canonical normal form: ill-typed instantiation");
      bt = substFo(bt->l, bt->bound, c.spine[i].fo);
      body = tFoApp(body, c.spine[i].fo);
    }
    for (; i < c.spine.size(); ++i) {
      if (c.spine[i].kind != Term::App || bt->kind != Formula::Imp) throw Error("canonical normal form: ill-typed spine");
      body = tApp(body, tree(c.spine[i].arg, bt->l));
      bt = bt->r;
    }
    if (!isAtomic(bt)) throw Error("canonical normal form: head not fully applied");
    if (!c.name.empty()) body = tNamed(c.name, body);
    if (!alpha.empty()) body = tMu(alpha, body, cur);
    for (size_t k = as.size(); k-- > 0;) body = tLam(as[k].first, body, as[k].second);
    for (size_t k = zs.size(); k-- > 0;) body = tFoLam(zs[k], body, "x");
    return body;
  }

  Tm component(const Tm& n, size_t k, size_t i) {
    if (k == 1) return n;
    if (i == k - 1) return p2(n);
    return component(p1(n), k - 1, i);
  }

  Tm top(const Tm& n, const Fm& c) {
    auto qs = conjuncts(c);
    if (qs.empty()) return tStar();
    Tm out;
    for (size_t i = 0; i < qs.size(); ++i) {
      Tm t = tree(component(n, qs.size(), i), qs[i]);
      out = out ? tPair(out, t) : t;
    }
    return out;
  }
};

}  // namespace

Tm stripBottom(const Tm& m) {
  std::map<std::string, bool> botMu;
  return stripWith(m, botMu);
}

NormalForm canonicalNormalForm(const Tm& m, const Fm& a) {
  Fm c = canonicalize(a).formula;
  Tm t = coerceToCanonical(m, a);
  Elaborated e = elaborateClosed(t, c);
  Normalizer nz;
  return {nz.top(stripBottom(e.term), c), c};
}

bool isCanonicalNormalForm(const Tm& m, const Fm& a) {
  if (!isCanonical(a)) return false;
  try {
    return alphaEq(canonicalNormalForm(m, a).term, m);
  } catch (const Error&) {
    return false;
  }
}

// ---------------------------------------------------------------- simple types

namespace {

std::string foName(const FoVar& x) {
  const char* pre = x.cls == VarClass::O ? "o'" : x.cls == VarClass::P ? "p'" : "x'";
  return pre + x.name;
}
std::string fnName(const std::string& f) { return "f'" + f; }

Tm simpleFo(const FoTerm& t) {
  if (t.isVar()) return tVar(foName(t.var));
  Tm r = tVar(fnName(t.fn));
  for (auto& a : t.args) r = tApp(r, simpleFo(a));
  return r;
}

void collectSymbols(const FoTerm& t, std::map<std::string, int>& fns) {
  if (t.isVar()) return;
  fns[t.fn] = static_cast<int>(t.args.size());
  for (auto& a : t.args) collectSymbols(a, fns);
}

void collectSymbols(const Tm& m, std::map<std::string, int>& fns) {
  if (m->kind == Term::FoApp) collectSymbols(m->fo, fns);
  if (m->l) collectSymbols(m->l, fns);
  if (m->r) collectSymbols(m->r, fns);
}

}  // namespace

Tm makeSimple(const Tm& m) {
  switch (m->kind) {
    case Term::Mu:
      if (m->l->kind == Term::Named) return tMu(m->name, tNamed(m->l->name, makeSimple(m->l->l)), m->ann);
      return tMu(m->name, tNamed(kXi, makeSimple(m->l)), m->ann);
    case Term::Named:
      return tMu(kXi, tNamed(m->name, makeSimple(m->l)), fBot());
    default: {
      Tm l = m->l ? makeSimple(m->l) : nullptr;
      Tm r = m->r ? makeSimple(m->r) : nullptr;
      if (l == m->l && r == m->r) return m;
      return rebuild(m, l, r);
    }
  }
}

Fm toSimpleType(const Fm& a) {
  switch (a->kind) {
    case Formula::Bot: return fAtom(kFalsity);
    case Formula::Atom: return fAtom(a->rel);
    case Formula::Imp: return fImp(toSimpleType(a->l), toSimpleType(a->r));
    case Formula::Forall: return fImp(fAtom(kIndividual), toSimpleType(a->l));
    default: throw Error("the simple-types translation excludes conjunction and truth");
  }
}

Tm toSimpleTerm(const Tm& m) {
  auto ann = [](const Fm& a) { return a ? toSimpleType(a) : a; };
  switch (m->kind) {
    case Term::Var: return m;
    case Term::Lam: return tLam(m->name, toSimpleTerm(m->l), ann(m->ann));
    case Term::App: return tApp(toSimpleTerm(m->l), toSimpleTerm(m->r));
    case Term::Mu: return tMu(m->name, toSimpleTerm(m->l), ann(m->ann));
    case Term::Named: return tNamed(m->name, toSimpleTerm(m->l));
    case Term::FoLam: return tLam(foName(m->fovar), toSimpleTerm(m->l), fAtom(kIndividual));
    case Term::FoApp: return tApp(toSimpleTerm(m->l), simpleFo(m->fo));
    default: throw Error("the simple-types translation excludes pairs, projections and ★");
  }
}

SimpleTranslation toSimpleTypes(const Tm& m, const Fm& a) {
  Elaborated e = elaborateClosed(m, a);
  SimpleTranslation out;
  out.term = toSimpleTerm(makeSimple(e.term));
  out.ctx.delta.emplace_back(kXi, toSimpleType(fBot()));
  out.type = toSimpleType(a);
  std::map<std::string, int> fns;
  collectSymbols(e.term, fns);
  Fm o = fAtom(kIndividual);
  for (auto& [f, k] : fns) {
    Fm t = o;
    for (int i = 0; i < k; ++i) t = fImp(o, t);
    out.ctx.gamma.emplace_back(fnName(f), t);
  }
  for (auto& x : freeFoVars(e.term)) out.ctx.gamma.emplace_back(foName(x), o);
  return out;
}

}  // namespace gs
