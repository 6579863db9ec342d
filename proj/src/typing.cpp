#include "gamesem/typing.hpp"

namespace gs {

const Fm* Ctx::lam(const std::string& a) const {
  for (auto it = gamma.rbegin(); it != gamma.rend(); ++it)
    if (it->first == a) return &it->second;
  return nullptr;
}

const Fm* Ctx::mu(const std::string& a) const {
  for (auto& [n, t] : delta)
    if (n == a) return &t;
  return nullptr;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw TypeError(msg); }

void expectEq(const Fm& got, const Fm& want, const Tm& m) {
  if (!alphaEq(got, want))
    fail("type mismatch on " + show(m) + ": has " + show(got) + ", expected " + show(want));
}

Elaborated elab(Ctx& ctx, const Tm& m, const Fm& exp);

Elaborated check(Ctx& ctx, const Tm& m, const Fm& a) { return elab(ctx, m, a); }

Elaborated elab(Ctx& ctx, const Tm& m, const Fm& exp) {
  switch (m->kind) {
    case Term::Var: {
      const Fm* t = ctx.lam(m->name);
      if (!t) fail("unbound variable " + m->name);
      if (exp) expectEq(*t, exp, m);
      return {m, *t};
    }
    case Term::Star:
      if (exp && exp->kind != Formula::Top) fail("* checked against " + show(exp));
      return {m, fTop()};
    case Term::Lam: {
      Fm dom, cod;
      if (exp) {
        if (exp->kind != Formula::Imp) fail("abstraction checked against " + show(exp));
        dom = exp->l;
        cod = exp->r;
        if (m->ann) expectEq(m->ann, dom, m);
      } else {
        if (!m->ann) fail("cannot synthesize the type of an unannotated abstraction " + show(m));
        dom = m->ann;
      }
      ctx.gamma.push_back({m->name, dom});
      Elaborated b = elab(ctx, m->l, cod);
      ctx.gamma.pop_back();
      return {tLam(m->name, b.term, dom), fImp(dom, b.type)};
    }
    case Term::Mu: {
      Fm a = exp ? exp : m->ann;
      if (!a) fail("cannot synthesize the type of an unannotated μ " + show(m));
      if (exp && m->ann) expectEq(m->ann, exp, m);
      ctx.delta.insert(ctx.delta.begin(), {m->name, a});
      Elaborated b = elab(ctx, m->l, fBot());
      ctx.delta.erase(ctx.delta.begin());
      return {tMu(m->name, b.term, a), a};
    }
    case Term::Named: {
      const Fm* t = ctx.mu(m->name);
      if (!t) fail("unbound μ-variable " + m->name);
      if (exp && exp->kind != Formula::Bot) fail("named term checked against " + show(exp));
      Fm target = *t;
      Elaborated b = elab(ctx, m->l, target);
      return {tNamed(m->name, b.term), fBot()};
    }
    case Term::App: {
      Elaborated f = elab(ctx, m->l, nullptr);
      if (f.type->kind != Formula::Imp) fail("applying a term of type " + show(f.type));
      Elaborated x = check(ctx, m->r, f.type->l);
      if (exp) expectEq(f.type->r, exp, m);
      return {tApp(f.term, x.term), f.type->r};
    }
    case Term::Pair: {
      if (exp && exp->kind != Formula::And) fail("pair checked against " + show(exp));
      Elaborated a = elab(ctx, m->l, exp ? exp->l : nullptr);
      Elaborated b = elab(ctx, m->r, exp ? exp->r : nullptr);
      return {tPair(a.term, b.term), fAnd(a.type, b.type)};
    }
    case Term::Proj1:
    case Term::Proj2: {
      Elaborated p = elab(ctx, m->l, nullptr);
      if (p.type->kind != Formula::And) fail("projecting a term of type " + show(p.type));
      Fm r = m->kind == Term::Proj1 ? p.type->l : p.type->r;
      if (exp) expectEq(r, exp, m);
      return {tProj(m->kind == Term::Proj1 ? 1 : 2, p.term), r};
    }
    case Term::FoLam: {
      FoVar y = freshP(m->hint.empty() ? "y" : m->hint);
      Tm body = substFo(m->l, m->fovar, FoTerm::mkVar(y));
      Fm bodyExp;
      FoVar bound = freshA(m->hint.empty() ? "x" : m->hint);
      if (exp) {
        if (exp->kind != Formula::Forall) fail("Λ checked against " + show(exp));
        bound = exp->bound;
        bodyExp = substFo(exp->l, exp->bound, FoTerm::mkVar(y));
      }
      Elaborated b = elab(ctx, body, bodyExp);
      Tm back = substFo(b.term, y, FoTerm::mkVar(m->fovar));
      Fm ty = exp ? exp : fForall(bound, substFo(b.type, y, FoTerm::mkVar(bound)));
      return {tFoLam(m->fovar, back, m->hint), ty};
    }
    case Term::FoApp: {
      if (!isOPTerm(m->fo)) fail("instantiation with an A-class variable");
      Elaborated f = elab(ctx, m->l, nullptr);
      if (f.type->kind != Formula::Forall) fail("instantiating a term of type " + show(f.type));
      Fm r = substFo(f.type->l, f.type->bound, m->fo);
      if (exp) expectEq(r, exp, m);
      return {tFoApp(f.term, m->fo), r};
    }
  }
  fail("unknown term");
}

}  // namespace

Elaborated elaborate(const Ctx& ctx, const Tm& m, const Fm& expected) {
  Ctx c = ctx;
  return elab(c, m, expected);
}

Fm typecheck(const Ctx& ctx, const Tm& m) { return elaborate(ctx, m).type; }

Elaborated elaborateClosed(const Tm& m, const Fm& a) { return elaborate(Ctx{}, m, a); }

bool checks(const Ctx& ctx, const Tm& m, const Fm& a) {
  try {
    elaborate(ctx, m, a);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

Fm eraseFirstOrder(const Fm& a) {
  switch (a->kind) {
    case Formula::Atom:
      return a->args.empty() ? a : fAtom(a->rel);
    case Formula::Imp:
      return fImp(eraseFirstOrder(a->l), eraseFirstOrder(a->r));
    case Formula::And:
      return fAnd(eraseFirstOrder(a->l), eraseFirstOrder(a->r));
    case Formula::Forall:
      return eraseFirstOrder(a->l);
    default:
      return a;
  }
}

Tm eraseFirstOrder(const Tm& m) {
  switch (m->kind) {
    case Term::Var:
    case Term::Star:
      return m;
    case Term::FoLam:
    case Term::FoApp:
      return eraseFirstOrder(m->l);
    case Term::Lam:
      return tLam(m->name, eraseFirstOrder(m->l), m->ann ? eraseFirstOrder(m->ann) : nullptr);
    case Term::Mu:
      return tMu(m->name, eraseFirstOrder(m->l), m->ann ? eraseFirstOrder(m->ann) : nullptr);
    case Term::Named:
      return tNamed(m->name, eraseFirstOrder(m->l));
    case Term::App:
      return tApp(eraseFirstOrder(m->l), eraseFirstOrder(m->r));
    case Term::Pair:
      return tPair(eraseFirstOrder(m->l), eraseFirstOrder(m->r));
    case Term::Proj1:
    case Term::Proj2:
      return tProj(m->kind == Term::Proj1 ? 1 : 2, eraseFirstOrder(m->l));
  }
  return m;
}

std::pair<Tm, Fm> eraseFirstOrder(const Tm& m, const Fm& a) {
  if (!isClosed(m)) throw TypeError("erasure needs a closed term");
  Elaborated e = elaborateClosed(m, a);
  Tm r = eraseFirstOrder(e.term);
  Fm ra = eraseFirstOrder(a);
  elaborateClosed(r, ra);
  return {stripAnnotations(r), ra};
}

Fm eraseClassical(const Fm& a) {
  switch (a->kind) {
    case Formula::Atom:
      return fBot();
    case Formula::Imp:
      return fImp(eraseClassical(a->l), eraseClassical(a->r));
    case Formula::And:
      return fAnd(eraseClassical(a->l), eraseClassical(a->r));
    case Formula::Forall:
      return fForall(a->bound, eraseClassical(a->l));
    default:
      return a;
  }
}

Tm eraseClassical(const Tm& m) {
  switch (m->kind) {
    case Term::Var:
    case Term::Star:
      return m;
    case Term::Mu:
    case Term::Named:
      return eraseClassical(m->l);
    case Term::Lam:
      return tLam(m->name, eraseClassical(m->l), m->ann ? eraseClassical(m->ann) : nullptr);
    case Term::FoLam:
      return tFoLam(m->fovar, eraseClassical(m->l), m->hint);
    case Term::FoApp:
      return tFoApp(eraseClassical(m->l), m->fo);
    case Term::App:
      return tApp(eraseClassical(m->l), eraseClassical(m->r));
    case Term::Pair:
      return tPair(eraseClassical(m->l), eraseClassical(m->r));
    case Term::Proj1:
    case Term::Proj2:
      return tProj(m->kind == Term::Proj1 ? 1 : 2, eraseClassical(m->l));
  }
  return m;
}

std::pair<Tm, Fm> eraseClassical(const Tm& m, const Fm& a) {
  if (!isPropositional(a) || !isPropositional(m)) throw TypeError("erasure needs a propositional term");
  Elaborated e = elaborateClosed(m, a);
  Tm r = eraseClassical(e.term);
  Fm ra = eraseClassical(a);
  elaborateClosed(r, ra);
  return {stripAnnotations(r), ra};
}

bool isPropositional(const Fm& a) {
  switch (a->kind) {
    case Formula::Atom:
      return a->args.empty();
    case Formula::Imp:
    case Formula::And:
      return isPropositional(a->l) && isPropositional(a->r);
    case Formula::Forall:
      return false;
    default:
      return true;
  }
}

bool isPropositional(const Tm& m) {
  if (m->kind == Term::FoLam || m->kind == Term::FoApp) return false;
  if (m->ann && !isPropositional(m->ann)) return false;
  if (m->l && !isPropositional(m->l)) return false;
  if (m->r && !isPropositional(m->r)) return false;
  return true;
}

}  // namespace gs
