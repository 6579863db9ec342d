#include "gamesem/syntax.hpp"

#include <atomic>
#include <cctype>
#include <sstream>

namespace gs {

ParseError::ParseError(const std::string& msg, size_t p)
    : Error(msg + " at offset " + std::to_string(p)), pos(p) {}

static std::atomic<long> freshCounter{0};

std::string freshName(const std::string& base) {
  return baseName(base) + "#" + std::to_string(++freshCounter);
}

std::string baseName(const std::string& n) {
  auto k = n.find('#');
  return k == std::string::npos ? n : n.substr(0, k);
}

// ---------------------------------------------------------------- fo terms

FoTerm FoTerm::mkVar(FoVar v) {
  FoTerm t;
  t.var = std::move(v);
  return t;
}

FoTerm FoTerm::app(std::string f, std::vector<FoTerm> a) {
  FoTerm t;
  t.fn = std::move(f);
  t.args = std::move(a);
  return t;
}

FoTerm FoTerm::O(int k) { return mkVar(oVar(k)); }
FoTerm FoTerm::P(std::string name) { return mkVar({VarClass::P, std::move(name)}); }

bool FoTerm::operator<(const FoTerm& o) const {
  if (fn != o.fn) return fn < o.fn;
  if (isVar()) return var < o.var;
  return args < o.args;
}

FoVar oVar(int k) { return {VarClass::O, "o" + std::to_string(k)}; }

std::optional<int> oIndex(const FoVar& v) {
  if (v.cls != VarClass::O || v.name.size() < 2 || v.name[0] != 'o') return std::nullopt;
  for (size_t i = 1; i < v.name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(v.name[i]))) return std::nullopt;
  return std::stoi(v.name.substr(1));
}

FoVar freshO() { return {VarClass::O, freshName("o")}; }
FoVar freshP(const std::string& base) { return {VarClass::P, freshName(base)}; }
FoVar freshA(const std::string& base) { return {VarClass::A, freshName(base)}; }

bool occurs(const FoVar& x, const FoTerm& t) {
  if (t.isVar()) return t.var == x;
  for (auto& a : t.args)
    if (occurs(x, a)) return true;
  return false;
}

void collectVars(const FoTerm& t, std::set<FoVar>& out) {
  if (t.isVar()) {
    out.insert(t.var);
    return;
  }
  for (auto& a : t.args) collectVars(a, out);
}

FoTerm substFo(const FoTerm& t, const FoVar& x, const FoTerm& u) {
  if (t.isVar()) return t.var == x ? u : t;
  FoTerm r = t;
  for (auto& a : r.args) a = substFo(a, x, u);
  return r;
}

FoTerm substFo(const FoTerm& t, const std::map<FoVar, FoTerm>& m) {
  if (t.isVar()) {
    auto it = m.find(t.var);
    return it == m.end() ? t : it->second;
  }
  FoTerm r = t;
  for (auto& a : r.args) a = substFo(a, m);
  return r;
}

static bool noClass(const FoTerm& t, VarClass c) {
  if (t.isVar()) return t.var.cls != c;
  for (auto& a : t.args)
    if (!noClass(a, c)) return false;
  return true;
}

bool isAPTerm(const FoTerm& t) { return noClass(t, VarClass::O); }
bool isOPTerm(const FoTerm& t) { return noClass(t, VarClass::A); }

// ---------------------------------------------------------------- formulas

static Fm mk(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

Fm fTop() {
  static const Fm t = mk({Formula::Top, {}, {}, nullptr, nullptr, {}});
  return t;
}
Fm fBot() {
  static const Fm b = mk({Formula::Bot, {}, {}, nullptr, nullptr, {}});
  return b;
}
Fm fAtom(std::string rel, std::vector<FoTerm> args) {
  return mk({Formula::Atom, std::move(rel), std::move(args), nullptr, nullptr, {}});
}
Fm fImp(Fm a, Fm b) { return mk({Formula::Imp, {}, {}, std::move(a), std::move(b), {}}); }
Fm fAnd(Fm a, Fm b) { return mk({Formula::And, {}, {}, std::move(a), std::move(b), {}}); }
Fm fForall(FoVar x, Fm body) {
  return mk({Formula::Forall, {}, {}, std::move(body), nullptr, std::move(x)});
}

static void freeVarsInto(const Fm& a, std::set<FoVar>& out, std::set<FoVar>& bound) {
  switch (a->kind) {
    case Formula::Top:
    case Formula::Bot:
      return;
    case Formula::Atom: {
      std::set<FoVar> vs;
      for (auto& t : a->args) collectVars(t, vs);
      for (auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Imp:
    case Formula::And:
      freeVarsInto(a->l, out, bound);
      freeVarsInto(a->r, out, bound);
      return;
    case Formula::Forall: {
      bool added = bound.insert(a->bound).second;
      freeVarsInto(a->l, out, bound);
      if (added) bound.erase(a->bound);
      return;
    }
  }
}

std::set<FoVar> freeVars(const Fm& a) {
  std::set<FoVar> out, bound;
  freeVarsInto(a, out, bound);
  return out;
}

Fm substFo(const Fm& a, const std::map<FoVar, FoTerm>& m) {
  if (m.empty()) return a;
  switch (a->kind) {
    case Formula::Top:
    case Formula::Bot:
      return a;
    case Formula::Atom: {
      std::vector<FoTerm> args;
      for (auto& t : a->args) args.push_back(substFo(t, m));
      return fAtom(a->rel, std::move(args));
    }
    case Formula::Imp:
      return fImp(substFo(a->l, m), substFo(a->r, m));
    case Formula::And:
      return fAnd(substFo(a->l, m), substFo(a->r, m));
    case Formula::Forall: {
      auto inner = m;
      inner.erase(a->bound);
      if (inner.empty()) return a;
      bool capture = false;
      for (auto& [v, t] : inner)
        if (occurs(a->bound, t)) capture = true;
      if (!capture) return fForall(a->bound, substFo(a->l, inner));
      FoVar y = freshA(a->bound.name);
      inner[a->bound] = FoTerm::mkVar(y);
      return fForall(y, substFo(a->l, inner));
    }
  }
  return a;
}

Fm substFo(const Fm& a, const FoVar& x, const FoTerm& t) { return substFo(a, {{x, t}}); }

using FoEnv = std::vector<std::pair<FoVar, FoVar>>;

static bool foEq(const FoTerm& s, const FoTerm& t, const FoEnv& env) {
  if (s.isVar() != t.isVar()) return false;
  if (s.isVar()) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      bool l = it->first == s.var, r = it->second == t.var;
      if (l || r) return l && r;
    }
    return s.var == t.var;
  }
  if (s.fn != t.fn || s.args.size() != t.args.size()) return false;
  for (size_t i = 0; i < s.args.size(); ++i)
    if (!foEq(s.args[i], t.args[i], env)) return false;
  return true;
}

static bool fmEq(const Fm& a, const Fm& b, FoEnv& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Top:
    case Formula::Bot:
      return true;
    case Formula::Atom:
      if (a->rel != b->rel || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!foEq(a->args[i], b->args[i], env)) return false;
      return true;
    case Formula::Imp:
    case Formula::And:
      return fmEq(a->l, b->l, env) && fmEq(a->r, b->r, env);
    case Formula::Forall: {
      env.push_back({a->bound, b->bound});
      bool r = fmEq(a->l, b->l, env);
      env.pop_back();
      return r;
    }
  }
  return false;
}

bool alphaEq(const Fm& a, const Fm& b) {
  FoEnv env;
  return fmEq(a, b, env);
}

bool isAtomic(const Fm& a) { return a->kind == Formula::Atom || a->kind == Formula::Bot; }

int formulaSize(const Fm& a) {
  switch (a->kind) {
    case Formula::Top:
    case Formula::Bot:
    case Formula::Atom:
      return 1;
    case Formula::Imp:
    case Formula::And:
      return 1 + formulaSize(a->l) + formulaSize(a->r);
    case Formula::Forall:
      return 1 + formulaSize(a->l);
  }
  return 1;
}

Fm freshenBound(const Fm& a) {
  switch (a->kind) {
    case Formula::Imp:
      return fImp(freshenBound(a->l), freshenBound(a->r));
    case Formula::And:
      return fAnd(freshenBound(a->l), freshenBound(a->r));
    case Formula::Forall: {
      FoVar y = freshA(a->bound.name);
      return fForall(y, freshenBound(substFo(a->l, a->bound, FoTerm::mkVar(y))));
    }
    default:
      return a;
  }
}

// ---------------------------------------------------------------- terms

static Tm mkT(Term t) { return std::make_shared<const Term>(std::move(t)); }

Tm tVar(std::string a) {
  Term t{Term::Var};
  t.name = std::move(a);
  return mkT(std::move(t));
}
Tm tLam(std::string a, Tm body, Fm ann) {
  Term t{Term::Lam};
  t.name = std::move(a);
  t.l = std::move(body);
  t.ann = std::move(ann);
  return mkT(std::move(t));
}
Tm tApp(Tm m, Tm n) {
  Term t{Term::App};
  t.l = std::move(m);
  t.r = std::move(n);
  return mkT(std::move(t));
}
Tm tPair(Tm m, Tm n) {
  Term t{Term::Pair};
  t.l = std::move(m);
  t.r = std::move(n);
  return mkT(std::move(t));
}
Tm tProj(int i, Tm m) {
  Term t{i == 1 ? Term::Proj1 : Term::Proj2};
  t.l = std::move(m);
  return mkT(std::move(t));
}
Tm tStar() {
  static const Tm s = mkT(Term{Term::Star});
  return s;
}
Tm tNamed(std::string alpha, Tm m) {
  Term t{Term::Named};
  t.name = std::move(alpha);
  t.l = std::move(m);
  return mkT(std::move(t));
}
Tm tMu(std::string alpha, Tm body, Fm ann) {
  Term t{Term::Mu};
  t.name = std::move(alpha);
  t.l = std::move(body);
  t.ann = std::move(ann);
  return mkT(std::move(t));
}
Tm tFoLam(FoVar x, Tm body, std::string hint) {
  Term t{Term::FoLam};
  t.fovar = std::move(x);
  t.l = std::move(body);
  t.hint = std::move(hint);
  return mkT(std::move(t));
}
Tm tFoApp(Tm m, FoTerm u) {
  Term t{Term::FoApp};
  t.l = std::move(m);
  t.fo = std::move(u);
  return mkT(std::move(t));
}
Tm tApps(Tm head, const std::vector<Tm>& args) {
  for (auto& a : args) head = tApp(head, a);
  return head;
}

static Tm withBody(const Tm& m, Tm body) {
  Term t = *m;
  t.l = std::move(body);
  return mkT(std::move(t));
}

static Tm withBoth(const Tm& m, Tm l, Tm r) {
  Term t = *m;
  t.l = std::move(l);
  t.r = std::move(r);
  return mkT(std::move(t));
}

namespace {

struct FreeSets {
  std::set<std::string> lam, mu;
  std::set<FoVar> fo;
};

void freeWalk(const Tm& m, FreeSets& out, std::multiset<std::string>& bl,
              std::multiset<std::string>& bm, std::multiset<FoVar>& bf) {
  auto foTerm = [&](const FoTerm& t) {
    std::set<FoVar> vs;
    collectVars(t, vs);
    for (auto& v : vs)
      if (!bf.count(v)) out.fo.insert(v);
  };
  auto fm = [&](const Fm& a) {
    if (!a) return;
    for (auto& v : freeVars(a))
      if (!bf.count(v)) out.fo.insert(v);
  };
  switch (m->kind) {
    case Term::Var:
      if (!bl.count(m->name)) out.lam.insert(m->name);
      return;
    case Term::Star:
      return;
    case Term::Lam: {
      fm(m->ann);
      auto it = bl.insert(m->name);
      freeWalk(m->l, out, bl, bm, bf);
      bl.erase(it);
      return;
    }
    case Term::Mu: {
      fm(m->ann);
      auto it = bm.insert(m->name);
      freeWalk(m->l, out, bl, bm, bf);
      bm.erase(it);
      return;
    }
    case Term::Named:
      if (!bm.count(m->name)) out.mu.insert(m->name);
      freeWalk(m->l, out, bl, bm, bf);
      return;
    case Term::FoLam: {
      auto it = bf.insert(m->fovar);
      freeWalk(m->l, out, bl, bm, bf);
      bf.erase(it);
      return;
    }
    case Term::FoApp:
      foTerm(m->fo);
      freeWalk(m->l, out, bl, bm, bf);
      return;
    case Term::App:
    case Term::Pair:
      freeWalk(m->l, out, bl, bm, bf);
      freeWalk(m->r, out, bl, bm, bf);
      return;
    case Term::Proj1:
    case Term::Proj2:
      freeWalk(m->l, out, bl, bm, bf);
      return;
  }
}

FreeSets freeSets(const Tm& m) {
  FreeSets out;
  std::multiset<std::string> bl, bm;
  std::multiset<FoVar> bf;
  freeWalk(m, out, bl, bm, bf);
  return out;
}

}  // namespace

std::set<std::string> freeLambdaVars(const Tm& m) { return freeSets(m).lam; }
std::set<std::string> freeMuVars(const Tm& m) { return freeSets(m).mu; }
std::set<FoVar> freeFoVars(const Tm& m) { return freeSets(m).fo; }

bool isClosed(const Tm& m) {
  auto f = freeSets(m);
  return f.lam.empty() && f.mu.empty();
}

int termSize(const Tm& m) {
  int n = 1;
  if (m->l) n += termSize(m->l);
  if (m->r) n += termSize(m->r);
  return n;
}

// ---------------------------------------------------------------- substitutions

Tm substFo(const Tm& m, const FoVar& x, const FoTerm& t) {
  auto ann = [&](const Fm& a) -> Fm { return a ? substFo(a, x, t) : a; };
  switch (m->kind) {
    case Term::Var:
    case Term::Star:
      return m;
    case Term::Lam:
      return tLam(m->name, substFo(m->l, x, t), ann(m->ann));
    case Term::Mu:
      return tMu(m->name, substFo(m->l, x, t), ann(m->ann));
    case Term::Named:
    case Term::Proj1:
    case Term::Proj2:
      return withBody(m, substFo(m->l, x, t));
    case Term::App:
    case Term::Pair:
      return withBoth(m, substFo(m->l, x, t), substFo(m->r, x, t));
    case Term::FoApp:
      return tFoApp(substFo(m->l, x, t), substFo(m->fo, x, t));
    case Term::FoLam: {
      if (m->fovar == x) return m;
      if (occurs(m->fovar, t)) {
        FoVar y = m->fovar.cls == VarClass::O ? freshO() : FoVar{m->fovar.cls, freshName(m->fovar.name)};
        Tm body = substFo(m->l, m->fovar, FoTerm::mkVar(y));
        return tFoLam(y, substFo(body, x, t), m->hint);
      }
      return tFoLam(m->fovar, substFo(m->l, x, t), m->hint);
    }
  }
  return m;
}

static Tm renameLam(const Tm& m, const std::string& a, const std::string& b) {
  return substTerm(m, tVar(b), a);
}

Tm substTerm(const Tm& m, const Tm& n, const std::string& a) {
  switch (m->kind) {
    case Term::Var:
      return m->name == a ? n : m;
    case Term::Star:
      return m;
    case Term::Lam: {
      if (m->name == a) return m;
      auto fs = freeSets(n);
      if (fs.lam.count(m->name)) {
        std::string b = freshName(m->name);
        return tLam(b, substTerm(renameLam(m->l, m->name, b), n, a), m->ann);
      }
      return tLam(m->name, substTerm(m->l, n, a), m->ann);
    }
    case Term::Mu: {
      auto fs = freeSets(n);
      if (fs.mu.count(m->name)) {
        std::string b = freshName(m->name);
        return tMu(b, substTerm(renameMu(m->l, m->name, b), n, a), m->ann);
      }
      return tMu(m->name, substTerm(m->l, n, a), m->ann);
    }
    case Term::FoLam: {
      auto fs = freeSets(n);
      if (fs.fo.count(m->fovar)) {
        FoVar y = freshO();
        Tm body = substFo(m->l, m->fovar, FoTerm::mkVar(y));
        return tFoLam(y, substTerm(body, n, a), m->hint);
      }
      return tFoLam(m->fovar, substTerm(m->l, n, a), m->hint);
    }
    case Term::Named:
    case Term::Proj1:
    case Term::Proj2:
    case Term::FoApp:
      return withBody(m, substTerm(m->l, n, a));
    case Term::App:
    case Term::Pair:
      return withBoth(m, substTerm(m->l, n, a), substTerm(m->r, n, a));
  }
  return m;
}

Tm renameMu(const Tm& m, const std::string& alpha, const std::string& beta) {
  MuCtx c;
  c.wrap = [beta](Tm l) { return tNamed(beta, l); };
  c.muFree = {beta};
  return muSubst(m, alpha, c);
}

MuCtx muCtxApp(const std::string& alpha, Tm n) {
  MuCtx c;
  auto fs = freeSets(n);
  c.lamFree = fs.lam;
  c.muFree = fs.mu;
  c.muFree.insert(alpha);
  c.foFree = fs.fo;
  c.wrap = [alpha, n](Tm l) { return tNamed(alpha, tApp(l, n)); };
  return c;
}

MuCtx muCtxProj(const std::string& alpha, int i) {
  MuCtx c;
  c.muFree = {alpha};
  c.wrap = [alpha, i](Tm l) { return tNamed(alpha, tProj(i, l)); };
  return c;
}

MuCtx muCtxFoApp(const std::string& alpha, FoTerm t) {
  MuCtx c;
  c.muFree = {alpha};
  collectVars(t, c.foFree);
  c.wrap = [alpha, t](Tm l) { return tNamed(alpha, tFoApp(l, t)); };
  return c;
}

Tm muSubst(const Tm& m, const std::string& alpha, const MuCtx& ctx) {
  switch (m->kind) {
    case Term::Var:
    case Term::Star:
      return m;
    case Term::Named: {
      Tm body = muSubst(m->l, alpha, ctx);
      if (m->name == alpha) return ctx.wrap(body);
      return tNamed(m->name, body);
    }
    case Term::Mu: {
      if (m->name == alpha) return m;
      if (ctx.muFree.count(m->name)) {
        std::string b = freshName(m->name);
        return tMu(b, muSubst(renameMu(m->l, m->name, b), alpha, ctx), m->ann);
      }
      return tMu(m->name, muSubst(m->l, alpha, ctx), m->ann);
    }
    case Term::Lam: {
      if (ctx.lamFree.count(m->name)) {
        std::string b = freshName(m->name);
        return tLam(b, muSubst(renameLam(m->l, m->name, b), alpha, ctx), m->ann);
      }
      return tLam(m->name, muSubst(m->l, alpha, ctx), m->ann);
    }
    case Term::FoLam: {
      if (ctx.foFree.count(m->fovar)) {
        FoVar y = freshO();
        Tm body = substFo(m->l, m->fovar, FoTerm::mkVar(y));
        return tFoLam(y, muSubst(body, alpha, ctx), m->hint);
      }
      return tFoLam(m->fovar, muSubst(m->l, alpha, ctx), m->hint);
    }
    case Term::Proj1:
    case Term::Proj2:
    case Term::FoApp:
      return withBody(m, muSubst(m->l, alpha, ctx));
    case Term::App:
    case Term::Pair:
      return withBoth(m, muSubst(m->l, alpha, ctx), muSubst(m->r, alpha, ctx));
  }
  return m;
}

// ---------------------------------------------------------------- alpha equality

namespace {

using NameEnv = std::vector<std::pair<std::string, std::string>>;

bool nameEq(const std::string& a, const std::string& b, const NameEnv& env) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    bool l = it->first == a, r = it->second == b;
    if (l || r) return l && r;
  }
  return a == b;
}

bool tmEq(const Tm& a, const Tm& b, NameEnv& lam, NameEnv& mu, FoEnv& fo) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Star:
      return true;
    case Term::Var:
      return nameEq(a->name, b->name, lam);
    case Term::Lam: {
      lam.push_back({a->name, b->name});
      bool r = tmEq(a->l, b->l, lam, mu, fo);
      lam.pop_back();
      return r;
    }
    case Term::Mu: {
      mu.push_back({a->name, b->name});
      bool r = tmEq(a->l, b->l, lam, mu, fo);
      mu.pop_back();
      return r;
    }
    case Term::Named:
      return nameEq(a->name, b->name, mu) && tmEq(a->l, b->l, lam, mu, fo);
    case Term::FoLam: {
      fo.push_back({a->fovar, b->fovar});
      bool r = tmEq(a->l, b->l, lam, mu, fo);
      fo.pop_back();
      return r;
    }
    case Term::FoApp:
      return foEq(a->fo, b->fo, fo) && tmEq(a->l, b->l, lam, mu, fo);
    case Term::Proj1:
    case Term::Proj2:
      return tmEq(a->l, b->l, lam, mu, fo);
    case Term::App:
    case Term::Pair:
      return tmEq(a->l, b->l, lam, mu, fo) && tmEq(a->r, b->r, lam, mu, fo);
  }
  return false;
}

}  // namespace

bool alphaEq(const Tm& a, const Tm& b) {
  NameEnv lam, mu;
  FoEnv fo;
  return tmEq(a, b, lam, mu, fo);
}

Tm stripAnnotations(const Tm& m) {
  switch (m->kind) {
    case Term::Var:
    case Term::Star:
      return m;
    case Term::Lam:
      return tLam(m->name, stripAnnotations(m->l));
    case Term::Mu:
      return tMu(m->name, stripAnnotations(m->l));
    case Term::App:
    case Term::Pair:
      return withBoth(m, stripAnnotations(m->l), stripAnnotations(m->r));
    default:
      return withBody(m, stripAnnotations(m->l));
  }
}

}  // namespace gs
