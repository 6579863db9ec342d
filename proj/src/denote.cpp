#include "gamesem/denote.hpp"

#include "gamesem/canon.hpp"

namespace gs {

namespace {

FoTerm mapO(const FoTerm& t, const std::function<FoTerm(int)>& f) {
  if (t.isVar()) {
    auto k = oIndex(t.var);
    return k ? f(*k) : t;
  }
  FoTerm r = t;
  for (auto& a : r.args) a = mapO(a, f);
  return r;
}

std::vector<Fm> types(const std::vector<std::pair<std::string, Fm>>& xs) {
  std::vector<Fm> r;
  for (auto& [n, a] : xs) r.push_back(a);
  return r;
}

// Rewrites every Player answer; fix sees the original key.
Strategy rework(const Strategy& s, const Arena& to, const std::function<int(int)>& node,
                const std::function<void(const Key&, Move&)>& fix) {
  Strategy r;
  r.arena = to;
  for (auto& [k, m] : s.resp) {
    Key k2;
    bool ok = true;
    for (int x : k) {
      int y = node(x);
      if (y < 0) ok = false;
      k2.push_back(y);
    }
    if (!ok) continue;
    Move m2 = m;
    m2.node = node(m.node);
    if (m2.node < 0) throw Error("denote: answer outside the target arena");
    fix(k, m2);
    r.resp[k2] = std::move(m2);
  }
  return r;
}

struct Denoter {
  Ctx ctx;

  JArena judgment(const Fm& a) const { return jarena(types(ctx.gamma), a, types(ctx.delta)); }

  int lamIndex(const std::string& a) const {
    for (int i = static_cast<int>(ctx.gamma.size()) - 1; i >= 0; --i)
      if (ctx.gamma[static_cast<size_t>(i)].first == a) return i;
    throw TypeError("unbound variable " + a);
  }
  int muIndex(const std::string& a) const {
    for (size_t j = 0; j < ctx.delta.size(); ++j)
      if (ctx.delta[j].first == a) return static_cast<int>(j);
    throw TypeError("unbound μ-variable " + a);
  }

  Denotation go(const Tm& m) {
    switch (m->kind) {
      case Term::Var: {
        int i = lamIndex(m->name);
        Fm a = ctx.gamma[static_cast<size_t>(i)].second;
        JArena j = judgment(a);
        Strategy s = copycat(j, i);
        return {std::move(j), std::move(s), a};
      }
      case Term::Star: {
        JArena j = judgment(fTop());
        Strategy s = emptyStrategy(j.arena);
        return {std::move(j), std::move(s), fTop()};
      }
      case Term::Lam: {
        if (!m->ann) throw TypeError("denote needs an annotated λ");
        ctx.gamma.emplace_back(m->name, m->ann);
        Denotation d = go(m->l);
        ctx.gamma.pop_back();
        Fm a = fImp(m->ann, d.type);
        JArena j = judgment(a);
        d.strategy.arena = j.arena;
        return {std::move(j), std::move(d.strategy), a};
      }
      case Term::Mu: {
        if (!m->ann) throw TypeError("denote needs an annotated μ");
        ctx.delta.insert(ctx.delta.begin(), {m->name, m->ann});
        Denotation d = go(m->l);
        ctx.delta.erase(ctx.delta.begin());
        JArena j = judgment(m->ann);
        d.strategy.arena = j.arena;
        return {std::move(j), std::move(d.strategy), m->ann};
      }
      case Term::Named:
        return named(m);
      case Term::App: {
        Denotation f = go(m->l);
        Denotation t = go(m->r);
        if (f.type->kind != Formula::Imp) throw TypeError("application of a non-function");
        Fm b = f.type->r;
        auto g = types(ctx.gamma);
        g.push_back(f.type->l);
        JArena jf = jarena(g, b, types(ctx.delta));
        f.strategy.arena = jf.arena;
        JArena jr = judgment(b);
        Strategy s = cut(jf, f.strategy, t.arena, t.strategy, jr);
        return {std::move(jr), std::move(s), b};
      }
      case Term::Pair:
        return pair(m);
      case Term::Proj1:
      case Term::Proj2:
        return proj(m);
      case Term::FoLam: {
        FoVar y = freshP(m->hint.empty() ? "y" : m->hint);
        Denotation d = go(substFo(m->l, m->fovar, FoTerm::mkVar(y)));
        FoVar x = freshA(m->hint.empty() ? "x" : m->hint);
        Fm a = fForall(x, substFo(d.type, y, FoTerm::mkVar(x)));
        JArena j = judgment(a);
        Strategy s = rework(d.strategy, j.arena, [](int v) { return v; }, [&](const Key&, Move& r) {
          for (auto& t : r.inst) {
            t = mapO(t, [](int k) { return FoTerm::O(k + 1); });
            t = substFo(t, y, FoTerm::O(0));
          }
        });
        return {std::move(j), std::move(s), a};
      }
      case Term::FoApp: {
        Denotation d = go(m->l);
        if (d.type->kind != Formula::Forall) throw TypeError("instantiation of a non-universal");
        Fm a = substFo(d.type->l, d.type->bound, m->fo);
        JArena j = judgment(a);
        const FoTerm& t = m->fo;
        Strategy s = rework(d.strategy, j.arena, [](int v) { return v; }, [&](const Key&, Move& r) {
          for (auto& u : r.inst) u = mapO(u, [&](int k) { return k == 0 ? t : FoTerm::O(k - 1); });
        });
        return {std::move(j), std::move(s), a};
      }
    }
    throw Error("denote: unknown term");
  }

  Denotation named(const Tm& m) {
    int dj = muIndex(m->name);
    Denotation d = go(m->l);
    const JArena& js = d.arena;
    JArena jr = judgment(fBot());
    const int n = jr.n;
    const int cd = n + 1 + dj;
    auto rootFor = [&](int sroot) {
      const auto& tup = js.rootTuple[static_cast<size_t>(sroot)];
      if (tup[0] != tup[static_cast<size_t>(1 + dj)]) return -1;
      std::vector<int> t2 = tup;
      t2[0] = 0;
      return jr.rootOf(t2);
    };
    auto nodeMap = [&](int x) {
      const auto& p = js.prov[static_cast<size_t>(x)];
      int r = rootFor(p.root);
      if (r < 0) return -1;
      if (p.comp < 0) return jr.arena.roots[static_cast<size_t>(r)];
      return jr.node(r, p.comp == n ? cd : p.comp, p.compNode);
    };
    Strategy s = rework(d.strategy, jr.arena, nodeMap, [&](const Key& k, Move& r) {
      int sroot = js.prov[static_cast<size_t>(k[0])].root;
      int rroot = rootFor(sroot);
      int a = js.foOffset(sroot, 1);
      int off = jr.foOffset(rroot, 1 + dj);
      for (auto& t : r.inst) t = mapO(t, [&](int i) { return FoTerm::O(i < a ? off + i : i - a); });
      int at = js.atOffset(sroot, 1);
      int offAt = jr.atOffset(rroot, 1 + dj);
      for (auto& l : r.mu)
        if (l && l->move == 0) l->slot = l->slot < at ? offAt + l->slot : l->slot - at;
    });
    return {std::move(jr), std::move(s), fBot()};
  }

  Denotation pair(const Tm& m) {
    Denotation d1 = go(m->l);
    Denotation d2 = go(m->r);
    Fm a = fAnd(d1.type, d2.type);
    JArena j = judgment(a);
    const int n = j.n;
    int shift = d1.arena.comps[static_cast<size_t>(n)].size();
    Strategy s;
    s.arena = j.arena;
    for (int side = 0; side < 2; ++side) {
      const JArena& js = side == 0 ? d1.arena : d2.arena;
      int sh = side == 0 ? 0 : shift;
      Strategy part = mapNodes(side == 0 ? d1.strategy : d2.strategy, j.arena, [&](int x) {
        const auto& p = js.prov[static_cast<size_t>(x)];
        std::vector<int> tup = js.rootTuple[static_cast<size_t>(p.root)];
        tup[0] += sh;
        int r = j.rootOf(tup);
        if (p.comp < 0) return j.arena.roots[static_cast<size_t>(r)];
        return j.node(r, p.comp, p.comp == n ? p.compNode + sh : p.compNode);
      });
      s.resp.insert(part.resp.begin(), part.resp.end());
    }
    return {std::move(j), std::move(s), a};
  }

  Denotation proj(const Tm& m) {
    Denotation d = go(m->l);
    if (d.type->kind != Formula::And) throw TypeError("projection of a non-conjunction");
    bool second = m->kind == Term::Proj2;
    Fm a = second ? d.type->r : d.type->l;
    JArena j = judgment(a);
    const JArena& js = d.arena;
    const int n = j.n;
    int lo = second ? js.comps[static_cast<size_t>(n)].size() - j.comps[static_cast<size_t>(n)].size() : 0;
    int hi = lo + j.comps[static_cast<size_t>(n)].size();
    Strategy s = mapNodes(d.strategy, j.arena, [&](int x) {
      const auto& p = js.prov[static_cast<size_t>(x)];
      std::vector<int> tup = js.rootTuple[static_cast<size_t>(p.root)];
      if (tup[0] < lo || tup[0] >= hi) return -1;
      tup[0] -= lo;
      int r = j.rootOf(tup);
      if (p.comp < 0) return j.arena.roots[static_cast<size_t>(r)];
      return j.node(r, p.comp, p.comp == n ? p.compNode - lo : p.compNode);
    });
    return {std::move(j), std::move(s), a};
  }
};

}  // namespace

Denotation denote(const Ctx& ctx, const Tm& m) {
  Elaborated e = elaborate(ctx, m);
  Denoter d{ctx};
  Denotation r = d.go(e.term);
  r.type = e.type;
  return r;
}

Denotation denote(const Tm& m, const Fm& a) {
  Elaborated e = elaborateClosed(m, a);
  Denoter d;
  Denotation r = d.go(e.term);
  r.type = a;
  return r;
}

}  // namespace gs

// ---------------------------------------------------------------- λμ-forests

namespace gs {

namespace {

struct Shape {
  std::vector<FoVar> xs;
  std::vector<Fm> args;
  Fm res;
};

Shape shapeOf(Fm q) {
  Shape s;
  while (q->kind == Formula::Forall) {
    s.xs.push_back(q->bound);
    q = q->l;
  }
  while (q->kind == Formula::Imp) {
    s.args.push_back(q->l);
    q = q->r;
  }
  if (!isAtomic(q)) throw Error("formula not in canonical form: " + show(q));
  s.res = q;
  return s;
}

Shape instantiate(const Fm& q, const std::vector<FoTerm>& ts) {
  Shape s = shapeOf(q);
  if (ts.size() != s.xs.size()) throw Error("forest: instantiation arity mismatch");
  std::map<FoVar, FoTerm> m;
  for (size_t i = 0; i < ts.size(); ++i) m[s.xs[i]] = ts[i];
  for (auto& a : s.args) a = substFo(a, m);
  s.res = substFo(s.res, m);
  return s;
}

int add(LmForest& f, int parent, bool odd) {
  int id = static_cast<int>(f.nodes.size());
  LmNode x;
  x.parent = parent;
  x.odd = odd;
  f.nodes.push_back(x);
  if (parent < 0)
    f.roots.push_back(id);
  else
    f.nodes[static_cast<size_t>(parent)].kids.push_back(id);
  return id;
}

}  // namespace

int LmForest::depth(int x) const {
  int d = 0;
  for (int p = nodes[static_cast<size_t>(x)].parent; p >= 0; p = nodes[static_cast<size_t>(p)].parent) ++d;
  return d;
}

bool LmForest::closed() const {
  for (auto& x : nodes)
    if (!x.lamVar.empty() || !x.muVar.empty()) return false;
  return true;
}

bool LmForest::typed() const {
  for (auto& x : nodes)
    if (!x.type) return false;
  return true;
}

std::optional<std::string> forestDefect(const LmForest& f) {
  auto above = [&](int t, int x) {
    for (int p = f.nodes[static_cast<size_t>(x)].parent; p >= 0; p = f.nodes[static_cast<size_t>(p)].parent)
      if (p == t) return true;
    return false;
  };
  for (size_t i = 0; i < f.nodes.size(); ++i) {
    const LmNode& x = f.nodes[i];
    int id = static_cast<int>(i);
    if (x.odd != (f.depth(id) % 2 == 1)) return "node " + std::to_string(i) + ": wrong polarity";
    if (!x.odd) {
      if (x.kids.size() != 1) return "even node " + std::to_string(i) + " lacks exactly one son";
      if (x.lamTarget >= 0 || x.muTarget >= 0) return "edge from even node " + std::to_string(i);
      for (auto& t : x.terms)
        if (!t.isVar() || !oIndex(t.var)) return "even node " + std::to_string(i) + " carries a non O-variable";
      continue;
    }
    for (int t : {x.lamTarget, x.muTarget})
      if (t >= 0 && (f.nodes[static_cast<size_t>(t)].odd || !above(t, id)))
        return "edge from node " + std::to_string(i) + " does not point to an even node above";
    if (x.lamTarget < 0 && x.lamVar.empty()) return "odd node " + std::to_string(i) + " has neither λ-edge nor λ-variable";
    if (x.lamTarget >= 0 && x.lamLabel < 1) return "λ-edge labels start at 1";
  }
  // O-variables along each branch enumerate o0, o1, ... and are introduced before use
  std::function<std::optional<std::string>(int, int)> walk = [&](int x, int c) -> std::optional<std::string> {
    const LmNode& nd = f.nodes[static_cast<size_t>(x)];
    if (!nd.odd) {
      for (auto& t : nd.terms)
        if (oIndex(t.var) != c++) return "O-variables of node " + std::to_string(x) + " break the enumeration";
    } else {
      for (auto& t : nd.terms) {
        std::set<FoVar> vs;
        collectVars(t, vs);
        for (auto& v : vs)
          if (auto k = oIndex(v); k && *k >= c) return "node " + std::to_string(x) + " uses an O-variable introduced below";
      }
    }
    for (int k : nd.kids)
      if (auto e = walk(k, c)) return e;
    return std::nullopt;
  };
  for (int r : f.roots)
    if (auto e = walk(r, 0)) return e;
  return std::nullopt;
}

LmForest typeForest(LmForest f, const Fm& a) {
  auto qs = conjuncts(a);
  if (qs.size() != f.roots.size()) throw Error("forest: " + std::to_string(f.roots.size()) + " trees for " +
                                               std::to_string(qs.size()) + " conjuncts");
  auto node = [&](int x) -> LmNode& { return f.nodes[static_cast<size_t>(x)]; };
  std::function<void(int, const Fm&)> even = [&](int r, const Fm& q) {
    node(r).type = q;
    for (int n : node(r).kids) {
      LmNode& nd = node(n);
      if (nd.lamTarget < 0) throw Error("forest: typing an open node needs its variable's type");
      const LmNode& tg = node(nd.lamTarget);
      Shape st = instantiate(tg.type, tg.terms);
      if (nd.lamLabel < 1 || nd.lamLabel > static_cast<int>(st.args.size())) throw Error("forest: λ-edge label out of range");
      nd.type = st.args[static_cast<size_t>(nd.lamLabel - 1)];
      Shape sn = instantiate(nd.type, nd.terms);
      if (sn.args.size() != nd.kids.size()) throw Error("forest: arity mismatch below a Player node");
      bool atom = sn.res->kind == Formula::Atom;
      if (atom != (nd.muTarget >= 0 || !nd.muVar.empty())) throw Error("forest: μ-edge disagrees with the type");
      if (nd.muTarget >= 0) {
        const LmNode& mt = node(nd.muTarget);
        Shape sm = instantiate(mt.type, mt.terms);
        if (!alphaEq(sm.res, sn.res)) throw Error("forest: μ-edge joins different atoms");
      }
      auto kids = nd.kids;
      for (size_t j = 0; j < kids.size(); ++j) even(kids[j], sn.args[j]);
    }
  };
  for (size_t i = 0; i < qs.size(); ++i) even(f.roots[i], qs[i]);
  return f;
}

LmForest forestOfTerm(const Tm& m, const Fm& a) {
  LmForest f;
  std::map<std::string, std::pair<int, int>> lam;
  std::map<std::string, int> mu;
  std::map<FoVar, FoTerm> fo;
  std::function<void(Tm, int, int)> tree = [&](Tm t, int parent, int c) {
    int r = add(f, parent, false);
    std::vector<std::pair<std::string, std::pair<int, int>>> savedL;
    std::vector<std::pair<std::string, int>> savedM;
    while (t->kind == Term::FoLam) {
      FoTerm o = FoTerm::O(c++);
      fo[t->fovar] = o;
      f.nodes[static_cast<size_t>(r)].terms.push_back(o);
      t = t->l;
    }
    auto bindL = [&](const std::string& x, std::pair<int, int> v) {
      auto it = lam.find(x);
      savedL.emplace_back(x, it == lam.end() ? std::pair{-2, 0} : it->second);
      lam[x] = v;
    };
    auto bindM = [&](const std::string& x, int v) {
      auto it = mu.find(x);
      savedM.emplace_back(x, it == mu.end() ? -2 : it->second);
      mu[x] = v;
    };
    for (int k = 1; t->kind == Term::Lam; ++k, t = t->l) bindL(t->name, {r, k});
    if (t->kind == Term::Mu) {
      bindM(t->name, r);
      t = t->l;
    }
    std::string beta;
    if (t->kind == Term::Named) {
      beta = t->name;
      t = t->l;
    }
    std::vector<Tm> args;
    while (t->kind == Term::App) {
      args.insert(args.begin(), t->r);
      t = t->l;
    }
    std::vector<FoTerm> ts;
    while (t->kind == Term::FoApp) {
      ts.insert(ts.begin(), substFo(t->fo, fo));
      t = t->l;
    }
    if (t->kind != Term::Var) throw Error("not a canonical normal form: head " + show(t));
    int n = add(f, r, true);
    {
      LmNode& nd = f.nodes[static_cast<size_t>(n)];
      nd.terms = ts;
      if (auto it = lam.find(t->name); it != lam.end()) {
        nd.lamTarget = it->second.first;
        nd.lamLabel = it->second.second;
      } else {
        nd.lamVar = t->name;
      }
      if (!beta.empty()) {
        if (auto it = mu.find(beta); it != mu.end())
          nd.muTarget = it->second;
        else
          nd.muVar = beta;
      }
    }
    for (auto& x : args) tree(x, n, c);
    for (auto it = savedL.rbegin(); it != savedL.rend(); ++it) {
      if (it->second.first == -2)
        lam.erase(it->first);
      else
        lam[it->first] = it->second;
    }
    for (auto it = savedM.rbegin(); it != savedM.rend(); ++it) {
      if (it->second == -2)
        mu.erase(it->first);
      else
        mu[it->first] = it->second;
    }
  };
  size_t k = conjuncts(a).size();
  std::vector<Tm> comps;
  if (k == 1) {
    comps.push_back(m);
  } else if (k > 1) {
    Tm t = m;
    for (size_t i = k; i > 1; --i) {
      if (t->kind != Term::Pair) throw Error("not a canonical normal form: expected a tuple");
      comps.insert(comps.begin(), t->r);
      t = t->l;
    }
    comps.insert(comps.begin(), t);
  } else if (m->kind != Term::Star) {
    throw Error("not a canonical normal form: expected ★");
  }
  for (auto& c : comps) tree(c, -1, 0);
  return typeForest(std::move(f), a);
}

Tm termOfForest(const LmForest& f) {
  if (!f.typed()) throw Error("untyped forest: the term is not determined");
  struct Binders {
    std::vector<std::string> lams;
    std::string mu;
  };
  std::map<int, Binders> names;
  std::map<FoVar, FoTerm> fo;
  auto node = [&](int x) -> const LmNode& { return f.nodes[static_cast<size_t>(x)]; };
  std::function<Tm(int)> tree = [&](int r) -> Tm {
    const LmNode& er = node(r);
    Shape sh = instantiate(er.type, er.terms);
    std::vector<FoVar> bs;
    for (auto& o : er.terms) {
      FoVar z = freshO();
      fo[o.var] = FoTerm::mkVar(z);
      bs.push_back(z);
    }
    Binders& b = names[r];
    for (size_t i = 0; i < sh.args.size(); ++i) b.lams.push_back(freshName("a"));
    bool muBind = sh.res->kind == Formula::Atom;
    if (muBind) b.mu = freshName("al");
    if (er.kids.size() != 1) throw Error("forest: even node without exactly one son");
    const LmNode& n = node(er.kids[0]);
    if (n.lamTarget < 0) throw Error("forest is not closed");
    Tm body = tVar(names[n.lamTarget].lams[static_cast<size_t>(n.lamLabel - 1)]);
    for (auto& t : n.terms) body = tFoApp(body, substFo(t, fo));
    for (int k : n.kids) body = tApp(body, tree(k));
    if (n.muTarget >= 0) {
      const std::string& beta = names[n.muTarget].mu;
      if (beta.empty()) throw Error("forest: μ-edge to a node of type ⊥");
      body = tNamed(beta, body);
    }
    Binders& b2 = names[r];
    if (muBind) body = tMu(b2.mu, body, substFo(sh.res, fo));
    for (size_t i = sh.args.size(); i-- > 0;) body = tLam(b2.lams[i], body, substFo(sh.args[i], fo));
    for (size_t i = bs.size(); i-- > 0;) body = tFoLam(bs[i], body, "x");
    return body;
  };
  if (f.roots.empty()) return tStar();
  Tm t = tree(f.roots[0]);
  for (size_t i = 1; i < f.roots.size(); ++i) t = tPair(t, tree(f.roots[i]));
  return t;
}

Strategy strategyOfForest(const LmForest& f, const Fm& a) {
  Strategy s;
  s.arena = arenaOf(a);
  const Arena& ar = s.arena;
  if (f.roots.size() != ar.roots.size()) throw Error("forest and arena disagree on roots");
  std::vector<int> move(f.nodes.size(), -1), pos(f.nodes.size(), -1);
  Key key;
  std::function<void(int, int, int)> even = [&](int r, int mv, int depth) {
    move[static_cast<size_t>(r)] = mv;
    pos[static_cast<size_t>(r)] = depth;
    key.push_back(mv);
    const LmNode& er = f.nodes[static_cast<size_t>(r)];
    for (int n : er.kids) {
      const LmNode& nd = f.nodes[static_cast<size_t>(n)];
      if (nd.lamTarget < 0) throw Error("forest is not closed");
      const auto& up = ar[move[static_cast<size_t>(nd.lamTarget)]].kids;
      if (nd.lamLabel < 1 || nd.lamLabel > static_cast<int>(up.size())) throw Error("forest and arena disagree on a λ-edge");
      int pm = up[static_cast<size_t>(nd.lamLabel - 1)];
      Move p{pm, pos[static_cast<size_t>(nd.lamTarget)], {}, nd.terms};
      if (ar[pm].at.size() > 1) throw Error("readback needs atomic labels of length at most one");
      if (!ar[pm].at.empty()) {
        if (nd.muTarget < 0) throw Error("forest lacks a μ-edge");
        p.mu.push_back(MuLink{pos[static_cast<size_t>(nd.muTarget)], 0});
      }
      s.resp[key] = p;
      if (nd.kids.size() != ar[pm].kids.size()) throw Error("forest and arena disagree below a Player node");
      for (size_t j = 0; j < nd.kids.size(); ++j) even(nd.kids[j], ar[pm].kids[j], depth + 2);
    }
    key.pop_back();
  };
  for (size_t i = 0; i < f.roots.size(); ++i) even(f.roots[i], ar.roots[i], 0);
  return s;
}

LmForest forestOfStrategy(const Strategy& s, const Fm& a) {
  const Arena& ar = s.arena;
  LmForest f;
  Key key;
  std::vector<int> at;  // forest node at each view position
  std::function<void(int, int, int)> even = [&](int parent, int mv, int c) {
    int r = add(f, parent, false);
    f.nodes[static_cast<size_t>(r)].terms = freshOInst(c, ar[mv].fo.size());
    c += static_cast<int>(ar[mv].fo.size());
    key.push_back(mv);
    at.push_back(r);
    auto it = s.resp.find(key);
    if (it == s.resp.end()) throw Error("strategy is not total: no answer after " + std::to_string(key.size()) + " Opponent moves");
    const Move& p = it->second;
    int n = add(f, r, true);
    at.push_back(n);
    {
      LmNode& nd = f.nodes[static_cast<size_t>(n)];
      nd.terms = p.inst;
      nd.lamTarget = at[static_cast<size_t>(p.just)];
      nd.lamLabel = ar.childIndex(p.node) + 1;
      if (ar[p.node].at.size() > 1) throw Error("readback needs atomic labels of length at most one");
      if (!p.mu.empty()) {
        if (!p.mu[0]) throw Error("Player move without μ-pointer");
        nd.muTarget = at[static_cast<size_t>(p.mu[0]->move)];
      }
    }
    for (int k : ar[p.node].kids) even(n, k, c);
    at.pop_back();
    at.pop_back();
    key.pop_back();
  };
  for (int r : ar.roots) even(-1, r, 0);
  return typeForest(std::move(f), a);
}

Tm readback(const Strategy& s, const Fm& a) {
  Fm c = canonicalize(a).formula;
  if (!sameShape(s.arena, arenaOf(c))) throw Error("strategy does not live on the arena of " + show(a));
  return termOfForest(forestOfStrategy(s, c));
}

}  // namespace gs
