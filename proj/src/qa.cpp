#include "gamesem/qa.hpp"

#include <functional>

namespace gs {

namespace {

void requirePropositional(const Arena& a) {
  for (auto& n : a.nodes) {
    if (!n.fo.empty()) throw Error("first-order labels have no two-moves counterpart");
    for (auto& x : n.at)
      if (!x->args.empty()) throw Error("first-order labels have no two-moves counterpart");
  }
}

}  // namespace

bool isAnswer(const Arena& q, int node) { return !q[node].at.empty(); }

std::optional<std::string> qaDefect(const Arena& q) {
  for (int i = 0; i < q.size(); ++i) {
    const Node& n = q[i];
    if (!n.fo.empty()) return "node " + std::to_string(i) + " has first-order labels";
    if (n.at.empty()) continue;
    if (n.at.size() > 1) return "node " + std::to_string(i) + " has several labels";
    if (n.parent < 0) return "answer " + std::to_string(i) + " is a root";
    if (!n.kids.empty()) return "answer " + std::to_string(i) + " is not a leaf";
  }
  return std::nullopt;
}

Unfolding unfoldArenaMap(const Arena& a) {
  requirePropositional(a);
  Unfolding u;
  u.question.assign(static_cast<size_t>(a.size()), -1);
  u.answers.resize(static_cast<size_t>(a.size()));
  auto add = [&](int parent, std::vector<Fm> at) {
    int id = u.qa.size();
    Node n;
    n.parent = parent;
    n.depth = parent < 0 ? 0 : u.qa[parent].depth + 1;
    n.at = std::move(at);
    u.qa.nodes.push_back(std::move(n));
    (parent < 0 ? u.qa.roots : u.qa.nodes[static_cast<size_t>(parent)].kids).push_back(id);
    return id;
  };
  std::function<void(int, int)> go = [&](int m, int parent) {
    int q = add(parent, {});
    u.question[static_cast<size_t>(m)] = q;
    for (int k : a[m].kids) go(k, q);
    for (auto& x : a[m].at) u.answers[static_cast<size_t>(m)].push_back(add(q, {x}));
  };
  for (int r : a.roots) go(r, -1);
  return u;
}

Arena unfoldArena(const Arena& a) { return unfoldArenaMap(a).qa; }

Folding foldArenaMap(const Arena& q) {
  if (auto d = qaDefect(q)) throw Error("not a QA-arena: " + *d);
  Folding f;
  f.node.assign(static_cast<size_t>(q.size()), -1);
  f.slot.assign(static_cast<size_t>(q.size()), -1);
  for (int i = 0; i < q.size(); ++i) {
    if (isAnswer(q, i)) continue;
    int id = f.arena.size();
    f.node[static_cast<size_t>(i)] = id;
    Node n;
    n.parent = q[i].parent < 0 ? -1 : f.node[static_cast<size_t>(q[i].parent)];
    n.depth = q[i].depth;
    f.arena.nodes.push_back(n);
    (n.parent < 0 ? f.arena.roots : f.arena.nodes[static_cast<size_t>(n.parent)].kids).push_back(id);
  }
  for (int i = 0; i < q.size(); ++i) {
    if (!isAnswer(q, i)) continue;
    auto& father = f.arena.nodes[static_cast<size_t>(f.node[static_cast<size_t>(q[i].parent)])];
    f.slot[static_cast<size_t>(i)] = static_cast<int>(father.at.size());
    father.at.push_back(q[i].at[0]);
  }
  return f;
}

Arena foldArena(const Arena& q) { return foldArenaMap(q).arena; }

Strategy unfoldStrategy(const Strategy& s) {
  Unfolding u = unfoldArenaMap(s.arena);
  Strategy r;
  r.arena = u.qa;
  for (auto& [k, m] : s.resp) {
    Key qk;
    for (int o : k) qk.push_back(u.question[static_cast<size_t>(o)]);
    int n = u.question[static_cast<size_t>(m.node)];
    r.resp[qk] = Move{n, m.just, {}, {}};
    Seq v = s.view(k);
    for (size_t i = 0; i < m.mu.size(); ++i) {
      if (!m.mu[i]) throw Error("Player move without its μ-pointer");
      int j = m.mu[i]->move;
      Key ak = qk;
      ak.push_back(u.answers[static_cast<size_t>(m.node)][i]);
      int ans = u.answers[static_cast<size_t>(v[static_cast<size_t>(j)].node)][static_cast<size_t>(m.mu[i]->slot)];
      r.resp[ak] = Move{ans, j, noLinks(r.arena, ans), {}};
    }
  }
  return r;
}

Strategy foldStrategy(const Strategy& t) {
  Folding f = foldArenaMap(t.arena);
  const Arena& q = t.arena;
  Strategy r;
  r.arena = f.arena;
  for (auto& [k, m] : t.resp) {
    if (isAnswer(q, m.node)) continue;
    Key fk;
    for (int o : k) fk.push_back(f.node[static_cast<size_t>(o)]);
    Move fm{f.node[static_cast<size_t>(m.node)], m.just, {}, {}};
    Seq v = t.view(k);
    int here = static_cast<int>(v.size());
    for (int a : q[m.node].kids) {
      if (!isAnswer(q, a)) continue;
      Key ak = k;
      ak.push_back(a);
      auto it = t.resp.find(ak);
      if (it == t.resp.end()) throw Error("folding needs a total strategy: no answer after node " + std::to_string(a));
      const Move& back = it->second;
      if (!isAnswer(q, back.node) || !alphaEq(q[back.node].at[0], q[a].at[0]))
        throw Error("folding needs a label-rigid strategy");
      int j = back.just;
      if (j < 0 || j >= here || v[static_cast<size_t>(j)].node != q[back.node].parent)
        throw Error("answer not justified by its question");
      fm.mu.push_back(MuLink{j, f.slot[static_cast<size_t>(back.node)]});
    }
    r.resp[fk] = fm;
  }
  return r;
}

QAClass qaClassify(const Strategy& t) {
  const Arena& q = t.arena;
  QAClass c;
  for (auto& [k, m] : t.resp) {
    Seq v = t.view(k);
    int p = static_cast<int>(v.size()) - 1;
    int o = v[static_cast<size_t>(p - 1)].node;
    bool oa = isAnswer(q, o), pa = isAnswer(q, m.node);
    if (oa != pa) c.rigid = c.labelRigid = false;
    else if (pa && !alphaEq(q[o].at[0], q[m.node].at[0])) c.labelRigid = false;
    if (!pa) continue;
    int last = -1;
    for (int i = p - 1; i >= 0; i -= 2)
      if (!isAnswer(q, v[static_cast<size_t>(i)].node)) {
        last = i;
        break;
      }
    if (m.just != last) c.wellBracketed = false;
  }
  return c;
}

// ---- λμ → λ ----

namespace {

struct Spine {
  std::vector<Fm> args;
  Fm target;
};

Spine spineOf(Fm a) {
  Spine s;
  while (a->kind == Formula::Imp) {
    s.args.push_back(a->l);
    a = a->r;
  }
  if (a->kind != Formula::Atom && a->kind != Formula::Bot) throw Error("not a propositional arrow type: " + show(a));
  if (a->kind == Formula::Atom && !a->args.empty()) throw Error("first-order atom " + show(a));
  s.target = a;
  return s;
}

struct MuEntry {
  std::vector<std::string> names;  // α_1 … α_n, then α for an atom target
  Fm type;
};

struct Translator {
  std::map<std::string, MuEntry> mus;

  MuEntry entry(const std::string& alpha, const Fm& ty) {
    Spine s = spineOf(ty);
    MuEntry e{{}, ty};
    std::string b = baseName(alpha);
    for (size_t i = 0; i < s.args.size(); ++i) e.names.push_back(freshName(b + std::to_string(i + 1)));
    if (s.target->kind == Formula::Atom) e.names.push_back(freshName(b));
    return e;
  }

  Tm go(const Tm& m) {
    switch (m->kind) {
      case Term::Var:
        return m;
      case Term::Lam:
        return tLam(m->name, go(m->l), lambdaType(m->ann));
      case Term::App:
        return tApp(go(m->l), go(m->r));
      case Term::Named: {
        auto it = mus.find(m->name);
        if (it == mus.end()) throw Error("unbound μ-variable " + m->name);
        Tm t = go(m->l);
        for (auto& n : it->second.names) t = tApp(t, tVar(n));
        return t;
      }
      case Term::Mu: {
        MuEntry e = entry(m->name, m->ann);
        auto saved = mus.find(m->name) == mus.end() ? std::nullopt : std::optional<MuEntry>(mus[m->name]);
        mus[m->name] = e;
        Tm body = go(m->l);
        if (saved) mus[m->name] = *saved;
        else mus.erase(m->name);
        Spine s = spineOf(e.type);
        for (size_t i = e.names.size(); i-- > 0;)
          body = tLam(e.names[i], body, i < s.args.size() ? lambdaType(s.args[i]) : s.target);
        return body;
      }
      default:
        throw Error("the λ-translation covers λ, application, μ and naming only");
    }
  }
};

}  // namespace

Fm lambdaType(const Fm& a) {
  switch (a->kind) {
    case Formula::Bot:
      return a;
    case Formula::Atom:
      if (!a->args.empty()) throw Error("first-order atom " + show(a));
      return fImp(a, fBot());
    case Formula::Imp:
      return fImp(lambdaType(a->l), lambdaType(a->r));
    default:
      throw Error("the λ-translation covers atoms, ⊥ and → only: " + show(a));
  }
}

LambdaTranslation toLambda(const Ctx& ctx, const Tm& m) {
  Elaborated e = elaborate(ctx, m);
  Translator tr;
  LambdaTranslation out;
  for (auto& [a, ty] : ctx.gamma) out.ctx.gamma.emplace_back(a, lambdaType(ty));
  for (auto& [alpha, ty] : ctx.delta) {
    MuEntry me = tr.entry(alpha, ty);
    Spine s = spineOf(ty);
    for (size_t i = 0; i < me.names.size(); ++i)
      out.ctx.gamma.emplace_back(me.names[i], i < s.args.size() ? lambdaType(s.args[i]) : s.target);
    tr.mus[alpha] = me;
  }
  out.term = tr.go(e.term);
  out.type = lambdaType(e.type);
  return out;
}

LambdaTranslation toLambda(const Tm& m, const Fm& a) { return toLambda(Ctx{}, elaborateClosed(m, a).term); }

bool isLambdaShaped(const Tm& m) {
  if (!m) return true;
  if (m->kind == Term::Named) return false;
  if (m->kind == Term::Mu && m->l->kind == Term::Named && m->l->name == m->name)
    return !freeMuVars(m->l->l).count(m->name) && isLambdaShaped(m->l->l);
  if (m->kind == Term::Mu && freeMuVars(m->l).count(m->name)) return false;
  return isLambdaShaped(m->l) && isLambdaShaped(m->r);
}

}  // namespace gs
