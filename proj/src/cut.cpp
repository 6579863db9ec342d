#include "gamesem/plays.hpp"

namespace gs {

namespace {

enum Owner { Env = 0, F = 1, T = 2 };

struct UMove {
  int owner = Env;
  int nodeR = -1, nodeF = -1, nodeT = -1;
  int justR = -1, justF = -1, justT = -1;
  int trigger = -1;  // the Opponent move a Player move answers
  int thread = -1;   // index of the initial move of the argument's thread
  int vpos = -1;     // position in the external view
  std::vector<FoTerm> inst;
  std::vector<FoTerm> instT;  // argument-side instantiation of a thread's initial move
  std::vector<std::optional<MuLink>> mu;  // owner's perspective, physical indices
};

struct Engine {
  const JArena& jf;
  const Strategy& f;
  const JArena& jt;
  const Strategy& t;
  const JArena& jr;
  long fuel;
  long steps = 0;
  int n;

  bool threadInitial(const UMove& m) const { return m.nodeT >= 0 && jt.arena[m.nodeT].parent < 0; }

  int node(const UMove& m, int who) const { return who == F ? m.nodeF : m.nodeT; }
  int just(const UMove& m, int who) const { return who == F ? m.justF : m.justT; }
  const std::vector<FoTerm>& instFor(const UMove& m, int who) const {
    return who == T && threadInitial(m) ? m.instT : m.inst;
  }

  // Player `who` answers its Opponent move at index o; nullopt when undefined.
  std::optional<UMove> respond(const std::vector<UMove>& u, int o, int who) {
    std::vector<int> idx;
    for (int i = o;;) {
      idx.push_back(i);
      int j = just(u[static_cast<size_t>(i)], who);
      if (j < 0) break;
      idx.push_back(j);
      i = u[static_cast<size_t>(j)].trigger;
    }
    std::reverse(idx.begin(), idx.end());
    Key key;
    std::map<FoVar, FoTerm> env;
    int c = 0;
    for (size_t q = 0; q < idx.size(); q += 2) {
      const UMove& m = u[static_cast<size_t>(idx[q])];
      key.push_back(node(m, who));
      for (auto& x : instFor(m, who)) env[oVar(c++)] = x;
    }
    const Strategy& s = who == F ? f : t;
    auto it = s.resp.find(key);
    if (it == s.resp.end()) return std::nullopt;
    const Move& r = it->second;
    UMove e;
    e.owner = who;
    e.trigger = o;
    int jx = r.just >= 0 ? idx[static_cast<size_t>(r.just)] : -1;
    for (auto& l : r.mu) {
      if (!l) throw Error("cut: a Player move lacks a μ-pointer");
      e.mu.push_back(MuLink{idx[static_cast<size_t>(l->move)], l->slot});
    }
    for (auto& x : r.inst) e.inst.push_back(substFo(x, env));
    const UMove& u0 = u[0];
    int rootR = jr.prov[static_cast<size_t>(u0.nodeR)].root;
    if (who == F) {
      e.nodeF = r.node;
      e.justF = jx;
      const auto& p = jf.prov[static_cast<size_t>(r.node)];
      if (p.comp < n) {
        e.nodeR = jr.node(rootR, p.comp, p.compNode);
        e.justR = jx;
      } else if (p.comp == n) {
        if (jf.comps[static_cast<size_t>(n)][p.compNode].parent < 0) {
          std::vector<int> tup{p.compNode};
          const auto& rt = jr.rootTuple[static_cast<size_t>(rootR)];
          tup.insert(tup.end(), rt.begin() + 1, rt.end());
          int troot = jt.rootOf(tup);
          e.nodeT = jt.arena.roots[static_cast<size_t>(troot)];
          e.thread = static_cast<int>(u.size());
          e.instT = e.inst;
          int off = jr.foOffset(rootR, 1);
          e.instT.insert(e.instT.end(), u0.inst.begin() + off, u0.inst.end());
        } else {
          e.thread = u[static_cast<size_t>(jx)].thread;
          int troot = jt.prov[static_cast<size_t>(u[static_cast<size_t>(e.thread)].nodeT)].root;
          e.nodeT = jt.node(troot, n, p.compNode);
          e.justT = jx;
        }
      } else {
        e.nodeR = jr.node(rootR, p.comp - 1, p.compNode);
        e.justR = jx;
      }
    } else {
      e.nodeT = r.node;
      e.justT = jx;
      e.thread = u[static_cast<size_t>(o)].thread;
      const auto& p = jt.prov[static_cast<size_t>(r.node)];
      if (p.comp == n) {
        e.nodeF = jf.node(jf.prov[static_cast<size_t>(u0.nodeF)].root, n, p.compNode);
        e.justF = jx;
      } else {
        e.nodeR = jr.node(rootR, p.comp, p.compNode);
        e.justR = threadInitial(u[static_cast<size_t>(jx)]) ? 0 : jx;
      }
    }
    return e;
  }

  // External position and slot reached by a μ-pointer of `who`.
  MuLink chase(const std::vector<UMove>& u, int who, MuLink l) {
    for (int guard = 0; guard < 100000; ++guard) {
      const UMove& m = u[static_cast<size_t>(l.move)];
      if (who == T && threadInitial(m)) {
        int troot = jt.prov[static_cast<size_t>(m.nodeT)].root;
        int a = static_cast<int>(jt.comps[static_cast<size_t>(n)][jt.rootTuple[static_cast<size_t>(troot)][0]].at.size());
        if (l.slot < a) {
          who = F;
          if (!m.mu[static_cast<size_t>(l.slot)]) throw Error("cut: dangling μ-pointer");
          l = *m.mu[static_cast<size_t>(l.slot)];
          continue;
        }
        int b = jr.atOffset(jr.prov[static_cast<size_t>(u[0].nodeR)].root, 1);
        return MuLink{0, b + l.slot - a};
      }
      if (m.vpos >= 0) return MuLink{m.vpos, l.slot};
      if (m.owner == Env) throw Error("cut: μ-pointer to a hidden Opponent move");
      who = m.owner;
      if (!m.mu[static_cast<size_t>(l.slot)]) throw Error("cut: dangling μ-pointer");
      l = *m.mu[static_cast<size_t>(l.slot)];
    }
    throw Error("cut: μ-pointer cycle");
  }

  // Runs the interaction after the external Opponent move at the end of u.
  std::optional<Move> run(std::vector<UMove>& u) {
    int o = static_cast<int>(u.size()) - 1;
    int who = u[static_cast<size_t>(o)].nodeF >= 0 ? F : T;
    for (;;) {
      if (++steps > fuel) throw Error("cut: interaction fuel exhausted");
      auto e = respond(u, o, who);
      if (!e) return std::nullopt;
      u.push_back(*e);
      int i = static_cast<int>(u.size()) - 1;
      UMove& m = u.back();
      if (m.nodeR >= 0) {
        Move r;
        r.node = m.nodeR;
        const UMove& j = u[static_cast<size_t>(m.justR)];
        if (j.vpos < 0) throw Error("cut: justifier outside the external view");
        r.just = j.vpos;
        for (auto& l : m.mu) r.mu.push_back(chase(u, m.owner, *l));
        r.inst = m.inst;
        return r;
      }
      o = i;
      who = who == F ? T : F;
    }
  }
};

}  // namespace

Strategy cut(const JArena& jf, const Strategy& f, const JArena& jt, const Strategy& t, const JArena& jr,
             CutStats* stats, long fuel) {
  Engine eng{jf, f, jt, t, jr, fuel, 0, jr.n};
  Strategy out;
  out.arena = jr.arena;
  const Arena& ar = jr.arena;

  std::function<void(std::vector<UMove>&, Seq&, Key&)> go = [&](std::vector<UMove>& u, Seq& v, Key& key) {
    const std::vector<int>& opts = v.empty() ? ar.roots : ar[v.back().node].kids;
    int c = 0;
    for (auto& m : v)
      if (ar.isO(m.node)) c += static_cast<int>(m.inst.size());
    for (int o : opts) {
      std::vector<UMove> u2 = u;
      UMove e;
      e.owner = Env;
      e.nodeR = o;
      e.vpos = static_cast<int>(v.size());
      e.inst = freshOInst(c, ar[o].fo.size());
      if (v.empty()) {
        e.nodeF = jf.arena.roots[static_cast<size_t>(jr.prov[static_cast<size_t>(o)].root)];
      } else {
        int jv = static_cast<int>(u.size()) - 1;
        e.justR = jv;
        const UMove& j = u[static_cast<size_t>(jv)];
        const auto& p = jr.prov[static_cast<size_t>(o)];
        if (j.owner == F) {
          e.nodeF = jf.node(p.root, p.comp < eng.n ? p.comp : p.comp + 1, p.compNode);
          e.justF = jv;
        } else {
          int troot = jt.prov[static_cast<size_t>(u[static_cast<size_t>(j.thread)].nodeT)].root;
          e.nodeT = jt.node(troot, p.comp, p.compNode);
          e.justT = jv;
          e.thread = j.thread;
        }
      }
      u2.push_back(e);
      Seq v2 = v;
      v2.push_back(Move{o, v.empty() ? -1 : static_cast<int>(v.size()) - 1, noLinks(ar, o), e.inst});
      key.push_back(o);
      auto r = eng.run(u2);
      if (r) {
        out.resp[key] = *r;
        u2.back().vpos = static_cast<int>(v2.size());
        v2.push_back(*r);
        if (v2.size() > 400) throw Error("cut: view length bound exceeded");
        go(u2, v2, key);
      }
      key.pop_back();
    }
  };
  std::vector<UMove> u;
  Seq v;
  Key k;
  go(u, v, k);
  if (stats) stats->steps += eng.steps;
  return out;
}

std::pair<JArena, Strategy> compose(const JArena& ab, const Strategy& sigma, const JArena& bc, const Strategy& tau) {
  const Arena& a = ab.comps[0];
  const Arena& b = ab.comps[1];
  const Arena& c = bc.comps[1];
  JArena jf = jarena(std::vector<Arena>{a, b}, c, {});
  Strategy f = reindex(tau, bc, jf, {1, 2});
  JArena jr = jarena(std::vector<Arena>{a}, c, {});
  Strategy r = cut(jf, f, ab, sigma, jr);
  return {std::move(jr), std::move(r)};
}

}  // namespace gs
