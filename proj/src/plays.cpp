#include "gamesem/plays.hpp"

namespace gs {

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Play:
      return "play";
    case Verdict::JustifiedOnly:
      return "justified-only";
    case Verdict::Illegal:
      return "illegal";
  }
  return "?";
}

std::vector<FoTerm> freshOInst(int first, size_t n) {
  std::vector<FoTerm> r;
  for (size_t k = 0; k < n; ++k) r.push_back(FoTerm::mkVar(oVar(first + static_cast<int>(k))));
  return r;
}

std::vector<std::optional<MuLink>> noLinks(const Arena& a, int node) {
  return std::vector<std::optional<MuLink>>(a[node].at.size());
}

static bool isOVar(const FoTerm& t) { return t.isVar() && t.var.cls == VarClass::O; }

PlayCheck checkPlay(const Arena& a, const Seq& s) {
  auto bad = [](Verdict v, int i, std::string why) { return PlayCheck{v, i, std::move(why)}; };
  for (size_t k = 0; k < s.size(); ++k) {
    int i = static_cast<int>(k);
    const Move& m = s[k];
    if (m.node < 0 || m.node >= a.size()) return bad(Verdict::Illegal, i, "unknown node");
    int parent = a[m.node].parent;
    if (parent < 0) {
      if (m.just != -1) return bad(Verdict::Illegal, i, "initial move with a justifier");
    } else {
      if (m.just < 0 || m.just >= i) return bad(Verdict::Illegal, i, "missing justifier");
      if (s[static_cast<size_t>(m.just)].node != parent) return bad(Verdict::Illegal, i, "justifier does not enable the move");
    }
    if (!m.mu.empty() && m.mu.size() != a[m.node].at.size()) return bad(Verdict::Illegal, i, "wrong number of μ-pointer slots");
    for (auto& l : m.mu) {
      if (!l) continue;
      if (l->move < 0 || l->move >= i) return bad(Verdict::Illegal, i, "μ-pointer to a later move");
      const Move& t = s[static_cast<size_t>(l->move)];
      if (a.isO(t.node) == a.isO(m.node)) return bad(Verdict::Illegal, i, "μ-pointer between moves of the same polarity");
      if (l->slot < 0 || l->slot >= static_cast<int>(a[t.node].at.size())) return bad(Verdict::Illegal, i, "μ-pointer to a missing label");
    }
  }

  std::vector<std::map<FoVar, FoTerm>> theta(s.size());
  std::set<FoVar> seenO;
  for (size_t k = 0; k < s.size(); ++k) {
    int i = static_cast<int>(k);
    const Move& m = s[k];
    const Node& nd = a[m.node];
    bool o = a.isO(m.node);
    if (m.inst.size() != nd.fo.size()) return bad(Verdict::JustifiedOnly, i, "instantiation length");
    if (o) {
      for (auto& t : m.inst)
        if (!isOVar(t) || !seenO.insert(t.var).second) return bad(Verdict::JustifiedOnly, i, "O-instantiation is not a fresh O-variable");
    } else {
      for (auto& t : m.inst) {
        if (!isOPTerm(t)) return bad(Verdict::JustifiedOnly, i, "P-instantiation is not an OP-term");
        std::set<FoVar> vs;
        collectVars(t, vs);
        for (auto& v : vs)
          if (v.cls == VarClass::O && !seenO.count(v)) return bad(Verdict::JustifiedOnly, i, "O-variable not introduced before");
      }
    }
    if (o != (i % 2 == 0)) return bad(Verdict::JustifiedOnly, i, "alternation");
    if (m.just >= 0) theta[k] = theta[static_cast<size_t>(m.just)];
    for (size_t q = 0; q < nd.fo.size(); ++q) theta[k][nd.fo[q]] = m.inst[q];
    if (o) {
      for (auto& l : m.mu)
        if (l) return bad(Verdict::JustifiedOnly, i, "μ-pointer from an Opponent move");
      continue;
    }
    for (size_t q = 0; q < nd.at.size(); ++q) {
      if (q >= m.mu.size() || !m.mu[q]) return bad(Verdict::JustifiedOnly, i, "missing μ-pointer");
      const MuLink& l = *m.mu[q];
      const Move& t = s[static_cast<size_t>(l.move)];
      Fm here = substFo(nd.at[q], theta[k]);
      Fm there = substFo(a[t.node].at[static_cast<size_t>(l.slot)], theta[static_cast<size_t>(l.move)]);
      if (!alphaEq(here, there)) return bad(Verdict::JustifiedOnly, i, "μ-pointer joins different atoms: " + show(here) + " vs " + show(there));
    }
  }
  return {};
}

std::vector<int> previewIndices(const Arena& a, const Seq& s) {
  std::vector<int> out;
  int i = static_cast<int>(s.size()) - 1;
  while (i >= 0) {
    out.push_back(i);
    const Move& m = s[static_cast<size_t>(i)];
    if (!a.isO(m.node)) {
      --i;
      continue;
    }
    if (m.just < 0) break;
    i = m.just;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::map<FoVar, FoTerm> canonicalRenaming(const Arena& a, const Seq& s) {
  std::map<FoVar, FoTerm> r;
  int c = 0;
  for (auto& m : s)
    if (a.isO(m.node))
      for (auto& t : m.inst)
        if (isOVar(t) && !r.count(t.var)) r[t.var] = FoTerm::mkVar(oVar(c++));
  return r;
}

static Seq applyInst(Seq s, const std::map<FoVar, FoTerm>& rho) {
  for (auto& m : s)
    for (auto& t : m.inst) t = substFo(t, rho);
  return s;
}

Seq viewOf(const Arena& a, const Seq& s) {
  std::vector<int> idx = previewIndices(a, s);
  std::map<int, int> pos;
  for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
  Seq v;
  for (int i : idx) {
    Move m = s[static_cast<size_t>(i)];
    if (m.just >= 0) m.just = pos.count(m.just) ? pos[m.just] : -1;
    for (auto& l : m.mu) {
      if (!l) continue;
      if (pos.count(l->move))
        l->move = pos[l->move];
      else
        l.reset();
    }
    v.push_back(std::move(m));
  }
  return applyInst(v, canonicalRenaming(a, v));
}

bool isView(const Arena& a, const Seq& s) {
  if (checkPlay(a, s).verdict != Verdict::Play) return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (a.isO(s[i].node) && s[i].just != static_cast<int>(i) - 1) return false;
  return viewOf(a, s) == s;
}

Seq oRename(const Seq& s, const std::map<FoVar, FoTerm>& rho) {
  std::set<FoVar> img;
  for (auto& [x, t] : rho) {
    if (x.cls != VarClass::O || !isOVar(t)) throw Error("O-renaming must map O-variables to O-variables");
    if (!img.insert(t.var).second) throw Error("O-renaming is not injective");
  }
  return applyInst(s, rho);
}

Seq grErase(const Seq& s) {
  Seq r = s;
  for (auto& m : r) {
    m.mu.clear();
    m.inst.clear();
  }
  return r;
}

// ---------------------------------------------------------------- strategies

Seq Strategy::view(const Key& key) const {
  Seq v;
  Key k;
  int c = 0;
  for (size_t i = 0; i < key.size(); ++i) {
    int nd = key[i];
    v.push_back(Move{nd, i == 0 ? -1 : static_cast<int>(v.size()) - 1, noLinks(arena, nd),
                     freshOInst(c, arena[nd].fo.size())});
    c += static_cast<int>(arena[nd].fo.size());
    k.push_back(nd);
    auto it = resp.find(k);
    if (it == resp.end()) break;
    v.push_back(it->second);
  }
  return v;
}

std::vector<Key> Strategy::keys() const {
  std::vector<Key> r;
  for (auto& [k, _] : resp) r.push_back(k);
  return r;
}

static int oCount(const Arena& a, const Seq& v) {
  int c = 0;
  for (auto& m : v)
    if (a.isO(m.node)) c += static_cast<int>(m.inst.size());
  return c;
}

Strategy buildStrategy(const Arena& a, const Responder& r, int maxViewLength) {
  Strategy s;
  s.arena = a;
  std::function<void(Seq&, Key&)> go = [&](Seq& view, Key& key) {
    const std::vector<int>& opts = view.empty() ? a.roots : a[view.back().node].kids;
    int c = oCount(a, view);
    for (int o : opts) {
      view.push_back(Move{o, view.empty() ? -1 : static_cast<int>(view.size()) - 1, noLinks(a, o),
                          freshOInst(c, a[o].fo.size())});
      key.push_back(o);
      if (auto p = r(view)) {
        s.resp[key] = *p;
        view.push_back(*p);
        if (static_cast<int>(view.size()) >= maxViewLength) throw Error("view length bound exceeded");
        go(view, key);
        view.pop_back();
      }
      key.pop_back();
      view.pop_back();
    }
  };
  Seq v;
  Key k;
  go(v, k);
  return s;
}

Strategy emptyStrategy(const Arena& a) {
  Strategy s;
  s.arena = a;
  return s;
}

Strategy copycat(const JArena& j, int i) {
  const int n = j.n;
  return buildStrategy(j.arena, [&](const Seq& v) -> std::optional<Move> {
    const Move& o = v.back();
    int last = static_cast<int>(v.size()) - 1;
    if (last == 0) {
      int root = j.prov[static_cast<size_t>(o.node)].root;
      int t0 = j.rootTuple[static_cast<size_t>(root)][0];
      int p = j.node(root, i, t0);
      Move m{p, 0, {}, {}};
      size_t nfo = j.comps[static_cast<size_t>(n)][t0].fo.size();
      m.inst.assign(o.inst.begin(), o.inst.begin() + static_cast<long>(nfo));
      for (size_t s = 0; s < j.arena[p].at.size(); ++s) m.mu.push_back(MuLink{0, static_cast<int>(s)});
      return m;
    }
    const auto& pv = j.prov[static_cast<size_t>(o.node)];
    int twin = pv.comp == i ? n : pv.comp == n ? i : -1;
    if (twin < 0) return std::nullopt;
    int p = j.node(pv.root, twin, pv.compNode);
    Move m{p, last - 2, {}, o.inst};
    for (size_t s = 0; s < j.arena[p].at.size(); ++s) m.mu.push_back(MuLink{last, static_cast<int>(s)});
    return m;
  });
}

std::pair<JArena, Strategy> identity(const Arena& a) {
  JArena j = jarena(std::vector<Arena>{a}, a, {});
  Strategy s = copycat(j, 0);
  return {std::move(j), std::move(s)};
}

Strategy mapNodes(const Strategy& s, const Arena& to, const std::function<int(int)>& f) {
  Strategy r;
  r.arena = to;
  for (auto& [k, m] : s.resp) {
    Key k2;
    bool ok = true;
    for (int x : k) {
      int y = f(x);
      if (y < 0) ok = false;
      k2.push_back(y);
    }
    int y = f(m.node);
    if (!ok || y < 0) continue;
    Move m2 = m;
    m2.node = y;
    r.resp[k2] = m2;
  }
  return r;
}

Strategy reindex(const Strategy& s, const JArena& from, const JArena& to, const std::vector<int>& compMap) {
  return mapNodes(s, to.arena, [&](int x) {
    const auto& p = from.prov[static_cast<size_t>(x)];
    if (p.comp < 0) return to.arena.roots[static_cast<size_t>(p.root)];
    return to.node(p.root, compMap[static_cast<size_t>(p.comp)], p.compNode);
  });
}

// ---------------------------------------------------------------- view closure

std::vector<Seq> viewClosure(const Strategy& s, int maxLength) {
  const Arena& a = s.arena;
  std::vector<Seq> out;
  std::function<void(Seq&)> go = [&](Seq& play) {
    out.push_back(play);
    if (static_cast<int>(play.size()) + 2 > maxLength) return;
    int c = oCount(a, play);
    std::vector<std::pair<int, int>> opts;  // (node, justifier)
    for (int r : a.roots) opts.push_back({r, -1});
    for (size_t j = 0; j < play.size(); ++j)
      if (!a.isO(play[j].node))
        for (int k : a[play[j].node].kids) opts.push_back({k, static_cast<int>(j)});
    for (auto [nd, j] : opts) {
      play.push_back(Move{nd, j, noLinks(a, nd), freshOInst(c, a[nd].fo.size())});
      std::vector<int> idx = previewIndices(a, play);
      Seq pre;
      for (int i : idx) pre.push_back(play[static_cast<size_t>(i)]);
      auto rho = canonicalRenaming(a, pre);
      std::map<FoVar, FoTerm> back;
      for (auto& [x, t] : rho) back[t.var] = FoTerm::mkVar(x);
      Key key;
      for (size_t q = 0; q < idx.size(); q += 2) key.push_back(play[static_cast<size_t>(idx[q])].node);
      auto it = s.resp.find(key);
      if (it != s.resp.end()) {
        Move p = it->second;
        if (p.just >= 0) p.just = idx[static_cast<size_t>(p.just)];
        for (auto& l : p.mu)
          if (l) l->move = idx[static_cast<size_t>(l->move)];
        for (auto& t : p.inst) t = substFo(t, back);
        play.push_back(p);
        go(play);
        play.pop_back();
      }
      play.pop_back();
    }
  };
  Seq e;
  go(e);
  return out;
}

// ---------------------------------------------------------------- classifiers

Classification classify(const Strategy& s, const std::function<bool(int)>& left) {
  const Arena& a = s.arena;
  Classification c;
  c.muRigid = true;
  c.total = true;
  c.linear = static_cast<bool>(left);
  for (int r : a.roots)
    if (!s.resp.count({r})) c.total = false;
  for (auto& [k, m] : s.resp) {
    c.size += 2 * static_cast<long>(k.size());
    Seq v = s.view(k);
    int p = static_cast<int>(v.size()) - 1;
    const Move& prev = v[static_cast<size_t>(p - 1)];
    if (a[m.node].at.size() != a[prev.node].at.size() || m.inst != prev.inst) c.muRigid = false;
    for (size_t q = 0; q < m.mu.size(); ++q)
      if (!m.mu[q] || m.mu[q]->move != p - 1 || m.mu[q]->slot != static_cast<int>(q)) c.muRigid = false;
    for (int o : a[m.node].kids) {
      Key k2 = k;
      k2.push_back(o);
      if (!s.resp.count(k2)) c.total = false;
    }
    if (left) {
      if (k.size() == 1 && !left(m.node)) c.linear = false;
      if (k.size() > 1 && m.just == 0 && left(m.node)) c.linear = false;
    }
  }
  if (left)
    for (int r : a.roots)
      if (!s.resp.count({r})) c.linear = false;
  return c;
}

Classification classify(const Strategy& s, const JArena& j) {
  return classify(s, [&](int x) {
    int comp = j.prov[static_cast<size_t>(x)].comp;
    return comp >= 0 && comp < j.n;
  });
}

Linearity classifyLinearity(const Strategy& s) {
  const Arena& a = s.arena;
  std::map<std::pair<Key, int>, int> lam, mu;
  Linearity l;
  l.lambdaStrategy = true;
  for (auto& [k, m] : s.resp) {
    int p = 2 * static_cast<int>(k.size()) - 1;
    if (m.just >= 0) lam[{Key(k.begin(), k.begin() + m.just / 2 + 1), m.node}]++;
    for (auto& x : m.mu) {
      if (!x) continue;
      if (x->move != p - 1) l.lambdaStrategy = false;
      mu[{Key(k.begin(), k.begin() + x->move / 2 + 1), x->slot}]++;
    }
  }
  l.lambdaLinear = l.lambdaAffine = l.muLinear = l.muAffine = true;
  for (auto& [k, m] : s.resp) {
    int o = k.back();
    for (int c : a[o].kids) {
      auto it = lam.find({k, c});
      int n = it == lam.end() ? 0 : it->second;
      if (n != 1) l.lambdaLinear = false;
      if (n > 1) l.lambdaAffine = false;
    }
    for (size_t q = 0; q < a[o].at.size(); ++q) {
      auto it = mu.find({k, static_cast<int>(q)});
      int n = it == mu.end() ? 0 : it->second;
      if (n != 1) l.muLinear = false;
      if (n > 1) l.muAffine = false;
    }
  }
  return l;
}

Strategy grStrategy(const Strategy& s) {
  Strategy r;
  r.arena = gr(s.arena);
  for (auto& [k, m] : s.resp) {
    Move m2 = m;
    m2.mu.clear();
    m2.inst.clear();
    r.resp[k] = m2;
  }
  return r;
}

bool isZigZag(const Seq& s, const Arena& a, const std::function<bool(int)>& left) {
  std::vector<int> pa, pb;
  std::map<int, int> posA, posB;
  for (size_t i = 0; i < s.size(); ++i) {
    const Move& m = s[i];
    bool inA = left(m.node);
    (inA ? posA : posB)[static_cast<int>(i)] = static_cast<int>((inA ? pa : pb).size());
    (inA ? pa : pb).push_back(static_cast<int>(i));
    if (a.isO(m.node)) continue;
    const Move& prev = s[i - 1];
    if (left(prev.node) == inA) return false;
    if (a[m.node].at.size() != a[prev.node].at.size() || m.inst != prev.inst) return false;
    for (size_t q = 0; q < m.mu.size(); ++q)
      if (!m.mu[q] || m.mu[q]->move != static_cast<int>(i) - 1 || m.mu[q]->slot != static_cast<int>(q)) return false;
    if (inA && a[prev.node].parent < 0 && m.just != static_cast<int>(i) - 1) return false;
  }
  if (pa.size() > pb.size() + 1 || pb.size() > pa.size() + 1) return false;
  auto projJust = [&](int i, const std::map<int, int>& pos) {
    int j = s[static_cast<size_t>(i)].just;
    auto it = pos.find(j);
    return it == pos.end() ? -1 : it->second;
  };
  for (size_t k = 0; k < std::min(pa.size(), pb.size()); ++k)
    if (projJust(pa[k], posA) != projJust(pb[k], posB)) return false;
  return true;
}

}  // namespace gs

namespace gs {

std::optional<Move> respond(const Strategy& s, const Seq& play) {
  if (play.empty() || !s.arena.isO(play.back().node)) return std::nullopt;
  std::vector<int> idx = previewIndices(s.arena, play);
  Seq pv;
  for (int i : idx) pv.push_back(play[static_cast<size_t>(i)]);
  Seq v = viewOf(s.arena, play);
  Key k;
  for (auto& m : v)
    if (s.arena.isO(m.node)) k.push_back(m.node);
  auto it = s.resp.find(k);
  if (it == s.resp.end()) return std::nullopt;
  std::map<FoVar, FoTerm> back;
  for (auto& [x, o] : canonicalRenaming(s.arena, pv)) back[o.var] = FoTerm::mkVar(x);
  Move m = it->second;
  if (m.just >= 0) m.just = idx[static_cast<size_t>(m.just)];
  for (auto& l : m.mu)
    if (l) l->move = idx[static_cast<size_t>(l->move)];
  for (auto& t : m.inst) t = substFo(t, back);
  return m;
}

std::vector<Move> legalOpponentMoves(const Arena& a, const Seq& play) {
  std::vector<Move> out;
  if (!play.empty() && a.isO(play.back().node)) return out;
  int next = 0;
  for (auto& m : play)
    for (auto& t : m.inst)
      if (t.isVar())
        if (auto k = oIndex(t.var)) next = std::max(next, *k + 1);
  auto tryMove = [&](int node, int just) {
    Move m{node, just, noLinks(a, node), freshOInst(next, a[node].fo.size())};
    Seq s = play;
    s.push_back(m);
    if (checkPlay(a, s).verdict == Verdict::Play) out.push_back(m);
  };
  for (int r : a.roots) tryMove(r, -1);
  for (size_t i = 0; i < play.size(); ++i)
    if (!a.isO(play[i].node))
      for (int k : a[play[i].node].kids) tryMove(k, static_cast<int>(i));
  return out;
}

}  // namespace gs
