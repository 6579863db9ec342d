#include "gamesem/arena.hpp"

#include <functional>
#include <sstream>

#include "gamesem/canon.hpp"

namespace gs {

Forest unitForest() { return {Tree{}}; }

Forest sum(const Forest& a, const Forest& b) {
  Forest r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Forest graft(const Forest& a, const Forest& b) {
  Forest r = b;
  for (auto& t : r) t.kids.insert(t.kids.begin(), a.begin(), a.end());
  return r;
}

Forest quantify(const FoVar& x, const Forest& a) {
  Forest r = a;
  for (auto& t : r) t.fo.insert(t.fo.begin(), x);
  return r;
}

Forest product(const Forest& a, const Forest& b) {
  Forest r;
  for (auto& s : a)
    for (auto& t : b) {
      Tree m;
      m.fo = s.fo;
      m.fo.insert(m.fo.end(), t.fo.begin(), t.fo.end());
      m.at = s.at;
      m.at.insert(m.at.end(), t.at.begin(), t.at.end());
      m.kids = s.kids;
      m.kids.insert(m.kids.end(), t.kids.begin(), t.kids.end());
      r.push_back(std::move(m));
    }
  return r;
}

static Forest rawForest(const Fm& a) {
  switch (a->kind) {
    case Formula::Top:
      return {};
    case Formula::Bot:
      return unitForest();
    case Formula::Atom:
      return {Tree{{}, {a}, {}}};
    case Formula::And:
      return sum(rawForest(a->l), rawForest(a->r));
    case Formula::Imp:
      return graft(rawForest(a->l), rawForest(a->r));
    case Formula::Forall:
      return quantify(a->bound, rawForest(a->l));
  }
  return {};
}

namespace {

void renameTree(Tree& t, const std::map<FoVar, FoTerm>& m) {
  if (m.empty()) return;
  for (auto& v : t.fo) {
    auto it = m.find(v);
    if (it != m.end()) v = it->second.var;
  }
  for (auto& a : t.at) a = substFo(a, m);
  for (auto& k : t.kids) renameTree(k, m);
}

void uniquifyTree(Tree& t, std::set<FoVar>& seen) {
  std::map<FoVar, FoTerm> ren;
  for (auto& v : t.fo)
    if (!seen.insert(v).second) {
      FoVar y = freshA(v.name);
      ren[v] = FoTerm::mkVar(y);
      seen.insert(y);
    }
  renameTree(t, ren);
  for (auto& k : t.kids) uniquifyTree(k, seen);
}

}  // namespace

Forest uniquify(const Forest& f) {
  Forest r = f;
  std::set<FoVar> seen;
  for (auto& t : r) uniquifyTree(t, seen);
  return r;
}

Forest forestOf(const Fm& a) { return uniquify(rawForest(a)); }

Arena flatten(const Forest& f) {
  Arena a;
  std::function<int(const Tree&, int, int)> go = [&](const Tree& t, int parent, int depth) {
    int id = a.size();
    a.nodes.push_back(Node{parent, depth, {}, t.fo, t.at});
    for (auto& k : t.kids) {
      int c = go(k, id, depth + 1);
      a.nodes[static_cast<size_t>(id)].kids.push_back(c);
    }
    return id;
  };
  for (auto& t : f) a.roots.push_back(go(t, -1, 0));
  return a;
}

Arena arenaOf(const Fm& a) { return flatten(forestOf(a)); }

int Arena::childIndex(int i) const {
  const auto& sib = siblingsOf((*this)[i].parent);
  for (size_t k = 0; k < sib.size(); ++k)
    if (sib[k] == i) return static_cast<int>(k);
  return -1;
}

std::vector<FoVar> Arena::scope(int i) const {
  std::vector<int> chain;
  for (int c = i; c >= 0; c = (*this)[c].parent) chain.push_back(c);
  std::vector<FoVar> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    for (auto& v : (*this)[*it].fo) out.push_back(v);
  return out;
}

std::string Arena::show() const {
  std::ostringstream os;
  std::function<void(int)> go = [&](int i) {
    const Node& nd = (*this)[i];
    os << std::string(static_cast<size_t>(2 * nd.depth), ' ') << "n" << i << " {";
    for (size_t k = 0; k < nd.fo.size(); ++k) os << (k ? "," : "") << nd.fo[k].name;
    os << " |";
    for (size_t k = 0; k < nd.at.size(); ++k) os << (k ? ", " : " ") << gs::show(nd.at[k]);
    os << "}\n";
    for (int c : nd.kids) go(c);
  };
  for (int r : roots) go(r);
  return os.str();
}

Arena gr(const Arena& a) {
  Arena r = a;
  for (auto& n : r.nodes) {
    n.fo.clear();
    n.at.clear();
  }
  return r;
}

bool sameShape(const Arena& a, const Arena& b) {
  if (a.size() != b.size() || a.roots != b.roots) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a[i].kids != b[i].kids) return false;
  return true;
}

bool identical(const Arena& a, const Arena& b) {
  if (!sameShape(a, b)) return false;
  std::map<FoVar, FoTerm> ren;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i].fo.size() != b[i].fo.size() || a[i].at.size() != b[i].at.size()) return false;
    for (size_t k = 0; k < a[i].fo.size(); ++k) ren[a[i].fo[k]] = FoTerm::mkVar(b[i].fo[k]);
  }
  for (int i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < a[i].at.size(); ++k)
      if (!alphaEq(substFo(a[i].at[k], ren), b[i].at[k])) return false;
  return true;
}

// ---------------------------------------------------------------- isomorphism

namespace {

struct IsoSearch {
  const Arena& a;
  const Arena& b;
  std::vector<int> map;

  bool atomsMatch(int x, int y, const std::map<FoVar, FoTerm>& ren) {
    const auto& p = a[x].at;
    const auto& q = b[y].at;
    if (p.size() != q.size()) return false;
    for (size_t k = 0; k < p.size(); ++k)
      if (!alphaEq(substFo(p[k], ren), q[k])) return false;
    return true;
  }

  bool node(int x, int y, const std::map<FoVar, FoTerm>& ren) {
    const auto& fx = a[x].fo;
    const auto& fy = b[y].fo;
    if (fx.size() != fy.size() || a[x].kids.size() != b[y].kids.size()) return false;
    std::vector<size_t> perm(fx.size());
    for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    do {
      auto r = ren;
      for (size_t k = 0; k < perm.size(); ++k) r[fx[k]] = FoTerm::mkVar(fy[perm[k]]);
      if (!atomsMatch(x, y, r)) continue;
      if (forest(a[x].kids, b[y].kids, r)) {
        map[static_cast<size_t>(x)] = y;
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  bool forest(const std::vector<int>& xs, const std::vector<int>& ys, const std::map<FoVar, FoTerm>& ren) {
    if (xs.size() != ys.size()) return false;
    std::vector<bool> used(ys.size(), false);
    std::function<bool(size_t)> go = [&](size_t i) {
      if (i == xs.size()) return true;
      for (size_t j = 0; j < ys.size(); ++j) {
        if (used[j]) continue;
        if (!node(xs[i], ys[j], ren)) continue;
        used[j] = true;
        if (go(i + 1)) return true;
        used[j] = false;
      }
      return false;
    };
    return go(0);
  }
};

}  // namespace

std::optional<std::vector<int>> findArenaIso(const Arena& a, const Arena& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, b, std::vector<int>(static_cast<size_t>(a.size()), -1)};
  if (!s.forest(a.roots, b.roots, {})) return std::nullopt;
  return s.map;
}

bool typesIsomorphic(const Fm& a, const Fm& b) {
  return findArenaIso(arenaOf(canonicalize(a).formula), arenaOf(canonicalize(b).formula)).has_value();
}

// ---------------------------------------------------------------- ΣΓ → (T × ΠΔ)

int JArena::node(int root, int comp, int compNode) const {
  return index[static_cast<size_t>(root)][static_cast<size_t>(comp)][static_cast<size_t>(compNode)];
}

int JArena::foOffset(int root, int part) const {
  const auto& tup = rootTuple[static_cast<size_t>(root)];
  int off = 0;
  for (int p = 0; p < part; ++p) off += static_cast<int>(comps[static_cast<size_t>(n + p)][tup[static_cast<size_t>(p)]].fo.size());
  return off;
}

int JArena::atOffset(int root, int part) const {
  const auto& tup = rootTuple[static_cast<size_t>(root)];
  int off = 0;
  for (int p = 0; p < part; ++p) off += static_cast<int>(comps[static_cast<size_t>(n + p)][tup[static_cast<size_t>(p)]].at.size());
  return off;
}

int JArena::rootOf(const std::vector<int>& tuple) const {
  for (size_t r = 0; r < rootTuple.size(); ++r)
    if (rootTuple[r] == tuple) return static_cast<int>(r);
  return -1;
}

Arena freshenArena(const Arena& a) {
  Arena r = a;
  std::map<FoVar, FoTerm> ren;
  for (auto& nd : r.nodes)
    for (auto& v : nd.fo) {
      FoVar y = freshA(v.name);
      ren[v] = FoTerm::mkVar(y);
      v = y;
    }
  for (auto& nd : r.nodes)
    for (auto& at : nd.at) at = substFo(at, ren);
  return r;
}

JArena jarena(const std::vector<Fm>& gamma, const Fm& target, const std::vector<Fm>& delta) {
  std::vector<Arena> g, d;
  for (auto& x : gamma) g.push_back(arenaOf(x));
  for (auto& x : delta) d.push_back(arenaOf(x));
  JArena j = jarena(g, arenaOf(target), d);
  j.gamma = gamma;
  j.delta = delta;
  j.target = target;
  return j;
}

JArena jarena(const std::vector<Arena>& gamma, const Arena& target, const std::vector<Arena>& delta) {
  JArena j;
  j.n = static_cast<int>(gamma.size());
  for (auto& g : gamma) j.comps.push_back(freshenArena(g));
  j.comps.push_back(freshenArena(target));
  for (auto& d : delta) j.comps.push_back(freshenArena(d));

  // root tuples, t-major
  std::vector<std::vector<int>> tuples{{}};
  for (int p = 0; p <= j.m(); ++p) {
    std::vector<std::vector<int>> next;
    for (auto& tup : tuples)
      for (int r : j.comps[static_cast<size_t>(j.n + p)].roots) {
        auto t2 = tup;
        t2.push_back(r);
        next.push_back(t2);
      }
    tuples = std::move(next);
  }

  Arena& ar = j.arena;
  auto copySub = [&](auto& self, int root, int comp, int x, int parent) -> int {
    const Arena& src = j.comps[static_cast<size_t>(comp)];
    int id = ar.size();
    ar.nodes.push_back(Node{parent, ar[parent].depth + 1, {}, src[x].fo, src[x].at});
    j.prov.push_back({root, comp, x});
    j.index[static_cast<size_t>(root)][static_cast<size_t>(comp)][static_cast<size_t>(x)] = id;
    for (int c : src[x].kids) {
      int k = self(self, root, comp, c, id);
      ar.nodes[static_cast<size_t>(id)].kids.push_back(k);
    }
    return id;
  };

  for (size_t r = 0; r < tuples.size(); ++r) {
    int root = static_cast<int>(r);
    j.rootTuple.push_back(tuples[r]);
    j.index.emplace_back();
    for (auto& c : j.comps) j.index.back().push_back(std::vector<int>(static_cast<size_t>(c.size()), -1));
    Node rn;
    for (int p = 0; p <= j.m(); ++p) {
      const Node& src = j.comps[static_cast<size_t>(j.n + p)][tuples[r][static_cast<size_t>(p)]];
      rn.fo.insert(rn.fo.end(), src.fo.begin(), src.fo.end());
      rn.at.insert(rn.at.end(), src.at.begin(), src.at.end());
    }
    int id = ar.size();
    ar.nodes.push_back(rn);
    ar.roots.push_back(id);
    j.prov.push_back({root, -1, -1});
    for (int p = 0; p <= j.m(); ++p)
      j.index.back()[static_cast<size_t>(j.n + p)][static_cast<size_t>(tuples[r][static_cast<size_t>(p)])] = id;
    std::vector<int> kids;
    for (int g = 0; g < j.n; ++g)
      for (int x : j.comps[static_cast<size_t>(g)].roots) kids.push_back(copySub(copySub, root, g, x, id));
    for (int p = 0; p <= j.m(); ++p) {
      int comp = j.n + p;
      for (int x : j.comps[static_cast<size_t>(comp)][tuples[r][static_cast<size_t>(p)]].kids)
        kids.push_back(copySub(copySub, root, comp, x, id));
    }
    ar.nodes[static_cast<size_t>(id)].kids = kids;
  }
  return j;
}

}  // namespace gs
