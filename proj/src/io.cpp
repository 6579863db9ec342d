#include "gamesem/io.hpp"

#include <fstream>
#include <sstream>

namespace gs {

namespace {

Json fmList(const std::vector<Fm>& fs) {
  Json r = Json::array();
  for (auto& f : fs) r.push_back(show(f));
  return r;
}

// Label variables are bound by the arena: names in scope become A-class.
FoTerm labelTerm(const std::string& text, const std::map<std::string, FoVar>& scope) {
  FoTerm t = parseFoTerm(text);
  std::set<FoVar> vs;
  collectVars(t, vs);
  std::map<FoVar, FoTerm> sub;
  for (auto& v : vs) {
    auto it = scope.find(v.name);
    if (it != scope.end()) sub[v] = FoTerm::mkVar(it->second);
  }
  return substFo(t, sub);
}

}  // namespace

Json toJson(const Arena& a) {
  // Label variables are printed under their base names, numbered apart when they clash.
  std::map<FoVar, FoTerm> display;
  std::set<std::string> used;
  for (int i = 0; i < a.size(); ++i)
    for (auto& x : a[i].fo) {
      std::string b = baseName(x.name), name = b;
      for (int k = 1; used.count(name); ++k) name = b + std::to_string(k);
      used.insert(name);
      display[x] = FoTerm::P(name);
    }
  Json nodes = Json::array();
  for (int i = 0; i < a.size(); ++i) {
    const Node& n = a[i];
    Json fo = Json::array();
    for (auto& x : n.fo) fo.push_back(show(display[x]));
    Json at = Json::array();
    for (auto& f : n.at) {
      Json args = Json::array();
      for (auto& t : f->args) args.push_back(show(substFo(t, display)));
      at.push_back({{"rel", f->rel}, {"args", args}});
    }
    nodes.push_back({{"id", i}, {"parent", n.parent < 0 ? Json(nullptr) : Json(n.parent)}, {"foLabel", fo}, {"atomicLabel", at}});
  }
  return {{"nodes", nodes}};
}

Arena arenaFromJson(const Json& j) {
  Arena a;
  const Json& nodes = j.at("nodes");
  std::vector<std::map<std::string, FoVar>> scopes;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const Json& n = nodes[i];
    if (n.at("id").get<size_t>() != i) throw Error("arena nodes must be listed in order of their ids");
    Node nd;
    nd.parent = n.at("parent").is_null() ? -1 : n.at("parent").get<int>();
    if (nd.parent >= static_cast<int>(i)) throw Error("a parent must precede its sons");
    std::map<std::string, FoVar> scope = nd.parent < 0 ? std::map<std::string, FoVar>{} : scopes[static_cast<size_t>(nd.parent)];
    nd.depth = nd.parent < 0 ? 0 : a.nodes[static_cast<size_t>(nd.parent)].depth + 1;
    for (auto& x : n.value("foLabel", Json::array())) {
      FoVar v = freshA(x.get<std::string>());
      nd.fo.push_back(v);
      scope[x.get<std::string>()] = v;
    }
    for (auto& at : n.value("atomicLabel", Json::array())) {
      std::vector<FoTerm> args;
      for (auto& t : at.value("args", Json::array())) args.push_back(labelTerm(t.get<std::string>(), scope));
      nd.at.push_back(fAtom(at.at("rel").get<std::string>(), args));
    }
    scopes.push_back(scope);
    a.nodes.push_back(nd);
    if (nd.parent < 0) a.roots.push_back(static_cast<int>(i));
    else a.nodes[static_cast<size_t>(nd.parent)].kids.push_back(static_cast<int>(i));
  }
  return a;
}

Json toJson(const Move& m) {
  Json mu = Json::array();
  for (auto& l : m.mu) mu.push_back(l ? Json::array({l->move, l->slot}) : Json(nullptr));
  Json inst = Json::array();
  for (auto& t : m.inst) inst.push_back(show(t));
  return {{"node", m.node}, {"justifier", m.just < 0 ? Json(nullptr) : Json(m.just)}, {"muLinks", mu}, {"inst", inst}};
}

Move moveFromJson(const Json& j, const Arena& a) {
  Move m;
  m.node = j.at("node").get<int>();
  if (m.node < 0 || m.node >= a.size()) throw Error("no node " + std::to_string(m.node));
  m.just = !j.contains("justifier") || j["justifier"].is_null() ? -1 : j["justifier"].get<int>();
  m.mu = noLinks(a, m.node);
  if (j.contains("muLinks")) {
    const Json& mu = j["muLinks"];
    for (size_t i = 0; i < mu.size() && i < m.mu.size(); ++i)
      if (!mu[i].is_null()) m.mu[i] = MuLink{mu[i][0].get<int>(), mu[i][1].get<int>()};
  }
  for (auto& t : j.value("inst", Json::array())) m.inst.push_back(parseFoTerm(t.get<std::string>()));
  return m;
}

Json toJson(const Seq& s) {
  Json moves = Json::array();
  for (auto& m : s) moves.push_back(toJson(m));
  return {{"moves", moves}};
}

Seq playFromJson(const Json& j, const Arena& a) {
  Seq s;
  for (auto& m : j.at("moves")) s.push_back(moveFromJson(m, a));
  return s;
}

Json toJson(const Strategy& s) {
  Json views = Json::array();
  for (auto& [k, m] : s.resp) views.push_back({{"opponent", k}, {"player", toJson(m)}});
  return {{"arena", toJson(s.arena)}, {"views", views}};
}

Strategy strategyFromJson(const Json& j) {
  Strategy s;
  s.arena = arenaFromJson(j.at("arena"));
  for (auto& v : j.at("views")) s.resp[v.at("opponent").get<Key>()] = moveFromJson(v.at("player"), s.arena);
  return s;
}

Json toJson(const UvaPosition& p) { return {{"U", fmList(p.u)}, {"V", fmList(p.v)}, {"A", fmList(p.a)}}; }

Json toJson(const PlayCheck& c) {
  Json r = {{"verdict", verdictName(c.verdict)}};
  if (c.index >= 0) r["index"] = c.index;
  if (!c.reason.empty()) r["reason"] = c.reason;
  return r;
}

std::string readFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace gs
