#include "gamesem/kam.hpp"

#include <regex>

#include <functional>

#include "gamesem/canon.hpp"

namespace gs {

namespace {

Tm applyItem(const Tm& t, const StackItem& it) {
  switch (it.kind) {
    case StackItem::Term:
      return tApp(t, it.term);
    case StackItem::Fo:
      return tFoApp(t, it.fo);
    default:
      return tProj(it.proj, t);
  }
}

MuCtx stackCtx(const Stack& s) {
  MuCtx c;
  for (auto& it : s.items) {
    if (it.kind == StackItem::Term) {
      for (auto& x : freeLambdaVars(it.term)) c.lamFree.insert(x);
      for (auto& x : freeMuVars(it.term)) c.muFree.insert(x);
      for (auto& x : freeFoVars(it.term)) c.foFree.insert(x);
    } else if (it.kind == StackItem::Fo) {
      collectVars(it.fo, c.foFree);
    }
  }
  if (s.tail) c.muFree.insert(*s.tail);
  c.wrap = [s](Tm l) {
    for (auto& it : s.items) l = applyItem(l, it);
    return s.tail ? tNamed(*s.tail, l) : l;
  };
  return c;
}

struct Peeled {
  std::vector<Fm> args;
  Fm target;
};

Peeled peel(Fm a, const std::vector<FoTerm>& ts) {
  size_t i = 0;
  while (a->kind == Formula::Forall) {
    if (i >= ts.size()) throw Error("too few first-order terms for " + show(a));
    a = substFo(a->l, a->bound, ts[i++]);
  }
  if (i != ts.size()) throw Error("too many first-order terms");
  Peeled p;
  while (a->kind == Formula::Imp) {
    p.args.push_back(a->l);
    a = a->r;
  }
  if (!isAtomic(a)) throw Error("not an arrow-canonical formula");
  p.target = a;
  return p;
}

bool member(const std::vector<Fm>& s, const Fm& a) {
  for (auto& x : s)
    if (alphaEq(x, a)) return true;
  return false;
}

void insert(std::vector<Fm>& s, const Fm& a) {
  if (!member(s, a)) s.push_back(a);
}

}  // namespace

std::string show(const Stack& s) {
  std::string r;
  for (auto& it : s.items) {
    switch (it.kind) {
      case StackItem::Term: {
        std::string t = show(it.term);
        r += it.term->kind == Term::Var || it.term->kind == Term::Star ? t : "(" + t + ")";
        break;
      }
      case StackItem::Fo:
        r += show(it.fo);
        break;
      default:
        r += it.proj == 1 ? "p1" : "p2";
    }
    r += ".";
  }
  return r + (s.tail ? *s.tail : "eps");
}

std::string show(const KamState& s) { return show(s.code) + " |> " + show(s.stack); }

std::optional<KamState> kamStep(const KamState& s) {
  const Tm& m = s.code;
  const auto& items = s.stack.items;
  auto pop = [&](Tm code) {
    KamState r{std::move(code), s.stack};
    r.stack.items.erase(r.stack.items.begin());
    return r;
  };
  auto push = [&](Tm code, StackItem it) {
    KamState r{std::move(code), s.stack};
    r.stack.items.insert(r.stack.items.begin(), std::move(it));
    return r;
  };
  switch (m->kind) {
    case Term::Lam:
      if (items.empty() || items[0].kind != StackItem::Term) return std::nullopt;
      return pop(substTerm(m->l, items[0].term, m->name));
    case Term::App:
      return push(m->l, StackItem::of(m->r));
    case Term::Mu:
      return KamState{muSubst(m->l, m->name, stackCtx(s.stack)), {}};
    case Term::Named:
      if (!items.empty() || s.stack.tail) return std::nullopt;
      return KamState{m->l, Stack{{}, m->name}};
    case Term::FoLam:
      if (items.empty() || items[0].kind != StackItem::Fo) return std::nullopt;
      return pop(substFo(m->l, m->fovar, items[0].fo));
    case Term::FoApp:
      return push(m->l, StackItem::of(m->fo));
    case Term::Proj1:
      return push(m->l, StackItem::projection(1));
    case Term::Proj2:
      return push(m->l, StackItem::projection(2));
    case Term::Pair:
      if (items.empty() || items[0].kind != StackItem::Proj) return std::nullopt;
      return pop(items[0].proj == 1 ? m->l : m->r);
    default:
      return std::nullopt;
  }
}

KamRun kamRun(const KamState& s, long fuel, bool keepTrace) {
  KamRun r;
  r.last = s;
  if (keepTrace) r.trace.push_back(s);
  while (r.last.code->kind != Term::Var) {
    if (r.steps >= fuel) return r;
    auto n = kamStep(r.last);
    if (!n) throw Error("machine stuck at " + show(r.last));
    r.last = std::move(*n);
    ++r.steps;
    if (keepTrace) r.trace.push_back(r.last);
  }
  r.stopped = true;
  return r;
}

Tm embed(const KamState& s) { return stackCtx(s.stack).wrap(s.code); }

// ---- provability games ----

UvaPosition uvaInitial(const Fm& a) {
  UvaPosition p;
  p.v = conjuncts(canonicalize(a).formula);
  return p;
}

UvaPosition uvaOpponent(const UvaPosition& p, const Fm& chosen, const std::vector<FoTerm>& ts) {
  if (!member(p.v, chosen)) throw Error("Opponent must choose a formula of V");
  Peeled q = peel(chosen, ts);
  UvaPosition r = p;
  for (auto& a : q.args) insert(r.u, a);
  if (q.target->kind == Formula::Atom) insert(r.a, q.target);
  return r;
}

UvaPosition uvaPlayer(const UvaPosition& p, const Fm& chosen, const std::vector<FoTerm>& ts) {
  if (!member(p.u, chosen)) throw Error("Player must choose a formula of U");
  Peeled q = peel(chosen, ts);
  if (q.target->kind == Formula::Atom && !member(p.a, q.target))
    throw Error("Player's atom " + show(q.target) + " is not in A");
  UvaPosition r = p;
  r.v = q.args;
  return r;
}

std::string show(const UvaPosition& p) {
  auto set = [](const std::vector<Fm>& s) {
    std::string r = "{";
    for (size_t i = 0; i < s.size(); ++i) r += (i ? ", " : "") + show(s[i]);
    return r + "}";
  };
  return "(" + set(p.u) + ", " + set(p.v) + ", " + set(p.a) + ")";
}

// ---- the machine as Player ----

KamGame::KamGame(const Tm& m, const Fm& a, long fuel) : type_(a), fuel_(fuel) {
  if (!isArrowCanonical(a)) throw Error("the machine plays on arrow-canonical types: " + show(a));
  term_ = elaborateClosed(m, a).term;
  arena_ = arenaOf(a);
  pos_ = uvaInitial(a);
}

int KamGame::choices() const { return started_ ? static_cast<int>(pending_.size()) : 1; }

const Move& KamGame::opponent(int j, std::optional<std::vector<FoTerm>> terms) {
  if (j < 1 || j > choices()) throw Error("no Opponent choice " + std::to_string(j));
  int node = started_ ? arena_[view_.back().node].kids[static_cast<size_t>(j - 1)] : arena_.roots[0];
  Tm code = started_ ? pending_[static_cast<size_t>(j - 1)] : term_;
  Fm type = started_ ? pendingTypes_[static_cast<size_t>(j - 1)] : type_;
  int just = started_ ? static_cast<int>(view_.size()) - 1 : -1;
  std::vector<FoTerm> ts;
  if (terms) ts = *terms;
  else
    for (size_t i = 0; i < arena_[node].fo.size(); ++i) ts.push_back(FoTerm::O(nextO_++));
  started_ = true;
  restart(code, node, just, type, ts);
  return view_.back();
}

void KamGame::restart(const Tm& code, int node, int just, const Fm& type, const std::vector<FoTerm>& ts) {
  int mi = static_cast<int>(view_.size());
  view_.push_back(Move{node, just, noLinks(arena_, node), ts});
  pos_ = uvaOpponent(pos_, type, ts);
  Peeled q = peel(type, ts);
  KamState st{code, {}};
  for (auto& t : ts) st.stack.items.push_back(StackItem::of(t));
  for (size_t i = 0; i < q.args.size(); ++i) {
    std::string a = freshName("a");
    lams_[a] = Binder{mi, static_cast<int>(i), q.args[i]};
    st.stack.items.push_back(StackItem::of(tVar(a)));
  }
  if (q.target->kind == Formula::Atom) {
    std::string alpha = freshName("al");
    mus_[alpha] = mi;
    st.stack.tail = alpha;
  }
  KamRun run = kamRun(st, fuel_, true);
  trace_.insert(trace_.end(), run.trace.begin(), run.trace.end());
  if (!run.stopped) throw Error("machine out of fuel");
  const KamState& last = run.last;
  auto b = lams_.find(last.code->name);
  if (b == lams_.end()) throw Error("head variable " + last.code->name + " was not introduced by Opponent");
  const Binder& bd = b->second;
  int n = arena_[view_[static_cast<size_t>(bd.move)].node].kids[static_cast<size_t>(bd.position)];
  size_t nf = arena_[n].fo.size();
  std::vector<FoTerm> us;
  pending_.clear();
  for (size_t i = 0; i < last.stack.items.size(); ++i) {
    const StackItem& it = last.stack.items[i];
    if (i < nf) {
      if (it.kind != StackItem::Fo) throw Error("expected a first-order term on the stack");
      us.push_back(it.fo);
    } else {
      if (it.kind != StackItem::Term) throw Error("expected a term on the stack");
      pending_.push_back(it.term);
    }
  }
  Peeled hb = peel(bd.type, us);
  if (hb.args.size() != pending_.size()) throw Error("head variable applied to the wrong number of arguments");
  pendingTypes_ = hb.args;
  Move p{n, bd.move, noLinks(arena_, n), us};
  if (last.stack.tail) {
    auto mu = mus_.find(*last.stack.tail);
    if (mu == mus_.end()) throw Error("unknown μ-variable " + *last.stack.tail);
    if (p.mu.size() != 1) throw Error("μ-pointer from a node without atom");
    p.mu[0] = MuLink{mu->second, 0};
  } else if (!p.mu.empty()) {
    throw Error("missing μ-pointer");
  }
  pos_ = uvaPlayer(pos_, bd.type, us);
  view_.push_back(p);
}

std::vector<ExtractedPlay> extractPlays(const Tm& m, const Fm& a, int maxPlayer, long fuel) {
  std::vector<ExtractedPlay> out;
  std::function<void(const KamGame&, std::vector<UvaPosition>)> go = [&](const KamGame& g,
                                                                         std::vector<UvaPosition> ps) {
    int k = g.choices();
    if (k == 0 || static_cast<int>(ps.size()) >= maxPlayer) {
      out.push_back({g.view(), ps, k == 0});
      return;
    }
    for (int j = 1; j <= k; ++j) {
      KamGame h = g;
      h.opponent(j);
      auto qs = ps;
      qs.push_back(h.position());
      go(h, qs);
    }
  };
  KamGame g(m, a, fuel);
  g.opponent(1);
  go(g, {g.position()});
  return out;
}

Seq extractPlay(const Tm& m, const Fm& a, const std::vector<int>& choices, long fuel) {
  KamGame g(m, a, fuel);
  g.opponent(1);
  for (int j : choices) g.opponent(j);
  return g.view();
}

std::string showPlain(const KamState& s) {
  static const std::regex fresh("#[0-9]+");
  return std::regex_replace(show(s), fresh, "");
}

}  // namespace gs
