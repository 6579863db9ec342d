#pragma once

#include "gamesem/plays.hpp"
#include "gamesem/typing.hpp"

namespace gs {

struct Denotation {
  JArena arena;  // ΣΓ → (A × ΠΔ)
  Strategy strategy;
  Fm type;
};

// Interprets Γ ⊢ M : A | Δ; contexts keep their declaration order.
Denotation denote(const Ctx& ctx, const Tm& m);
Denotation denote(const Tm& m, const Fm& a);

// Nodes of even depth are Opponent nodes with exactly one son.
struct LmNode {
  int parent = -1;
  std::vector<int> kids;
  bool odd = false;
  std::vector<FoTerm> terms;  // O-variables on even nodes
  int lamTarget = -1;
  int lamLabel = 0;  // 1-based
  int muTarget = -1;
  std::string lamVar, muVar;  // open forests only
  Fm type;                     // typed forests only
};

struct LmForest {
  std::vector<LmNode> nodes;
  std::vector<int> roots;

  int depth(int x) const;
  bool closed() const;
  bool typed() const;
};

// Checks the structural conditions; returns an explanation of the first failure.
std::optional<std::string> forestDefect(const LmForest& f);
// Attaches formulas derived from the canonical type a.
LmForest typeForest(LmForest f, const Fm& a);

LmForest forestOfTerm(const Tm& m, const Fm& a);
Tm termOfForest(const LmForest& f);
Strategy strategyOfForest(const LmForest& f, const Fm& a);
LmForest forestOfStrategy(const Strategy& s, const Fm& a);

// σ must be a total finite strategy on the arena of a; the type is canonicalized first.
Tm readback(const Strategy& s, const Fm& a);

}  // namespace gs
