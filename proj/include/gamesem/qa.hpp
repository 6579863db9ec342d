#pragma once

#include "gamesem/plays.hpp"
#include "gamesem/typing.hpp"

namespace gs {

// Answers are the labelled nodes of a QA-arena: leaves, never roots, one atom each.
bool isAnswer(const Arena& q, int node);
std::optional<std::string> qaDefect(const Arena& q);

// Each node keeps its question id; its answers are appended after its other sons, one
// per label slot.
struct Unfolding {
  Arena qa;
  std::vector<int> question;              // arena node → QA node
  std::vector<std::vector<int>> answers;  // [arena node][slot] → QA answer node
};
Unfolding unfoldArenaMap(const Arena& a);
Arena unfoldArena(const Arena& a);

struct Folding {
  Arena arena;
  std::vector<int> node;  // QA node → folded node, -1 for answers
  std::vector<int> slot;  // QA answer → slot in its father's label, -1 for questions
};
Folding foldArenaMap(const Arena& q);
Arena foldArena(const Arena& q);

Strategy unfoldStrategy(const Strategy& s);
// τ must be total and label-rigid.
Strategy foldStrategy(const Strategy& t);

struct QAClass {
  bool rigid = true;
  bool labelRigid = true;
  bool wellBracketed = true;
};
QAClass qaClassify(const Strategy& t);

// The λμ → λ translation on propositional types: X ↦ X → ⊥, ⊥ ↦ ⊥, → preserved.
Fm lambdaType(const Fm& a);
struct LambdaTranslation {
  Tm term;
  Fm type;
  Ctx ctx;  // Γ° then the expansion of every Δ entry
};
LambdaTranslation toLambda(const Ctx& ctx, const Tm& m);
LambdaTranslation toLambda(const Tm& m, const Fm& a);

// Every naming sits directly under the μ that binds it, so θ erases all of them.
bool isLambdaShaped(const Tm& m);

}  // namespace gs
