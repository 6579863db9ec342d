#pragma once

#include <functional>
#include <map>

#include "gamesem/arena.hpp"

namespace gs {

struct MuLink {
  int move = -1;
  int slot = 0;
  bool operator==(const MuLink&) const = default;
};

// Indices are absolute positions in the sequence, from 0.
struct Move {
  int node = -1;
  int just = -1;
  std::vector<std::optional<MuLink>> mu;  // one entry per atomic-label slot
  std::vector<FoTerm> inst;
  bool operator==(const Move&) const = default;
};
using Seq = std::vector<Move>;

enum class Verdict { Play, JustifiedOnly, Illegal };
std::string verdictName(Verdict v);

struct PlayCheck {
  Verdict verdict = Verdict::Play;
  int index = -1;  // first offending move
  std::string reason;
};
PlayCheck checkPlay(const Arena& a, const Seq& s);

// Positions of the pre-view of s, in order.
std::vector<int> previewIndices(const Arena& a, const Seq& s);
// Canonical O-renaming of a sequence: O-instantiations become o0, o1, ...
std::map<FoVar, FoTerm> canonicalRenaming(const Arena& a, const Seq& s);
Seq viewOf(const Arena& a, const Seq& s);
bool isView(const Arena& a, const Seq& s);
Seq oRename(const Seq& s, const std::map<FoVar, FoTerm>& rho);  // throws unless rho is an injective O-renaming
Seq grErase(const Seq& s);
std::vector<FoTerm> freshOInst(int first, size_t n);
std::vector<std::optional<MuLink>> noLinks(const Arena& a, int node);

// A view function stored as its tree of views: the key of a view is the list of its
// Opponent nodes, the value is the Player response to it.
using Key = std::vector<int>;
struct Strategy {
  Arena arena;
  std::map<Key, Move> resp;

  // The view of length 2·|key| (or 2·|key|-1 when the last response is missing).
  Seq view(const Key& key) const;
  std::vector<Key> keys() const;
  bool operator==(const Strategy& o) const { return resp == o.resp; }
};

// The view that ends with an Opponent move; the callback returns the Player answer.
using Responder = std::function<std::optional<Move>(const Seq&)>;
Strategy buildStrategy(const Arena& a, const Responder& r, int maxViewLength = 64);
Strategy emptyStrategy(const Arena& a);

// Copycat on the sequent arena ΣΓ → (T × ΠΔ) between Γ_i and T, which must be equal arenas.
Strategy copycat(const JArena& j, int i);
// id_A on A → A.
std::pair<JArena, Strategy> identity(const Arena& a);

// Renames nodes through f into the arena `to`; views touching a node mapped to -1 are dropped.
Strategy mapNodes(const Strategy& s, const Arena& to, const std::function<int(int)>& f);
// Changes the context of a strategy: every node keeps its root tuple and component
// node, and component c becomes compMap[c] (T and Δ are unchanged).
Strategy reindex(const Strategy& s, const JArena& from, const JArena& to, const std::vector<int>& compMap);

// Interaction of f on ΣΓ+A → (B × ΠΔ) with t on ΣΓ → (A × ΠΔ), giving ΣΓ → (B × ΠΔ).
struct CutStats {
  long steps = 0;
};
Strategy cut(const JArena& jf, const Strategy& f, const JArena& jt, const Strategy& t, const JArena& jr,
             CutStats* stats = nullptr, long fuel = 10000);

// σ on A → B and τ on B → C give σ;τ on A → C.
std::pair<JArena, Strategy> compose(const JArena& ab, const Strategy& sigma, const JArena& bc, const Strategy& tau);

std::vector<Seq> viewClosure(const Strategy& s, int maxLength);

struct Classification {
  bool muRigid = false;
  bool total = false;
  bool linear = false;
  long size = 0;
};
// `left` marks the nodes of the domain part of an arrow arena; linearity needs it.
Classification classify(const Strategy& s, const std::function<bool(int)>& left = nullptr);
Classification classify(const Strategy& s, const JArena& j);

struct Linearity {
  bool lambdaStrategy = false;
  bool lambdaLinear = false;
  bool lambdaAffine = false;
  bool muLinear = false;
  bool muAffine = false;
};
Linearity classifyLinearity(const Strategy& s);

Strategy grStrategy(const Strategy& s);

// Zig-zag shape of a strategy on an arrow arena (domain marked by `left`).
bool isZigZag(const Seq& s, const Arena& a, const std::function<bool(int)>& left);

}  // namespace gs

namespace gs {

// The Player answer of s to a play ending with an Opponent move: the view is looked up and
// the answer is moved back into the play's indices and variable names.
std::optional<Move> respond(const Strategy& s, const Seq& play);
// Opponent extensions of a play (ending with a Player move, or empty) that check_play accepts,
// with fresh O-variables for instantiations.
std::vector<Move> legalOpponentMoves(const Arena& a, const Seq& play);

}  // namespace gs
