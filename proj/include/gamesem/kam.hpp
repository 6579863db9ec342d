#pragma once

#include "gamesem/plays.hpp"
#include "gamesem/typing.hpp"

namespace gs {

// A stack entry is a term, a first-order term or a projection.
struct StackItem {
  enum Kind { Term, Fo, Proj } kind = Term;
  Tm term;
  FoTerm fo;
  int proj = 1;

  static StackItem of(Tm t) { return {Term, std::move(t), {}, 1}; }
  static StackItem of(FoTerm t) { return {Fo, nullptr, std::move(t), 1}; }
  static StackItem projection(int i) { return {Proj, nullptr, {}, i}; }
};

struct Stack {
  std::vector<StackItem> items;
  std::optional<std::string> tail;  // a μ-variable, or none for ε
};

struct KamState {
  Tm code;
  Stack stack;
};

std::string show(const Stack& s);
std::string show(const KamState& s);
// Same, without the numbering that keeps bound names apart.
std::string showPlain(const KamState& s);

std::optional<KamState> kamStep(const KamState& s);

struct KamRun {
  bool stopped = false;  // false when fuel ran out
  KamState last;         // the head-variable state when stopped
  long steps = 0;
  std::vector<KamState> trace;  // filled on request
};
// Throws when the machine is stuck on something other than a variable.
KamRun kamRun(const KamState& s, long fuel = 100000, bool keepTrace = false);

// The state as a λμ-term: M ⊳ M1…Mk.ε ↦ (M)M1…Mk and M ⊳ M1…Mk.α ↦ [α](M)M1…Mk.
Tm embed(const KamState& s);

// ---- provability games ----

struct UvaPosition {
  std::vector<Fm> u, v, a;
  bool final() const { return v.empty(); }
};
UvaPosition uvaInitial(const Fm& a);
// Opponent picks a formula of V with terms for its quantifiers.
UvaPosition uvaOpponent(const UvaPosition& p, const Fm& chosen, const std::vector<FoTerm>& ts);
// Player picks a formula of U; throws unless its instantiated atom is in A.
UvaPosition uvaPlayer(const UvaPosition& p, const Fm& chosen, const std::vector<FoTerm>& ts);
std::string show(const UvaPosition& p);

// The machine playing Player on an arrow-canonical type: every Opponent move restarts it on
// one argument of the last head variable, with fresh variables as arguments.
class KamGame {
 public:
  KamGame(const Tm& m, const Fm& a, long fuel = 100000);

  const Arena& arena() const { return arena_; }
  const Seq& view() const { return view_; }
  const UvaPosition& position() const { return pos_; }
  const std::vector<KamState>& trace() const { return trace_; }
  // Opponent choices available now: 1 at the start, then the sons of the last Player move.
  int choices() const;
  bool finished() const { return started_ && choices() == 0; }
  // j is 1-based; terms default to the next fresh O-variables. Returns the Player answer.
  const Move& opponent(int j, std::optional<std::vector<FoTerm>> terms = std::nullopt);

 private:
  struct Binder {
    int move;
    int position;
    Fm type;
  };
  Tm term_;
  Fm type_;
  Arena arena_;
  long fuel_;
  bool started_ = false;
  Seq view_;
  UvaPosition pos_;
  std::vector<KamState> trace_;
  std::map<std::string, Binder> lams_;
  std::map<std::string, int> mus_;
  std::vector<Tm> pending_;  // arguments of the last head variable
  std::vector<Fm> pendingTypes_;
  int nextO_ = 0;

  void restart(const Tm& code, int node, int just, const Fm& type, const std::vector<FoTerm>& ts);
};

struct ExtractedPlay {
  Seq view;
  std::vector<UvaPosition> positions;  // after each Player move
  bool complete = false;               // Opponent had no move left
};
// Every Opponent choice sequence with at most maxPlayer Player moves.
std::vector<ExtractedPlay> extractPlays(const Tm& m, const Fm& a, int maxPlayer, long fuel = 100000);
// One branch; choices are 1-based indices after each Player move.
Seq extractPlay(const Tm& m, const Fm& a, const std::vector<int>& choices, long fuel = 100000);

}  // namespace gs
