#pragma once

#include <gmpxx.h>

#include "gamesem/syntax.hpp"

namespace gs {

enum class Rule {
  AndAssoc = 1,  // A∧(B∧C) → (A∧B)∧C
  AndTopR,       // A∧⊤ → A
  AndTopL,       // ⊤∧A → A
  Curry,         // (A∧B)→C → A→(B→C)
  ImpTopL,       // ⊤→A → A
  ImpAnd,        // A→(B∧C) → (A→B)∧(A→C)
  ImpTopR,       // A→⊤ → ⊤
  ForallAnd,     // ∀x(A∧B) → ∀xA∧∀xB
  ForallTop,     // ∀x⊤ → ⊤
  ImpForall,     // A→∀xB → ∀x(A→B)
  AndComm,       // A∧B = B∧A, never used for rewriting
  ForallSwap,    // ∀x∀y = ∀y∀x, never used for rewriting
};

std::string ruleName(Rule r);

// Path components: 0 selects the left operand or the ∀ body, 1 the right operand.
using Path = std::vector<int>;

struct RewriteStep {
  Rule rule;
  Path path;
  Fm before, after;            // the redex and its contractum
  Fm wholeBefore, wholeAfter;  // the full formula around the step
};

struct CanonResult {
  Fm formula;
  std::vector<RewriteStep> trace;
};

std::optional<Fm> applyRule(Rule r, const Fm& a);
CanonResult canonicalize(const Fm& a);
bool isCanonical(const Fm& a);
bool isArrowCanonical(const Fm& a);  // nonterminal Q

Fm subformula(const Fm& a, const Path& p);
Fm replaceAt(const Fm& a, const Path& p, const Fm& r);

// Components of a left-nested conjunction; ⊤ has none.
std::vector<Fm> conjuncts(const Fm& c);
Fm bigAnd(const std::vector<Fm>& qs);

struct Measure {
  mpz_class phi, psi;
};

// Exact measure, or nothing when a value would exceed bitCap bits.
std::optional<Measure> measure(const Fm& a, size_t bitCap = size_t(1) << 20);
bool lexGreater(const Measure& a, const Measure& b);

// Exact below a size threshold, otherwise an interval on an iterated base-2 logarithm.
struct BigNum {
  bool exact = true;
  mpz_class v;
  int h = 0;  // when inexact: log2 applied h times lies in [lo, hi]
  long double lo = 0, hi = 0;

  static BigNum of(const mpz_class& x);
  std::string str() const;
};

enum class Cmp { Less, Equal, Greater, Unknown };
Cmp compare(const BigNum& a, const BigNum& b);
BigNum bigAdd(const BigNum& a, const BigNum& b);
BigNum bigMul(const BigNum& a, const BigNum& b);
BigNum bigPow(const BigNum& base, const BigNum& exp);

struct BigMeasure {
  BigNum phi, psi;
};
BigMeasure measureBig(const Fm& a);

enum class DescentMethod {
  ExactWhole,     // exact integers on the whole formula
  IntervalWhole,  // logarithmic intervals on the whole formula
  Redex,          // exact or interval values on the redex alone
  RuleBound,      // per-rule bound after cancelling shared factors
  Undecided,
};
std::string descentMethodName(DescentMethod m);

struct DescentCheck {
  bool decreased = false;
  DescentMethod method = DescentMethod::Undecided;
};
// Every constructor of φ and ψ is strictly monotone in each argument, so a strict
// descent on the redex lifts to the whole formula.
DescentCheck checkDescent(const RewriteStep& s);

}  // namespace gs
