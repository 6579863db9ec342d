#pragma once

#include "gamesem/canon.hpp"
#include "gamesem/typing.hpp"

namespace gs {

enum class StepKind { Beta, Eta, Mu, Rho, Theta, Nu };
std::string stepName(StepKind k);

struct Reduction {
  StepKind kind;
  Tm result;
};

// One leftmost-outermost β, μ or ρ step; β and μ include the pair and first-order variants.
std::optional<Reduction> reduceStep(const Tm& m);
Tm bmrNormalize(const Tm& m, long fuel = 100000);

// Witness for one rewrite rule applied at the root of `before`: a closed annotated term of
// type before → after (forward) or after → before.
Tm isoWitness(Rule r, const Fm& before, bool forward);
// Witness for a rewrite step inside a larger formula.
Tm stepWitness(const RewriteStep& s, bool forward);

struct IsoEquation {
  std::string name;
  Fm lhs, rhs;
  Tm forward, backward;  // lhs → rhs and rhs → lhs
};
// The twelve isomorphism equations on concrete atoms.
std::vector<IsoEquation> isoEquations();

// Closed M : A becomes a closed term of type canonicalize(A).
Tm coerceToCanonical(const Tm& m, const Fm& a);

struct NormalForm {
  Tm term;
  Fm type;  // canonical
};
NormalForm canonicalNormalForm(const Tm& m, const Fm& a);
bool isCanonicalNormalForm(const Tm& m, const Fm& a);

// Erases μ-abstractions and namings at type ⊥.
Tm stripBottom(const Tm& m);

struct SimpleTranslation {
  Tm term;
  Fm type;
  Ctx ctx;  // declarations for function symbols and free first-order variables
};
// Distinguished atoms of the target: individuals and falsity.
extern const char* const kIndividual;
extern const char* const kFalsity;
// The reserved μ-variable of type ⊥ used to make terms simple.
extern const char* const kXi;
// Every μ is followed by a naming and every naming preceded by a μ.
Tm makeSimple(const Tm& m);
Fm toSimpleType(const Fm& a);
Tm toSimpleTerm(const Tm& m);
SimpleTranslation toSimpleTypes(const Tm& m, const Fm& a);

}  // namespace gs
