#pragma once

#include "gamesem/syntax.hpp"

namespace gs {

struct TypeError : Error {
  using Error::Error;
};

// Γ is extended at the back by λ; Δ is extended at the front by μ.
struct Ctx {
  std::vector<std::pair<std::string, Fm>> gamma;
  std::vector<std::pair<std::string, Fm>> delta;

  const Fm* lam(const std::string& a) const;
  const Fm* mu(const std::string& a) const;
};

struct Elaborated {
  Tm term;  // every λ and μ binder annotated
  Fm type;
};

// Checks M against A when given, otherwise synthesizes.
Elaborated elaborate(const Ctx& ctx, const Tm& m, const Fm& expected = nullptr);
Fm typecheck(const Ctx& ctx, const Tm& m);
Elaborated elaborateClosed(const Tm& m, const Fm& a);
bool checks(const Ctx& ctx, const Tm& m, const Fm& a);

Fm eraseFirstOrder(const Fm& a);
Tm eraseFirstOrder(const Tm& m);
std::pair<Tm, Fm> eraseFirstOrder(const Tm& m, const Fm& a);

Fm eraseClassical(const Fm& a);
Tm eraseClassical(const Tm& m);
std::pair<Tm, Fm> eraseClassical(const Tm& m, const Fm& a);

bool isPropositional(const Fm& a);
bool isPropositional(const Tm& m);

}  // namespace gs
