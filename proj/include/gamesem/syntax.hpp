#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  size_t pos;
  ParseError(const std::string& msg, size_t p);
};

struct Signature {
  std::map<std::string, int> functions;
  std::map<std::string, int> relations;
};

enum class VarClass { A, O, P };

struct FoVar {
  VarClass cls = VarClass::P;
  std::string name;
  auto operator<=>(const FoVar&) const = default;
};

struct FoTerm {
  FoVar var;       // meaningful when fn is empty
  std::string fn;  // function symbol; empty for variables
  std::vector<FoTerm> args;

  bool isVar() const { return fn.empty(); }
  static FoTerm mkVar(FoVar v);
  static FoTerm app(std::string f, std::vector<FoTerm> a);
  static FoTerm O(int k);
  static FoTerm P(std::string name);

  bool operator==(const FoTerm&) const = default;
  bool operator<(const FoTerm& o) const;
};

FoVar oVar(int k);
// Index of an O-class variable named o<k>.
std::optional<int> oIndex(const FoVar& v);
FoVar freshO();
FoVar freshP(const std::string& base = "y");
FoVar freshA(const std::string& base = "x");

bool occurs(const FoVar& x, const FoTerm& t);
void collectVars(const FoTerm& t, std::set<FoVar>& out);
FoTerm substFo(const FoTerm& t, const FoVar& x, const FoTerm& u);
FoTerm substFo(const FoTerm& t, const std::map<FoVar, FoTerm>& m);
bool isAPTerm(const FoTerm& t);
bool isOPTerm(const FoTerm& t);

// ---- formulas ----

struct Formula;
using Fm = std::shared_ptr<const Formula>;

struct Formula {
  enum Kind { Top, Bot, Atom, Imp, And, Forall } kind;
  std::string rel;
  std::vector<FoTerm> args;
  Fm l, r;  // Imp/And operands; Forall body in l
  FoVar bound;
};

Fm fTop();
Fm fBot();
Fm fAtom(std::string rel, std::vector<FoTerm> args = {});
Fm fImp(Fm a, Fm b);
Fm fAnd(Fm a, Fm b);
Fm fForall(FoVar x, Fm body);

std::set<FoVar> freeVars(const Fm& a);
Fm substFo(const Fm& a, const FoVar& x, const FoTerm& t);
Fm substFo(const Fm& a, const std::map<FoVar, FoTerm>& m);
bool alphaEq(const Fm& a, const Fm& b);
bool isAtomic(const Fm& a);  // Atom or Bot
int formulaSize(const Fm& a);
// Renames every bound variable to a fresh A-class variable.
Fm freshenBound(const Fm& a);

// ---- terms ----

struct Term;
using Tm = std::shared_ptr<const Term>;

struct Term {
  enum Kind { Var, Lam, App, Pair, Proj1, Proj2, Star, Named, Mu, FoLam, FoApp } kind;
  std::string name;  // Var, Lam, Named, Mu
  FoVar fovar;       // FoLam binder (O-class)
  std::string hint;  // display name for FoLam binders
  Fm ann;            // optional annotation on Lam/Mu
  Tm l, r;
  FoTerm fo;  // FoApp argument
};

Tm tVar(std::string a);
Tm tLam(std::string a, Tm body, Fm ann = nullptr);
Tm tApp(Tm m, Tm n);
Tm tPair(Tm m, Tm n);
Tm tProj(int i, Tm m);
Tm tStar();
Tm tNamed(std::string alpha, Tm m);
Tm tMu(std::string alpha, Tm body, Fm ann = nullptr);
Tm tFoLam(FoVar x, Tm body, std::string hint = "x");
Tm tFoApp(Tm m, FoTerm t);
Tm tApps(Tm head, const std::vector<Tm>& args);

std::string freshName(const std::string& base);
std::string baseName(const std::string& n);

std::set<std::string> freeLambdaVars(const Tm& m);
std::set<std::string> freeMuVars(const Tm& m);
std::set<FoVar> freeFoVars(const Tm& m);
bool isClosed(const Tm& m);
int termSize(const Tm& m);

Tm substFo(const Tm& m, const FoVar& x, const FoTerm& t);
Tm substTerm(const Tm& m, const Tm& n, const std::string& a);
// Renames the free μ-variable alpha into beta.
Tm renameMu(const Tm& m, const std::string& alpha, const std::string& beta);

// Context C[·] replacing each [alpha]L; fv lists names the wrapper may capture.
struct MuCtx {
  std::function<Tm(Tm)> wrap;
  std::set<std::string> lamFree, muFree;
  std::set<FoVar> foFree;
};
MuCtx muCtxApp(const std::string& alpha, Tm n);
MuCtx muCtxProj(const std::string& alpha, int i);
MuCtx muCtxFoApp(const std::string& alpha, FoTerm t);
Tm muSubst(const Tm& m, const std::string& alpha, const MuCtx& ctx);

// Equality up to renaming of bound λ-, μ- and Λ-variables; annotations ignored.
bool alphaEq(const Tm& a, const Tm& b);
Tm stripAnnotations(const Tm& m);

// ---- concrete syntax ----

Fm parseFormula(const std::string& text, Signature* sig = nullptr);
Tm parseTerm(const std::string& text, Signature* sig = nullptr);
FoTerm parseFoTerm(const std::string& text, Signature* sig = nullptr);
std::string stripComments(const std::string& text);

std::string show(const FoTerm& t);
std::string show(const Fm& a);
std::string show(const Tm& m, bool annotations = false);

}  // namespace gs
