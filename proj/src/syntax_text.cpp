#include <cctype>
#include <map>
#include <sstream>

#include "gamesem/syntax.hpp"

namespace gs {

std::string stripComments(const std::string& text) {
  std::string out;
  bool skip = false;
  for (char c : text) {
    if (c == '#') skip = true;
    if (c == '\n') skip = false;
    if (!skip) out += c;
  }
  return out;
}

namespace {

const std::vector<std::pair<std::string, std::string>> kUnicode = {
    {"→", " -> "}, {"∧", " /\\ "}, {"∀", " forall "}, {"⊤", " top "},
    {"⊥", " bot "}, {"λ", " lam "}, {"μ", " mu "},   {"Λ", " Lam "},
    {"★", " * "},  {"π1", " p1 "}, {"π2", " p2 "},
};

std::string translate(std::string s) {
  for (auto& [from, to] : kUnicode) {
    size_t k = 0;
    while ((k = s.find(from, k)) != std::string::npos) {
      s.replace(k, from.size(), to);
      k += to.size();
    }
  }
  return s;
}

struct Tok {
  enum { Ident, Sym, End } kind;
  std::string text;
  size_t pos;
};

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (s.compare(i, 2, "->") == 0 || s.compare(i, 2, "/\\") == 0) {
      out.push_back({Tok::Sym, s.substr(i, 2), i});
      i += 2;
      continue;
    }
    if (std::string("().,:[]{}<>*").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, static_cast<char>(c)), i});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

const std::set<std::string> kKeywords = {"forall", "top", "bot", "lam", "mu", "Lam", "p1", "p2"};

class Parser {
 public:
  Parser(const std::string& text, Signature* sig, bool allowFreeO)
      : toks_(lex(translate(stripComments(text)))), allowFreeO_(allowFreeO) {
    if (sig) {
      sig_ = sig;
      strict_ = !sig->functions.empty() || !sig->relations.empty();
    } else {
      sig_ = &local_;
    }
  }

  void expectEnd() {
    if (peek().kind != Tok::End) fail("trailing input '" + peek().text + "'");
  }

  FoTerm foTerm() {
    Tok t = ident("first-order term");
    if (std::isupper(static_cast<unsigned char>(t.text[0])))
      throw ParseError("relation symbol '" + t.text + "' used as a term", t.pos);
    if (isSym("(")) {
      next();
      std::vector<FoTerm> args;
      if (!isSym(")")) {
        args.push_back(foTerm());
        while (isSym(",")) {
          next();
          args.push_back(foTerm());
        }
      }
      expect(")");
      declare(sig_->functions, t, static_cast<int>(args.size()), "function");
      return FoTerm::app(t.text, std::move(args));
    }
    for (auto it = foEnv_.rbegin(); it != foEnv_.rend(); ++it)
      if (it->first == t.text) return FoTerm::mkVar(it->second);
    auto f = sig_->functions.find(t.text);
    if (f != sig_->functions.end()) {
      if (f->second != 0) throw ParseError("function '" + t.text + "' needs arguments", t.pos);
      return FoTerm::app(t.text, {});
    }
    FoVar o{VarClass::O, t.text};
    if (oIndex(o)) {
      if (!allowFreeO_) throw ParseError("unbound O-class variable '" + t.text + "'", t.pos);
      return FoTerm::mkVar(o);
    }
    return FoTerm::P(t.text);
  }

  Fm formula() {
    Fm l = conj();
    if (isSym("->")) {
      next();
      return fImp(l, formula());
    }
    return l;
  }

  Tm term() {
    const Tok& t = peek();
    if (t.kind == Tok::Ident && (t.text == "lam" || t.text == "mu")) {
      bool isLam = t.text == "lam";
      next();
      std::vector<Tok> names;
      do names.push_back(ident("binder")); while (peek().kind == Tok::Ident);
      Fm ann;
      if (isSym(":")) {
        if (names.size() != 1) fail("annotation on a multi-binder");
        next();
        ann = formula();
      }
      expect(".");
      std::vector<std::string> fresh;
      auto& env = isLam ? lamEnv_ : muEnv_;
      for (auto& n : names) {
        fresh.push_back(freshName(n.text));
        env.push_back({n.text, fresh.back()});
      }
      Tm body = term();
      for (size_t i = 0; i < names.size(); ++i) env.pop_back();
      for (size_t i = names.size(); i-- > 0;)
        body = isLam ? tLam(fresh[i], body, ann) : tMu(fresh[i], body, ann);
      return body;
    }
    if (t.kind == Tok::Ident && t.text == "Lam") {
      next();
      std::vector<std::pair<std::string, FoVar>> bs;
      do {
        Tok n = ident("binder");
        if (oIndex({VarClass::O, n.text})) throw ParseError("O-class variables cannot be bound", n.pos);
        bs.push_back({n.text, freshO()});
      } while (peek().kind == Tok::Ident);
      expect(".");
      for (auto& b : bs) foEnv_.push_back(b);
      Tm body = term();
      for (size_t i = 0; i < bs.size(); ++i) foEnv_.pop_back();
      for (size_t i = bs.size(); i-- > 0;) body = tFoLam(bs[i].second, body, bs[i].first);
      return body;
    }
    if (isSym("[")) {
      next();
      Tok a = ident("μ-variable");
      expect("]");
      return tNamed(lookup(muEnv_, a.text), term());
    }
    Tm head = arg();
    while (startsArg()) head = tApp(head, arg());
    if (startsBinder()) head = tApp(head, term());
    return head;
  }

 private:
  const Tok& peek() const { return toks_[i_]; }
  Tok next() { return toks_[i_++]; }
  bool isSym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }
  void expect(const char* s) {
    if (!isSym(s)) fail(std::string("expected '") + s + "'");
    next();
  }
  Tok ident(const char* what) {
    if (peek().kind != Tok::Ident || kKeywords.count(peek().text)) fail(std::string("expected ") + what);
    return next();
  }

  void declare(std::map<std::string, int>& m, const Tok& t, int arity, const char* kind) {
    auto it = m.find(t.text);
    if (it == m.end()) {
      if (strict_) throw ParseError(std::string("unknown ") + kind + " '" + t.text + "'", t.pos);
      m[t.text] = arity;
    } else if (it->second != arity) {
      throw ParseError(std::string("arity mismatch for ") + kind + " '" + t.text + "'", t.pos);
    }
  }

  Fm conj() {
    Fm l = unary();
    while (isSym("/\\")) {
      next();
      l = fAnd(l, unary());
    }
    return l;
  }

  Fm unary() {
    const Tok& t = peek();
    if (t.kind == Tok::Ident && t.text == "top") {
      next();
      return fTop();
    }
    if (t.kind == Tok::Ident && t.text == "bot") {
      next();
      return fBot();
    }
    if (t.kind == Tok::Ident && t.text == "forall") {
      next();
      std::vector<std::pair<std::string, FoVar>> bs;
      do {
        Tok n = ident("bound variable");
        bs.push_back({n.text, freshA(n.text)});
      } while (peek().kind == Tok::Ident);
      expect(".");
      for (auto& b : bs) foEnv_.push_back(b);
      Fm body = formula();
      for (size_t i = 0; i < bs.size(); ++i) foEnv_.pop_back();
      for (size_t i = bs.size(); i-- > 0;) body = fForall(bs[i].second, body);
      return body;
    }
    if (isSym("(")) {
      next();
      Fm f = formula();
      expect(")");
      return f;
    }
    Tok r = ident("formula");
    if (!std::isupper(static_cast<unsigned char>(r.text[0])))
      throw ParseError("expected relation symbol, got '" + r.text + "'", r.pos);
    std::vector<FoTerm> args;
    if (isSym("(")) {
      next();
      if (!isSym(")")) {
        args.push_back(foTerm());
        while (isSym(",")) {
          next();
          args.push_back(foTerm());
        }
      }
      expect(")");
    }
    declare(sig_->relations, r, static_cast<int>(args.size()), "relation");
    return fAtom(r.text, std::move(args));
  }

  bool startsBinder() const {
    const Tok& t = peek();
    return (t.kind == Tok::Ident && (t.text == "lam" || t.text == "mu" || t.text == "Lam")) ||
           (t.kind == Tok::Sym && t.text == "[");
  }

  bool startsArg() const {
    const Tok& t = peek();
    if (t.kind == Tok::Ident) return t.text == "p1" || t.text == "p2" || !kKeywords.count(t.text);
    return t.kind == Tok::Sym && (t.text == "(" || t.text == "<" || t.text == "*");
  }

  Tm arg() {
    const Tok& t = peek();
    if (t.kind == Tok::Ident && (t.text == "p1" || t.text == "p2")) {
      int i = t.text == "p1" ? 1 : 2;
      next();
      return tProj(i, arg());
    }
    Tm m = atom();
    while (isSym("{")) {
      next();
      FoTerm u = foTerm();
      expect("}");
      m = tFoApp(m, u);
    }
    return m;
  }

  Tm atom() {
    if (isSym("*")) {
      next();
      return tStar();
    }
    if (isSym("(")) {
      next();
      Tm m = term();
      expect(")");
      return m;
    }
    if (isSym("<")) {
      next();
      Tm a = term();
      expect(",");
      Tm b = term();
      expect(">");
      return tPair(a, b);
    }
    Tok a = ident("term");
    return tVar(lookup(lamEnv_, a.text));
  }

  static std::string lookup(const std::vector<std::pair<std::string, std::string>>& env,
                            const std::string& n) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == n) return it->second;
    return n;
  }

  std::vector<Tok> toks_;
  size_t i_ = 0;
  Signature local_;
  Signature* sig_;
  bool strict_ = false;
  bool allowFreeO_;
  std::vector<std::pair<std::string, FoVar>> foEnv_;
  std::vector<std::pair<std::string, std::string>> lamEnv_, muEnv_;
};

// ---------------------------------------------------------------- printing

class Namer {
 public:
  std::string bind(const std::string& base, std::set<std::string>& scope) {
    std::string b = base.empty() ? "v" : baseName(base);
    std::string cand = b;
    for (int k = 1; scope.count(cand) || avoid.count(cand); ++k) cand = b + std::to_string(k);
    scope.insert(cand);
    return cand;
  }
  std::set<std::string> avoid;
};

struct Printer {
  Namer namer;
  std::set<std::string> lamScope, muScope, foScope;
  std::map<std::string, std::string> lamNames, muNames;
  std::map<FoVar, std::string> foNames;
  bool annotations = false;

  std::string var(const FoVar& v) const {
    auto it = foNames.find(v);
    return it == foNames.end() ? v.name : it->second;
  }

  std::string fo(const FoTerm& t) const {
    if (t.isVar()) return var(t.var);
    std::string s = t.fn + "(";
    for (size_t i = 0; i < t.args.size(); ++i) s += (i ? "," : "") + fo(t.args[i]);
    return s + ")";
  }

  template <class F>
  std::string withFo(const FoVar& v, const std::string& hint, F&& f) {
    std::string n = namer.bind(hint, foScope);
    auto old = foNames.find(v);
    std::optional<std::string> saved;
    if (old != foNames.end()) saved = old->second;
    foNames[v] = n;
    std::string s = f(n);
    if (saved) foNames[v] = *saved; else foNames.erase(v);
    foScope.erase(n);
    return s;
  }

  // tail: the formula may extend to the right without parentheses
  std::string fm(const Fm& a, int prec, bool tail) {
    switch (a->kind) {
      case Formula::Top:
        return "top";
      case Formula::Bot:
        return "bot";
      case Formula::Atom: {
        if (a->args.empty()) return a->rel;
        std::string s = a->rel + "(";
        for (size_t i = 0; i < a->args.size(); ++i) s += (i ? "," : "") + fo(a->args[i]);
        return s + ")";
      }
      case Formula::And: {
        std::string s = fm(a->l, 1, false) + " /\\ " + fm(a->r, 2, false);
        return prec > 1 ? "(" + s + ")" : s;
      }
      case Formula::Imp: {
        std::string s = fm(a->l, 1, false) + " -> " + fm(a->r, 0, true);
        return prec > 0 ? "(" + s + ")" : s;
      }
      case Formula::Forall: {
        std::string s = withFo(a->bound, a->bound.name, [&](const std::string& n) {
          return "forall " + n + ". " + fm(a->l, 0, true);
        });
        return (prec == 0 && tail) ? s : "(" + s + ")";
      }
    }
    return "?";
  }

  std::string lamBinder(std::map<std::string, std::string>& names, std::set<std::string>& scope,
                        const std::string& n, std::string& saved, bool& had) {
    auto it = names.find(n);
    had = it != names.end();
    if (had) saved = it->second;
    std::string d = namer.bind(n, scope);
    names[n] = d;
    return d;
  }

  void unbind(std::map<std::string, std::string>& names, std::set<std::string>& scope,
              const std::string& n, const std::string& d, const std::string& saved, bool had) {
    scope.erase(d);
    if (had) names[n] = saved; else names.erase(n);
  }

  static std::string lookup(const std::map<std::string, std::string>& m, const std::string& n) {
    auto it = m.find(n);
    return it == m.end() ? n : it->second;
  }

  std::string term(const Tm& m) {
    switch (m->kind) {
      case Term::Lam:
      case Term::Mu: {
        bool isLam = m->kind == Term::Lam;
        auto& names = isLam ? lamNames : muNames;
        auto& scope = isLam ? lamScope : muScope;
        std::string saved;
        bool had;
        std::string ann = (annotations && m->ann) ? ":" + fm(m->ann, 0, true) : "";
        std::string d = lamBinder(names, scope, m->name, saved, had);
        std::string s = (isLam ? "lam " : "mu ") + d + ann + ". " + term(m->l);
        unbind(names, scope, m->name, d, saved, had);
        return s;
      }
      case Term::FoLam:
        return withFo(m->fovar, m->hint.empty() ? "x" : m->hint,
                      [&](const std::string& n) { return "Lam " + n + ". " + term(m->l); });
      case Term::Named:
        return "[" + lookup(muNames, m->name) + "] " + term(m->l);
      case Term::App:
        return app(m);
      default:
        return arg(m);
    }
  }

  std::string app(const Tm& m) {
    if (m->kind == Term::App) return app(m->l) + " " + arg(m->r);
    return arg(m);
  }

  std::string arg(const Tm& m) {
    if (m->kind == Term::Proj1) return "p1 " + arg(m->l);
    if (m->kind == Term::Proj2) return "p2 " + arg(m->l);
    return postfix(m);
  }

  std::string postfix(const Tm& m) {
    if (m->kind == Term::FoApp) return postfix(m->l) + "{" + fo(m->fo) + "}";
    return atom(m);
  }

  std::string atom(const Tm& m) {
    switch (m->kind) {
      case Term::Var:
        return lookup(lamNames, m->name);
      case Term::Star:
        return "*";
      case Term::Pair:
        return "<" + term(m->l) + ", " + term(m->r) + ">";
      default:
        return "(" + term(m) + ")";
    }
  }
};

void collectFreeNames(const Fm& a, std::set<std::string>& out) {
  for (auto& v : freeVars(a)) out.insert(v.name);
}

}  // namespace

Fm parseFormula(const std::string& text, Signature* sig) {
  Parser p(text, sig, true);
  Fm f = p.formula();
  p.expectEnd();
  return f;
}

Tm parseTerm(const std::string& text, Signature* sig) {
  Parser p(text, sig, false);
  Tm m = p.term();
  p.expectEnd();
  return m;
}

FoTerm parseFoTerm(const std::string& text, Signature* sig) {
  Parser p(text, sig, true);
  FoTerm t = p.foTerm();
  p.expectEnd();
  return t;
}

std::string show(const FoTerm& t) {
  Printer p;
  return p.fo(t);
}

std::string show(const Fm& a) {
  Printer p;
  collectFreeNames(a, p.namer.avoid);
  return p.fm(a, 0, true);
}

std::string show(const Tm& m, bool annotations) {
  Printer p;
  p.annotations = annotations;
  for (auto& n : freeLambdaVars(m)) p.namer.avoid.insert(n);
  for (auto& n : freeMuVars(m)) p.namer.avoid.insert(n);
  for (auto& v : freeFoVars(m)) p.namer.avoid.insert(v.name);
  for (auto& k : kKeywords) p.namer.avoid.insert(k);
  return p.term(m);
}

}  // namespace gs
