#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gamesem/denote.hpp"
#include "gamesem/normal.hpp"
#include "gamesem/qa.hpp"
#include "gamesem/service.hpp"

using namespace gs;

namespace {

bool asJson = false;

// An argument naming a .lmt, .fof or .json file is replaced by its contents, minus # comments.
std::string source(const std::string& arg) {
  auto ends = [&](const char* ext) {
    std::string e(ext);
    return arg.size() > e.size() && arg.compare(arg.size() - e.size(), e.size(), e) == 0;
  };
  if (!ends(".lmt") && !ends(".fof") && !ends(".json")) return arg;
  std::string text = readFile(arg);
  if (ends(".json")) return text;
  std::stringstream in(text), out;
  for (std::string line; std::getline(in, line);) out << line.substr(0, line.find('#')) << '\n';
  return out.str();
}

Tm term(const std::string& s) { return parseTerm(source(s)); }
Fm formula(const std::string& s) { return parseFormula(source(s)); }

std::string showMove(const Move& m) {
  std::string r = std::to_string(m.node);
  if (m.just >= 0) r += "^" + std::to_string(m.just);
  if (!m.inst.empty()) {
    r += "{";
    for (size_t i = 0; i < m.inst.size(); ++i) r += (i ? "," : "") + show(m.inst[i]);
    r += "}";
  }
  for (size_t i = 0; i < m.mu.size(); ++i)
    if (m.mu[i]) r += " mu" + std::to_string(i) + "->" + std::to_string(m.mu[i]->move) + "." + std::to_string(m.mu[i]->slot);
  return r;
}

std::string showSeq(const Seq& s) {
  std::string r;
  for (size_t i = 0; i < s.size(); ++i) r += (i ? " | " : "") + showMove(s[i]);
  return r;
}

void printStrategy(const Strategy& s) {
  if (asJson) {
    std::cout << toJson(s).dump(2) << '\n';
    return;
  }
  std::cout << s.arena.show();
  for (auto& k : s.keys()) std::cout << showSeq(s.view(k)) << '\n';
}

void emit(const Json& j, const std::string& text) {
  if (asJson) std::cout << j.dump(2) << '\n';
  else std::cout << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"game semantics for first-order classical logic"};
  app.require_subcommand(1);
  app.add_flag("--json", asJson, "print JSON");
  std::string t1, a1, t2, a2, file;

  auto* typecheckCmd = app.add_subcommand("typecheck", "elaborate a closed term against a type");
  typecheckCmd->add_option("term", t1)->required();
  typecheckCmd->add_option("type", a1)->required();

  bool trace = false;
  auto* canonCmd = app.add_subcommand("canon", "canonical form of a type");
  canonCmd->add_option("type", a1)->required();
  canonCmd->add_flag("--trace", trace, "list every rewrite step");

  auto* cnfCmd = app.add_subcommand("cnf", "canonical normal form of a closed term");
  cnfCmd->add_option("term", t1)->required();
  cnfCmd->add_option("type", a1)->required();

  auto* arenaCmd = app.add_subcommand("arena", "arena of a type");
  arenaCmd->add_option("type", a1)->required();

  auto* isoCmd = app.add_subcommand("iso", "decide whether two types are isomorphic");
  isoCmd->add_option("left", a1)->required();
  isoCmd->add_option("right", a2)->required();

  auto* denoteCmd = app.add_subcommand("denote", "strategy of a closed term");
  denoteCmd->add_option("term", t1)->required();
  denoteCmd->add_option("type", a1)->required();

  auto* readbackCmd = app.add_subcommand("readback", "term of a strategy given as JSON");
  readbackCmd->add_option("strategy", file)->required();
  readbackCmd->add_option("type", a1)->required();

  auto* composeCmd = app.add_subcommand("compose", "compose f : A -> B with g : B -> C");
  composeCmd->add_option("f", t1)->required();
  composeCmd->add_option("ftype", a1)->required();
  composeCmd->add_option("g", t2)->required();
  composeCmd->add_option("gtype", a2)->required();

  auto* unfoldCmd = app.add_subcommand("unfold", "QA strategy of a propositional term");
  unfoldCmd->add_option("term", t1)->required();
  unfoldCmd->add_option("type", a1)->required();

  auto* foldCmd = app.add_subcommand("fold", "fold a QA strategy given as JSON");
  foldCmd->add_option("strategy", file)->required();

  auto* lambdaCmd = app.add_subcommand("tolambda", "translate a propositional term to the lambda-calculus");
  lambdaCmd->add_option("term", t1)->required();
  lambdaCmd->add_option("type", a1)->required();

  std::string choices;
  long fuel = 100000;
  auto* kamCmd = app.add_subcommand("kam", "abstract machine");
  kamCmd->require_subcommand(1);
  auto* kamRunCmd = kamCmd->add_subcommand("run", "run a term, or play it against Opponent choices");
  kamRunCmd->add_option("term", t1)->required();
  kamRunCmd->add_option("type", a1);
  kamRunCmd->add_option("--choices", choices, "Opponent choices, 1-based, separated by ;");
  kamRunCmd->add_option("--fuel", fuel);
  kamRunCmd->add_flag("--trace", trace, "print every machine state");

  auto* playCmd = app.add_subcommand("play", "plays");
  playCmd->require_subcommand(1);
  auto* playCheckCmd = playCmd->add_subcommand("check", "check a play given as JSON against the arena of a type");
  playCheckCmd->add_option("type", a1)->required();
  playCheckCmd->add_option("play", file)->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serveCmd = app.add_subcommand("serve", "HTTP session service");
  serveCmd->add_option("--port", port);
  serveCmd->add_option("--host", host);

  for (auto* c : app.get_subcommands({})) c->add_flag("--json", asJson, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*typecheckCmd) {
      Elaborated e = elaborateClosed(term(t1), formula(a1));
      emit({{"ok", true}, {"term", show(e.term)}}, show(e.term));
    } else if (*canonCmd) {
      CanonResult r = canonicalize(formula(a1));
      Json steps = Json::array();
      std::string text;
      for (auto& s : r.trace) {
        steps.push_back({{"rule", ruleName(s.rule)}, {"before", show(s.wholeBefore)}, {"after", show(s.wholeAfter)}});
        text += ruleName(s.rule) + ": " + show(s.before) + "  =>  " + show(s.after) + "\n";
      }
      Json j = {{"canonical", show(r.formula)}};
      if (trace) j["trace"] = steps;
      emit(j, (trace ? text : "") + show(r.formula));
    } else if (*cnfCmd) {
      NormalForm n = canonicalNormalForm(term(t1), formula(a1));
      emit({{"term", show(n.term)}, {"type", show(n.type)}}, show(n.term) + " : " + show(n.type));
    } else if (*arenaCmd) {
      Arena a = arenaOf(formula(a1));
      if (asJson) std::cout << toJson(a).dump(2) << '\n';
      else std::cout << a.show();
    } else if (*isoCmd) {
      Fm a = formula(a1), b = formula(a2);
      bool iso = typesIsomorphic(a, b);
      emit({{"isomorphic", iso}, {"left", show(canonicalize(a).formula)}, {"right", show(canonicalize(b).formula)}},
           iso ? "isomorphic" : "not isomorphic");
      return iso ? 0 : 1;
    } else if (*denoteCmd) {
      printStrategy(denote(term(t1), formula(a1)).strategy);
    } else if (*readbackCmd) {
      Tm m = readback(strategyFromJson(Json::parse(source(file))), formula(a1));
      emit({{"term", show(m)}}, show(m));
    } else if (*composeCmd) {
      Fm fa = formula(a1), ga = formula(a2);
      if (fa->kind != Formula::Imp || ga->kind != Formula::Imp) throw Error("both types must be implications");
      if (!alphaEq(fa->r, ga->l)) throw Error("the middle types differ");
      auto f = denote(term(t1), fa).strategy;
      auto g = denote(term(t2), ga).strategy;
      auto [j, s] = compose(jarena(std::vector<Fm>{fa->l}, fa->r, {}), f, jarena(std::vector<Fm>{ga->l}, ga->r, {}), g);
      Fm c = fImp(fa->l, ga->r);
      Tm m = readback(s, c);
      emit({{"term", show(m)}, {"type", show(c)}, {"strategy", toJson(s)}}, show(m) + " : " + show(c));
    } else if (*unfoldCmd) {
      Fm a = formula(a1);
      if (!isPropositional(a)) throw Error("the QA model covers propositional types only");
      printStrategy(unfoldStrategy(denote(term(t1), a).strategy));
    } else if (*foldCmd) {
      printStrategy(foldStrategy(strategyFromJson(Json::parse(source(file)))));
    } else if (*lambdaCmd) {
      LambdaTranslation l = toLambda(term(t1), formula(a1));
      emit({{"term", show(l.term)}, {"type", show(l.type)}}, show(l.term) + " : " + show(l.type));
    } else if (*kamRunCmd) {
      if (a1.empty()) {
        KamRun r = kamRun(KamState{term(t1), {}}, fuel, trace);
        Json states = Json::array();
        std::string text;
        for (auto& s : r.trace) {
          states.push_back(showPlain(s));
          text += showPlain(s) + "\n";
        }
        emit({{"stopped", r.stopped}, {"steps", r.steps}, {"state", showPlain(r.last)}, {"trace", states}},
             text + (r.stopped ? showPlain(r.last) : "out of fuel after " + std::to_string(r.steps) + " steps"));
        return r.stopped ? 0 : 1;
      }
      NormalForm n = canonicalNormalForm(term(t1), formula(a1));
      KamGame g(n.term, n.type, fuel);
      Json rounds = Json::array();
      std::string text;
      std::stringstream cs(choices);
      for (std::string c; std::getline(cs, c, ';');) {
        if (c.empty()) continue;
        int k = std::stoi(c);
        if (k < 1 || k > g.choices()) throw Error("no choice " + c);
        size_t from = g.trace().size();
        const Move& p = g.opponent(k);
        Json states = Json::array();
        for (size_t i = trace ? from : g.trace().size(); i < g.trace().size(); ++i) {
          states.push_back(showPlain(g.trace()[i]));
          text += "  " + showPlain(g.trace()[i]) + "\n";
        }
        rounds.push_back({{"player", toJson(p)}, {"position", toJson(g.position())}, {"trace", states}});
        text += showMove(p) + "   " + show(g.position()) + "\n";
      }
      emit({{"play", toJson(g.view())}, {"rounds", rounds}, {"finished", g.finished()}},
           text + showSeq(g.view()) + (g.finished() ? "\nfinished" : ""));
    } else if (*playCheckCmd) {
      Arena a = arenaOf(formula(a1));
      PlayCheck c = checkPlay(a, playFromJson(Json::parse(source(file)), a));
      std::string text = verdictName(c.verdict);
      if (c.index >= 0) text += " at move " + std::to_string(c.index);
      if (!c.reason.empty()) text += ": " + c.reason;
      emit(toJson(c), text);
      return c.verdict == Verdict::Play ? 0 : 1;
    } else if (*serveCmd) {
      SessionStore store;
      httplib::Server srv;
      mountRoutes(srv, store);
      std::cerr << "listening on " << host << ":" << port << '\n';
      if (!srv.listen(host, port)) throw Error("cannot listen on " + host + ":" + std::to_string(port));
    }
  } catch (const std::exception& e) {
    if (asJson) std::cout << Json{{"error", e.what()}}.dump(2) << '\n';
    else std::cerr << "gsem: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
