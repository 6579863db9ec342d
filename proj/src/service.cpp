#include "gamesem/service.hpp"

#include "gamesem/denote.hpp"
#include "gamesem/normal.hpp"
#include "gamesem/qa.hpp"

namespace gs {

struct Session {
  std::mutex mu;
  std::string id, mode, status = "open";
  Tm term;
  Fm type;
  Strategy strategy;  // arena and qa
  std::optional<KamGame> game;
  Seq play;
  Json transcript = Json::array();
};

namespace {


Json legalMoves(const Session& s) {
  Json r = Json::array();
  if (s.mode == "uva") {
    if (s.game)
      for (int j = 1; j <= s.game->choices(); ++j) r.push_back(j);
    return r;
  }
  for (auto& m : legalOpponentMoves(s.strategy.arena, s.play)) r.push_back(toJson(m));
  return r;
}

Json state(const Session& s) {
  Json r = {{"id", s.id}, {"mode", s.mode}, {"term", show(s.term)}, {"type", show(s.type)}, {"status", s.status},
            {"transcript", s.transcript}};
  if (s.mode == "uva") {
    r["arena"] = s.game ? toJson(s.game->arena()) : toJson(Arena{});
    r["play"] = s.game ? toJson(s.game->view()) : toJson(Seq{});
    r["position"] = s.game ? toJson(s.game->position()) : toJson(uvaInitial(s.type));
  } else {
    r["arena"] = toJson(s.strategy.arena);
    r["play"] = toJson(s.play);
  }
  r["legal"] = s.status == "open" ? legalMoves(s) : Json::array();
  return r;
}

void refreshStatus(Session& s) {
  if (s.status != "open") return;
  bool none = s.mode == "uva" ? !s.game || s.game->choices() == 0 : legalOpponentMoves(s.strategy.arena, s.play).empty();
  if (none) s.status = "finished";
}

template <class F>
auto badRequest(F&& f) {
  try {
    return f();
  } catch (const HttpError&) {
    throw;
  } catch (const std::exception& e) {
    throw HttpError(400, e.what());
  }
}

}  // namespace

Json SessionStore::create(const Json& req) {
  auto s = std::make_shared<Session>();
  s->mode = req.value("mode", "arena");
  if (s->mode != "arena" && s->mode != "qa" && s->mode != "uva") throw HttpError(400, "unknown mode " + s->mode);
  badRequest([&] {
    if (!req.contains("term") || !req.contains("type")) throw Error("term and type are required");
    Fm a = parseFormula(req.at("type").get<std::string>());
    Tm m = parseTerm(req.at("term").get<std::string>());
    if (s->mode == "uva") {
      NormalForm n = canonicalNormalForm(m, a);
      s->term = n.term;
      s->type = n.type;
      if (!isArrowCanonical(n.type) && !conjuncts(n.type).empty()) throw Error("the machine plays on implicational types only");
      if (!conjuncts(n.type).empty()) s->game.emplace(n.term, n.type);
    } else {
      s->term = elaborateClosed(m, a).term;
      s->type = a;
      s->strategy = denote(s->term, a).strategy;
      if (s->mode == "qa") {
        if (!isPropositional(a)) throw Error("the QA model covers propositional types only");
        s->strategy = grStrategy(unfoldStrategy(s->strategy));
      }
    }
    return 0;
  });
  refreshStatus(*s);
  std::lock_guard<std::mutex> g(mu_);
  s->id = "s" + std::to_string(next_++);
  order_.push_front(s->id);
  sessions_[s->id] = {s, order_.begin()};
  while (sessions_.size() > capacity_) {
    sessions_.erase(order_.back());
    order_.pop_back();
  }
  std::lock_guard<std::mutex> sg(s->mu);
  return state(*s);
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
  std::lock_guard<std::mutex> g(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw HttpError(404, "no session " + id);
  order_.splice(order_.begin(), order_, it->second.second);
  return it->second.first;
}

Json SessionStore::get(const std::string& id) {
  auto s = find(id);
  std::lock_guard<std::mutex> g(s->mu);
  return state(*s);
}

size_t SessionStore::size() {
  std::lock_guard<std::mutex> g(mu_);
  return sessions_.size();
}

Json SessionStore::move(const std::string& id, const Json& req) {
  auto s = find(id);
  std::lock_guard<std::mutex> g(s->mu);
  if (s->status != "open") throw HttpError(409, "session is " + s->status);
  Json entry;
  if (s->mode == "uva") {
    int j = badRequest([&] { return req.at("choice").get<int>(); });
    if (j < 1 || j > s->game->choices()) throw HttpError(400, "no choice " + std::to_string(j));
    std::optional<std::vector<FoTerm>> ts;
    if (req.contains("terms"))
      ts = badRequest([&] {
        std::vector<FoTerm> r;
        for (auto& t : req["terms"]) r.push_back(parseFoTerm(t.get<std::string>()));
        return r;
      });
    size_t before = s->game->view().size();
    const Move& reply = badRequest([&]() -> const Move& { return s->game->opponent(j, ts); });
    entry = {{"opponent", toJson(s->game->view()[before])}, {"reply", toJson(reply)},
             {"position", toJson(s->game->position())}, {"head", showPlain(s->game->trace().back())}};
  } else {
    Move o = badRequest([&] { return moveFromJson(req, s->strategy.arena); });
    Seq next = s->play;
    next.push_back(o);
    PlayCheck c = checkPlay(s->strategy.arena, next);
    if (c.verdict != Verdict::Play) {
      HttpError e(400, c.reason.empty() ? verdictName(c.verdict) : c.reason);
      throw e;
    }
    s->play = next;
    auto r = respond(s->strategy, s->play);
    entry = {{"opponent", toJson(o)}, {"reply", r ? toJson(*r) : Json(nullptr)}};
    if (r) s->play.push_back(*r);
    else s->status = "dead-end";
  }
  s->transcript.push_back(entry);
  refreshStatus(*s);
  return state(*s);
}

void mountRoutes(httplib::Server& srv, SessionStore& store) {
  auto guard = [](httplib::Response& res, auto&& f) {
    try {
      Json r = f();
      res.set_content(r.dump(), "application/json");
    } catch (const HttpError& e) {
      res.status = e.status;
      res.set_content(Json{{"error", e.what()}}.dump(), "application/json");
    } catch (const Json::exception& e) {
      res.status = 400;
      res.set_content(Json{{"error", e.what()}}.dump(), "application/json");
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(Json{{"error", e.what()}}.dump(), "application/json");
    }
  };
  srv.Post("/sessions", [&store, guard](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] {
      Json r = store.create(Json::parse(req.body));
      res.status = 201;
      return r;
    });
  });
  srv.Post(R"(/sessions/([^/]+)/moves)", [&store, guard](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] { return store.move(req.matches[1], Json::parse(req.body)); });
  });
  srv.Get(R"(/sessions/([^/]+))", [&store, guard](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] { return store.get(req.matches[1]); });
  });
}

}  // namespace gs
