#pragma once

#include <list>
#include <memory>
#include <mutex>

#include <httplib.h>

#include "gamesem/io.hpp"

namespace gs {

struct HttpError : Error {
  int status;
  HttpError(int s, const std::string& msg) : Error(msg), status(s) {}
};

// Player is played by the denotation ("arena"), by its QA unfolding with labels erased
// ("qa"), or by the abstract machine with the formula position alongside ("uva").
struct Session;

class SessionStore {
 public:
  explicit SessionStore(size_t capacity = 1024) : capacity_(capacity) {}

  // {term, type, mode?}; returns the new session's state.
  Json create(const Json& req);
  // A move for "arena" and "qa"; {choice, terms?} for "uva".
  Json move(const std::string& id, const Json& req);
  Json get(const std::string& id);
  size_t size();

 private:
  std::shared_ptr<Session> find(const std::string& id);

  size_t capacity_;
  std::mutex mu_;
  long next_ = 1;
  std::list<std::string> order_;  // most recently used first
  std::map<std::string, std::pair<std::shared_ptr<Session>, std::list<std::string>::iterator>> sessions_;
};

void mountRoutes(httplib::Server& srv, SessionStore& store);

}  // namespace gs
