#pragma once

#include <string>
#include <vector>

#include "gamesem/syntax.hpp"

namespace gs {

struct CorpusEntry {
  std::string name;
  Tm term;
  Fm type;
};

// Lines `name | term | type`; `#` starts a comment.
std::vector<CorpusEntry> parseCorpus(const std::string& text);
std::vector<CorpusEntry> loadCorpus(const std::string& path);
// The entries of terms.txt in dir followed by both witnesses of every isomorphism equation.
std::vector<CorpusEntry> standardCorpus(const std::string& dir);

}  // namespace gs
