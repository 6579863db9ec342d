#include "gamesem/corpus.hpp"

#include <fstream>
#include <sstream>

#include "gamesem/normal.hpp"

namespace gs {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::vector<CorpusEntry> parseCorpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = trim(stripComments(line));
    if (line.empty()) continue;
    size_t p1 = line.find('|');
    size_t p2 = p1 == std::string::npos ? p1 : line.find('|', p1 + 1);
    if (p2 == std::string::npos) throw Error("corpus line " + std::to_string(lineNo) + ": expected name | term | type");
    out.push_back({trim(line.substr(0, p1)), parseTerm(line.substr(p1 + 1, p2 - p1 - 1)), parseFormula(line.substr(p2 + 1))});
  }
  return out;
}

std::vector<CorpusEntry> loadCorpus(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parseCorpus(ss.str());
}

std::vector<CorpusEntry> standardCorpus(const std::string& dir) {
  std::vector<CorpusEntry> out = loadCorpus(dir + "/terms.txt");
  for (auto& e : isoEquations()) {
    out.push_back({"iso-" + e.name + "-fwd", e.forward, fImp(e.lhs, e.rhs)});
    out.push_back({"iso-" + e.name + "-bwd", e.backward, fImp(e.rhs, e.lhs)});
  }
  return out;
}

}  // namespace gs
