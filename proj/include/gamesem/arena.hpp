#pragma once

#include <optional>

#include "gamesem/syntax.hpp"

namespace gs {

struct Tree {
  std::vector<FoVar> fo;
  std::vector<Fm> at;  // atoms only; ⊥ contributes nothing
  std::vector<Tree> kids;
};
using Forest = std::vector<Tree>;

Forest forestOf(const Fm& a);
Forest sum(const Forest& a, const Forest& b);
Forest graft(const Forest& a, const Forest& b);  // a → b
Forest quantify(const FoVar& x, const Forest& a);
Forest product(const Forest& a, const Forest& b);
Forest unitForest();  // a single unlabelled node, the unit of product

struct Node {
  int parent = -1;
  int depth = 0;
  std::vector<int> kids;
  std::vector<FoVar> fo;
  std::vector<Fm> at;
};

// Nodes are numbered in preorder.
struct Arena {
  std::vector<Node> nodes;
  std::vector<int> roots;

  int size() const { return static_cast<int>(nodes.size()); }
  const Node& operator[](int i) const { return nodes[static_cast<size_t>(i)]; }
  bool isO(int i) const { return (*this)[i].depth % 2 == 0; }
  // Position among the parent's children, or among the roots.
  int childIndex(int i) const;
  const std::vector<int>& siblingsOf(int parent) const { return parent < 0 ? roots : (*this)[parent].kids; }
  // fo-variables of the node and of all its ancestors, outermost first
  std::vector<FoVar> scope(int i) const;
  std::string show() const;
};

Arena flatten(const Forest& f);
// Renames repeated first-order label entries so all are distinct.
Forest uniquify(const Forest& f);
Arena arenaOf(const Fm& a);
Arena gr(const Arena& a);
bool sameShape(const Arena& a, const Arena& b);
bool identical(const Arena& a, const Arena& b);  // same shape and labels up to A-variable names

// Node map from a to b.
std::optional<std::vector<int>> findArenaIso(const Arena& a, const Arena& b);
bool typesIsomorphic(const Fm& a, const Fm& b);

// ΣΓ → (T × ΠΔ) with provenance of every node.
struct JArena {
  struct Prov {
    int root = -1;
    int comp = -1;  // Γ_i → i, T → n, D_j → n+1+j; -1 for roots
    int compNode = -1;
  };
  Arena arena;
  int n = 0;
  std::vector<Fm> gamma, delta;
  Fm target;
  std::vector<Arena> comps;
  std::vector<Prov> prov;
  std::vector<std::vector<int>> rootTuple;                    // per root: [t, d_1, ..., d_m]
  std::vector<std::vector<std::vector<int>>> index;  // [root][comp][compNode] → node, -1 if absent

  int m() const { return static_cast<int>(comps.size()) - n - 1; }
  int rootOf(const std::vector<int>& tuple) const;  // -1 if absent
  int compT() const { return n; }
  int compD(int j) const { return n + 1 + j; }
  int node(int root, int comp, int compNode) const;
  // Offsets of the T part and of each D_j part inside the labels of a root.
  int foOffset(int root, int part) const;  // part 0 = T, part j+1 = D_j
  int atOffset(int root, int part) const;
};

JArena jarena(const std::vector<Fm>& gamma, const Fm& target, const std::vector<Fm>& delta);
// Formula fields stay empty.
JArena jarena(const std::vector<Arena>& gamma, const Arena& target, const std::vector<Arena>& delta);
// Renames every first-order label entry to a fresh A-variable.
Arena freshenArena(const Arena& a);

}  // namespace gs
