#pragma once

#include <optional>
#include <random>

#include "gamesem/syntax.hpp"

namespace gs {

struct FormulaGenOptions {
  int maxSize = 30;
  int atoms = 3;           // relation symbols X, Y, Z, ...
  bool firstOrder = true;  // allow ∀ and unary atoms
  bool allowTop = true;
  bool allowAnd = true;
};

// Random formula with exactly `size` constructors.
Fm randomFormula(std::mt19937_64& rng, int size, const FormulaGenOptions& opt = {});

}  // namespace gs

namespace gs {

// Random arrow-canonical formula (∀x⃗(Q⃗ → R)) built from a random formula of the given size.
Fm randomArrowType(std::mt19937_64& rng, int size, const FormulaGenOptions& opt = {});

struct TermGenOptions {
  int maxDepth = 3;
  // Every Player move copies the labels of the preceding Opponent move and μ-points to it.
  bool muRigid = false;
};

// Random closed canonical normal form of the arrow-canonical type q; none when the search fails.
std::optional<Tm> randomNormalTerm(std::mt19937_64& rng, const Fm& q, const TermGenOptions& opt = {});

}  // namespace gs
