#pragma once

#include "bgeom/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bgeom {

// Nefness, pseudoeffectivity and volumes here are relative to the tracked
// curves of the lattice. They agree with the true notions whenever the tracked
// curves generate the effective cone.

struct NefCheck {
  bool nef = true;
  std::vector<std::pair<std::string, Rational>> violations;  // curve, D·C < 0
};

NefCheck is_nef_tracked(const Lattice& lattice, const DivisorClass& d);

struct ZariskiDecomposition {
  DivisorClass positive;
  DivisorClass negative;
  /// Curves carrying N, in lattice order, with their (positive) coefficients.
  std::vector<std::string> support;
  std::vector<Rational> coefficients;
};

/// Fujita-style iteration: grow the support by every curve meeting the current
/// positive part negatively until none remain. Throws NotPseudoeffective when
/// the accumulated support is not negative definite or N turns negative.
ZariskiDecomposition zariski(const Lattice& lattice, const DivisorClass& d);

/// P² of the positive part; 0 for non-big or non-pseudoeffective input.
Rational volume(const Lattice& lattice, const DivisorClass& d);

inline bool is_big(const Lattice& lattice, const DivisorClass& d) { return volume(lattice, d) > 0; }

}  // namespace bgeom
