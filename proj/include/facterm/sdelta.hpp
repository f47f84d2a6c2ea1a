#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "facterm/fstring.hpp"

namespace facterm {

using BigInt = boost::multiprecision::cpp_int;

// A square-shaped probe into the grid region: a pair of monotone maps
// (a, b) from {0..m}; the probe lands in the region iff its lower-right
// corner (a[m], b[0]) does.
struct SqSimplex {
  std::vector<int> a;
  std::vector<int> b;

  int dim() const { return static_cast<int>(a.size()) - 1; }
  bool degenerate() const;
  SqSimplex face(int i) const;
  SqSimplex degeneracy(int j) const;

  friend bool operator==(const SqSimplex&, const SqSimplex&) = default;
  friend auto operator<=>(const SqSimplex&, const SqSimplex&) = default;
};

std::vector<SqSimplex> simplices(const FString& s, int m);
std::vector<SqSimplex> nondegenerate_simplices(const FString& s, int m);

// Boundary of the normalized chain complex: rows are (m-1)-basis elements,
// columns m-basis elements, entries in {-1,0,1} before reduction.
std::vector<std::vector<BigInt>> boundary_matrix(const FString& s, int m);

struct HomologyGroup {
  long long rank = 0;
  std::vector<BigInt> torsion;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::vector<HomologyGroup> homology(const FString& s);

// Smith-style diagonalization: returns the nonzero diagonal entries
// (invariant factors, each dividing the next).
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> mat);

}  // namespace facterm
