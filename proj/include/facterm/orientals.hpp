#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "facterm/error.hpp"

namespace facterm {

// A face of the standard simplex on vertices {0..n}: a nonempty strictly
// increasing vertex list.  dim = size - 1.
using Face = std::vector<int>;
using FaceSet = std::set<Face>;

// Odd/even boundary halves with the orientation convention that the source
// half of a d-face consists of the vertices deleted at positions congruent
// to d mod 2.  For an edge {a,b} the source is {a}; for a triangle {a,b,c}
// the source pair is {ab, bc} and the target is {ac}.
FaceSet boundary_minus(const Face& u);
FaceSet boundary_plus(const Face& u);
FaceSet boundary_minus(const FaceSet& s);
FaceSet boundary_plus(const FaceSet& s);

// A pasting cell: per level i, the set of i-faces forming the i-source
// (minus) and i-target (plus).  Levels above the genuine top are empty,
// which encodes iterated identities; a genuine top has equal halves.
struct OrCell {
  int n = 0;  // ambient simplex
  struct Level {
    FaceSet minus, plus;
    friend bool operator==(const Level&, const Level&) = default;
    friend auto operator<=>(const Level&, const Level&) = default;
  };
  std::vector<Level> levels;  // size = dim + 1

  int dim() const { return static_cast<int>(levels.size()) - 1; }
  // highest level with content, or 0
  int genuine_top() const;
  bool is_degenerate() const;

  friend bool operator==(const OrCell&, const OrCell&) = default;
  friend auto operator<=>(const OrCell&, const OrCell&) = default;
};

struct CellViolation {
  std::string what;
  int level = -1;
};

std::optional<CellViolation> validate_cell(const OrCell& c);

OrCell boundary(const OrCell& c, int p, char sign);  // sign '+' or '-'
OrCell compose_cells(const OrCell& y, const OrCell& x, int p);
OrCell identity_raise(const OrCell& c, int dim);

std::vector<OrCell> enumerate_cells(int n, int k);

}  // namespace facterm
