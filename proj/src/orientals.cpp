#include "facterm/orientals.hpp"

#include <algorithm>
#include <functional>

namespace facterm {

namespace {

FaceSet boundary_parity(const Face& u, int parity) {
  FaceSet out;
  int d = static_cast<int>(u.size()) - 1;
  for (int i = 0; i <= d; ++i) {
    if (i % 2 != parity) continue;
    Face f = u;
    f.erase(f.begin() + i);
    if (!f.empty()) out.insert(std::move(f));
  }
  return out;
}

FaceSet set_union(const FaceSet& a, const FaceSet& b) {
  FaceSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

FaceSet set_minus(const FaceSet& a, const FaceSet& b) {
  FaceSet out;
  for (const auto& f : a)
    if (!b.count(f)) out.insert(f);
  return out;
}

FaceSet set_intersect(const FaceSet& a, const FaceSet& b) {
  FaceSet out;
  for (const auto& f : a)
    if (b.count(f)) out.insert(f);
  return out;
}

}  // namespace

FaceSet boundary_minus(const Face& u) {
  int d = static_cast<int>(u.size()) - 1;
  return boundary_parity(u, d % 2);
}

FaceSet boundary_plus(const Face& u) {
  int d = static_cast<int>(u.size()) - 1;
  return boundary_parity(u, 1 - d % 2);
}

FaceSet boundary_minus(const FaceSet& s) {
  FaceSet out;
  for (const auto& u : s) {
    auto b = boundary_minus(u);
    out.insert(b.begin(), b.end());
  }
  return out;
}

FaceSet boundary_plus(const FaceSet& s) {
  FaceSet out;
  for (const auto& u : s) {
    auto b = boundary_plus(u);
    out.insert(b.begin(), b.end());
  }
  return out;
}

int OrCell::genuine_top() const {
  for (int i = dim(); i >= 0; --i)
    if (!levels[static_cast<size_t>(i)].minus.empty() || !levels[static_cast<size_t>(i)].plus.empty()) return i;
  return 0;
}

bool OrCell::is_degenerate() const {
  return dim() >= 1 && levels.back().minus.empty() && levels.back().plus.empty();
}

namespace {

bool faces_ok(const FaceSet& s, int level, int n) {
  for (const auto& f : s) {
    if (static_cast<int>(f.size()) != level + 1) return false;
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
    if (f.front() < 0 || f.back() > n) return false;
  }
  return true;
}

// no face is an odd (resp. even) boundary face of two distinct members
bool boundaries_disjoint(const FaceSet& s) {
  FaceSet seen_minus, seen_plus;
  for (const auto& u : s) {
    for (const auto& f : boundary_minus(u))
      if (!seen_minus.insert(f).second) return false;
    for (const auto& f : boundary_plus(u))
      if (!seen_plus.insert(f).second) return false;
  }
  return true;
}

}  // namespace

std::optional<CellViolation> validate_cell(const OrCell& c) {
  if (c.n < 0 || c.levels.empty()) return CellViolation{"cell must have a level 0"};
  for (int i = 0; i <= c.dim(); ++i) {
    const auto& lv = c.levels[static_cast<size_t>(i)];
    if (!faces_ok(lv.minus, i, c.n) || !faces_ok(lv.plus, i, c.n))
      return CellViolation{"level holds a face of the wrong shape", i};
  }
  int top = c.genuine_top();
  for (int i = top + 1; i <= c.dim(); ++i) {
    const auto& lv = c.levels[static_cast<size_t>(i)];
    if (!lv.minus.empty() || !lv.plus.empty())
      return CellViolation{"content above an empty level", i};
  }
  if (c.levels[0].minus.size() != 1 || c.levels[0].plus.size() != 1)
    return CellViolation{"level 0 halves must be singletons", 0};
  const auto& top_lv = c.levels[static_cast<size_t>(top)];
  if (top_lv.minus != top_lv.plus) return CellViolation{"top level halves differ", top};

  for (int i = 0; i < top; ++i) {
    const auto& lo = c.levels[static_cast<size_t>(i)];
    const auto& hi = c.levels[static_cast<size_t>(i + 1)];
    for (const FaceSet* half : {&hi.minus, &hi.plus}) {
      if (!boundaries_disjoint(*half)) return CellViolation{"two members share a boundary face of one sign", i + 1};
      FaceSet bm = boundary_minus(*half);
      FaceSet bp = boundary_plus(*half);
      FaceSet interior = set_intersect(bm, bp);
      if (set_minus(bm, interior) != lo.minus) return CellViolation{"source boundary mismatch", i + 1};
      if (set_minus(bp, interior) != lo.plus) return CellViolation{"target boundary mismatch", i + 1};
    }
  }
  return std::nullopt;
}

OrCell boundary(const OrCell& c, int p, char sign) {
  if (p < 0 || p > c.dim()) fail(ErrorKind::Range, "boundary: level " + std::to_string(p) + " out of range");
  if (sign != '+' && sign != '-') fail(ErrorKind::Input, "boundary: sign must be '+' or '-'");
  OrCell out;
  out.n = c.n;
  out.levels.assign(c.levels.begin(), c.levels.begin() + p + 1);
  const FaceSet& half = sign == '-' ? c.levels[static_cast<size_t>(p)].minus : c.levels[static_cast<size_t>(p)].plus;
  out.levels[static_cast<size_t>(p)] = {half, half};
  return out;
}

OrCell compose_cells(const OrCell& y, const OrCell& x, int p) {
  if (x.n != y.n) fail(ErrorKind::Composition, "compose_cells: different ambient simplexes");
  if (x.dim() != y.dim()) fail(ErrorKind::Composition, "compose_cells: dimensions differ");
  if (p < 0 || p >= x.dim()) fail(ErrorKind::Range, "compose_cells: level out of range");
  if (!(boundary(x, p, '+') == boundary(y, p, '-')))
    fail(ErrorKind::Composition, "compose_cells: boundaries do not match at level " + std::to_string(p));
  OrCell out;
  out.n = x.n;
  out.levels = x.levels;
  out.levels[static_cast<size_t>(p)] = {x.levels[static_cast<size_t>(p)].minus, y.levels[static_cast<size_t>(p)].plus};
  for (int q = p + 1; q <= x.dim(); ++q) {
    out.levels[static_cast<size_t>(q)].minus =
        set_union(x.levels[static_cast<size_t>(q)].minus, y.levels[static_cast<size_t>(q)].minus);
    out.levels[static_cast<size_t>(q)].plus =
        set_union(x.levels[static_cast<size_t>(q)].plus, y.levels[static_cast<size_t>(q)].plus);
  }
  if (auto bad = validate_cell(out))
    fail(ErrorKind::Composition, "compose_cells: result invalid: " + bad->what);
  return out;
}

OrCell identity_raise(const OrCell& c, int dim) {
  if (dim < c.dim()) fail(ErrorKind::Range, "identity_raise: target dimension below the cell");
  if (c.levels.back().minus != c.levels.back().plus)
    fail(ErrorKind::Input, "identity_raise: top halves must agree");
  OrCell out = c;
  out.levels.resize(static_cast<size_t>(dim) + 1);
  return out;
}

std::vector<OrCell> enumerate_cells(int n, int k) {
  if (n < 0 || n > 3) fail(ErrorKind::Resource, "enumerate_cells: ambient bound is 3");
  if (k < 0 || k > n) fail(ErrorKind::Range, "enumerate_cells: dimension must be within the ambient simplex");

  // all faces per dimension
  std::vector<std::vector<Face>> faces(static_cast<size_t>(n) + 1);
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    Face f;
    for (int v = 0; v <= n; ++v)
      if (mask & (1 << v)) f.push_back(v);
    faces[f.size() - 1].push_back(f);
  }

  // genuine cells of exact dimension d, found by choosing a top set and
  // deriving the tower of boundaries downward
  std::function<std::vector<OrCell>(int)> genuine = [&](int d) {
    std::vector<OrCell> out;
    if (d == 0) {
      for (const auto& f : faces[0]) {
        OrCell c;
        c.n = n;
        c.levels.push_back({{f}, {f}});
        out.push_back(std::move(c));
      }
      return out;
    }
    const auto& top_faces = faces[static_cast<size_t>(d)];
    const int count = static_cast<int>(top_faces.size());
    for (int mask = 1; mask < (1 << count); ++mask) {
      FaceSet top;
      for (int t = 0; t < count; ++t)
        if (mask & (1 << t)) top.insert(top_faces[static_cast<size_t>(t)]);
      OrCell c;
      c.n = n;
      c.levels.assign(static_cast<size_t>(d) + 1, {});
      c.levels[static_cast<size_t>(d)] = {top, top};
      bool ok = true;
      for (int i = d; i > 0 && ok; --i) {
        const auto& hi = c.levels[static_cast<size_t>(i)];
        FaceSet bm = boundary_minus(hi.minus);
        FaceSet bp = boundary_plus(hi.minus);
        FaceSet interior = set_intersect(bm, bp);
        FaceSet lo_minus = set_minus(bm, interior);
        FaceSet lo_plus = set_minus(bp, interior);
        // the plus half must produce the same boundary
        FaceSet bm2 = boundary_minus(hi.plus);
        FaceSet bp2 = boundary_plus(hi.plus);
        FaceSet interior2 = set_intersect(bm2, bp2);
        if (set_minus(bm2, interior2) != lo_minus || set_minus(bp2, interior2) != lo_plus) {
          ok = false;
          break;
        }
        c.levels[static_cast<size_t>(i - 1)] = {lo_minus, lo_plus};
      }
      if (!ok) continue;
      if (!validate_cell(c)) out.push_back(std::move(c));
    }
    return out;
  };

  std::vector<OrCell> out;
  for (int d = 0; d <= k; ++d)
    for (auto& c : genuine(d)) out.push_back(identity_raise(c, k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace facterm
