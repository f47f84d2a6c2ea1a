#include "facterm/sdelta.hpp"

#include <algorithm>
#include <map>

namespace facterm {

bool SqSimplex::degenerate() const {
  for (size_t k = 0; k + 1 < a.size(); ++k)
    if (a[k] == a[k + 1] && b[k] == b[k + 1]) return true;
  return false;
}

SqSimplex SqSimplex::face(int i) const {
  if (i < 0 || i > dim()) fail(ErrorKind::Range, "face index out of range");
  SqSimplex out = *this;
  out.a.erase(out.a.begin() + i);
  out.b.erase(out.b.begin() + i);
  return out;
}

SqSimplex SqSimplex::degeneracy(int j) const {
  if (j < 0 || j > dim()) fail(ErrorKind::Range, "degeneracy index out of range");
  SqSimplex out = *this;
  out.a.insert(out.a.begin() + j, a[static_cast<size_t>(j)]);
  out.b.insert(out.b.begin() + j, b[static_cast<size_t>(j)]);
  return out;
}

namespace {

void monotone_maps(int domtop, int codtop, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<size_t>(domtop) + 1, 0);
  for (;;) {
    out.push_back(cur);
    int k = domtop;
    while (k >= 0 && cur[static_cast<size_t>(k)] == codtop) --k;
    if (k < 0) return;
    int nv = cur[static_cast<size_t>(k)] + 1;
    for (int t = k; t <= domtop; ++t) cur[static_cast<size_t>(t)] = nv;
  }
}

}  // namespace

std::vector<SqSimplex> simplices(const FString& s, int m) {
  if (m < 0) fail(ErrorKind::Range, "simplices: negative dimension");
  std::vector<std::vector<int>> amaps, bmaps;
  monotone_maps(m, s.n(), amaps);
  monotone_maps(m, s.m(), bmaps);
  std::vector<SqSimplex> out;
  for (const auto& a : amaps)
    for (const auto& b : bmaps)
      if (s.contains({a.back(), b.front()})) out.push_back(SqSimplex{a, b});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SqSimplex> nondegenerate_simplices(const FString& s, int m) {
  auto all = simplices(s, m);
  std::vector<SqSimplex> out;
  for (auto& sim : all)
    if (!sim.degenerate()) out.push_back(std::move(sim));
  return out;
}

std::vector<std::vector<BigInt>> boundary_matrix(const FString& s, int m) {
  if (m < 1) fail(ErrorKind::Range, "boundary_matrix: dimension must be positive");
  auto rows = nondegenerate_simplices(s, m - 1);
  auto cols = nondegenerate_simplices(s, m);
  std::map<SqSimplex, int> row_idx;
  for (size_t r = 0; r < rows.size(); ++r) row_idx[rows[r]] = static_cast<int>(r);
  std::vector<std::vector<BigInt>> mat(rows.size(), std::vector<BigInt>(cols.size(), 0));
  for (size_t c = 0; c < cols.size(); ++c) {
    for (int i = 0; i <= m; ++i) {
      SqSimplex f = cols[c].face(i);
      if (f.degenerate()) continue;
      mat[static_cast<size_t>(row_idx.at(f))][c] += (i % 2 == 0) ? 1 : -1;
    }
  }
  return mat;
}

std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> mat) {
  const size_t rows = mat.size();
  const size_t cols = rows ? mat[0].size() : 0;
  std::vector<BigInt> diag;
  size_t top = 0;
  while (top < rows && top < cols) {
    // locate a pivot of least absolute value
    size_t pr = top, pc = top;
    bool found = false;
    BigInt best = 0;
    for (size_t r = top; r < rows; ++r)
      for (size_t c = top; c < cols; ++c) {
        if (mat[r][c] == 0) continue;
        BigInt mag = abs(mat[r][c]);
        if (!found || mag < best) {
          best = mag;
          pr = r;
          pc = c;
          found = true;
        }
      }
    if (!found) break;
    std::swap(mat[top], mat[pr]);
    for (size_t r = 0; r < rows; ++r) std::swap(mat[r][top], mat[r][pc]);

    // reduce the pivot row and column until the pivot divides everything there
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t r = top + 1; r < rows; ++r) {
        if (mat[r][top] == 0) continue;
        BigInt q = mat[r][top] / mat[top][top];
        for (size_t c = top; c < cols; ++c) mat[r][c] -= q * mat[top][c];
        if (mat[r][top] != 0) {  // remainder: swap rows and continue reducing
          std::swap(mat[top], mat[r]);
          clean = false;
        }
      }
      for (size_t c = top + 1; c < cols; ++c) {
        if (mat[top][c] == 0) continue;
        BigInt q = mat[top][c] / mat[top][top];
        for (size_t r = top; r < rows; ++r) mat[r][c] -= q * mat[r][top];
        if (mat[top][c] != 0) {
          for (size_t r = 0; r < rows; ++r) std::swap(mat[r][top], mat[r][c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the remaining block for the invariant-factor chain
      for (size_t r = top + 1; r < rows && clean; ++r)
        for (size_t c = top + 1; c < cols && clean; ++c)
          if (mat[r][c] % mat[top][top] != 0) {
            for (size_t cc = top; cc < cols; ++cc) mat[top][cc] += mat[r][cc];
            clean = false;
          }
    }
    if (mat[top][top] < 0) mat[top][top] = -mat[top][top];
    diag.push_back(mat[top][top]);
    ++top;
  }
  return diag;
}

std::vector<HomologyGroup> homology(const FString& s) {
  const int topdim = s.n() + s.m();
  std::vector<long long> basis_size(static_cast<size_t>(topdim) + 2, 0);
  for (int k = 0; k <= topdim + 1; ++k)
    basis_size[static_cast<size_t>(k)] = static_cast<long long>(nondegenerate_simplices(s, k).size());

  std::vector<std::vector<BigInt>> diag(static_cast<size_t>(topdim) + 2);
  for (int k = 1; k <= topdim + 1; ++k) {
    if (basis_size[static_cast<size_t>(k)] == 0 || basis_size[static_cast<size_t>(k - 1)] == 0) continue;
    diag[static_cast<size_t>(k)] = smith_invariants(boundary_matrix(s, k));
  }

  std::vector<HomologyGroup> out;
  for (int k = 0; k <= topdim; ++k) {
    long long rank_in = static_cast<long long>(diag[static_cast<size_t>(k)].size());
    long long rank_out = static_cast<long long>(diag[static_cast<size_t>(k) + 1].size());
    HomologyGroup g;
    g.rank = basis_size[static_cast<size_t>(k)] - rank_in - rank_out;
    for (const BigInt& d : diag[static_cast<size_t>(k) + 1])
      if (d > 1) g.torsion.push_back(d);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace facterm
