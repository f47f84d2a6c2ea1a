#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facterm/fstring.hpp"

namespace facterm {

// A morphism between grid regions, stored as the pair of monotone maps it
// induces on horizontal and vertical coordinates.  `a` has size n+1 and maps
// into {0..n'}, `b` has size m+1 and maps into {0..m'}; the containment
// condition min_y(target, a[x]) <= b[min_y(source, x)] guarantees that
// (x,y) |-> (a[x], b[y]) sends the source region into the target region.
struct FMorphism {
  FString source;
  FString target;
  std::vector<int> a;
  std::vector<int> b;

  static FMorphism make(FString source, FString target, std::vector<int> a, std::vector<int> b);
  static FMorphism identity(const FString& s);

  GridPoint apply(GridPoint p) const;

  friend bool operator==(const FMorphism&, const FMorphism&) = default;
  friend auto operator<=>(const FMorphism&, const FMorphism&) = default;
};

FMorphism compose(const FMorphism& g, const FMorphism& f);

// Generator tokens.  Degeneracies SH/SV use coordinate indices 0..n-1
// (sigma_i collapses coordinates i,i+1 and deletes the (i+1)-th h).  Faces
// DH/DV use coordinate indices 0..n+1: index 0 prepends a step, n+1 appends
// one, and an interior index i splits the i-th step in two.  GAMMA carries a
// pair (j,i), 1-based: the j-th v must be immediately followed by the i-th h,
// and the move swaps them.
enum class GenKind { SH, SV, DH, DV, GAMMA };

struct GeneratorToken {
  GenKind kind = GenKind::SH;
  int index = 0;  // sigma/delta index
  int j = 0;      // gamma: vertical index
  int i = 0;      // gamma: horizontal index

  static GeneratorToken sh(int i) { return {GenKind::SH, i, 0, 0}; }
  static GeneratorToken sv(int j) { return {GenKind::SV, j, 0, 0}; }
  static GeneratorToken dh(int i) { return {GenKind::DH, i, 0, 0}; }
  static GeneratorToken dv(int j) { return {GenKind::DV, j, 0, 0}; }
  static GeneratorToken gamma(int j, int i) { return {GenKind::GAMMA, 0, j, i}; }

  friend bool operator==(const GeneratorToken&, const GeneratorToken&) = default;
  friend auto operator<=>(const GeneratorToken&, const GeneratorToken&) = default;
};

std::string token_str(const GeneratorToken& tok);

struct ClassFlags {
  bool active = false;
  bool inert = false;
  bool inclusion = false;
  bool permutation = false;
  bool covering = false;
  bool ap = false;

  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

FMorphism generator(const GeneratorToken& tok, const FString& s);
bool generator_applicable(const GeneratorToken& tok, const FString& s, std::string* why = nullptr);

FMorphism from_word(const std::vector<GeneratorToken>& word, const FString& s);

// Grouped normal form: degeneracies (v then h), interior faces (v then h),
// boundary faces, swaps.  from_word(canonical_word(f), f.source) == f.
std::vector<GeneratorToken> canonical_word(const FMorphism& f);

ClassFlags classify(const FMorphism& f);

std::pair<FMorphism, FMorphism> factor_active_inert(const FMorphism& f);           // f = inert . active
std::pair<FMorphism, FMorphism> factor_covering_inclusion(const FMorphism& f);     // f = inclusion . covering

std::vector<FMorphism> enumerate_morphisms(const FString& s, const FString& t);

// Simplicial embeddings: the h (resp. v) direction sends [k] to h^k (resp.
// v^k); the t direction sends [k] to (vh)^k.  Operators return the generator
// word realizing the image morphism, to be applied to embed_object(kind, k).
enum class SimpOp { Face, Degeneracy };
FString embed_object(char kind, int k);
std::vector<GeneratorToken> embed_operator(char kind, SimpOp op, int index, int k);

}  // namespace facterm
