#pragma once

#include <map>
#include <string>
#include <vector>

#include "facterm/fincat.hpp"
#include "facterm/fmor.hpp"

namespace facterm {

// A labeling of the staircase path of a word by morphisms of a category:
// h steps carry horizontal morphisms, v steps vertical ones, composable in
// order.  For the empty word the labeling is just the start object.
struct PathLabeling {
  int start_object = 0;
  std::vector<int> labels;
  friend bool operator==(const PathLabeling&, const PathLabeling&) = default;
  friend auto operator<=>(const PathLabeling&, const PathLabeling&) = default;
};

std::vector<PathLabeling> nerve_value(const FSCategory& f, const FString& s);

// Every edge of the grid region labeled compatibly; produced by propagating
// a path labeling across unit squares via unique factorization.
struct GridLabeling {
  std::map<GridPoint, int> object;
  std::map<GridPoint, int> hedge;  // (x,y) -> (x+1,y)
  std::map<GridPoint, int> vedge;  // (x,y) -> (x,y+1)
};

GridLabeling grid_fill(const FSCategory& f, const FString& s, const PathLabeling& lab);

PathLabeling restrict_labeling(const FSCategory& f, const FMorphism& mor, const PathLabeling& lab_on_target);

// A finite fragment of a model: set sizes per word up to a length bound and
// restriction tables along all generator moves inside the bound.
struct ModelTable {
  int bound = 6;
  std::map<std::string, int> sizes;
  std::map<std::pair<std::string, GeneratorToken>, std::vector<int>> maps;  // (source word, token)

  bool has(const std::string& word) const { return sizes.count(word) != 0; }
};

ModelTable nerve_table(const FSCategory& f, int bound);

// Composite restriction along an arbitrary morphism, assembled from the
// generator tables through the normal form.
std::vector<int> table_restrict(const ModelTable& t, const FMorphism& mor);

bool segal_check(const ModelTable& t, const FString& s);

FSCategory extract_category(const ModelTable& t);

// Compares the three simplicial restrictions of the nerve of f with the
// nerves of the horizontal subcategory, the vertical subcategory and the
// underlying category, through the canonical identifications, up to the
// given level.
struct RoundtripReport {
  bool ok = true;
  std::string why;
};
RoundtripReport roundtrip_extract(const FSCategory& f, int levels = 3);

// Nerve of a plain finite category (optionally restricted to flagged
// morphisms); used by the roundtrip comparisons.
std::vector<PathLabeling> cat_nerve_level(const FinCat& c, const std::vector<char>* flag_filter, int k);

}  // namespace facterm
