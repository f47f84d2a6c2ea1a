#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facterm/fmor.hpp"
#include "facterm/fstring.hpp"

namespace facterm {

// A finite category given by a dense composition table.  Morphisms are
// indexed 0..k-1; comp[g][f] is the index of g.f (apply f first), or -1 when
// the pair is not composable.  Identities are ordinary morphisms and must be
// present in the table.
struct FinCat {
  std::vector<std::string> objects;
  struct Mor {
    int dom = 0;
    int cod = 0;
  };
  std::vector<Mor> mors;
  std::vector<int> identity;            // per object
  std::vector<std::vector<int>> comp;   // comp[g][f]

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_mors() const { return static_cast<int>(mors.size()); }
  bool composable(int g, int f) const { return mors[static_cast<size_t>(f)].cod == mors[static_cast<size_t>(g)].dom; }
  int compose(int g, int f) const { return comp[static_cast<size_t>(g)][static_cast<size_t>(f)]; }
};

struct CatViolation {
  std::string what;
  int f = -1, g = -1, h = -1;
};

std::optional<CatViolation> validate_category(const FinCat& c);

// A category with two marked wide subcategories such that every morphism
// factors uniquely as (horizontal . vertical).
struct FSCategory {
  FinCat cat;
  std::vector<char> hflag;
  std::vector<char> vflag;
};

struct FsViolation {
  std::string what;
  int mor = -1;
  int count = -1;  // number of factorizations found, when relevant
};

std::optional<FsViolation> check_fs(const FSCategory& f);

// The unique pair (v, h) with h.v == mor.
std::pair<int, int> factorize_morphism(const FSCategory& f, int mor);

FSCategory sq_as_fscat(const FString& s);
FSCategory product_fs(const FinCat& c, const FinCat& d);
FSCategory trivial_fs(const FinCat& c, char direction);  // 'h' or 'v'

FinCat simplex_cat(int n);   // the linear order 0 < 1 < ... < n
FinCat chaotic_cat(int k);   // exactly one morphism between any two of k objects
FinCat z2_monoid();          // one object, morphisms {id, t} with t.t = id

struct FSFunctor {
  std::vector<int> obj_map;
  std::vector<int> mor_map;
  friend bool operator==(const FSFunctor&, const FSFunctor&) = default;
  friend auto operator<=>(const FSFunctor&, const FSFunctor&) = default;
};

bool is_fs_functor(const FSCategory& src, const FSCategory& dst, const FSFunctor& p, std::string* why = nullptr);
std::vector<FSFunctor> enumerate_fs_functors(const FSCategory& src, const FSCategory& dst);

// Wide subcategory of morphisms that are invertible and whose factors are
// invertible with flagged inverses; always a groupoid.
struct CoreResult {
  FSCategory core;
  std::vector<int> mor_of_core;   // core morphism index -> morphism of the ambient category
  std::vector<char> in_core;      // per ambient morphism
};
CoreResult core_groupoid(const FSCategory& f);

bool is_complete(const FSCategory& f);

// Collapse along the groupoid core: objects become core components and every
// core morphism is identified with an identity.
struct Completion {
  FSCategory result;
  FSFunctor quotient;
};
Completion complete(const FSCategory& f);

bool fs_isomorphic(const FSCategory& a, const FSCategory& b);

}  // namespace facterm
