#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facterm/fincat.hpp"

namespace facterm {

// A span of finite sets {0..left-1} <- apex -> {0..right-1}; apex elements
// carry their two leg values.
struct Span {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> apex;  // (left leg, right leg)

  static Span identity(int size);
  friend bool operator==(const Span&, const Span&) = default;
};

Span compose_spans(const Span& s2, const Span& s1);  // s1 first

// Two categories on a shared object set together with a swap rule gamma:
// for h: x->y in H and v: y->z in V, gamma(h,v) = (v': x->w, h': w->z),
// meaning the composite "h then v" rewrites as "v' then h'".
struct DistLaw {
  std::vector<std::string> objects;
  FinCat hcat;
  FinCat vcat;
  std::map<std::pair<int, int>, std::pair<int, int>> gamma;  // (h,v) -> (v',h')
};

struct BeckViolation {
  std::string what;
  int h = -1, v = -1, h2 = -1, v2 = -1;
};

std::optional<BeckViolation> check_beck(const DistLaw& d);

DistLaw distlaw_from_fs(const FSCategory& f);
FSCategory fs_from_distlaw(const DistLaw& d);

// Fiberwise data describing a flag-preserving functor into a base category
// with a factorization system: object fibers, fibers over horizontal and
// vertical morphisms with endpoint legs, unit and composition tables, and a
// swap table over each base factorization square.
struct BaseDistLaw {
  FSCategory base;
  std::vector<int> obj_fiber;  // per base object: fiber size
  struct FiberElt {
    int dom = 0;
    int cod = 0;
  };
  std::vector<std::vector<FiberElt>> h_fiber;  // per base morphism (empty unless hflag)
  std::vector<std::vector<FiberElt>> v_fiber;  // per base morphism (empty unless vflag)
  std::vector<std::vector<int>> unit_h;        // per object: fiber elt -> element of h_fiber[id]
  std::vector<std::vector<int>> unit_v;
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> comp_h;  // (g,f) -> (ge,fe) -> elt
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> comp_v;
  // (h,v) with "h then v" composable -> (ve,he) -> (v'e,h'e)
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, std::pair<int, int>>> swap_map;
};

BaseDistLaw lax_data_from_functor(const FSCategory& total, const FSCategory& base, const FSFunctor& p);

struct Reconstruction {
  FSCategory total;
  FSFunctor projection;
  // object of the rebuilt category = (base object, fiber element)
  std::vector<std::pair<int, int>> obj_label;
};

Reconstruction functor_from_lax_data(const BaseDistLaw& b);

// The terminal-base specialization: a BaseDistLaw over the point is the same
// data as a DistLaw.
DistLaw distlaw_from_base(const BaseDistLaw& b);
BaseDistLaw base_from_distlaw(const DistLaw& d);

}  // namespace facterm
