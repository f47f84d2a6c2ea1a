#include "facterm/spans.hpp"

#include <algorithm>
#include <functional>

namespace facterm {

Span Span::identity(int size) {
  Span s;
  s.left_size = s.right_size = size;
  for (int i = 0; i < size; ++i) s.apex.push_back({i, i});
  return s;
}

Span compose_spans(const Span& s2, const Span& s1) {
  if (s1.right_size != s2.left_size)
    fail(ErrorKind::Composition, "compose_spans: middle sets differ (" + std::to_string(s1.right_size) + " vs " +
                                     std::to_string(s2.left_size) + ")");
  Span out;
  out.left_size = s1.left_size;
  out.right_size = s2.right_size;
  for (const auto& [l1, r1] : s1.apex)
    for (const auto& [l2, r2] : s2.apex)
      if (r1 == l2) out.apex.push_back({l1, r2});
  return out;
}

namespace {

bool same_shape(const DistLaw& d, std::string* why) {
  auto no = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (d.hcat.num_objects() != static_cast<int>(d.objects.size()) ||
      d.vcat.num_objects() != static_cast<int>(d.objects.size()))
    return no("categories do not share the object set");
  if (validate_category(d.hcat) || validate_category(d.vcat)) return no("component category invalid");
  return true;
}

}  // namespace

std::optional<BeckViolation> check_beck(const DistLaw& d) {
  std::string why;
  if (!same_shape(d, &why)) return BeckViolation{why};
  const FinCat& H = d.hcat;
  const FinCat& V = d.vcat;

  // gamma total and well-typed on composable pairs "h then v"
  for (int h = 0; h < H.num_mors(); ++h)
    for (int v = 0; v < V.num_mors(); ++v) {
      bool composable = H.mors[static_cast<size_t>(h)].cod == V.mors[static_cast<size_t>(v)].dom;
      auto it = d.gamma.find({h, v});
      if (!composable) {
        if (it != d.gamma.end()) return BeckViolation{"gamma entry for non-composable pair", h, v};
        continue;
      }
      if (it == d.gamma.end()) return BeckViolation{"gamma missing for composable pair", h, v};
      auto [vp, hp] = it->second;
      if (vp < 0 || vp >= V.num_mors() || hp < 0 || hp >= H.num_mors())
        return BeckViolation{"gamma image out of range", h, v};
      if (V.mors[static_cast<size_t>(vp)].dom != H.mors[static_cast<size_t>(h)].dom)
        return BeckViolation{"gamma image starts at the wrong object", h, v};
      if (H.mors[static_cast<size_t>(hp)].cod != V.mors[static_cast<size_t>(v)].cod)
        return BeckViolation{"gamma image ends at the wrong object", h, v};
      if (V.mors[static_cast<size_t>(vp)].cod != H.mors[static_cast<size_t>(hp)].dom)
        return BeckViolation{"gamma image legs do not meet", h, v};
    }

  // unit laws
  for (int x = 0; x < H.num_objects(); ++x) {
    int idh = H.identity[static_cast<size_t>(x)];
    for (int v = 0; v < V.num_mors(); ++v) {
      if (V.mors[static_cast<size_t>(v)].dom != x) continue;
      auto got = d.gamma.at({idh, v});
      if (got != std::pair<int, int>{v, H.identity[static_cast<size_t>(V.mors[static_cast<size_t>(v)].cod)]})
        return BeckViolation{"unit law fails for identity-then-v", idh, v};
    }
    int idv = V.identity[static_cast<size_t>(x)];
    for (int h = 0; h < H.num_mors(); ++h) {
      if (H.mors[static_cast<size_t>(h)].cod != x) continue;
      auto got = d.gamma.at({h, idv});
      if (got != std::pair<int, int>{V.identity[static_cast<size_t>(H.mors[static_cast<size_t>(h)].dom)], h})
        return BeckViolation{"unit law fails for h-then-identity", h, idv};
    }
  }

  // multiplication in H: swap a composite h2.h1 past v in two steps
  for (int h1 = 0; h1 < H.num_mors(); ++h1)
    for (int h2 = 0; h2 < H.num_mors(); ++h2) {
      if (!H.composable(h2, h1)) continue;
      int h21 = H.compose(h2, h1);
      for (int v = 0; v < V.num_mors(); ++v) {
        if (V.mors[static_cast<size_t>(v)].dom != H.mors[static_cast<size_t>(h2)].cod) continue;
        auto [v1, h2p] = d.gamma.at({h2, v});
        auto [v2, h1p] = d.gamma.at({h1, v1});
        if (d.gamma.at({h21, v}) != std::pair<int, int>{v2, H.compose(h2p, h1p)})
          return BeckViolation{"pentagon fails for horizontal composition", h1, v, h2};
      }
    }

  // multiplication in V
  for (int v1 = 0; v1 < V.num_mors(); ++v1)
    for (int v2 = 0; v2 < V.num_mors(); ++v2) {
      if (!V.composable(v2, v1)) continue;
      int v21 = V.compose(v2, v1);
      for (int h = 0; h < H.num_mors(); ++h) {
        if (H.mors[static_cast<size_t>(h)].cod != V.mors[static_cast<size_t>(v1)].dom) continue;
        auto [v1p, hp] = d.gamma.at({h, v1});
        auto [v2p, hpp] = d.gamma.at({hp, v2});
        if (d.gamma.at({h, v21}) != std::pair<int, int>{V.compose(v2p, v1p), hpp})
          return BeckViolation{"pentagon fails for vertical composition", h, v1, -1, v2};
      }
    }
  return std::nullopt;
}

namespace {

// Extract a flagged wide subcategory as a FinCat on the same objects,
// together with the index maps in both directions.
FinCat flagged_subcat(const FSCategory& f, const std::vector<char>& flags, std::vector<int>& to_sub,
                      std::vector<int>& to_ambient) {
  const FinCat& c = f.cat;
  to_sub.assign(static_cast<size_t>(c.num_mors()), -1);
  to_ambient.clear();
  FinCat sub;
  sub.objects = c.objects;
  for (int k = 0; k < c.num_mors(); ++k)
    if (flags[static_cast<size_t>(k)]) {
      to_sub[static_cast<size_t>(k)] = static_cast<int>(to_ambient.size());
      to_ambient.push_back(k);
      sub.mors.push_back(c.mors[static_cast<size_t>(k)]);
    }
  sub.identity.resize(c.objects.size());
  for (size_t x = 0; x < c.objects.size(); ++x) sub.identity[x] = to_sub[static_cast<size_t>(c.identity[x])];
  sub.comp.assign(sub.mors.size(), std::vector<int>(sub.mors.size(), -1));
  for (size_t g = 0; g < to_ambient.size(); ++g)
    for (size_t fm = 0; fm < to_ambient.size(); ++fm)
      if (sub.composable(static_cast<int>(g), static_cast<int>(fm)))
        sub.comp[g][fm] = to_sub[static_cast<size_t>(c.compose(to_ambient[g], to_ambient[fm]))];
  return sub;
}

}  // namespace

DistLaw distlaw_from_fs(const FSCategory& f) {
  if (check_fs(f)) fail(ErrorKind::Input, "distlaw_from_fs: invalid factorization category");
  DistLaw d;
  d.objects = f.cat.objects;
  std::vector<int> h_to_sub, h_to_amb, v_to_sub, v_to_amb;
  d.hcat = flagged_subcat(f, f.hflag, h_to_sub, h_to_amb);
  d.vcat = flagged_subcat(f, f.vflag, v_to_sub, v_to_amb);
  for (int h = 0; h < d.hcat.num_mors(); ++h)
    for (int v = 0; v < d.vcat.num_mors(); ++v) {
      if (d.hcat.mors[static_cast<size_t>(h)].cod != d.vcat.mors[static_cast<size_t>(v)].dom) continue;
      int composite = f.cat.compose(v_to_amb[static_cast<size_t>(v)], h_to_amb[static_cast<size_t>(h)]);
      auto [vp, hp] = factorize_morphism(f, composite);
      d.gamma[{h, v}] = {v_to_sub[static_cast<size_t>(vp)], h_to_sub[static_cast<size_t>(hp)]};
    }
  return d;
}

FSCategory fs_from_distlaw(const DistLaw& d) {
  if (auto bad = check_beck(d))
    fail(ErrorKind::Input, "fs_from_distlaw: swap data invalid: " + bad->what, std::to_string(bad->h));
  const FinCat& H = d.hcat;
  const FinCat& V = d.vcat;
  FinCat c;
  c.objects = d.objects;
  std::map<std::pair<int, int>, int> idx;  // (v,h) -> morphism
  for (int v = 0; v < V.num_mors(); ++v)
    for (int h = 0; h < H.num_mors(); ++h) {
      if (V.mors[static_cast<size_t>(v)].cod != H.mors[static_cast<size_t>(h)].dom) continue;
      idx[{v, h}] = static_cast<int>(c.mors.size());
      c.mors.push_back({V.mors[static_cast<size_t>(v)].dom, H.mors[static_cast<size_t>(h)].cod});
    }
  c.identity.resize(c.objects.size());
  for (size_t x = 0; x < c.objects.size(); ++x)
    c.identity[x] = idx.at({V.identity[x], H.identity[x]});
  c.comp.assign(c.mors.size(), std::vector<int>(c.mors.size(), -1));
  for (const auto& [pair2, m2] : idx)
    for (const auto& [pair1, m1] : idx) {
      if (c.mors[static_cast<size_t>(m1)].cod != c.mors[static_cast<size_t>(m2)].dom) continue;
      auto [v1, h1] = pair1;
      auto [v2, h2] = pair2;
      auto [vt, ht] = d.gamma.at({h1, v2});
      c.comp[static_cast<size_t>(m2)][static_cast<size_t>(m1)] =
          idx.at({V.compose(vt, v1), H.compose(h2, ht)});
    }
  FSCategory out{std::move(c), {}, {}};
  out.hflag.assign(out.cat.mors.size(), 0);
  out.vflag.assign(out.cat.mors.size(), 0);
  for (const auto& [pair, m] : idx) {
    auto [v, h] = pair;
    bool v_id = std::find(V.identity.begin(), V.identity.end(), v) != V.identity.end();
    bool h_id = std::find(H.identity.begin(), H.identity.end(), h) != H.identity.end();
    out.hflag[static_cast<size_t>(m)] = v_id;
    out.vflag[static_cast<size_t>(m)] = h_id;
  }
  return out;
}

BaseDistLaw lax_data_from_functor(const FSCategory& total, const FSCategory& base, const FSFunctor& p) {
  std::string why;
  if (check_fs(total) || check_fs(base)) fail(ErrorKind::Input, "lax_data_from_functor: invalid category");
  if (!is_fs_functor(total, base, p, &why)) fail(ErrorKind::Input, "lax_data_from_functor: not flag-preserving: " + why);

  const FinCat& G = total.cat;
  const FinCat& B = base.cat;
  BaseDistLaw out;
  out.base = base;

  std::vector<std::vector<int>> fiber_objs(static_cast<size_t>(B.num_objects()));
  std::vector<int> obj_fiber_index(static_cast<size_t>(G.num_objects()));
  for (int g = 0; g < G.num_objects(); ++g) {
    auto& list = fiber_objs[static_cast<size_t>(p.obj_map[static_cast<size_t>(g)])];
    obj_fiber_index[static_cast<size_t>(g)] = static_cast<int>(list.size());
    list.push_back(g);
  }
  for (const auto& list : fiber_objs) out.obj_fiber.push_back(static_cast<int>(list.size()));

  auto build_fiber = [&](const std::vector<char>& gflags, const std::vector<char>& bflags,
                         std::vector<std::vector<BaseDistLaw::FiberElt>>& fibers) {
    fibers.assign(static_cast<size_t>(B.num_mors()), {});
    std::vector<int> pos(static_cast<size_t>(G.num_mors()), -1);
    for (int gm = 0; gm < G.num_mors(); ++gm) {
      if (!gflags[static_cast<size_t>(gm)]) continue;
      int bm = p.mor_map[static_cast<size_t>(gm)];
      if (!bflags[static_cast<size_t>(bm)]) continue;
      pos[static_cast<size_t>(gm)] = static_cast<int>(fibers[static_cast<size_t>(bm)].size());
      fibers[static_cast<size_t>(bm)].push_back(
          {obj_fiber_index[static_cast<size_t>(G.mors[static_cast<size_t>(gm)].dom)],
           obj_fiber_index[static_cast<size_t>(G.mors[static_cast<size_t>(gm)].cod)]});
    }
    return pos;
  };

  const std::vector<int> hpos = build_fiber(total.hflag, base.hflag, out.h_fiber);
  const std::vector<int> vpos = build_fiber(total.vflag, base.vflag, out.v_fiber);

  out.unit_h.assign(static_cast<size_t>(B.num_objects()), {});
  out.unit_v.assign(static_cast<size_t>(B.num_objects()), {});
  for (int x = 0; x < B.num_objects(); ++x)
    for (int gobj : fiber_objs[static_cast<size_t>(x)]) {
      out.unit_h[static_cast<size_t>(x)].push_back(hpos[static_cast<size_t>(G.identity[static_cast<size_t>(gobj)])]);
      out.unit_v[static_cast<size_t>(x)].push_back(vpos[static_cast<size_t>(G.identity[static_cast<size_t>(gobj)])]);
    }

  // composition tables: record the G-composition on fibers
  auto build_comp = [&](const std::vector<char>& gflags, const std::vector<int>& posmap,
                        std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>>& table) {
    for (int g2 = 0; g2 < G.num_mors(); ++g2) {
      if (posmap[static_cast<size_t>(g2)] < 0) continue;
      for (int g1 = 0; g1 < G.num_mors(); ++g1) {
        if (posmap[static_cast<size_t>(g1)] < 0 || !G.composable(g2, g1)) continue;
        int gc = G.compose(g2, g1);
        if (!gflags[static_cast<size_t>(gc)]) fail(ErrorKind::Input, "lax_data_from_functor: flags not closed");
        table[{p.mor_map[static_cast<size_t>(g2)], p.mor_map[static_cast<size_t>(g1)]}]
             [{posmap[static_cast<size_t>(g2)], posmap[static_cast<size_t>(g1)]}] = posmap[static_cast<size_t>(gc)];
      }
    }
  };
  build_comp(total.hflag, hpos, out.comp_h);
  build_comp(total.vflag, vpos, out.comp_v);

  // swap tables: factorize "h then v" composites in the total category
  for (int gh = 0; gh < G.num_mors(); ++gh) {
    if (hpos[static_cast<size_t>(gh)] < 0) continue;
    for (int gv = 0; gv < G.num_mors(); ++gv) {
      if (vpos[static_cast<size_t>(gv)] < 0) continue;
      if (!G.composable(gv, gh)) continue;
      int composite = G.compose(gv, gh);
      auto [vt, ht] = factorize_morphism(total, composite);
      out.swap_map[{p.mor_map[static_cast<size_t>(gh)], p.mor_map[static_cast<size_t>(gv)]}]
                  [{vpos[static_cast<size_t>(gv)], hpos[static_cast<size_t>(gh)]}] =
          {vpos[static_cast<size_t>(vt)], hpos[static_cast<size_t>(ht)]};
    }
  }
  return out;
}

Reconstruction functor_from_lax_data(const BaseDistLaw& b) {
  auto axiom = [&](const std::string& what) { fail(ErrorKind::Reconstruction, "functor_from_lax_data: " + what); };
  if (check_fs(b.base)) axiom("base fails unique factorization");
  const FinCat& B = b.base.cat;
  if (static_cast<int>(b.obj_fiber.size()) != B.num_objects()) axiom("object fiber list size");
  if (static_cast<int>(b.h_fiber.size()) != B.num_mors() || static_cast<int>(b.v_fiber.size()) != B.num_mors())
    axiom("morphism fiber list size");

  FinCat G;
  std::vector<std::pair<int, int>> obj_label;
  std::vector<std::vector<int>> obj_index(static_cast<size_t>(B.num_objects()));
  for (int x = 0; x < B.num_objects(); ++x)
    for (int e = 0; e < b.obj_fiber[static_cast<size_t>(x)]; ++e) {
      obj_index[static_cast<size_t>(x)].push_back(static_cast<int>(obj_label.size()));
      G.objects.push_back(B.objects[static_cast<size_t>(x)] + "#" + std::to_string(e));
      obj_label.push_back({x, e});
    }

  struct MorLabel {
    int base = 0;  // base morphism
    int ve = 0, he = 0;
  };
  std::vector<MorLabel> mor_label;
  std::map<std::tuple<int, int, int>, int> mor_index;
  std::vector<int> proj_mor;
  for (int f = 0; f < B.num_mors(); ++f) {
    auto [vf, hf] = factorize_morphism(b.base, f);
    const auto& vfib = b.v_fiber[static_cast<size_t>(vf)];
    const auto& hfib = b.h_fiber[static_cast<size_t>(hf)];
    for (int ve = 0; ve < static_cast<int>(vfib.size()); ++ve)
      for (int he = 0; he < static_cast<int>(hfib.size()); ++he) {
        if (vfib[static_cast<size_t>(ve)].cod != hfib[static_cast<size_t>(he)].dom) continue;
        mor_index[{f, ve, he}] = static_cast<int>(mor_label.size());
        mor_label.push_back({f, ve, he});
        G.mors.push_back({obj_index[static_cast<size_t>(B.mors[static_cast<size_t>(f)].dom)]
                              [static_cast<size_t>(vfib[static_cast<size_t>(ve)].dom)],
                          obj_index[static_cast<size_t>(B.mors[static_cast<size_t>(f)].cod)]
                              [static_cast<size_t>(hfib[static_cast<size_t>(he)].cod)]});
        proj_mor.push_back(f);
      }
  }

  G.identity.resize(G.objects.size());
  for (int x = 0; x < B.num_objects(); ++x) {
    if (static_cast<int>(b.unit_h.size()) <= x || static_cast<int>(b.unit_v.size()) <= x) axiom("unit table missing");
    int idb = B.identity[static_cast<size_t>(x)];
    for (int e = 0; e < b.obj_fiber[static_cast<size_t>(x)]; ++e) {
      if (static_cast<int>(b.unit_v[static_cast<size_t>(x)].size()) <= e ||
          static_cast<int>(b.unit_h[static_cast<size_t>(x)].size()) <= e)
        axiom("unit table too short at object " + B.objects[static_cast<size_t>(x)]);
      int ve = b.unit_v[static_cast<size_t>(x)][static_cast<size_t>(e)];
      int he = b.unit_h[static_cast<size_t>(x)][static_cast<size_t>(e)];
      auto it = mor_index.find({idb, ve, he});
      if (it == mor_index.end()) axiom("unit of fiber element does not exist");
      G.identity[static_cast<size_t>(obj_index[static_cast<size_t>(x)][static_cast<size_t>(e)])] = it->second;
    }
  }

  G.comp.assign(G.mors.size(), std::vector<int>(G.mors.size(), -1));
  for (size_t m2 = 0; m2 < mor_label.size(); ++m2)
    for (size_t m1 = 0; m1 < mor_label.size(); ++m1) {
      if (G.mors[m1].cod != G.mors[m2].dom) continue;
      const auto& l1 = mor_label[m1];
      const auto& l2 = mor_label[m2];
      int f1 = l1.base, f2 = l2.base;
      if (!B.composable(f2, f1)) axiom("fiber morphisms composable over non-composable base");
      auto [v1, h1] = factorize_morphism(b.base, f1);
      auto [v2, h2] = factorize_morphism(b.base, f2);
      auto sw_tab = b.swap_map.find({h1, v2});
      if (sw_tab == b.swap_map.end()) axiom("swap table missing for a factorization square");
      auto sw = sw_tab->second.find({l2.ve, l1.he});
      if (sw == sw_tab->second.end()) axiom("swap table missing an element pair");
      auto [vte, hte] = sw->second;
      auto [vt, ht] = factorize_morphism(b.base, B.compose(v2, h1));
      auto cv_tab = b.comp_v.find({vt, v1});
      auto ch_tab = b.comp_h.find({h2, ht});
      if (cv_tab == b.comp_v.end() || ch_tab == b.comp_h.end()) axiom("composition table missing");
      auto cv = cv_tab->second.find({vte, l1.ve});
      auto ch = ch_tab->second.find({l2.he, hte});
      if (cv == cv_tab->second.end() || ch == ch_tab->second.end()) axiom("composition table missing an element pair");
      int fc = B.compose(f2, f1);
      auto it = mor_index.find({fc, cv->second, ch->second});
      if (it == mor_index.end()) axiom("composite element missing from its fiber");
      G.comp[m2][m1] = it->second;
    }

  if (auto bad = validate_category(G)) axiom("rebuilt category invalid: " + bad->what);

  FSCategory total{std::move(G), {}, {}};
  total.hflag.assign(mor_label.size(), 0);
  total.vflag.assign(mor_label.size(), 0);
  for (size_t m = 0; m < mor_label.size(); ++m) {
    const auto& l = mor_label[m];
    auto [vf, hf] = factorize_morphism(b.base, l.base);
    int x = B.mors[static_cast<size_t>(vf)].dom;
    int dom_elt = b.v_fiber[static_cast<size_t>(vf)][static_cast<size_t>(l.ve)].dom;
    int y = B.mors[static_cast<size_t>(hf)].cod;
    int cod_elt = b.h_fiber[static_cast<size_t>(hf)][static_cast<size_t>(l.he)].cod;
    bool v_unital = b.base.hflag[static_cast<size_t>(l.base)] &&
                    b.unit_v[static_cast<size_t>(x)][static_cast<size_t>(dom_elt)] == l.ve;
    bool h_unital = b.base.vflag[static_cast<size_t>(l.base)] &&
                    b.unit_h[static_cast<size_t>(y)][static_cast<size_t>(cod_elt)] == l.he;
    total.hflag[m] = v_unital;
    total.vflag[m] = h_unital;
  }
  if (auto bad = check_fs(total)) axiom("rebuilt category fails unique factorization: " + bad->what);

  FSFunctor proj;
  for (const auto& [x, e] : obj_label) {
    (void)e;
    proj.obj_map.push_back(x);
  }
  proj.mor_map = proj_mor;
  std::string why;
  if (!is_fs_functor(total, b.base, proj, &why)) axiom("projection is not flag-preserving: " + why);
  return Reconstruction{std::move(total), std::move(proj), std::move(obj_label)};
}

DistLaw distlaw_from_base(const BaseDistLaw& b) {
  if (b.base.cat.num_objects() != 1 || b.base.cat.num_mors() != 1)
    fail(ErrorKind::Input, "distlaw_from_base: base is not the point");
  const int nobj = b.obj_fiber[0];
  DistLaw d;
  for (int i = 0; i < nobj; ++i) d.objects.push_back(std::to_string(i));

  auto subcat = [&](const std::vector<BaseDistLaw::FiberElt>& fib,
                    const std::map<std::pair<int, int>, int>& comp, const std::vector<int>& unit) {
    FinCat c;
    c.objects = d.objects;
    for (const auto& e : fib) c.mors.push_back({e.dom, e.cod});
    c.identity = unit;
    c.comp.assign(fib.size(), std::vector<int>(fib.size(), -1));
    for (size_t g = 0; g < fib.size(); ++g)
      for (size_t f = 0; f < fib.size(); ++f) {
        if (!c.composable(static_cast<int>(g), static_cast<int>(f))) continue;
        auto it = comp.find({static_cast<int>(g), static_cast<int>(f)});
        if (it == comp.end()) fail(ErrorKind::Input, "distlaw_from_base: composition table incomplete");
        c.comp[g][f] = it->second;
      }
    return c;
  };
  auto hc = b.comp_h.count({0, 0}) ? b.comp_h.at({0, 0}) : std::map<std::pair<int, int>, int>{};
  auto vc = b.comp_v.count({0, 0}) ? b.comp_v.at({0, 0}) : std::map<std::pair<int, int>, int>{};
  d.hcat = subcat(b.h_fiber[0], hc, b.unit_h[0]);
  d.vcat = subcat(b.v_fiber[0], vc, b.unit_v[0]);
  if (b.swap_map.count({0, 0}))
    for (const auto& [key, val] : b.swap_map.at({0, 0})) d.gamma[{key.second, key.first}] = val;
  return d;
}

BaseDistLaw base_from_distlaw(const DistLaw& d) {
  if (auto bad = check_beck(d)) fail(ErrorKind::Input, "base_from_distlaw: swap data invalid: " + bad->what);
  BaseDistLaw b;
  b.base = trivial_fs(simplex_cat(0), 'h');
  b.obj_fiber = {static_cast<int>(d.objects.size())};
  b.h_fiber.resize(1);
  b.v_fiber.resize(1);
  for (const auto& m : d.hcat.mors) b.h_fiber[0].push_back({m.dom, m.cod});
  for (const auto& m : d.vcat.mors) b.v_fiber[0].push_back({m.dom, m.cod});
  b.unit_h = {d.hcat.identity};
  b.unit_v = {d.vcat.identity};
  for (int g = 0; g < d.hcat.num_mors(); ++g)
    for (int f = 0; f < d.hcat.num_mors(); ++f)
      if (d.hcat.composable(g, f)) b.comp_h[{0, 0}][{g, f}] = d.hcat.compose(g, f);
  for (int g = 0; g < d.vcat.num_mors(); ++g)
    for (int f = 0; f < d.vcat.num_mors(); ++f)
      if (d.vcat.composable(g, f)) b.comp_v[{0, 0}][{g, f}] = d.vcat.compose(g, f);
  for (const auto& [hv, vh] : d.gamma) b.swap_map[{0, 0}][{hv.second, hv.first}] = vh;
  return b;
}

}  // namespace facterm
