#include "facterm/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace facterm {

std::optional<CatViolation> validate_category(const FinCat& c) {
  const int nm = c.num_mors();
  if (static_cast<int>(c.identity.size()) != c.num_objects()) return CatViolation{"identity list size mismatch"};
  if (static_cast<int>(c.comp.size()) != nm) return CatViolation{"composition table size mismatch"};
  for (const auto& row : c.comp)
    if (static_cast<int>(row.size()) != nm) return CatViolation{"composition table row size mismatch"};
  for (const auto& mor : c.mors)
    if (mor.dom < 0 || mor.dom >= c.num_objects() || mor.cod < 0 || mor.cod >= c.num_objects())
      return CatViolation{"morphism endpoint outside object range"};
  for (int x = 0; x < c.num_objects(); ++x) {
    int e = c.identity[static_cast<size_t>(x)];
    if (e < 0 || e >= nm) return CatViolation{"identity index out of range", e};
    if (c.mors[static_cast<size_t>(e)].dom != x || c.mors[static_cast<size_t>(e)].cod != x)
      return CatViolation{"identity endpoints wrong", e};
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int gf = c.comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
      if (c.composable(g, f)) {
        if (gf < 0 || gf >= nm) return CatViolation{"composable pair without composite", f, g};
        if (c.mors[static_cast<size_t>(gf)].dom != c.mors[static_cast<size_t>(f)].dom ||
            c.mors[static_cast<size_t>(gf)].cod != c.mors[static_cast<size_t>(g)].cod)
          return CatViolation{"composite has wrong endpoints", f, g};
      } else if (gf != -1) {
        return CatViolation{"non-composable pair has an entry", f, g};
      }
    }
  for (int f = 0; f < nm; ++f) {
    int d = c.mors[static_cast<size_t>(f)].dom, cd = c.mors[static_cast<size_t>(f)].cod;
    if (c.compose(f, c.identity[static_cast<size_t>(d)]) != f) return CatViolation{"right identity fails", f};
    if (c.compose(c.identity[static_cast<size_t>(cd)], f) != f) return CatViolation{"left identity fails", f};
  }
  for (int h = 0; h < nm; ++h)
    for (int g = 0; g < nm; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < nm; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          return CatViolation{"associativity fails", f, g, h};
      }
    }
  return std::nullopt;
}

std::optional<FsViolation> check_fs(const FSCategory& f) {
  const FinCat& c = f.cat;
  const int nm = c.num_mors();
  if (static_cast<int>(f.hflag.size()) != nm || static_cast<int>(f.vflag.size()) != nm)
    return FsViolation{"flag vector size mismatch"};
  for (int x = 0; x < c.num_objects(); ++x) {
    int e = c.identity[static_cast<size_t>(x)];
    if (!f.hflag[static_cast<size_t>(e)] || !f.vflag[static_cast<size_t>(e)])
      return FsViolation{"identity not flagged in both subcategories", e};
  }
  for (int g = 0; g < nm; ++g)
    for (int fm = 0; fm < nm; ++fm) {
      if (!c.composable(g, fm)) continue;
      int gf = c.compose(g, fm);
      if (f.hflag[static_cast<size_t>(g)] && f.hflag[static_cast<size_t>(fm)] && !f.hflag[static_cast<size_t>(gf)])
        return FsViolation{"horizontal subcategory not closed", gf};
      if (f.vflag[static_cast<size_t>(g)] && f.vflag[static_cast<size_t>(fm)] && !f.vflag[static_cast<size_t>(gf)])
        return FsViolation{"vertical subcategory not closed", gf};
    }
  for (int mor = 0; mor < nm; ++mor) {
    int count = 0;
    for (int v = 0; v < nm; ++v) {
      if (!f.vflag[static_cast<size_t>(v)]) continue;
      for (int h = 0; h < nm; ++h) {
        if (!f.hflag[static_cast<size_t>(h)]) continue;
        if (c.composable(h, v) && c.compose(h, v) == mor) ++count;
      }
    }
    if (count != 1) return FsViolation{"factorization count is not one", mor, count};
  }
  return std::nullopt;
}

std::pair<int, int> factorize_morphism(const FSCategory& f, int mor) {
  const FinCat& c = f.cat;
  if (mor < 0 || mor >= c.num_mors()) fail(ErrorKind::Range, "factorize_morphism: bad morphism index");
  for (int v = 0; v < c.num_mors(); ++v) {
    if (!f.vflag[static_cast<size_t>(v)]) continue;
    for (int h = 0; h < c.num_mors(); ++h) {
      if (!f.hflag[static_cast<size_t>(h)]) continue;
      if (c.composable(h, v) && c.compose(h, v) == mor) return {v, h};
    }
  }
  fail(ErrorKind::Domain, "factorize_morphism: no factorization; category invalid");
}

FSCategory sq_as_fscat(const FString& s) {
  auto points = s.region_points();
  std::map<GridPoint, int> idx;
  for (size_t k = 0; k < points.size(); ++k) idx[points[k]] = static_cast<int>(k);

  FinCat c;
  for (GridPoint p : points) c.objects.push_back("(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")");
  std::map<std::pair<int, int>, int> mor_idx;
  std::vector<std::pair<int, int>> mor_pts;
  for (size_t pi = 0; pi < points.size(); ++pi)
    for (size_t qi = 0; qi < points.size(); ++qi) {
      if (points[pi].x <= points[qi].x && points[pi].y <= points[qi].y) {
        mor_idx[{static_cast<int>(pi), static_cast<int>(qi)}] = static_cast<int>(c.mors.size());
        mor_pts.push_back({static_cast<int>(pi), static_cast<int>(qi)});
        c.mors.push_back({static_cast<int>(pi), static_cast<int>(qi)});
      }
    }
  c.identity.resize(points.size());
  for (size_t k = 0; k < points.size(); ++k)
    c.identity[k] = mor_idx[{static_cast<int>(k), static_cast<int>(k)}];
  c.comp.assign(c.mors.size(), std::vector<int>(c.mors.size(), -1));
  for (size_t g = 0; g < c.mors.size(); ++g)
    for (size_t f = 0; f < c.mors.size(); ++f)
      if (c.mors[f].cod == c.mors[g].dom)
        c.comp[g][f] = mor_idx[{c.mors[f].dom, c.mors[g].cod}];

  FSCategory out{std::move(c), {}, {}};
  out.hflag.resize(out.cat.mors.size());
  out.vflag.resize(out.cat.mors.size());
  for (size_t k = 0; k < out.cat.mors.size(); ++k) {
    GridPoint p = points[static_cast<size_t>(mor_pts[k].first)];
    GridPoint q = points[static_cast<size_t>(mor_pts[k].second)];
    out.hflag[k] = p.y == q.y;
    out.vflag[k] = p.x == q.x;
  }
  return out;
}

FSCategory product_fs(const FinCat& c, const FinCat& d) {
  if (validate_category(c) || validate_category(d)) fail(ErrorKind::Input, "product_fs: invalid factor");
  FinCat p;
  for (const auto& oc : c.objects)
    for (const auto& od : d.objects) p.objects.push_back(oc + "*" + od);
  auto obj = [&](int xc, int xd) { return xc * d.num_objects() + xd; };
  auto mor = [&](int fc, int fd) { return fc * d.num_mors() + fd; };
  for (int fc = 0; fc < c.num_mors(); ++fc)
    for (int fd = 0; fd < d.num_mors(); ++fd)
      p.mors.push_back({obj(c.mors[static_cast<size_t>(fc)].dom, d.mors[static_cast<size_t>(fd)].dom),
                        obj(c.mors[static_cast<size_t>(fc)].cod, d.mors[static_cast<size_t>(fd)].cod)});
  p.identity.resize(p.objects.size());
  for (int xc = 0; xc < c.num_objects(); ++xc)
    for (int xd = 0; xd < d.num_objects(); ++xd)
      p.identity[static_cast<size_t>(obj(xc, xd))] =
          mor(c.identity[static_cast<size_t>(xc)], d.identity[static_cast<size_t>(xd)]);
  p.comp.assign(p.mors.size(), std::vector<int>(p.mors.size(), -1));
  for (int gc = 0; gc < c.num_mors(); ++gc)
    for (int gd = 0; gd < d.num_mors(); ++gd)
      for (int fc = 0; fc < c.num_mors(); ++fc)
        for (int fd = 0; fd < d.num_mors(); ++fd) {
          if (!c.composable(gc, fc) || !d.composable(gd, fd)) continue;
          p.comp[static_cast<size_t>(mor(gc, gd))][static_cast<size_t>(mor(fc, fd))] =
              mor(c.compose(gc, fc), d.compose(gd, fd));
        }

  FSCategory out{std::move(p), {}, {}};
  out.hflag.resize(out.cat.mors.size());
  out.vflag.resize(out.cat.mors.size());
  for (int fc = 0; fc < c.num_mors(); ++fc)
    for (int fd = 0; fd < d.num_mors(); ++fd) {
      bool fd_id = std::find(d.identity.begin(), d.identity.end(), fd) != d.identity.end();
      bool fc_id = std::find(c.identity.begin(), c.identity.end(), fc) != c.identity.end();
      out.hflag[static_cast<size_t>(mor(fc, fd))] = fd_id;
      out.vflag[static_cast<size_t>(mor(fc, fd))] = fc_id;
    }
  return out;
}

FSCategory trivial_fs(const FinCat& c, char direction) {
  if (validate_category(c)) fail(ErrorKind::Input, "trivial_fs: invalid category");
  if (direction != 'h' && direction != 'v') fail(ErrorKind::Input, "trivial_fs: direction must be 'h' or 'v'");
  FSCategory out{c, {}, {}};
  out.hflag.assign(c.mors.size(), direction == 'h');
  out.vflag.assign(c.mors.size(), direction == 'v');
  for (int e : c.identity) {
    out.hflag[static_cast<size_t>(e)] = true;
    out.vflag[static_cast<size_t>(e)] = true;
  }
  return out;
}

FinCat simplex_cat(int n) {
  FinCat c;
  for (int i = 0; i <= n; ++i) c.objects.push_back(std::to_string(i));
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      idx[{i, j}] = static_cast<int>(c.mors.size());
      c.mors.push_back({i, j});
    }
  c.identity.resize(c.objects.size());
  for (int i = 0; i <= n; ++i) c.identity[static_cast<size_t>(i)] = idx[{i, i}];
  c.comp.assign(c.mors.size(), std::vector<int>(c.mors.size(), -1));
  for (size_t g = 0; g < c.mors.size(); ++g)
    for (size_t f = 0; f < c.mors.size(); ++f)
      if (c.mors[f].cod == c.mors[g].dom) c.comp[g][f] = idx[{c.mors[f].dom, c.mors[g].cod}];
  return c;
}

FinCat chaotic_cat(int k) {
  FinCat c;
  for (int i = 0; i < k; ++i) c.objects.push_back(std::to_string(i));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c.mors.push_back({i, j});
  auto idx = [&](int i, int j) { return i * k + j; };
  c.identity.resize(c.objects.size());
  for (int i = 0; i < k; ++i) c.identity[static_cast<size_t>(i)] = idx(i, i);
  c.comp.assign(c.mors.size(), std::vector<int>(c.mors.size(), -1));
  for (int f = 0; f < c.num_mors(); ++f)
    for (int g = 0; g < c.num_mors(); ++g)
      if (c.composable(g, f))
        c.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] =
            idx(c.mors[static_cast<size_t>(f)].dom, c.mors[static_cast<size_t>(g)].cod);
  return c;
}

FinCat z2_monoid() {
  FinCat c;
  c.objects = {"x"};
  c.mors = {{0, 0}, {0, 0}};
  c.identity = {0};
  c.comp = {{0, 1}, {1, 0}};
  return c;
}

bool is_fs_functor(const FSCategory& src, const FSCategory& dst, const FSFunctor& p, std::string* why) {
  auto no = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const FinCat& s = src.cat;
  const FinCat& d = dst.cat;
  if (static_cast<int>(p.obj_map.size()) != s.num_objects() || static_cast<int>(p.mor_map.size()) != s.num_mors())
    return no("map size mismatch");
  for (int x : p.obj_map)
    if (x < 0 || x >= d.num_objects()) return no("object image out of range");
  for (int f = 0; f < s.num_mors(); ++f) {
    int pf = p.mor_map[static_cast<size_t>(f)];
    if (pf < 0 || pf >= d.num_mors()) return no("morphism image out of range");
    if (d.mors[static_cast<size_t>(pf)].dom != p.obj_map[static_cast<size_t>(s.mors[static_cast<size_t>(f)].dom)] ||
        d.mors[static_cast<size_t>(pf)].cod != p.obj_map[static_cast<size_t>(s.mors[static_cast<size_t>(f)].cod)])
      return no("image endpoints wrong for morphism " + std::to_string(f));
    if (src.hflag[static_cast<size_t>(f)] && !dst.hflag[static_cast<size_t>(pf)])
      return no("horizontal flag not preserved at " + std::to_string(f));
    if (src.vflag[static_cast<size_t>(f)] && !dst.vflag[static_cast<size_t>(pf)])
      return no("vertical flag not preserved at " + std::to_string(f));
  }
  for (int x = 0; x < s.num_objects(); ++x)
    if (p.mor_map[static_cast<size_t>(s.identity[static_cast<size_t>(x)])] !=
        d.identity[static_cast<size_t>(p.obj_map[static_cast<size_t>(x)])])
      return no("identity not preserved at object " + std::to_string(x));
  for (int g = 0; g < s.num_mors(); ++g)
    for (int f = 0; f < s.num_mors(); ++f) {
      if (!s.composable(g, f)) continue;
      if (p.mor_map[static_cast<size_t>(s.compose(g, f))] !=
          d.compose(p.mor_map[static_cast<size_t>(g)], p.mor_map[static_cast<size_t>(f)]))
        return no("composition not preserved at (" + std::to_string(g) + "," + std::to_string(f) + ")");
    }
  return true;
}

std::vector<FSFunctor> enumerate_fs_functors(const FSCategory& src, const FSCategory& dst) {
  const FinCat& s = src.cat;
  const FinCat& d = dst.cat;
  std::vector<FSFunctor> out;
  std::vector<int> obj(static_cast<size_t>(s.num_objects()), 0);

  std::vector<int> mor(static_cast<size_t>(s.num_mors()), -1);
  // candidate images per source morphism, recomputed per object assignment
  std::function<void(size_t)> assign_mor = [&](size_t k) {
    if (k == mor.size()) {
      FSFunctor cand{obj, mor};
      if (is_fs_functor(src, dst, cand)) out.push_back(std::move(cand));
      return;
    }
    const auto& fm = s.mors[k];
    for (int img = 0; img < d.num_mors(); ++img) {
      if (d.mors[static_cast<size_t>(img)].dom != obj[static_cast<size_t>(fm.dom)] ||
          d.mors[static_cast<size_t>(img)].cod != obj[static_cast<size_t>(fm.cod)])
        continue;
      if (src.hflag[k] && !dst.hflag[static_cast<size_t>(img)]) continue;
      if (src.vflag[k] && !dst.vflag[static_cast<size_t>(img)]) continue;
      mor[k] = img;
      // prune: composition consistency with already-assigned morphisms
      bool ok = true;
      for (size_t f2 = 0; f2 <= k && ok; ++f2) {
        if (mor[f2] < 0) continue;
        if (s.composable(static_cast<int>(k), static_cast<int>(f2))) {
          int cidx = s.compose(static_cast<int>(k), static_cast<int>(f2));
          if (static_cast<size_t>(cidx) <= k && mor[static_cast<size_t>(cidx)] >= 0 &&
              d.compose(mor[k], mor[f2]) != mor[static_cast<size_t>(cidx)])
            ok = false;
        }
        if (ok && s.composable(static_cast<int>(f2), static_cast<int>(k))) {
          int cidx = s.compose(static_cast<int>(f2), static_cast<int>(k));
          if (static_cast<size_t>(cidx) <= k && mor[static_cast<size_t>(cidx)] >= 0 &&
              d.compose(mor[f2], mor[k]) != mor[static_cast<size_t>(cidx)])
            ok = false;
        }
      }
      if (ok) assign_mor(k + 1);
      mor[k] = -1;
    }
  };

  std::function<void(size_t)> assign_obj = [&](size_t k) {
    if (k == obj.size()) {
      assign_mor(0);
      return;
    }
    for (int x = 0; x < d.num_objects(); ++x) {
      obj[k] = x;
      assign_obj(k + 1);
    }
  };
  if (s.num_objects() == 0) return out;
  assign_obj(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// inverse of each morphism, or -1
std::vector<int> inverses(const FinCat& c) {
  std::vector<int> inv(static_cast<size_t>(c.num_mors()), -1);
  for (int f = 0; f < c.num_mors(); ++f) {
    int d = c.mors[static_cast<size_t>(f)].dom, cd = c.mors[static_cast<size_t>(f)].cod;
    for (int g = 0; g < c.num_mors(); ++g) {
      if (c.mors[static_cast<size_t>(g)].dom != cd || c.mors[static_cast<size_t>(g)].cod != d) continue;
      if (c.compose(g, f) == c.identity[static_cast<size_t>(d)] &&
          c.compose(f, g) == c.identity[static_cast<size_t>(cd)]) {
        inv[static_cast<size_t>(f)] = g;
        break;
      }
    }
  }
  return inv;
}

FSCategory restrict_to(const FSCategory& f, const std::vector<char>& keep, std::vector<int>* kept_out) {
  const FinCat& c = f.cat;
  std::vector<int> new_idx(static_cast<size_t>(c.num_mors()), -1);
  std::vector<int> kept;
  for (int k = 0; k < c.num_mors(); ++k)
    if (keep[static_cast<size_t>(k)]) {
      new_idx[static_cast<size_t>(k)] = static_cast<int>(kept.size());
      kept.push_back(k);
    }
  FinCat r;
  r.objects = c.objects;
  for (int k : kept) r.mors.push_back(c.mors[static_cast<size_t>(k)]);
  r.identity.resize(c.objects.size());
  for (size_t x = 0; x < c.objects.size(); ++x) r.identity[x] = new_idx[static_cast<size_t>(c.identity[x])];
  r.comp.assign(kept.size(), std::vector<int>(kept.size(), -1));
  for (size_t g = 0; g < kept.size(); ++g)
    for (size_t fm = 0; fm < kept.size(); ++fm) {
      if (!r.composable(static_cast<int>(g), static_cast<int>(fm))) continue;
      int comp = c.compose(kept[g], kept[fm]);
      int ni = new_idx[static_cast<size_t>(comp)];
      if (ni < 0) fail(ErrorKind::Domain, "core is not closed under composition");
      r.comp[g][fm] = ni;
    }
  FSCategory out{std::move(r), {}, {}};
  for (int k : kept) {
    out.hflag.push_back(f.hflag[static_cast<size_t>(k)]);
    out.vflag.push_back(f.vflag[static_cast<size_t>(k)]);
  }
  if (kept_out) *kept_out = kept;
  return out;
}

}  // namespace

CoreResult core_groupoid(const FSCategory& f) {
  const FinCat& c = f.cat;
  auto inv = inverses(c);
  std::vector<char> keep(static_cast<size_t>(c.num_mors()), 0);
  for (int k = 0; k < c.num_mors(); ++k) {
    if (inv[static_cast<size_t>(k)] < 0) continue;
    auto [v, h] = factorize_morphism(f, k);
    int vi = inv[static_cast<size_t>(v)], hi = inv[static_cast<size_t>(h)];
    if (vi < 0 || hi < 0) continue;
    if (!f.vflag[static_cast<size_t>(vi)] || !f.hflag[static_cast<size_t>(hi)]) continue;
    keep[static_cast<size_t>(k)] = 1;
  }
  std::vector<int> kept;
  FSCategory core = restrict_to(f, keep, &kept);
  return CoreResult{std::move(core), std::move(kept), std::move(keep)};
}

bool is_complete(const FSCategory& f) {
  auto core = core_groupoid(f);
  for (size_t k = 0; k < core.core.cat.mors.size(); ++k) {
    int amb = core.mor_of_core[k];
    bool is_id = false;
    for (int e : f.cat.identity)
      if (e == amb) is_id = true;
    if (!is_id) return false;
  }
  return true;
}

Completion complete(const FSCategory& f) {
  const FinCat& c = f.cat;
  auto core = core_groupoid(f);
  const auto& in_core = core.in_core;

  // object components under the core
  std::vector<int> comp_of(static_cast<size_t>(c.num_objects()));
  std::iota(comp_of.begin(), comp_of.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp_of[static_cast<size_t>(x)] != x) x = comp_of[static_cast<size_t>(x)] = comp_of[static_cast<size_t>(comp_of[static_cast<size_t>(x)])];
    return x;
  };
  for (int k = 0; k < c.num_mors(); ++k)
    if (in_core[static_cast<size_t>(k)]) {
      int a = find(c.mors[static_cast<size_t>(k)].dom), b = find(c.mors[static_cast<size_t>(k)].cod);
      if (a != b) comp_of[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::map<int, int> comp_index;
  std::vector<int> obj_map(static_cast<size_t>(c.num_objects()));
  for (int x = 0; x < c.num_objects(); ++x) {
    int root = find(x);
    if (!comp_index.count(root)) comp_index[root] = static_cast<int>(comp_index.size());
    obj_map[static_cast<size_t>(x)] = comp_index[root];
  }

  // morphism classes: g ~ c2.g.c1 for core morphisms c1, c2
  std::vector<int> cls(static_cast<size_t>(c.num_mors()), -1);
  int nclasses = 0;
  for (int g = 0; g < c.num_mors(); ++g) {
    if (cls[static_cast<size_t>(g)] >= 0) continue;
    int id = nclasses++;
    // closure by conjugation
    std::vector<int> stack{g};
    cls[static_cast<size_t>(g)] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int c1 = 0; c1 < c.num_mors(); ++c1) {
        if (!in_core[static_cast<size_t>(c1)] || !c.composable(cur, c1)) continue;
        int m1 = c.compose(cur, c1);
        for (int c2 = 0; c2 < c.num_mors(); ++c2) {
          if (!in_core[static_cast<size_t>(c2)] || !c.composable(c2, m1)) continue;
          int m2 = c.compose(c2, m1);
          if (cls[static_cast<size_t>(m2)] < 0) {
            cls[static_cast<size_t>(m2)] = id;
            stack.push_back(m2);
          }
        }
      }
    }
  }

  FinCat q;
  q.objects.resize(comp_index.size());
  for (int x = 0; x < c.num_objects(); ++x) {
    auto& name = q.objects[static_cast<size_t>(obj_map[static_cast<size_t>(x)])];
    if (name.empty())
      name = c.objects[static_cast<size_t>(x)];
    else
      name += "~" + c.objects[static_cast<size_t>(x)];
  }
  std::vector<int> rep(static_cast<size_t>(nclasses), -1);
  for (int g = 0; g < c.num_mors(); ++g)
    if (rep[static_cast<size_t>(cls[static_cast<size_t>(g)])] < 0) rep[static_cast<size_t>(cls[static_cast<size_t>(g)])] = g;
  q.mors.resize(static_cast<size_t>(nclasses));
  for (int k = 0; k < nclasses; ++k) {
    int r = rep[static_cast<size_t>(k)];
    q.mors[static_cast<size_t>(k)] = {obj_map[static_cast<size_t>(c.mors[static_cast<size_t>(r)].dom)],
                                      obj_map[static_cast<size_t>(c.mors[static_cast<size_t>(r)].cod)]};
  }
  q.identity.resize(q.objects.size(), -1);
  for (int x = 0; x < c.num_objects(); ++x)
    q.identity[static_cast<size_t>(obj_map[static_cast<size_t>(x)])] =
        cls[static_cast<size_t>(c.identity[static_cast<size_t>(x)])];

  // composition of classes via representatives, with a core connector when the
  // representatives do not line up on the nose
  auto compose_classes = [&](int kg, int kf) -> int {
    int g = rep[static_cast<size_t>(kg)], fm = rep[static_cast<size_t>(kf)];
    int fc = c.mors[static_cast<size_t>(fm)].cod, gd = c.mors[static_cast<size_t>(g)].dom;
    if (fc == gd) return cls[static_cast<size_t>(c.compose(g, fm))];
    for (int conn = 0; conn < c.num_mors(); ++conn) {
      if (!in_core[static_cast<size_t>(conn)]) continue;
      if (c.mors[static_cast<size_t>(conn)].dom != fc || c.mors[static_cast<size_t>(conn)].cod != gd) continue;
      return cls[static_cast<size_t>(c.compose(g, c.compose(conn, fm)))];
    }
    return -1;
  };
  q.comp.assign(q.mors.size(), std::vector<int>(q.mors.size(), -1));
  for (int kg = 0; kg < nclasses; ++kg)
    for (int kf = 0; kf < nclasses; ++kf)
      if (q.composable(kg, kf)) q.comp[static_cast<size_t>(kg)][static_cast<size_t>(kf)] = compose_classes(kg, kf);

  FSCategory result{std::move(q), {}, {}};
  result.hflag.assign(static_cast<size_t>(nclasses), 0);
  result.vflag.assign(static_cast<size_t>(nclasses), 0);
  for (int g = 0; g < c.num_mors(); ++g) {
    if (f.hflag[static_cast<size_t>(g)]) result.hflag[static_cast<size_t>(cls[static_cast<size_t>(g)])] = 1;
    if (f.vflag[static_cast<size_t>(g)]) result.vflag[static_cast<size_t>(cls[static_cast<size_t>(g)])] = 1;
  }
  return Completion{std::move(result), FSFunctor{std::move(obj_map), std::move(cls)}};
}

bool fs_isomorphic(const FSCategory& a, const FSCategory& b) {
  if (a.cat.num_objects() != b.cat.num_objects() || a.cat.num_mors() != b.cat.num_mors()) return false;
  auto functors = enumerate_fs_functors(a, b);
  for (const auto& p : functors) {
    std::vector<char> oseen(static_cast<size_t>(b.cat.num_objects()), 0);
    std::vector<char> mseen(static_cast<size_t>(b.cat.num_mors()), 0);
    bool bij = true;
    for (int x : p.obj_map) {
      if (oseen[static_cast<size_t>(x)]) bij = false;
      oseen[static_cast<size_t>(x)] = 1;
    }
    for (int fm : p.mor_map) {
      if (mseen[static_cast<size_t>(fm)]) bij = false;
      mseen[static_cast<size_t>(fm)] = 1;
    }
    if (!bij) continue;
    // flags must be reflected as well
    bool flags_ok = true;
    for (int fm = 0; fm < a.cat.num_mors(); ++fm) {
      int im = p.mor_map[static_cast<size_t>(fm)];
      if (a.hflag[static_cast<size_t>(fm)] != b.hflag[static_cast<size_t>(im)] ||
          a.vflag[static_cast<size_t>(fm)] != b.vflag[static_cast<size_t>(im)])
        flags_ok = false;
    }
    if (flags_ok) return true;
  }
  return false;
}

}  // namespace facterm
