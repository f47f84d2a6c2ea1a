#include "facterm/nerve.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace facterm {

std::vector<PathLabeling> nerve_value(const FSCategory& f, const FString& s) {
  if (check_fs(f)) fail(ErrorKind::Input, "nerve_value: category fails unique factorization");
  const FinCat& c = f.cat;
  std::vector<PathLabeling> out;
  std::vector<int> labels;
  std::function<void(int, size_t, int)> walk = [&](int start, size_t pos, int at) {
    if (pos == s.word().size()) {
      out.push_back(PathLabeling{start, labels});
      return;
    }
    bool horiz = s.word()[pos] == 'h';
    for (int mor = 0; mor < c.num_mors(); ++mor) {
      if (c.mors[static_cast<size_t>(mor)].dom != at) continue;
      if (horiz ? !f.hflag[static_cast<size_t>(mor)] : !f.vflag[static_cast<size_t>(mor)]) continue;
      labels.push_back(mor);
      walk(start, pos + 1, c.mors[static_cast<size_t>(mor)].cod);
      labels.pop_back();
    }
  };
  for (int x = 0; x < c.num_objects(); ++x) walk(x, 0, x);
  return out;  // DFS emits lexicographic order
}

GridLabeling grid_fill(const FSCategory& f, const FString& s, const PathLabeling& lab) {
  const FinCat& c = f.cat;
  if (static_cast<int>(lab.labels.size()) != s.length()) fail(ErrorKind::Input, "grid_fill: labeling length mismatch");
  GridLabeling g;
  auto path = s.path_vertices();
  g.object[path[0]] = lab.start_object;
  for (size_t t = 0; t < lab.labels.size(); ++t) {
    int mor = lab.labels[static_cast<size_t>(t)];
    if (c.mors[static_cast<size_t>(mor)].dom != g.object[path[t]])
      fail(ErrorKind::Input, "grid_fill: labeling not composable at step " + std::to_string(t));
    bool horiz = s.word()[t] == 'h';
    if (horiz ? !f.hflag[static_cast<size_t>(mor)] : !f.vflag[static_cast<size_t>(mor)])
      fail(ErrorKind::Input, "grid_fill: label " + std::to_string(t) + " has the wrong direction");
    if (horiz)
      g.hedge[path[t]] = mor;
    else
      g.vedge[path[t]] = mor;
    g.object[path[t + 1]] = c.mors[static_cast<size_t>(mor)].cod;
  }

  // propagate into the region: a unit square with labeled bottom and right
  // edges determines its left and top edges by unique factorization
  bool progress = true;
  while (progress) {
    progress = false;
    for (int x = 0; x < s.n(); ++x)
      for (int y = 0; y < s.m(); ++y) {
        GridPoint bl{x, y};
        if (!s.contains({x, y}) || !s.contains({x + 1, y})) continue;
        if (g.vedge.count(bl) || !g.hedge.count(bl) || !g.vedge.count({x + 1, y})) continue;
        int bottom = g.hedge[bl];
        int right = g.vedge[{x + 1, y}];
        int diag = c.compose(right, bottom);
        auto [v, h] = factorize_morphism(f, diag);
        g.vedge[bl] = v;
        g.hedge[{x, y + 1}] = h;
        g.object[{x, y + 1}] = c.mors[static_cast<size_t>(v)].cod;
        progress = true;
      }
  }
  for (GridPoint p : s.region_points()) {
    if (!g.object.count(p)) fail(ErrorKind::Domain, "grid_fill: uncovered point");
    if (p.x < s.n() && s.contains({p.x + 1, p.y}) && !g.hedge.count(p)) fail(ErrorKind::Domain, "grid_fill: uncovered h-edge");
    if (p.y < s.m() && !g.vedge.count(p)) fail(ErrorKind::Domain, "grid_fill: uncovered v-edge");
  }
  return g;
}

PathLabeling restrict_labeling(const FSCategory& f, const FMorphism& mor, const PathLabeling& lab_on_target) {
  const FinCat& c = f.cat;
  GridLabeling g = grid_fill(f, mor.target, lab_on_target);
  auto path = mor.source.path_vertices();
  PathLabeling out;
  out.start_object = g.object.at(mor.apply(path[0]));
  for (size_t t = 0; t + 1 < path.size(); ++t) {
    GridPoint from = mor.apply(path[t]);
    GridPoint to = mor.apply(path[t + 1]);
    bool horiz = mor.source.word()[t] == 'h';
    int acc = c.identity[static_cast<size_t>(g.object.at(from))];
    if (horiz) {
      for (int x = from.x; x < to.x; ++x) acc = c.compose(g.hedge.at({x, from.y}), acc);
    } else {
      for (int y = from.y; y < to.y; ++y) acc = c.compose(g.vedge.at({from.x, y}), acc);
    }
    out.labels.push_back(acc);
  }
  return out;
}

namespace {

std::vector<std::string> words_up_to(int bound) {
  std::vector<std::string> out{""};
  std::vector<std::string> frontier{""};
  for (int len = 1; len <= bound; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      next.push_back(w + "h");
      next.push_back(w + "v");
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<GeneratorToken> tokens_on(const FString& s) {
  std::vector<GeneratorToken> out;
  for (int i = 0; i + 1 <= s.n(); ++i) out.push_back(GeneratorToken::sh(i));
  for (int j = 0; j + 1 <= s.m(); ++j) out.push_back(GeneratorToken::sv(j));
  for (int i = 0; i <= s.n() + 1; ++i) out.push_back(GeneratorToken::dh(i));
  for (int j = 0; j <= s.m() + 1; ++j) out.push_back(GeneratorToken::dv(j));
  for (int j = 1; j <= s.m(); ++j)
    for (int i = 1; i <= s.n(); ++i)
      if (generator_applicable(GeneratorToken::gamma(j, i), s)) out.push_back(GeneratorToken::gamma(j, i));
  return out;
}

}  // namespace

ModelTable nerve_table(const FSCategory& f, int bound) {
  ModelTable t;
  t.bound = bound;
  std::map<std::string, std::vector<PathLabeling>> values;
  for (const auto& w : words_up_to(bound)) {
    FString s(w);
    values[w] = nerve_value(f, s);
    t.sizes[w] = static_cast<int>(values[w].size());
  }
  for (const auto& w : words_up_to(bound)) {
    FString s(w);
    for (const auto& tok : tokens_on(s)) {
      FMorphism gen = generator(tok, s);
      if (gen.target.length() > bound) continue;
      const auto& tv = values[gen.target.word()];
      const auto& sv = values[w];
      std::vector<int> table(tv.size());
      for (size_t e = 0; e < tv.size(); ++e) {
        PathLabeling r = restrict_labeling(f, gen, tv[e]);
        auto it = std::lower_bound(sv.begin(), sv.end(), r);
        if (it == sv.end() || !(*it == r)) fail(ErrorKind::Domain, "nerve_table: restriction left the table");
        table[e] = static_cast<int>(it - sv.begin());
      }
      t.maps[{w, tok}] = std::move(table);
    }
  }
  return t;
}

std::vector<int> table_restrict(const ModelTable& t, const FMorphism& mor) {
  if (!t.has(mor.source.word()) || !t.has(mor.target.word()))
    fail(ErrorKind::Coverage, "table_restrict: word outside the table bound");
  auto word = canonical_word(mor);
  // walk the word to recover intermediate strings
  std::vector<FString> stops{mor.source};
  for (const auto& tok : word) stops.push_back(generator(tok, stops.back()).target);
  int size_target = t.sizes.at(mor.target.word());
  std::vector<int> cur(static_cast<size_t>(size_target));
  for (size_t e = 0; e < cur.size(); ++e) cur[e] = static_cast<int>(e);
  for (size_t k = word.size(); k-- > 0;) {
    auto it = t.maps.find({stops[k].word(), word[k]});
    if (it == t.maps.end()) fail(ErrorKind::Coverage, "table_restrict: missing map for " + token_str(word[k]) + " on " + stops[k].display());
    const auto& table = it->second;
    for (auto& e : cur) {
      if (e < 0 || e >= static_cast<int>(table.size()))
        fail(ErrorKind::Coverage, "table_restrict: element index out of range");
      e = table[static_cast<size_t>(e)];
    }
  }
  return cur;
}

bool segal_check(const ModelTable& t, const FString& s) {
  if (!t.has(s.word())) fail(ErrorKind::Coverage, "segal_check: word not in table");
  if (s.length() <= 1) return true;
  if (!t.has("") || !t.has("h") || !t.has("v")) fail(ErrorKind::Coverage, "segal_check: elementary entries missing");

  auto path = s.path_vertices();
  const int k = s.length();
  std::vector<std::vector<int>> seg_restrict;  // per segment: T(S) -> T(e_t)
  std::vector<std::vector<int>> seg_start, seg_end;  // per segment: T(e_t) -> T(*)
  for (int tseg = 0; tseg < k; ++tseg) {
    bool horiz = s.word()[static_cast<size_t>(tseg)] == 'h';
    GridPoint p = path[static_cast<size_t>(tseg)];
    FString e(horiz ? "h" : "v");
    FMorphism incl =
        horiz ? FMorphism::make(e, s, {p.x, p.x + 1}, {p.y}) : FMorphism::make(e, s, {p.x}, {p.y, p.y + 1});
    seg_restrict.push_back(table_restrict(t, incl));
    FString pt;
    FMorphism at0 = FMorphism::make(pt, e, {0}, {0});
    FMorphism at1 = horiz ? FMorphism::make(pt, e, {1}, {0}) : FMorphism::make(pt, e, {0}, {1});
    seg_start.push_back(table_restrict(t, at0));
    seg_end.push_back(table_restrict(t, at1));
  }

  const int size_s = t.sizes.at(s.word());
  std::set<std::vector<int>> images;
  for (int e = 0; e < size_s; ++e) {
    std::vector<int> tuple(static_cast<size_t>(k));
    for (int tseg = 0; tseg < k; ++tseg) tuple[static_cast<size_t>(tseg)] = seg_restrict[static_cast<size_t>(tseg)][static_cast<size_t>(e)];
    if (!images.insert(tuple).second) return false;  // not injective
  }

  // count compatible tuples
  long long compatible = 0;
  std::vector<int> tuple(static_cast<size_t>(k));
  std::function<bool(int)> enumerate = [&](int tseg) -> bool {
    if (tseg == k) {
      ++compatible;
      if (!images.count(tuple)) return false;  // not surjective
      return true;
    }
    const std::string eword(1, s.word()[static_cast<size_t>(tseg)]);
    for (int u = 0; u < t.sizes.at(eword); ++u) {
      if (tseg > 0) {
        int prev = tuple[static_cast<size_t>(tseg - 1)];
        if (seg_end[static_cast<size_t>(tseg - 1)][static_cast<size_t>(prev)] !=
            seg_start[static_cast<size_t>(tseg)][static_cast<size_t>(u)])
          continue;
      }
      tuple[static_cast<size_t>(tseg)] = u;
      if (!enumerate(tseg + 1)) return false;
    }
    return true;
  };
  if (!enumerate(0)) return false;
  return compatible == size_s;
}

FSCategory extract_category(const ModelTable& t) {
  for (const char* w : {"", "h", "v", "vh", "vhvh"})
    if (!t.has(w)) fail(ErrorKind::Coverage, std::string("extract_category: table lacks '") + w + "'");

  const int nobj = t.sizes.at("");
  const int nmor = t.sizes.at("vh");
  FString vh("vh"), pt;

  auto dom_map = table_restrict(t, FMorphism::make(pt, vh, {0}, {0}));
  auto cod_map = table_restrict(t, FMorphism::make(pt, vh, {1}, {1}));
  auto id_map_inv = table_restrict(t, FMorphism::make(vh, pt, {0, 0}, {0, 0}));  // T(*) -> T(vh)

  FinCat c;
  for (int x = 0; x < nobj; ++x) c.objects.push_back("e" + std::to_string(x));
  for (int mor = 0; mor < nmor; ++mor)
    c.mors.push_back({dom_map[static_cast<size_t>(mor)], cod_map[static_cast<size_t>(mor)]});
  c.identity.resize(static_cast<size_t>(nobj));
  for (int x = 0; x < nobj; ++x) c.identity[static_cast<size_t>(x)] = id_map_inv[static_cast<size_t>(x)];

  FString vhvh("vhvh");
  auto first = table_restrict(t, FMorphism::make(vh, vhvh, {0, 1}, {0, 1}));
  auto second = table_restrict(t, FMorphism::make(vh, vhvh, {1, 2}, {1, 2}));
  auto comp_map = table_restrict(t, from_word(embed_operator('t', SimpOp::Face, 1, 1), vh));
  std::map<std::pair<int, int>, int> by_pair;
  for (int w = 0; w < t.sizes.at("vhvh"); ++w)
    by_pair[{first[static_cast<size_t>(w)], second[static_cast<size_t>(w)]}] = w;

  c.comp.assign(static_cast<size_t>(nmor), std::vector<int>(static_cast<size_t>(nmor), -1));
  for (int g = 0; g < nmor; ++g)
    for (int f = 0; f < nmor; ++f) {
      if (!c.composable(g, f)) continue;
      auto it = by_pair.find({f, g});
      if (it == by_pair.end()) fail(ErrorKind::Domain, "extract_category: missing composable witness");
      c.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = comp_map[static_cast<size_t>(it->second)];
    }

  FSCategory out{std::move(c), std::vector<char>(static_cast<size_t>(nmor), 0), std::vector<char>(static_cast<size_t>(nmor), 0)};
  auto h_image = table_restrict(t, generator(GeneratorToken::sv(0), vh));  // T(h) -> T(vh)
  auto v_image = table_restrict(t, generator(GeneratorToken::sh(0), vh));  // T(v) -> T(vh)
  for (int e : h_image) out.hflag[static_cast<size_t>(e)] = 1;
  for (int e : v_image) out.vflag[static_cast<size_t>(e)] = 1;
  return out;
}

std::vector<PathLabeling> cat_nerve_level(const FinCat& c, const std::vector<char>* flag_filter, int k) {
  std::vector<PathLabeling> out;
  std::vector<int> labels;
  std::function<void(int, int, int)> walk = [&](int start, int depth, int at) {
    if (depth == k) {
      out.push_back(PathLabeling{start, labels});
      return;
    }
    for (int mor = 0; mor < c.num_mors(); ++mor) {
      if (c.mors[static_cast<size_t>(mor)].dom != at) continue;
      if (flag_filter && !(*flag_filter)[static_cast<size_t>(mor)]) continue;
      labels.push_back(mor);
      walk(start, depth + 1, c.mors[static_cast<size_t>(mor)].cod);
      labels.pop_back();
    }
  };
  for (int x = 0; x < c.num_objects(); ++x) walk(x, 0, x);
  return out;
}

namespace {

// face/degeneracy on category-nerve chains
PathLabeling chain_face(const FinCat& c, const PathLabeling& chain, int i) {
  PathLabeling out;
  int k = static_cast<int>(chain.labels.size());
  if (i == 0) {
    out.start_object = c.mors[static_cast<size_t>(chain.labels[0])].cod;
    out.labels.assign(chain.labels.begin() + 1, chain.labels.end());
    return out;
  }
  out.start_object = chain.start_object;
  if (i == k) {
    out.labels.assign(chain.labels.begin(), chain.labels.end() - 1);
    return out;
  }
  for (int tpos = 0; tpos < k; ++tpos) {
    if (tpos == i - 1) continue;
    if (tpos == i)
      out.labels.push_back(c.compose(chain.labels[static_cast<size_t>(tpos)], chain.labels[static_cast<size_t>(tpos - 1)]));
    else
      out.labels.push_back(chain.labels[static_cast<size_t>(tpos)]);
  }
  return out;
}

PathLabeling chain_degeneracy(const FinCat& c, const PathLabeling& chain, int j) {
  PathLabeling out;
  out.start_object = chain.start_object;
  int at = chain.start_object;
  for (int tpos = 0; tpos <= static_cast<int>(chain.labels.size()); ++tpos) {
    if (tpos == j) out.labels.push_back(c.identity[static_cast<size_t>(at)]);
    if (tpos < static_cast<int>(chain.labels.size())) {
      out.labels.push_back(chain.labels[static_cast<size_t>(tpos)]);
      at = c.mors[static_cast<size_t>(chain.labels[static_cast<size_t>(tpos)])].cod;
    }
  }
  return out;
}

}  // namespace

RoundtripReport roundtrip_extract(const FSCategory& f, int levels) {
  RoundtripReport rep;
  auto fail_with = [&](const std::string& why) {
    rep.ok = false;
    rep.why = why;
    return rep;
  };
  const FinCat& c = f.cat;

  for (char dir : {'h', 'v', 't'}) {
    const std::vector<char>* filter = dir == 'h' ? &f.hflag : dir == 'v' ? &f.vflag : nullptr;

    // identification: a labeling of the embedded word gives a chain
    auto to_chain = [&](const PathLabeling& lab, int k) -> PathLabeling {
      if (dir != 't') return lab;
      PathLabeling chain;
      chain.start_object = lab.start_object;
      for (int t = 0; t < k; ++t)
        chain.labels.push_back(
            c.compose(lab.labels[static_cast<size_t>(2 * t + 1)], lab.labels[static_cast<size_t>(2 * t)]));
      return chain;
    };

    std::vector<std::vector<PathLabeling>> table_levels, cat_levels;
    for (int k = 0; k <= levels; ++k) {
      table_levels.push_back(nerve_value(f, embed_object(dir, k)));
      cat_levels.push_back(cat_nerve_level(c, filter, k));
    }
    for (int k = 0; k <= levels; ++k) {
      std::vector<PathLabeling> mapped;
      for (const auto& lab : table_levels[static_cast<size_t>(k)]) mapped.push_back(to_chain(lab, k));
      auto sorted = mapped;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != cat_levels[static_cast<size_t>(k)])
        return fail_with(std::string("level sets differ in direction ") + dir + " at level " + std::to_string(k));

      // operators commute with the identification
      for (int i = 0; k >= 1 && i <= k; ++i) {
        auto gen_word = embed_operator(dir, SimpOp::Face, i, k - 1);
        FMorphism face = from_word(gen_word, embed_object(dir, k - 1));
        for (size_t e = 0; e < table_levels[static_cast<size_t>(k)].size(); ++e) {
          PathLabeling restricted = restrict_labeling(f, face, table_levels[static_cast<size_t>(k)][e]);
          PathLabeling expect = chain_face(c, to_chain(table_levels[static_cast<size_t>(k)][e], k), i);
          if (!(to_chain(restricted, k - 1) == expect))
            return fail_with(std::string("face mismatch in direction ") + dir + " at level " + std::to_string(k));
        }
      }
      // degeneracies send level k into level k+1
      for (int j = 0; k < levels && j <= k; ++j) {
        auto gen_word = embed_operator(dir, SimpOp::Degeneracy, j, k + 1);
        FMorphism dmor = from_word(gen_word, embed_object(dir, k + 1));
        for (size_t e = 0; e < table_levels[static_cast<size_t>(k)].size(); ++e) {
          PathLabeling lifted = restrict_labeling(f, dmor, table_levels[static_cast<size_t>(k)][e]);
          PathLabeling expect = chain_degeneracy(c, to_chain(table_levels[static_cast<size_t>(k)][e], k), j);
          if (!(to_chain(lifted, k + 1) == expect))
            return fail_with(std::string("degeneracy mismatch in direction ") + dir + " at level " + std::to_string(k));
        }
      }
    }
  }
  return rep;
}

}  // namespace facterm
