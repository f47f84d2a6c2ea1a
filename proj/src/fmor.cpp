#include "facterm/fmor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace facterm {

namespace {

std::vector<int> identity_map(int top) {
  std::vector<int> v(static_cast<size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

std::vector<int> sigma_map(int top, int i) {
  // {0..top} -> {0..top-1}, collapsing i and i+1.
  std::vector<int> v(static_cast<size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) v[static_cast<size_t>(k)] = k <= i ? k : k - 1;
  return v;
}

std::vector<int> delta_map(int top, int i) {
  // {0..top} -> {0..top+1}, omitting the value i.
  std::vector<int> v(static_cast<size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) v[static_cast<size_t>(k)] = k < i ? k : k + 1;
  return v;
}

bool monotone(const std::vector<int>& v) {
  for (size_t k = 1; k < v.size(); ++k)
    if (v[k] < v[k - 1]) return false;
  return true;
}

// Number of v's before the x-th h; equals the staircase height.
int nu(const FString& s, int x) { return s.min_y(x); }

}  // namespace

FMorphism FMorphism::make(FString source, FString target, std::vector<int> a, std::vector<int> b) {
  if (static_cast<int>(a.size()) != source.n() + 1 || static_cast<int>(b.size()) != source.m() + 1)
    fail(ErrorKind::Input, "coordinate map size does not match source");
  for (int x : a)
    if (x < 0 || x > target.n()) fail(ErrorKind::Range, "a-value " + std::to_string(x) + " outside target range");
  for (int y : b)
    if (y < 0 || y > target.m()) fail(ErrorKind::Range, "b-value " + std::to_string(y) + " outside target range");
  if (!monotone(a) || !monotone(b)) fail(ErrorKind::Input, "coordinate maps must be monotone");
  for (int x = 0; x <= source.n(); ++x) {
    int need = target.min_y(a[static_cast<size_t>(x)]);
    int have = b[static_cast<size_t>(source.min_y(x))];
    if (need > have)
      fail(ErrorKind::Input,
           "containment fails at x=" + std::to_string(x) + ": target height " + std::to_string(need) +
               " exceeds image height " + std::to_string(have));
  }
  return FMorphism{std::move(source), std::move(target), std::move(a), std::move(b)};
}

FMorphism FMorphism::identity(const FString& s) {
  return FMorphism{s, s, identity_map(s.n()), identity_map(s.m())};
}

GridPoint FMorphism::apply(GridPoint p) const {
  if (!source.contains(p))
    fail(ErrorKind::Domain, "apply: point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") not in source region");
  return {a[static_cast<size_t>(p.x)], b[static_cast<size_t>(p.y)]};
}

FMorphism compose(const FMorphism& g, const FMorphism& f) {
  if (f.target != g.source)
    fail(ErrorKind::Composition,
         "compose: middle mismatch (" + f.target.display() + " vs " + g.source.display() + ")");
  std::vector<int> a(f.a.size()), b(f.b.size());
  for (size_t k = 0; k < f.a.size(); ++k) a[k] = g.a[static_cast<size_t>(f.a[k])];
  for (size_t k = 0; k < f.b.size(); ++k) b[k] = g.b[static_cast<size_t>(f.b[k])];
  return FMorphism{f.source, g.target, std::move(a), std::move(b)};
}

std::string token_str(const GeneratorToken& tok) {
  std::ostringstream out;
  switch (tok.kind) {
    case GenKind::SH: out << "sh" << tok.index; break;
    case GenKind::SV: out << "sv" << tok.index; break;
    case GenKind::DH: out << "dh" << tok.index; break;
    case GenKind::DV: out << "dv" << tok.index; break;
    case GenKind::GAMMA: out << "gamma(" << tok.j << "," << tok.i << ")"; break;
  }
  return out.str();
}

bool generator_applicable(const GeneratorToken& tok, const FString& s, std::string* why) {
  auto no = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  switch (tok.kind) {
    case GenKind::SH:
      if (s.n() < 1) return no("sh: no h step to delete");
      if (tok.index < 0 || tok.index > s.n() - 1) return no("sh: index outside [0," + std::to_string(s.n() - 1) + "]");
      return true;
    case GenKind::SV:
      if (s.m() < 1) return no("sv: no v step to delete");
      if (tok.index < 0 || tok.index > s.m() - 1) return no("sv: index outside [0," + std::to_string(s.m() - 1) + "]");
      return true;
    case GenKind::DH:
      if (tok.index < 0 || tok.index > s.n() + 1) return no("dh: index outside [0," + std::to_string(s.n() + 1) + "]");
      return true;
    case GenKind::DV:
      if (tok.index < 0 || tok.index > s.m() + 1) return no("dv: index outside [0," + std::to_string(s.m() + 1) + "]");
      return true;
    case GenKind::GAMMA: {
      if (tok.j < 1 || tok.j > s.m()) return no("gamma: no v number " + std::to_string(tok.j));
      if (tok.i < 1 || tok.i > s.n()) return no("gamma: no h number " + std::to_string(tok.i));
      int vp = s.v_pos(tok.j);
      if (vp + 1 >= s.length() || s.word()[static_cast<size_t>(vp) + 1] != 'h' || s.h_pos(tok.i) != vp + 1)
        return no("gamma: v" + std::to_string(tok.j) + " is not immediately followed by h" + std::to_string(tok.i));
      return true;
    }
  }
  return no("unknown token");
}

FMorphism generator(const GeneratorToken& tok, const FString& s) {
  std::string why;
  if (!generator_applicable(tok, s, &why)) fail(ErrorKind::Generator, "generator " + token_str(tok) + " on " + s.display() + ": " + why);
  std::string w = s.word();
  switch (tok.kind) {
    case GenKind::SH: {
      w.erase(static_cast<size_t>(s.h_pos(tok.index + 1)), 1);
      return FMorphism::make(s, FString(w), sigma_map(s.n(), tok.index), identity_map(s.m()));
    }
    case GenKind::SV: {
      w.erase(static_cast<size_t>(s.v_pos(tok.index + 1)), 1);
      return FMorphism::make(s, FString(w), identity_map(s.n()), sigma_map(s.m(), tok.index));
    }
    case GenKind::DH: {
      if (tok.index == 0)
        w.insert(0, 1, 'h');
      else if (tok.index == s.n() + 1)
        w.push_back('h');
      else
        w.insert(static_cast<size_t>(s.h_pos(tok.index)), 1, 'h');
      return FMorphism::make(s, FString(w), delta_map(s.n(), tok.index), identity_map(s.m()));
    }
    case GenKind::DV: {
      if (tok.index == 0)
        w.insert(0, 1, 'v');
      else if (tok.index == s.m() + 1)
        w.push_back('v');
      else
        w.insert(static_cast<size_t>(s.v_pos(tok.index)), 1, 'v');
      return FMorphism::make(s, FString(w), identity_map(s.n()), delta_map(s.m(), tok.index));
    }
    case GenKind::GAMMA: {
      int vp = s.v_pos(tok.j);
      std::swap(w[static_cast<size_t>(vp)], w[static_cast<size_t>(vp) + 1]);
      return FMorphism::make(s, FString(w), identity_map(s.n()), identity_map(s.m()));
    }
  }
  fail(ErrorKind::Generator, "unreachable");
}

FMorphism from_word(const std::vector<GeneratorToken>& word, const FString& s) {
  FMorphism acc = FMorphism::identity(s);
  for (size_t k = 0; k < word.size(); ++k) {
    std::string why;
    if (!generator_applicable(word[k], acc.target, &why))
      fail(ErrorKind::Word,
           "token #" + std::to_string(k) + " (" + token_str(word[k]) + ") on " + acc.target.display() + ": " + why);
    acc = compose(generator(word[k], acc.target), acc);
  }
  return acc;
}

namespace {

bool is_translation(const std::vector<int>& v) {
  for (size_t k = 1; k < v.size(); ++k)
    if (v[k] != v[k - 1] + 1) return false;
  return true;
}

// Index (along the path) of the last path vertex <= p in the product order,
// or -1 when none exists.
int last_vertex_below(const std::vector<GridPoint>& path, GridPoint p) {
  int best = -1;
  for (size_t t = 0; t < path.size(); ++t)
    if (path[t].x <= p.x && path[t].y <= p.y) best = static_cast<int>(t);
  return best;
}

int first_vertex_above(const std::vector<GridPoint>& path, GridPoint p) {
  for (size_t t = 0; t < path.size(); ++t)
    if (path[t].x >= p.x && path[t].y >= p.y) return static_cast<int>(t);
  return -1;
}

}  // namespace

ClassFlags classify(const FMorphism& f) {
  ClassFlags flags;
  const FString& s = f.source;
  const FString& t = f.target;
  const int n = s.n(), m = s.m();

  flags.ap = f.a[0] == 0 && f.a[static_cast<size_t>(n)] == t.n() && f.b[0] == 0 &&
             f.b[static_cast<size_t>(m)] == t.m();

  flags.inert = is_translation(f.a) && is_translation(f.b);

  if (flags.ap) {
    std::set<GridPoint> tpath;
    for (GridPoint p : t.path_vertices()) tpath.insert(p);
    bool onto_path = true;
    for (GridPoint p : s.path_vertices())
      if (!tpath.count(f.apply(p))) {
        onto_path = false;
        break;
      }
    flags.active = onto_path;
  }

  flags.permutation = flags.inert && n == t.n() && m == t.m() && f.a[0] == 0 && f.b[0] == 0;

  if (flags.inert) {
    int c = f.a[0], d = f.b[0];
    int pos = c + d;
    auto path = t.path_vertices();
    flags.inclusion = pos + s.length() <= t.length() && path[static_cast<size_t>(pos)] == GridPoint{c, d} &&
                      t.word().compare(static_cast<size_t>(pos), static_cast<size_t>(s.length()), s.word()) == 0;

    // covering: the minimal window is everything, i.e. P is the path start
    // and Q the path end.
    int ip = last_vertex_below(path, {c, d});
    int iq = first_vertex_above(path, {f.a[static_cast<size_t>(n)], f.b[static_cast<size_t>(m)]});
    flags.covering = ip == 0 && iq == static_cast<int>(path.size()) - 1;
  }
  return flags;
}

std::pair<FMorphism, FMorphism> factor_active_inert(const FMorphism& f) {
  const FString& s = f.source;
  const int c = f.a[0], d = f.b[0];
  std::string mid;
  int hseen = 0, vseen = 0;
  for (char ch : s.word()) {
    if (ch == 'h') {
      ++hseen;
      mid.append(static_cast<size_t>(f.a[static_cast<size_t>(hseen)] - f.a[static_cast<size_t>(hseen - 1)]), 'h');
    } else {
      ++vseen;
      mid.append(static_cast<size_t>(f.b[static_cast<size_t>(vseen)] - f.b[static_cast<size_t>(vseen - 1)]), 'v');
    }
  }
  FString middle(mid);
  std::vector<int> aa(f.a.size()), bb(f.b.size());
  for (size_t k = 0; k < f.a.size(); ++k) aa[k] = f.a[k] - c;
  for (size_t k = 0; k < f.b.size(); ++k) bb[k] = f.b[k] - d;
  FMorphism act = FMorphism::make(s, middle, std::move(aa), std::move(bb));
  std::vector<int> ai(static_cast<size_t>(middle.n()) + 1), bi(static_cast<size_t>(middle.m()) + 1);
  for (int k = 0; k <= middle.n(); ++k) ai[static_cast<size_t>(k)] = k + c;
  for (int k = 0; k <= middle.m(); ++k) bi[static_cast<size_t>(k)] = k + d;
  FMorphism inrt = FMorphism::make(middle, f.target, std::move(ai), std::move(bi));
  return {act, inrt};
}

std::pair<FMorphism, FMorphism> factor_covering_inclusion(const FMorphism& f) {
  if (!classify(f).inert) fail(ErrorKind::Class, "covering/inclusion factorization requires an inert morphism");
  const FString& t = f.target;
  auto path = t.path_vertices();
  GridPoint lo{f.a.front(), f.b.front()};
  GridPoint hi{f.a.back(), f.b.back()};
  int ip = last_vertex_below(path, lo);
  int iq = first_vertex_above(path, hi);
  if (ip < 0 || iq < 0 || ip > iq) fail(ErrorKind::Class, "covering/inclusion: no bounding window");
  FString middle(t.word().substr(static_cast<size_t>(ip), static_cast<size_t>(iq - ip)));
  GridPoint base = path[static_cast<size_t>(ip)];
  std::vector<int> ac(f.a.size()), bc(f.b.size());
  for (size_t k = 0; k < f.a.size(); ++k) ac[k] = f.a[k] - base.x;
  for (size_t k = 0; k < f.b.size(); ++k) bc[k] = f.b[k] - base.y;
  FMorphism cov = FMorphism::make(f.source, middle, std::move(ac), std::move(bc));
  std::vector<int> ai(static_cast<size_t>(middle.n()) + 1), bi(static_cast<size_t>(middle.m()) + 1);
  for (int k = 0; k <= middle.n(); ++k) ai[static_cast<size_t>(k)] = k + base.x;
  for (int k = 0; k <= middle.m(); ++k) bi[static_cast<size_t>(k)] = k + base.y;
  FMorphism inc = FMorphism::make(middle, t, std::move(ai), std::move(bi));
  return {cov, inc};
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

std::vector<FMorphism> enumerate_morphisms(const FString& s, const FString& t) {
  std::vector<std::vector<int>> amaps, bmaps;
  monotone_maps(s.n(), t.n(), amaps);
  monotone_maps(s.m(), t.m(), bmaps);
  std::vector<FMorphism> out;
  for (const auto& a : amaps)
    for (const auto& b : bmaps) {
      bool ok = true;
      for (int x = 0; x <= s.n() && ok; ++x)
        if (t.min_y(a[static_cast<size_t>(x)]) > b[static_cast<size_t>(s.min_y(x))]) ok = false;
      if (ok) out.push_back(FMorphism{s, t, a, b});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GeneratorToken> canonical_word(const FMorphism& f) {
  std::vector<GeneratorToken> word;
  FString cur = f.source;

  // Degeneracies: v first, then h, smallest index first.
  std::vector<int> b = f.b;
  for (;;) {
    int y = -1;
    for (size_t k = 0; k + 1 < b.size(); ++k)
      if (b[k] == b[k + 1]) {
        y = static_cast<int>(k);
        break;
      }
    if (y < 0) break;
    word.push_back(GeneratorToken::sv(y));
    cur = generator(word.back(), cur).target;
    b.erase(b.begin() + y + 1);
  }
  std::vector<int> a = f.a;
  for (;;) {
    int x = -1;
    for (size_t k = 0; k + 1 < a.size(); ++k)
      if (a[k] == a[k + 1]) {
        x = static_cast<int>(k);
        break;
      }
    if (x < 0) break;
    word.push_back(GeneratorToken::sh(x));
    cur = generator(word.back(), cur).target;
    a.erase(a.begin() + x + 1);
  }

  // Interior faces: missing values of the endpoint-normalized injective maps,
  // v before h, ascending.
  const int c = a.front(), d = b.front();
  {
    std::set<int> image;
    for (int y : b) image.insert(y - d);
    int mtop = b.back() - d;
    for (int vmiss = 1; vmiss < mtop; ++vmiss)
      if (!image.count(vmiss)) {
        word.push_back(GeneratorToken::dv(vmiss));
        cur = generator(word.back(), cur).target;
      }
  }
  {
    std::set<int> image;
    for (int x : a) image.insert(x - c);
    int ntop = a.back() - c;
    for (int hmiss = 1; hmiss < ntop; ++hmiss)
      if (!image.count(hmiss)) {
        word.push_back(GeneratorToken::dh(hmiss));
        cur = generator(word.back(), cur).target;
      }
  }

  // cur is now the pushforward staircase; attach it into the target along the
  // lowest maximal chain through its window, then permute.
  const FString& t = f.target;
  const int nM = cur.n(), mM = cur.m();
  std::string w1, w2;
  {
    int prefix_len = c == 0 ? 0 : t.h_pos(c) + 1;
    w1 = t.word().substr(0, static_cast<size_t>(prefix_len));
    w1.append(static_cast<size_t>(d - t.min_y(c)), 'v');
    int x_end = c + nM, y_end = d + mM;
    int x_lo = y_end == 0 ? 0 : t.v_pos(y_end) - (y_end - 1);
    int x_star = std::max(x_end, x_lo);
    w2.assign(static_cast<size_t>(std::max(0, x_lo - x_end)), 'h');
    w2 += t.word().substr(static_cast<size_t>(x_star + y_end));
  }
  for (size_t k = w1.size(); k-- > 0;) {
    word.push_back(w1[k] == 'h' ? GeneratorToken::dh(0) : GeneratorToken::dv(0));
    cur = generator(word.back(), cur).target;
  }
  for (char ch : w2) {
    word.push_back(ch == 'h' ? GeneratorToken::dh(cur.n() + 1) : GeneratorToken::dv(cur.m() + 1));
    cur = generator(word.back(), cur).target;
  }

  // Swaps: repeatedly fix the smallest h whose v-prefix count is still too
  // large; the v immediately before it is the one to move.
  for (;;) {
    int i = -1;
    for (int k = 1; k <= cur.n(); ++k)
      if (nu(cur, k) > nu(t, k)) {
        i = k;
        break;
      }
    if (i < 0) break;
    word.push_back(GeneratorToken::gamma(nu(cur, i), i));
    cur = generator(word.back(), cur).target;
  }

  if (cur != t || !(from_word(word, f.source) == f))
    fail(ErrorKind::Domain, "canonical_word: normalization failed to reproduce the morphism");
  return word;
}

FString embed_object(char kind, int k) {
  if (k < 0) fail(ErrorKind::Range, "embed_object: negative level");
  switch (kind) {
    case 'h': return FString(std::string(static_cast<size_t>(k), 'h'));
    case 'v': return FString(std::string(static_cast<size_t>(k), 'v'));
    case 't': {
      std::string w;
      for (int t = 0; t < k; ++t) w += "vh";
      return FString(w);
    }
    default: fail(ErrorKind::Input, std::string("embed_object: unknown direction '") + kind + "'");
  }
}

std::vector<GeneratorToken> embed_operator(char kind, SimpOp op, int index, int k) {
  auto range_check = [&](int lo, int hi) {
    if (index < lo || index > hi)
      fail(ErrorKind::Range, "embed_operator: index " + std::to_string(index) + " outside [" + std::to_string(lo) +
                                 "," + std::to_string(hi) + "]");
  };
  if (kind == 'h' || kind == 'v') {
    bool horiz = kind == 'h';
    if (op == SimpOp::Face) {
      range_check(0, k + 1);
      return {horiz ? GeneratorToken::dh(index) : GeneratorToken::dv(index)};
    }
    range_check(0, k - 1);
    return {horiz ? GeneratorToken::sh(index) : GeneratorToken::sv(index)};
  }
  if (kind != 't') fail(ErrorKind::Input, std::string("embed_operator: unknown direction '") + kind + "'");
  if (op == SimpOp::Degeneracy) {
    range_check(0, k - 1);
    return {GeneratorToken::sh(index), GeneratorToken::sv(index)};
  }
  range_check(0, k + 1);
  if (index == 0) return {GeneratorToken::dh(0), GeneratorToken::dv(0)};
  if (index == k + 1) return {GeneratorToken::dv(k + 1), GeneratorToken::dh(k + 1)};
  return {GeneratorToken::dh(index), GeneratorToken::dv(index), GeneratorToken::gamma(index + 1, index)};
}

}  // namespace facterm
