#include "facterm/json_io.hpp"

namespace facterm {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Input, what); }

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("expected integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<int> get_int_array(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad("expected an integer array entry");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

Json fstring_to_json(const FString& s) { return Json{{"word", s.display()}}; }

FString fstring_from_json(const Json& j) {
  if (j.is_string()) return FString::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("word") || !j["word"].is_string()) bad("string: expected {\"word\": ...}");
  return FString::parse(j["word"].get<std::string>());
}

Json token_to_json(const GeneratorToken& t) {
  switch (t.kind) {
    case GenKind::SH: return Json{{"kind", "gh"}, {"index", t.index}};
    case GenKind::SV: return Json{{"kind", "gv"}, {"index", t.index}};
    case GenKind::DH: return Json{{"kind", "dh"}, {"index", t.index}};
    case GenKind::DV: return Json{{"kind", "dv"}, {"index", t.index}};
    case GenKind::GAMMA: return Json{{"kind", "gamma"}, {"j", t.j}, {"i", t.i}};
  }
  bad("token: unknown kind");
}

GeneratorToken token_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("token: expected {\"kind\": ...}");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "gamma") return GeneratorToken::gamma(get_int(j, "j"), get_int(j, "i"));
  int index = get_int(j, "index");
  if (kind == "gh" || kind == "sh") return GeneratorToken::sh(index);
  if (kind == "gv" || kind == "sv") return GeneratorToken::sv(index);
  if (kind == "dh") return GeneratorToken::dh(index);
  if (kind == "dv") return GeneratorToken::dv(index);
  bad("token: unknown kind '" + kind + "'");
}

Json word_to_json(const std::vector<GeneratorToken>& w) {
  Json out = Json::array();
  for (const auto& t : w) out.push_back(token_to_json(t));
  return out;
}

std::vector<GeneratorToken> word_from_json(const Json& j) {
  if (!j.is_array()) bad("word: expected an array of tokens");
  std::vector<GeneratorToken> out;
  for (const auto& e : j) out.push_back(token_from_json(e));
  return out;
}

Json fmorphism_to_json(const FMorphism& f) {
  return Json{{"source", fstring_to_json(f.source)},
              {"target", fstring_to_json(f.target)},
              {"a", f.a},
              {"b", f.b}};
}

FMorphism fmorphism_from_json(const Json& j) {
  if (!j.is_object()) bad("morphism: expected an object");
  if (!j.contains("source") || !j.contains("target") || !j.contains("a") || !j.contains("b"))
    bad("morphism: requires source, target, a, b");
  return FMorphism::make(fstring_from_json(j["source"]), fstring_from_json(j["target"]),
                         get_int_array(j["a"]), get_int_array(j["b"]));
}

Json flags_to_json(const ClassFlags& f) {
  return Json{{"active", f.active},   {"inert", f.inert},       {"inclusion", f.inclusion},
              {"permutation", f.permutation}, {"covering", f.covering}, {"ap", f.ap}};
}

Json fscategory_to_json(const FSCategory& f) {
  Json mors = Json::array();
  for (int k = 0; k < f.cat.num_mors(); ++k)
    mors.push_back(Json{{"id", k},
                        {"dom", f.cat.mors[static_cast<size_t>(k)].dom},
                        {"cod", f.cat.mors[static_cast<size_t>(k)].cod},
                        {"h", static_cast<bool>(f.hflag[static_cast<size_t>(k)])},
                        {"v", static_cast<bool>(f.vflag[static_cast<size_t>(k)])}});
  return Json{{"objects", f.cat.objects},
              {"morphisms", mors},
              {"identities", f.cat.identity},
              {"compose", f.cat.comp}};
}

FSCategory fscategory_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("morphisms") || !j.contains("compose"))
    bad("category: requires objects, morphisms, compose");
  FSCategory f;
  if (!j["objects"].is_array()) bad("category: objects must be an array");
  for (const auto& o : j["objects"]) {
    if (o.is_string())
      f.cat.objects.push_back(o.get<std::string>());
    else
      f.cat.objects.push_back(o.dump());
  }
  if (!j["morphisms"].is_array()) bad("category: morphisms must be an array");
  int next_id = 0;
  for (const auto& mj : j["morphisms"]) {
    if (!mj.is_object()) bad("category: morphism entries must be objects");
    if (mj.contains("id") && get_int(mj, "id") != next_id) bad("category: morphism ids must be 0..k-1 in order");
    ++next_id;
    int dom = get_int(mj, "dom"), cod = get_int(mj, "cod");
    f.cat.mors.push_back({dom, cod});
    f.hflag.push_back(mj.contains("h") ? mj["h"].get<bool>() : false);
    f.vflag.push_back(mj.contains("v") ? mj["v"].get<bool>() : false);
  }
  if (!j["compose"].is_array()) bad("category: compose must be a matrix");
  for (const auto& row : j["compose"]) {
    std::vector<int> r;
    for (const auto& e : row) {
      if (e.is_null())
        r.push_back(-1);
      else if (e.is_number_integer())
        r.push_back(e.get<int>());
      else
        bad("category: compose entries must be integers or null");
    }
    f.cat.comp.push_back(std::move(r));
  }
  if (j.contains("identities")) {
    f.cat.identity = get_int_array(j["identities"]);
  } else {
    // infer: the unique neutral endomorphism of each object
    f.cat.identity.assign(f.cat.objects.size(), -1);
    for (int e = 0; e < f.cat.num_mors(); ++e) {
      const auto& mor = f.cat.mors[static_cast<size_t>(e)];
      if (mor.dom != mor.cod) continue;
      bool neutral = true;
      for (int g = 0; g < f.cat.num_mors() && neutral; ++g) {
        if (f.cat.mors[static_cast<size_t>(g)].dom == mor.dom &&
            f.cat.comp[static_cast<size_t>(g)][static_cast<size_t>(e)] != g)
          neutral = false;
        if (f.cat.mors[static_cast<size_t>(g)].cod == mor.dom &&
            f.cat.comp[static_cast<size_t>(e)][static_cast<size_t>(g)] != g)
          neutral = false;
      }
      if (neutral) f.cat.identity[static_cast<size_t>(mor.dom)] = e;
    }
    for (int id : f.cat.identity)
      if (id < 0) bad("category: an object has no identity morphism listed");
  }
  return f;
}

Json fsfunctor_to_json(const FSFunctor& p) { return Json{{"objects", p.obj_map}, {"morphisms", p.mor_map}}; }

FSFunctor fsfunctor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("morphisms")) bad("functor: requires objects, morphisms");
  return FSFunctor{get_int_array(j["objects"]), get_int_array(j["morphisms"])};
}

Json labeling_to_json(const PathLabeling& lab) { return Json{{"start", lab.start_object}, {"labels", lab.labels}}; }

PathLabeling labeling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("labels")) bad("labeling: requires start, labels");
  return PathLabeling{get_int(j, "start"), get_int_array(j["labels"])};
}

Json table_to_json(const ModelTable& t) {
  Json values = Json::object();
  for (const auto& [word, size] : t.sizes) {
    Json arr = Json::array();
    for (int e = 0; e < size; ++e) arr.push_back(e);
    values[FString(word).blocks()] = arr;
  }
  Json maps = Json::array();
  for (const auto& [key, table] : t.maps)
    maps.push_back(Json{{"source", FString(key.first).blocks()}, {"gen", token_to_json(key.second)}, {"table", table}});
  return Json{{"bound", t.bound}, {"values", values}, {"maps", maps}};
}

ModelTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j.contains("maps")) bad("table: requires values, maps");
  ModelTable t;
  t.bound = j.contains("bound") ? get_int(j, "bound") : 6;
  for (const auto& [key, arr] : j["values"].items()) {
    if (!arr.is_array()) bad("table: values entries must be arrays");
    t.sizes[FString::parse(key).word()] = static_cast<int>(arr.size());
  }
  for (const auto& mj : j["maps"]) {
    if (!mj.is_object() || !mj.contains("source") || !mj.contains("gen") || !mj.contains("table"))
      bad("table: map entries require source, gen, table");
    t.maps[{FString::parse(mj["source"].get<std::string>()).word(), token_from_json(mj["gen"])}] =
        get_int_array(mj["table"]);
  }
  return t;
}

Json span_to_json(const Span& s) {
  Json apex = Json::array();
  for (const auto& [l, r] : s.apex) apex.push_back(Json::array({l, r}));
  return Json{{"left", s.left_size}, {"right", s.right_size}, {"apex", apex}};
}

Span span_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("left") || !j.contains("right") || !j.contains("apex"))
    bad("span: requires left, right, apex");
  Span s;
  s.left_size = get_int(j, "left");
  s.right_size = get_int(j, "right");
  for (const auto& e : j["apex"]) {
    auto pair = get_int_array(e);
    if (pair.size() != 2) bad("span: apex entries must be pairs");
    if (pair[0] < 0 || pair[0] >= s.left_size || pair[1] < 0 || pair[1] >= s.right_size)
      bad("span: leg value out of range");
    s.apex.push_back({pair[0], pair[1]});
  }
  return s;
}

namespace {

Json fincat_to_json(const FinCat& c) {
  Json mors = Json::array();
  for (int k = 0; k < c.num_mors(); ++k)
    mors.push_back(Json{{"id", k}, {"dom", c.mors[static_cast<size_t>(k)].dom}, {"cod", c.mors[static_cast<size_t>(k)].cod}});
  return Json{{"objects", c.objects}, {"morphisms", mors}, {"identities", c.identity}, {"compose", c.comp}};
}

FinCat fincat_from_json(const Json& j) {
  FSCategory f = fscategory_from_json(j);
  return f.cat;
}

}  // namespace

Json distlaw_to_json(const DistLaw& d) {
  Json gamma = Json::array();
  for (const auto& [hv, vh] : d.gamma)
    gamma.push_back(Json{{"h", hv.first}, {"v", hv.second}, {"vp", vh.first}, {"hp", vh.second}});
  return Json{{"objects", d.objects}, {"H", fincat_to_json(d.hcat)}, {"V", fincat_to_json(d.vcat)}, {"gamma", gamma}};
}

DistLaw distlaw_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("H") || !j.contains("V") || !j.contains("gamma"))
    bad("distributive law: requires objects, H, V, gamma");
  DistLaw d;
  for (const auto& o : j["objects"]) d.objects.push_back(o.is_string() ? o.get<std::string>() : o.dump());
  d.hcat = fincat_from_json(j["H"]);
  d.vcat = fincat_from_json(j["V"]);
  for (const auto& g : j["gamma"])
    d.gamma[{get_int(g, "h"), get_int(g, "v")}] = {get_int(g, "vp"), get_int(g, "hp")};
  return d;
}

Json basedistlaw_to_json(const BaseDistLaw& b) {
  Json hf = Json::array(), vf = Json::array();
  for (int mor = 0; mor < static_cast<int>(b.h_fiber.size()); ++mor) {
    Json elems = Json::array();
    for (const auto& e : b.h_fiber[static_cast<size_t>(mor)]) elems.push_back(Json{{"dom", e.dom}, {"cod", e.cod}});
    hf.push_back(Json{{"mor", mor}, {"elements", elems}});
  }
  for (int mor = 0; mor < static_cast<int>(b.v_fiber.size()); ++mor) {
    Json elems = Json::array();
    for (const auto& e : b.v_fiber[static_cast<size_t>(mor)]) elems.push_back(Json{{"dom", e.dom}, {"cod", e.cod}});
    vf.push_back(Json{{"mor", mor}, {"elements", elems}});
  }
  auto comp_json = [](const std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>>& table) {
    Json out = Json::array();
    for (const auto& [gf, entries] : table) {
      Json ej = Json::array();
      for (const auto& [pair, val] : entries)
        ej.push_back(Json{{"ge", pair.first}, {"fe", pair.second}, {"out", val}});
      out.push_back(Json{{"g", gf.first}, {"f", gf.second}, {"entries", ej}});
    }
    return out;
  };
  Json swaps = Json::array();
  for (const auto& [hv, entries] : b.swap_map) {
    Json ej = Json::array();
    for (const auto& [pair, val] : entries)
      ej.push_back(Json{{"ve", pair.first}, {"he", pair.second}, {"v_out", val.first}, {"h_out", val.second}});
    swaps.push_back(Json{{"h", hv.first}, {"v", hv.second}, {"entries", ej}});
  }
  return Json{{"base", fscategory_to_json(b.base)},
              {"object_fibers", b.obj_fiber},
              {"h_fibers", hf},
              {"v_fibers", vf},
              {"unit_h", b.unit_h},
              {"unit_v", b.unit_v},
              {"comp_h", comp_json(b.comp_h)},
              {"comp_v", comp_json(b.comp_v)},
              {"swap", swaps}};
}

BaseDistLaw basedistlaw_from_json(const Json& j) {
  for (const char* key : {"base", "object_fibers", "h_fibers", "v_fibers", "unit_h", "unit_v", "comp_h", "comp_v", "swap"})
    if (!j.contains(key)) bad(std::string("graded law: missing field '") + key + "'");
  BaseDistLaw b;
  b.base = fscategory_from_json(j["base"]);
  b.obj_fiber = get_int_array(j["object_fibers"]);
  auto read_fibers = [&](const Json& arr, std::vector<std::vector<BaseDistLaw::FiberElt>>& out) {
    out.assign(static_cast<size_t>(b.base.cat.num_mors()), {});
    for (const auto& fj : arr) {
      int mor = get_int(fj, "mor");
      if (mor < 0 || mor >= b.base.cat.num_mors()) bad("graded law: fiber over unknown morphism");
      for (const auto& e : fj["elements"]) out[static_cast<size_t>(mor)].push_back({get_int(e, "dom"), get_int(e, "cod")});
    }
  };
  read_fibers(j["h_fibers"], b.h_fiber);
  read_fibers(j["v_fibers"], b.v_fiber);
  for (const auto& row : j["unit_h"]) b.unit_h.push_back(get_int_array(row));
  for (const auto& row : j["unit_v"]) b.unit_v.push_back(get_int_array(row));
  auto read_comp = [&](const Json& arr, std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>>& out) {
    for (const auto& cj : arr)
      for (const auto& e : cj["entries"])
        out[{get_int(cj, "g"), get_int(cj, "f")}][{get_int(e, "ge"), get_int(e, "fe")}] = get_int(e, "out");
  };
  read_comp(j["comp_h"], b.comp_h);
  read_comp(j["comp_v"], b.comp_v);
  for (const auto& sj : j["swap"])
    for (const auto& e : sj["entries"])
      b.swap_map[{get_int(sj, "h"), get_int(sj, "v")}][{get_int(e, "ve"), get_int(e, "he")}] = {
          get_int(e, "v_out"), get_int(e, "h_out")};
  return b;
}

Json homology_to_json(const FString& s, const std::vector<HomologyGroup>& h) {
  Json groups = Json::array();
  for (const auto& g : h) {
    Json tors = Json::array();
    for (const auto& d : g.torsion) tors.push_back(d.str());
    groups.push_back(Json{{"rank", g.rank}, {"torsion", tors}});
  }
  return Json{{"S", s.blocks()}, {"H", groups}};
}

Json orcell_to_json(const OrCell& c) {
  Json levels = Json::array();
  for (const auto& lv : c.levels) {
    Json minus = Json::array(), plus = Json::array();
    for (const auto& f : lv.minus) minus.push_back(f);
    for (const auto& f : lv.plus) plus.push_back(f);
    levels.push_back(Json{{"minus", minus}, {"plus", plus}});
  }
  return Json{{"n", c.n}, {"levels", levels}};
}

OrCell orcell_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("levels")) bad("cell: requires n, levels");
  OrCell c;
  c.n = get_int(j, "n");
  for (const auto& lj : j["levels"]) {
    OrCell::Level lv;
    if (!lj.is_object() || !lj.contains("minus") || !lj.contains("plus")) bad("cell: levels require minus, plus");
    for (const auto& f : lj["minus"]) lv.minus.insert(get_int_array(f));
    for (const auto& f : lj["plus"]) lv.plus.insert(get_int_array(f));
    c.levels.push_back(std::move(lv));
  }
  if (c.levels.empty()) bad("cell: requires at least level 0");
  return c;
}

}  // namespace facterm
