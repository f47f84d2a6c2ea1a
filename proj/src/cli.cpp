#include "facterm/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "facterm/json_io.hpp"

namespace facterm {

Bounds effective_bounds() {
  Bounds b;
  if (const char* env = std::getenv("FACTERM_BOUND")) {
    try {
      int v = std::stoi(env);
      if (v > 0) {
        b.string_len = v;
        b.cat_objects = v;
      }
    } catch (...) {
      // ignore unusable values, keep defaults
    }
  }
  return b;
}

namespace {

struct Args {
  std::string command;
  std::string verb;  // for two-level commands
  std::map<std::string, std::string> flags;
};

const std::map<std::string, bool> kCommands = {
    {"normalize", false},   {"compose", false}, {"factor", false},   {"classify", false},
    {"check-fs", false},    {"nerve", false},   {"restrict", false}, {"segal-check", false},
    {"core", false},        {"complete", false}, {"distlaw", true},  {"laxdata", true},
    {"homology", false},    {"orientals", true}};

Args parse_args(const std::vector<std::string>& argv) {
  Args a;
  if (argv.empty()) fail(ErrorKind::Input, "usage: facterm <command> [flags]");
  a.command = argv[0];
  auto it = kCommands.find(a.command);
  if (it == kCommands.end()) fail(ErrorKind::Input, "unknown command '" + a.command + "'");
  size_t pos = 1;
  if (it->second) {
    if (argv.size() < 2 || argv[1].rfind("--", 0) == 0)
      fail(ErrorKind::Input, "command '" + a.command + "' requires a verb");
    a.verb = argv[1];
    pos = 2;
  }
  for (; pos < argv.size(); pos += 2) {
    if (argv[pos].rfind("--", 0) != 0) fail(ErrorKind::Input, "expected a flag, got '" + argv[pos] + "'");
    if (pos + 1 >= argv.size()) fail(ErrorKind::Input, "flag '" + argv[pos] + "' needs a value");
    a.flags[argv[pos].substr(2)] = argv[pos + 1];
  }
  return a;
}

const std::string& need(const Args& a, const std::string& flag) {
  auto it = a.flags.find(flag);
  if (it == a.flags.end()) fail(ErrorKind::Input, "missing required flag --" + flag);
  return it->second;
}

int need_int(const Args& a, const std::string& flag) {
  const std::string& text = need(a, flag);
  try {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    fail(ErrorKind::Input, "flag --" + flag + " expects an integer, got '" + text + "'");
  }
}

Json load_json(const Args& a, const std::string& flag, std::istream& in) {
  const std::string& where = need(a, flag);
  std::string text;
  if (where == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(where);
    if (!file) fail(ErrorKind::Input, "cannot open input file '" + where + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Input, std::string("input is not valid JSON: ") + e.what());
  }
}

void check_string_bound(const FString& s, const Bounds& b) {
  if (s.length() > b.string_len)
    fail(ErrorKind::Resource,
         "string length " + std::to_string(s.length()) + " above bound " + std::to_string(b.string_len));
}

Json cmd_normalize(const Args& a, std::istream& in) {
  FMorphism f = a.flags.count("input") && !a.flags.count("word")
                    ? fmorphism_from_json(load_json(a, "input", in))
                    : from_word(word_from_json(load_json(a, "word", in)), FString::parse(need(a, "source")));
  Json out = fmorphism_to_json(f);
  out["canonical"] = word_to_json(canonical_word(f));
  return out;
}

Json cmd_compose(const Args& a, std::istream& in) {
  Json j = load_json(a, "input", in);
  if (!j.is_object() || !j.contains("morphisms") || !j["morphisms"].is_array() || j["morphisms"].empty())
    fail(ErrorKind::Input, "compose: expected {\"morphisms\": [f1, f2, ...]} applied first-to-last");
  FMorphism acc = fmorphism_from_json(j["morphisms"][0]);
  for (size_t k = 1; k < j["morphisms"].size(); ++k)
    acc = compose(fmorphism_from_json(j["morphisms"][k]), acc);
  return fmorphism_to_json(acc);
}

Json cmd_factor(const Args& a, std::istream& in) {
  FMorphism f = fmorphism_from_json(load_json(a, "input", in));
  const std::string& system = need(a, "system");
  if (system == "active-inert") {
    auto [act, inrt] = factor_active_inert(f);
    return Json{{"active", fmorphism_to_json(act)}, {"inert", fmorphism_to_json(inrt)}};
  }
  if (system == "covering-inclusion") {
    auto [cov, inc] = factor_covering_inclusion(f);
    return Json{{"covering", fmorphism_to_json(cov)}, {"inclusion", fmorphism_to_json(inc)}};
  }
  fail(ErrorKind::Input, "factor: --system must be active-inert or covering-inclusion");
}

Json cmd_classify(const Args& a, std::istream& in) {
  return flags_to_json(classify(fmorphism_from_json(load_json(a, "input", in))));
}

Json cmd_check_fs(const Args& a, std::istream& in) {
  FSCategory f = fscategory_from_json(load_json(a, "input", in));
  if (auto bad = validate_category(f.cat))
    return Json{{"ok", false}, {"violation", Json{{"what", bad->what}, {"f", bad->f}, {"g", bad->g}, {"h", bad->h}}}};
  if (auto bad = check_fs(f))
    return Json{{"ok", false}, {"violation", Json{{"what", bad->what}, {"morphism", bad->mor}, {"count", bad->count}}}};
  return Json{{"ok", true}};
}

Json cmd_nerve(const Args& a, std::istream& in, const Bounds& bounds) {
  FSCategory f = fscategory_from_json(load_json(a, "input", in));
  FString s = FString::parse(need(a, "string"));
  check_string_bound(s, bounds);
  if (f.cat.num_objects() > bounds.cat_objects)
    fail(ErrorKind::Resource, "category has " + std::to_string(f.cat.num_objects()) + " objects, bound is " +
                                  std::to_string(bounds.cat_objects));
  if (auto bad = validate_category(f.cat)) fail(ErrorKind::Domain, "invalid category: " + bad->what);
  if (auto bad = check_fs(f)) fail(ErrorKind::Domain, "not a factorization category: " + bad->what);
  auto labs = nerve_value(f, s);
  Json arr = Json::array();
  for (const auto& lab : labs) arr.push_back(labeling_to_json(lab));
  return Json{{"S", s.blocks()}, {"count", static_cast<int>(labs.size())}, {"labelings", arr}};
}

Json cmd_restrict(const Args& a, std::istream& in) {
  Json j = load_json(a, "input", in);
  for (const char* key : {"category", "morphism", "labeling"})
    if (!j.contains(key)) fail(ErrorKind::Input, std::string("restrict: missing field '") + key + "'");
  FSCategory f = fscategory_from_json(j["category"]);
  if (auto bad = validate_category(f.cat)) fail(ErrorKind::Domain, "invalid category: " + bad->what);
  if (auto bad = check_fs(f)) fail(ErrorKind::Domain, "not a factorization category: " + bad->what);
  FMorphism mor = fmorphism_from_json(j["morphism"]);
  PathLabeling lab = labeling_from_json(j["labeling"]);
  if (static_cast<int>(lab.labels.size()) != mor.target.length())
    fail(ErrorKind::Input, "restrict: labeling length does not match the morphism target");
  return labeling_to_json(restrict_labeling(f, mor, lab));
}

Json cmd_segal(const Args& a, std::istream& in, const Bounds& bounds) {
  ModelTable t = table_from_json(load_json(a, "input", in));
  FString s = FString::parse(need(a, "string"));
  check_string_bound(s, bounds);
  return Json{{"S", s.blocks()}, {"ok", segal_check(t, s)}};
}

Json cmd_core(const Args& a, std::istream& in) {
  FSCategory f = fscategory_from_json(load_json(a, "input", in));
  if (auto bad = validate_category(f.cat)) fail(ErrorKind::Domain, "invalid category: " + bad->what);
  if (auto bad = check_fs(f)) fail(ErrorKind::Domain, "not a factorization category: " + bad->what);
  return fscategory_to_json(core_groupoid(f).core);
}

Json cmd_complete(const Args& a, std::istream& in) {
  FSCategory f = fscategory_from_json(load_json(a, "input", in));
  if (auto bad = validate_category(f.cat)) fail(ErrorKind::Domain, "invalid category: " + bad->what);
  if (auto bad = check_fs(f)) fail(ErrorKind::Domain, "not a factorization category: " + bad->what);
  Completion c = complete(f);
  return Json{{"category", fscategory_to_json(c.result)}, {"quotient", fsfunctor_to_json(c.quotient)}};
}

Json cmd_distlaw(const Args& a, std::istream& in) {
  if (a.verb == "check") {
    DistLaw d = distlaw_from_json(load_json(a, "input", in));
    if (auto bad = check_beck(d))
      return Json{{"ok", false},
                  {"violation", Json{{"what", bad->what}, {"h", bad->h}, {"v", bad->v}, {"h2", bad->h2}, {"v2", bad->v2}}}};
    return Json{{"ok", true}};
  }
  if (a.verb == "from-fs") {
    FSCategory f = fscategory_from_json(load_json(a, "input", in));
    if (auto bad = validate_category(f.cat)) fail(ErrorKind::Domain, "invalid category: " + bad->what);
    if (auto bad = check_fs(f)) fail(ErrorKind::Domain, "not a factorization category: " + bad->what);
    return distlaw_to_json(distlaw_from_fs(f));
  }
  if (a.verb == "to-fs") return fscategory_to_json(fs_from_distlaw(distlaw_from_json(load_json(a, "input", in))));
  fail(ErrorKind::Input, "distlaw: verb must be check, from-fs or to-fs");
}

Json cmd_laxdata(const Args& a, std::istream& in) {
  if (a.verb == "extract") {
    Json j = load_json(a, "input", in);
    for (const char* key : {"total", "base", "functor"})
      if (!j.contains(key)) fail(ErrorKind::Input, std::string("laxdata extract: missing field '") + key + "'");
    return basedistlaw_to_json(lax_data_from_functor(fscategory_from_json(j["total"]),
                                                     fscategory_from_json(j["base"]),
                                                     fsfunctor_from_json(j["functor"])));
  }
  if (a.verb == "reconstruct") {
    Reconstruction r = functor_from_lax_data(basedistlaw_from_json(load_json(a, "input", in)));
    return Json{{"total", fscategory_to_json(r.total)}, {"projection", fsfunctor_to_json(r.projection)}};
  }
  fail(ErrorKind::Input, "laxdata: verb must be extract or reconstruct");
}

Json cmd_homology(const Args& a, const Bounds& bounds) {
  FString s = FString::parse(need(a, "string"));
  check_string_bound(s, bounds);
  return homology_to_json(s, homology(s));
}

Json cmd_orientals(const Args& a, std::istream& in) {
  if (a.verb == "enumerate") {
    int n = need_int(a, "n"), k = need_int(a, "k");
    auto cells = enumerate_cells(n, k);
    Json arr = Json::array();
    int degenerate = 0;
    for (const auto& c : cells) {
      arr.push_back(orcell_to_json(c));
      if (c.is_degenerate()) ++degenerate;
    }
    return Json{{"n", n},
                {"k", k},
                {"cells", arr},
                {"degenerate", degenerate},
                {"nondegenerate", static_cast<int>(cells.size()) - degenerate}};
  }
  if (a.verb == "validate") {
    OrCell c = orcell_from_json(load_json(a, "input", in));
    if (auto bad = validate_cell(c))
      return Json{{"ok", false}, {"violation", Json{{"what", bad->what}, {"level", bad->level}}}};
    return Json{{"ok", true}};
  }
  if (a.verb == "compose") {
    Json j = load_json(a, "input", in);
    for (const char* key : {"x", "y", "p"})
      if (!j.contains(key)) fail(ErrorKind::Input, std::string("orientals compose: missing field '") + key + "'");
    if (!j["p"].is_number_integer()) fail(ErrorKind::Input, "orientals compose: p must be an integer");
    return orcell_to_json(compose_cells(orcell_from_json(j["y"]), orcell_from_json(j["x"]), j["p"].get<int>()));
  }
  fail(ErrorKind::Input, "orientals: verb must be enumerate, validate or compose");
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Bounds bounds = effective_bounds();
  try {
    Args a = parse_args(argv);
    Json result;
    if (a.command == "normalize") result = cmd_normalize(a, in);
    else if (a.command == "compose") result = cmd_compose(a, in);
    else if (a.command == "factor") result = cmd_factor(a, in);
    else if (a.command == "classify") result = cmd_classify(a, in);
    else if (a.command == "check-fs") result = cmd_check_fs(a, in);
    else if (a.command == "nerve") result = cmd_nerve(a, in, bounds);
    else if (a.command == "restrict") result = cmd_restrict(a, in);
    else if (a.command == "segal-check") result = cmd_segal(a, in, bounds);
    else if (a.command == "core") result = cmd_core(a, in);
    else if (a.command == "complete") result = cmd_complete(a, in);
    else if (a.command == "distlaw") result = cmd_distlaw(a, in);
    else if (a.command == "laxdata") result = cmd_laxdata(a, in);
    else if (a.command == "homology") result = cmd_homology(a, bounds);
    else if (a.command == "orientals") result = cmd_orientals(a, in);
    else fail(ErrorKind::Input, "unknown command");
    out << result.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Input) {
      err << Json{{"error", std::string(error_kind_name(e.kind())) + ": " + e.what()}}.dump() << "\n";
      return 2;
    }
    Json j{{"error", std::string(error_kind_name(e.kind())) + ": " + e.what()}};
    j["witness"] = e.witness();
    out << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"error", std::string("malformed input: ") + e.what()}}.dump() << "\n";
    return 2;
  }
}

}  // namespace facterm
