#include "sdot/json_io.hpp"

#include <json.hpp>

namespace sdot {

using nlohmann::json;

namespace {

json parse_document(const std::string& text, const std::string& schema) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("InvalidDocument", e.what());
  }
  if (!j.is_object()) throw Error("InvalidDocument", "top level must be an object");
  if (!j.contains("schema") || !j["schema"].is_string() ||
      j["schema"].get<std::string>() != schema)
    throw Error("InvalidDocument", "expected schema " + schema);
  return j;
}

void require_fields(const json& j, const std::vector<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, _] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error("InvalidDocument", "unknown field '" + key + "' in " + where);
  for (const auto& a : allowed)
    if (!j.contains(a))
      throw Error("InvalidDocument", "missing field '" + a + "' in " + where);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json ids(int card) {
  json a = json::array();
  for (int i = 0; i < card; ++i) a.push_back(i);
  return a;
}

int card_from_ids(const json& a, const std::string& where) {
  if (!a.is_array()) throw Error("InvalidDocument", where + " must be an array");
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (!a[i].is_number_integer() || a[i].get<int>() != i)
      throw Error("InvalidDocument", where + " must list ids 0..card-1");
  return static_cast<int>(a.size());
}

std::vector<int> int_vector(const json& a, const std::string& where) {
  if (!a.is_array()) throw Error("InvalidDocument", where + " must be an array");
  std::vector<int> out;
  for (const auto& v : a) {
    if (!v.is_number_integer())
      throw Error("InvalidDocument", where + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> table(const json& a, const std::string& where) {
  if (!a.is_array()) throw Error("InvalidDocument", where + " must be an array");
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < a.size(); ++i)
    out.push_back(int_vector(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

std::string schema_of(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("InvalidDocument", e.what());
  }
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string())
    throw Error("InvalidDocument", "missing schema field");
  return j["schema"].get<std::string>();
}

std::string tss_to_json(const TruncatedSimplicialSet& x) {
  json j;
  j["schema"] = "tss/v1";
  j["depth"] = x.depth;
  json levels = json::array();
  for (int k = 0; k <= x.depth; ++k) levels.push_back(ids(x.card[k]));
  j["levels"] = levels;
  json faces = json::array();
  for (int k = 1; k <= x.depth; ++k) faces.push_back(x.face[k]);
  j["faces"] = faces;
  json degs = json::array();
  for (int k = 0; k < x.depth; ++k) degs.push_back(x.deg[k]);
  j["degeneracies"] = degs;
  return dump(j);
}

TruncatedSimplicialSet tss_from_json(const std::string& text) {
  json j = parse_document(text, "tss/v1");
  require_fields(j, {"schema", "depth", "levels", "faces", "degeneracies"}, "tss");
  TruncatedSimplicialSet x;
  if (!j["depth"].is_number_integer() || j["depth"].get<int>() < 0)
    throw Error("InvalidDocument", "depth must be a non-negative integer");
  x.depth = j["depth"].get<int>();
  const json& levels = j["levels"];
  if (!levels.is_array() || static_cast<int>(levels.size()) != x.depth + 1)
    throw Error("InvalidDocument", "levels must have depth+1 entries");
  for (int k = 0; k <= x.depth; ++k)
    x.card.push_back(card_from_ids(levels[k], "levels[" + std::to_string(k) + "]"));
  const json& faces = j["faces"];
  const json& degs = j["degeneracies"];
  if (!faces.is_array() || static_cast<int>(faces.size()) != x.depth)
    throw Error("InvalidDocument", "faces must have depth entries");
  if (!degs.is_array() || static_cast<int>(degs.size()) != x.depth)
    throw Error("InvalidDocument", "degeneracies must have depth entries");
  x.face.resize(x.depth + 1);
  x.deg.resize(x.depth + 1);
  for (int k = 1; k <= x.depth; ++k) x.face[k] = table(faces[k - 1], "faces");
  for (int k = 0; k < x.depth; ++k) x.deg[k] = table(degs[k], "degeneracies");
  for (int k = 1; k <= x.depth; ++k) {
    if (static_cast<int>(x.face[k].size()) != k + 1)
      throw Error("InvalidDocument", "faces at level " + std::to_string(k));
    for (const auto& f : x.face[k])
      if (static_cast<int>(f.size()) != x.card[k])
        throw Error("InvalidDocument", "face table size");
  }
  for (int k = 0; k < x.depth; ++k) {
    if (static_cast<int>(x.deg[k].size()) != k + 1)
      throw Error("InvalidDocument", "degeneracies at level " + std::to_string(k));
    for (const auto& f : x.deg[k])
      if (static_cast<int>(f.size()) != x.card[k])
        throw Error("InvalidDocument", "degeneracy table size");
  }
  x.validate();
  return x;
}

std::string pdec_to_json(const PolygonalDecomposition& p) {
  json j;
  j["schema"] = "pdec/v1";
  j["n"] = p.n;
  json d = json::array();
  for (const auto& [a, b] : p.diagonals) d.push_back(json::array({a, b}));
  j["diagonals"] = d;
  return dump(j);
}

PolygonalDecomposition pdec_from_json(const std::string& text) {
  json j = parse_document(text, "pdec/v1");
  require_fields(j, {"schema", "n", "diagonals"}, "pdec");
  if (!j["n"].is_number_integer())
    throw Error("InvalidDocument", "n must be an integer");
  std::vector<std::pair<int, int>> diags;
  if (!j["diagonals"].is_array())
    throw Error("InvalidDocument", "diagonals must be an array");
  for (const auto& d : j["diagonals"]) {
    auto v = int_vector(d, "diagonal");
    if (v.size() != 2) throw Error("InvalidDocument", "diagonal must be a pair");
    diags.push_back({v[0], v[1]});
  }
  return decomposition_from_diagonals(j["n"].get<int>(), std::move(diags));
}

std::string dcat_to_json(const AugmentedDoubleCategory& d) {
  const DoubleCategory& b = d.base;
  json j;
  j["schema"] = "dcat/v1";
  j["objects"] = b.num_ob;
  j["horizontal"] = {{"src", b.hsrc}, {"tgt", b.htgt}, {"id", b.id_hor},
                     {"comp", b.comp_hor}};
  j["vertical"] = {{"src", b.vsrc}, {"tgt", b.vtgt}, {"id", b.id_ver},
                   {"comp", b.comp_ver}};
  j["squares"] = {{"sh", b.sq_sh},         {"th", b.sq_th},
                  {"sv", b.sq_sv},         {"tv", b.sq_tv},
                  {"id_hor", b.id_sq_hor}, {"id_ver", b.id_sq_ver},
                  {"comp_hor", b.comp_sq_hor}, {"comp_ver", b.comp_sq_ver}};
  j["augmentation"] = d.a;
  return dump(j);
}

AugmentedDoubleCategory dcat_from_json(const std::string& text) {
  json j = parse_document(text, "dcat/v1");
  require_fields(j, {"schema", "objects", "horizontal", "vertical", "squares",
                     "augmentation"},
                 "dcat");
  AugmentedDoubleCategory d;
  DoubleCategory& b = d.base;
  if (!j["objects"].is_number_integer() || j["objects"].get<int>() < 0)
    throw Error("InvalidDocument", "objects must be a non-negative integer");
  b.num_ob = j["objects"].get<int>();
  const json& h = j["horizontal"];
  require_fields(h, {"src", "tgt", "id", "comp"}, "horizontal");
  b.hsrc = int_vector(h["src"], "horizontal.src");
  b.htgt = int_vector(h["tgt"], "horizontal.tgt");
  b.id_hor = int_vector(h["id"], "horizontal.id");
  b.comp_hor = table(h["comp"], "horizontal.comp");
  const json& v = j["vertical"];
  require_fields(v, {"src", "tgt", "id", "comp"}, "vertical");
  b.vsrc = int_vector(v["src"], "vertical.src");
  b.vtgt = int_vector(v["tgt"], "vertical.tgt");
  b.id_ver = int_vector(v["id"], "vertical.id");
  b.comp_ver = table(v["comp"], "vertical.comp");
  const json& s = j["squares"];
  require_fields(s, {"sh", "th", "sv", "tv", "id_hor", "id_ver", "comp_hor",
                     "comp_ver"},
                 "squares");
  b.sq_sh = int_vector(s["sh"], "squares.sh");
  b.sq_th = int_vector(s["th"], "squares.th");
  b.sq_sv = int_vector(s["sv"], "squares.sv");
  b.sq_tv = int_vector(s["tv"], "squares.tv");
  b.id_sq_hor = int_vector(s["id_hor"], "squares.id_hor");
  b.id_sq_ver = int_vector(s["id_ver"], "squares.id_ver");
  b.comp_sq_hor = table(s["comp_hor"], "squares.comp_hor");
  b.comp_sq_ver = table(s["comp_ver"], "squares.comp_ver");
  b.num_hor = static_cast<int>(b.hsrc.size());
  b.num_ver = static_cast<int>(b.vsrc.size());
  b.num_sq = static_cast<int>(b.sq_sh.size());
  d.a = int_vector(j["augmentation"], "augmentation");
  b.require_valid();
  for (size_t i = 0; i < d.a.size(); ++i) {
    if (d.a[i] < 0 || d.a[i] >= b.num_ob)
      throw Error("InvalidDocument", "augmentation object out of range");
    if (i > 0 && d.a[i - 1] >= d.a[i])
      throw Error("InvalidDocument", "augmentation must be sorted and distinct");
  }
  return d;
}

std::string paug_to_json(const PreaugBisimplicialSet& y) {
  json j;
  j["schema"] = "paug/v1";
  j["depth"] = y.depth;
  json levels;
  levels["-1"] = ids(y.card_m1);
  for (int k = 0; k <= y.depth; ++k)
    for (int l = 0; l <= y.depth; ++l)
      levels[std::to_string(k) + "," + std::to_string(l)] = ids(y.card[k][l]);
  j["levels"] = levels;
  json hf, vf, hd, vd;
  for (int k = 0; k <= y.depth; ++k)
    for (int l = 0; l <= y.depth; ++l) {
      std::string key = std::to_string(k) + "," + std::to_string(l);
      if (k >= 1) hf[key] = y.hface[k][l];
      if (l >= 1) vf[key] = y.vface[k][l];
      if (k < y.depth) hd[key] = y.hdeg[k][l];
      if (l < y.depth) vd[key] = y.vdeg[k][l];
    }
  j["maps"] = {{"hface", hf.is_null() ? json::object() : hf},
               {"vface", vf.is_null() ? json::object() : vf},
               {"hdeg", hd.is_null() ? json::object() : hd},
               {"vdeg", vd.is_null() ? json::object() : vd},
               {"aug", y.aug}};
  return dump(j);
}

PreaugBisimplicialSet paug_from_json(const std::string& text) {
  json j = parse_document(text, "paug/v1");
  require_fields(j, {"schema", "depth", "levels", "maps"}, "paug");
  PreaugBisimplicialSet y;
  if (!j["depth"].is_number_integer() || j["depth"].get<int>() < 0)
    throw Error("InvalidDocument", "depth must be a non-negative integer");
  y.depth = j["depth"].get<int>();
  const json& levels = j["levels"];
  if (!levels.is_object()) throw Error("InvalidDocument", "levels must be an object");
  std::vector<std::string> level_keys{"-1"};
  y.card.assign(y.depth + 1, std::vector<int>(y.depth + 1, 0));
  for (int k = 0; k <= y.depth; ++k)
    for (int l = 0; l <= y.depth; ++l) {
      std::string key = std::to_string(k) + "," + std::to_string(l);
      level_keys.push_back(key);
      if (!levels.contains(key))
        throw Error("InvalidDocument", "missing level " + key);
      y.card[k][l] = card_from_ids(levels[key], "levels[" + key + "]");
    }
  y.card_m1 = card_from_ids(levels["-1"], "levels[-1]");
  for (const auto& [key, _] : levels.items())
    if (std::find(level_keys.begin(), level_keys.end(), key) == level_keys.end())
      throw Error("InvalidDocument", "unknown level '" + key + "'");
  const json& maps = j["maps"];
  require_fields(maps, {"hface", "vface", "hdeg", "vdeg", "aug"}, "maps");
  y.allocate();
  auto read_tables = [&](const json& m, const std::string& name, auto pred,
                         auto& target) {
    std::vector<std::string> keys;
    for (int k = 0; k <= y.depth; ++k)
      for (int l = 0; l <= y.depth; ++l) {
        if (!pred(k, l)) continue;
        std::string key = std::to_string(k) + "," + std::to_string(l);
        keys.push_back(key);
        if (!m.contains(key))
          throw Error("InvalidDocument", "missing " + name + "[" + key + "]");
        target[k][l] = table(m[key], name + "[" + key + "]");
      }
    for (const auto& [key, _] : m.items())
      if (std::find(keys.begin(), keys.end(), key) == keys.end())
        throw Error("InvalidDocument", "unknown key '" + key + "' in " + name);
  };
  read_tables(maps["hface"], "hface", [&](int k, int) { return k >= 1; }, y.hface);
  read_tables(maps["vface"], "vface", [&](int, int l) { return l >= 1; }, y.vface);
  read_tables(maps["hdeg"], "hdeg", [&](int k, int) { return k < y.depth; }, y.hdeg);
  read_tables(maps["vdeg"], "vdeg", [&](int, int l) { return l < y.depth; }, y.vdeg);
  y.aug = int_vector(maps["aug"], "aug");
  if (static_cast<int>(y.aug.size()) != y.card_m1)
    throw Error("InvalidDocument", "aug size");
  y.validate();
  return y;
}

std::string report_to_json(const CheckReport& r, const std::string& subject) {
  json j;
  j["schema"] = "report/v1";
  j["kind"] = "check";
  j["subject"] = subject;
  j["property"] = r.property;
  j["verdict"] = r.verdict;
  j["failure_count"] = r.failure_count;
  json ws = json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"level", w.level},
                  {"context", w.context},
                  {"element", w.element},
                  {"preimages", w.preimages}});
  j["witnesses"] = ws;
  return dump(j);
}

std::string roundtrip_to_json(const RoundtripReport& r) {
  json j;
  j["schema"] = "report/v1";
  j["kind"] = "roundtrip";
  j["subject"] = r.input_kind;
  j["theorem_expected"] = r.theorem_expected;
  j["all_bijective"] = r.all_bijective;
  json levels = json::array();
  for (const auto& [label, bij] : r.levels)
    levels.push_back({{"level", label}, {"bijective", bij}});
  j["levels"] = levels;
  return dump(j);
}

}  // namespace sdot
