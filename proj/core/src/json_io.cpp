#include "torelli/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace torelli {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& ex) {
    throw std::runtime_error(std::string("bad json: ") + ex.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void bad(const std::string& what) { throw std::runtime_error("bad json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<long long> as_int_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<long long> out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(as_int(v, what));
  return out;
}

}  // namespace

std::string homology_to_json(const HomologyClass& h) { return dump(json(h.c)); }

HomologyClass homology_from_json(const std::string& text) {
  std::vector<long long> c = as_int_array(parse(text), "homology class");
  if (c.empty() || c.size() % 2 != 0) bad("homology class needs even positive length");
  return HomologyClass(std::move(c));
}

std::string triwedge_to_json(const TriWedge& w) {
  json arr = json::array();
  for (const auto& [t, v] : w.coeff) {
    if (v == 0) continue;
    arr.push_back({{"triple", {t.i + 1, t.j + 1, t.k + 1}}, {"coeff", v}});
  }
  return dump(arr);
}

TriWedge triwedge_from_json(const std::string& text, int g) {
  json j = parse(text);
  if (!j.is_array()) bad("wedge must be an array of terms");
  TriWedge w;
  for (const json& term : j) {
    std::vector<long long> t = as_int_array(field(term, "triple"), "triple");
    if (t.size() != 3) bad("triple needs three indices");
    for (long long i : t)
      if (i < 1 || i > 2 * g) bad("triple index out of range");
    w.add(static_cast<int>(t[0]) - 1, static_cast<int>(t[1]) - 1, static_cast<int>(t[2]) - 1,
          as_int(field(term, "coeff"), "coeff"));
  }
  return w;
}

std::string cohomology_to_json(const CohomologyClass& e) {
  return dump(json{{"dual", e.dual}, {"modulus", e.modulus}});
}

CohomologyClass cohomology_from_json(const std::string& text) {
  json j = parse(text);
  CohomologyClass e;
  e.dual = as_int_array(field(j, "dual"), "dual");
  e.modulus = as_int(field(j, "modulus"), "modulus");
  if (e.dual.empty() || e.dual.size() % 2 != 0) bad("dual needs even positive length");
  if (e.modulus < 0) bad("modulus must be nonnegative");
  return e;
}

std::string complex_to_json(const CellComplex& cx) {
  json edges = json::array();
  for (const auto& e : cx.edges) edges.push_back({e[0] + 1, e[1] + 1});
  return dump(json{{"vertices", cx.nverts},
                   {"edges", edges},
                   {"faces", cx.faces},
                   {"boundary", cx.boundary}});
}

CellComplex complex_from_json(const std::string& text) {
  json j = parse(text);
  CellComplex cx;
  cx.nverts = static_cast<int>(as_int(field(j, "vertices"), "vertices"));
  for (const json& e : field(j, "edges")) {
    std::vector<long long> uv = as_int_array(e, "edge");
    if (uv.size() != 2) bad("edge needs two vertex ids");
    for (long long v : uv)
      if (v < 1 || v > cx.nverts) bad("edge vertex out of range");
    cx.edges.push_back({static_cast<int>(uv[0]) - 1, static_cast<int>(uv[1]) - 1});
  }
  auto signed_edges = [&](const json& a, const char* what) {
    std::vector<int> out;
    for (long long s : as_int_array(a, what)) {
      if (s == 0 || std::abs(s) > cx.nedges()) bad(std::string(what) + " edge id out of range");
      out.push_back(static_cast<int>(s));
    }
    return out;
  };
  for (const json& f : field(j, "faces")) cx.faces.push_back(signed_edges(f, "face"));
  cx.boundary = signed_edges(field(j, "boundary"), "boundary");
  cx.validate();
  return cx;
}

std::string function_to_json(const ConstructibleFunction& fn) {
  json j = json::object();
  auto put = [&](const char* tag, const std::vector<long long>& vals) {
    for (size_t i = 0; i < vals.size(); ++i)
      if (vals[i] != 0) j[std::string(tag) + "/" + std::to_string(i + 1)] = vals[i];
  };
  put("v", fn.v);
  put("e", fn.e);
  put("f", fn.f);
  return dump(j);
}

ConstructibleFunction function_from_json(const std::string& text, const CellComplex& cx) {
  json j = parse(text);
  if (!j.is_object()) bad("constructible function must be an object");
  ConstructibleFunction fn = ConstructibleFunction::zero_for(cx);
  for (const auto& [key, val] : j.items()) {
    if (key.size() < 3 || key[1] != '/') bad("cell key must look like v/1, e/2, f/3");
    long long idx = 0;
    try {
      idx = std::stoll(key.substr(2));
    } catch (...) {
      bad("cell key index not a number");
    }
    std::vector<long long>* dst = key[0] == 'v'   ? &fn.v
                                  : key[0] == 'e' ? &fn.e
                                  : key[0] == 'f' ? &fn.f
                                                  : nullptr;
    if (!dst) bad("cell key must start with v, e or f");
    if (idx < 1 || idx > static_cast<long long>(dst->size())) bad("cell key out of range");
    (*dst)[idx - 1] = as_int(val, "cell value");
  }
  return fn;
}

std::string word_to_json(const TorelliWord& w) {
  json arr = json::array();
  for (const TorelliLetter& l : w) arr.push_back({{"gen", l.gen}, {"exp", l.exp}});
  return dump(arr);
}

TorelliWord word_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_array()) bad("word must be an array of letters");
  TorelliWord w;
  for (const json& l : j) {
    const json& gen = field(l, "gen");
    if (!gen.is_string()) bad("gen must be a string");
    long long exp = as_int(field(l, "exp"), "exp");
    if (exp != 1 && exp != -1) bad("exp must be +1 or -1");
    w.push_back({gen.get<std::string>(), static_cast<int>(exp)});
  }
  return w;
}

std::string fatgraph_to_json(const FatGraph& fg) {
  return dump(json{{"g", fg.g}, {"cyclic_order", fg.order}});
}

FatGraph fatgraph_from_json(const std::string& text) {
  json j = parse(text);
  FatGraph fg;
  fg.g = static_cast<int>(as_int(field(j, "g"), "g"));
  if (fg.g < 3) bad("genus must be at least 3");
  for (long long s : as_int_array(field(j, "cyclic_order"), "cyclic_order")) {
    if (s < 0 || s >= 4ll * fg.g) bad("half-edge id out of range");
    fg.order.push_back(static_cast<int>(s));
  }
  fg.pos.assign(4 * fg.g, -1);
  if (fg.order.size() != fg.pos.size()) bad("cyclic_order needs 4g half-edges");
  for (size_t i = 0; i < fg.order.size(); ++i) {
    if (fg.pos[fg.order[i]] != -1) bad("cyclic_order repeats a half-edge");
    fg.pos[fg.order[i]] = static_cast<int>(i);
  }
  fg.validate();
  return fg;
}

std::string immersion_to_json(const PlanarImmersion& im) {
  return dump(json{{"unit", im.unit}, {"angles", im.angles}, {"band_turns", im.band_turns}});
}

PlanarImmersion immersion_from_json(const std::string& text) {
  json j = parse(text);
  PlanarImmersion im;
  im.unit = static_cast<int>(as_int(field(j, "unit"), "unit"));
  for (long long a : as_int_array(field(j, "angles"), "angles"))
    im.angles.push_back(static_cast<int>(a));
  for (long long t : as_int_array(field(j, "band_turns"), "band_turns"))
    im.band_turns.push_back(static_cast<int>(t));
  return im;  // geometric checks run against the fatgraph in validate()
}

namespace {

json images_json(const MappingClass& m, int g) {
  json imgs = json::array(), invs = json::array();
  for (int i = 0; i < 2 * g; ++i) {
    imgs.push_back(word_str(m.img[i]));
    invs.push_back(word_str(m.inv[i]));
  }
  return json{{"images", imgs}, {"inverse_images", invs}};
}

MappingClass images_from_json(const json& j, int g) {
  MappingClass m;
  m.g = g;
  auto read = [&](const char* key, std::vector<FreeWord>& dst) {
    const json& arr = field(j, key);
    if (!arr.is_array() || arr.size() != static_cast<size_t>(2 * g)) bad("map needs 2g images");
    for (const json& s : arr) {
      if (!s.is_string()) bad("image must be a word string");
      dst.push_back(parse_word(s.get<std::string>(), g));
    }
  };
  read("images", m.img);
  read("inverse_images", m.inv);
  return m;
}

}  // namespace

std::string catalog_to_json(const Catalog& cat) {
  int g = cat.spec.genus;
  json entries = json::array();
  for (const CatalogEntry& e : cat.entries) {
    entries.push_back({{"name", e.name},
                       {"separating", e.separating},
                       {"a", word_str(e.a)},
                       {"b", word_str(e.b)},
                       {"handles", e.handles},
                       {"a_class", e.a_class.c},
                       {"fwd", images_json(e.fwd, g)},
                       {"bwd", images_json(e.bwd, g)}});
  }
  return dump(json{{"genus", g}, {"bordered", cat.spec.bordered}, {"entries", entries}});
}

Catalog catalog_from_json(const std::string& text) {
  json j = parse(text);
  int g = static_cast<int>(as_int(field(j, "genus"), "genus"));
  const json& bordered = field(j, "bordered");
  if (!bordered.is_boolean()) bad("bordered must be a boolean");
  Catalog cat;
  cat.spec = SurfaceSpec{g, bordered.get<bool>()};
  for (const json& ej : field(j, "entries")) {
    CatalogEntry e;
    const json& name = field(ej, "name");
    if (!name.is_string()) bad("entry name must be a string");
    e.name = name.get<std::string>();
    const json& sep = field(ej, "separating");
    if (!sep.is_boolean()) bad("separating must be a boolean");
    e.separating = sep.get<bool>();
    const json& aw = field(ej, "a");
    const json& bw = field(ej, "b");
    if (!aw.is_string() || !bw.is_string()) bad("curves must be word strings");
    e.a = parse_word(aw.get<std::string>(), g);
    e.b = parse_word(bw.get<std::string>(), g);
    for (long long h : as_int_array(field(ej, "handles"), "handles"))
      e.handles.push_back(static_cast<int>(h));
    e.a_class = HomologyClass(as_int_array(field(ej, "a_class"), "a_class"));
    if (e.a_class.rank() != 2 * g) bad("a_class needs 2g coordinates");
    e.fwd = images_from_json(field(ej, "fwd"), g);
    e.bwd = images_from_json(field(ej, "bwd"), g);
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

std::string graph_to_json(const UniverseGraph& g, const std::vector<TameSet>& edge_cells) {
  json verts = json::array();
  for (const CurveVertex& v : g.verts) verts.push_back(v.w);
  json edges = json::array();
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const UniverseGraph::Edge& e = g.edges[i];
    json cells = json::array();
    if (i < edge_cells.size()) {
      const TameSet& u = edge_cells[i];
      for (size_t c = 0; c < u.v.size(); ++c)
        if (u.v[c]) cells.push_back("v/" + std::to_string(c + 1));
      for (size_t c = 0; c < u.e.size(); ++c)
        if (u.e[c]) cells.push_back("e/" + std::to_string(c + 1));
      for (size_t c = 0; c < u.f.size(); ++c)
        if (u.f[c]) cells.push_back("f/" + std::to_string(c + 1));
    }
    edges.push_back({{"src", e.u + 1},
                     {"dst", e.v + 1},
                     {"sign", e.sign},
                     {"genus", e.genus},
                     {"cells", cells}});
  }
  return dump(json{{"genus", g.spec.genus},
                   {"bordered", g.spec.bordered},
                   {"vertices", verts},
                   {"edges", edges}});
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace torelli
