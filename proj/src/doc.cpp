#include "bgm/doc.hpp"

#include <fstream>
#include <sstream>

namespace bgm {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw StructuralError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string str_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string())
    throw StructuralError(where + ": field '" + key + "' is not a string");
  return v.get<std::string>();
}

std::vector<Id> id_list(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_array()) throw StructuralError(where + ": field '" + key + "' is not a list");
  std::vector<Id> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw StructuralError(where + "/" + key + ": non-string entry");
    out.push_back(e.get<std::string>());
  }
  return out;
}

json arrows_json(const std::vector<Arrow>& arrs) {
  json out = json::array();
  for (const auto& a : arrs)
    out.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  return out;
}

std::vector<Arrow> arrows_of(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_array()) throw StructuralError(where + ": field '" + key + "' is not a list");
  std::vector<Arrow> out;
  for (const auto& e : v)
    out.push_back({str_field(e, "id", where + "/" + key),
                   str_field(e, "src", where + "/" + key),
                   str_field(e, "tgt", where + "/" + key)});
  return out;
}

json map_json(const std::map<Id, Id>& m, const char* k1, const char* k2) {
  json out = json::array();
  for (const auto& [a, b] : m) out.push_back({{k1, a}, {k2, b}});
  return out;
}

std::map<Id, Id> map_of(const json& j, const char* key, const char* k1, const char* k2,
                        const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_array()) throw StructuralError(where + ": field '" + key + "' is not a list");
  std::map<Id, Id> out;
  for (const auto& e : v)
    out[str_field(e, k1, where + "/" + key)] = str_field(e, k2, where + "/" + key);
  return out;
}

json groupoid_json(const FiniteGroupoid& G) {
  json j;
  j["objects"] = G.objects;
  j["arrows"] = arrows_json(G.arrows);
  j["identity"] = map_json(G.identity, "object", "arrow");
  json cmp = json::array();
  for (const auto& [k, r] : G.compose)
    cmp.push_back({{"after", k.first}, {"before", k.second}, {"result", r}});
  j["compose"] = cmp;
  j["inverse"] = map_json(G.inverse, "arrow", "result");
  return j;
}

FiniteGroupoid groupoid_of(const json& j, const std::string& where) {
  FiniteGroupoid G;
  G.objects = id_list(j, "objects", where);
  G.arrows = arrows_of(j, "arrows", where);
  G.identity = map_of(j, "identity", "object", "arrow", where);
  for (const auto& e : field(j, "compose", where))
    G.compose[{str_field(e, "after", where), str_field(e, "before", where)}] =
        str_field(e, "result", where);
  G.inverse = map_of(j, "inverse", "arrow", "result", where);
  return G;
}

json functor_maps_json(const GroupoidFunctor& F) {
  json j;
  j["object_map"] = map_json(F.object_map, "from", "to");
  j["arrow_map"] = map_json(F.arrow_map, "from", "to");
  return j;
}

// source/target come from the surrounding tables, not the file
GroupoidFunctor functor_of(const json& j, FiniteGroupoid src, FiniteGroupoid tgt,
                           const std::string& where) {
  GroupoidFunctor F;
  F.source = std::move(src);
  F.target = std::move(tgt);
  F.object_map = map_of(j, "object_map", "from", "to", where);
  F.arrow_map = map_of(j, "arrow_map", "from", "to", where);
  return F;
}

json bigroupoid_json(const FiniteBigroupoid& B) {
  json j;
  j["zero_cells"] = B.zero_cells;
  json hom = json::array();
  for (const auto& [k, G] : B.hom)
    hom.push_back({{"src", k.first}, {"tgt", k.second}, {"groupoid", groupoid_json(G)}});
  j["hom"] = hom;
  json cmp = json::array();
  for (const auto& [k, F] : B.comp) {
    const auto& [a, b, c] = k;
    cmp.push_back({{"a", a}, {"b", b}, {"c", c}, {"functor", functor_maps_json(F)}});
  }
  j["comp"] = cmp;
  j["unit"] = map_json(B.unit, "zero", "one");
  json inv = json::array();
  for (const auto& [k, F] : B.inv)
    inv.push_back({{"src", k.first}, {"tgt", k.second}, {"functor", functor_maps_json(F)}});
  j["inv"] = inv;
  json assoc = json::array();
  for (const auto& [k, cell] : B.assoc) {
    const auto& [a, b, c, d, h, g, f] = k;
    assoc.push_back({{"a", a}, {"b", b}, {"c", c}, {"d", d},
                     {"h", h}, {"g", g}, {"f", f}, {"cell", cell}});
  }
  j["assoc"] = assoc;
  auto cells = [](const std::map<CellKey, Id>& m) {
    json out = json::array();
    for (const auto& [k, cell] : m) {
      const auto& [a, b, f] = k;
      out.push_back({{"a", a}, {"b", b}, {"f", f}, {"cell", cell}});
    }
    return out;
  };
  j["lunit"] = cells(B.lunit);
  j["runit"] = cells(B.runit);
  j["counit"] = cells(B.counit);
  j["unit2"] = cells(B.unit2);
  return j;
}

FiniteBigroupoid bigroupoid_of_json(const json& j, const std::string& where) {
  FiniteBigroupoid B;
  B.zero_cells = id_list(j, "zero_cells", where);
  for (const auto& e : field(j, "hom", where))
    B.hom[{str_field(e, "src", where), str_field(e, "tgt", where)}] =
        groupoid_of(field(e, "groupoid", where), where + "/hom");
  for (const auto& e : field(j, "comp", where)) {
    Id a = str_field(e, "a", where), b = str_field(e, "b", where), c = str_field(e, "c", where);
    B.comp[{a, b, c}] =
        functor_of(field(e, "functor", where), product_groupoid(B.H(b, c), B.H(a, b)),
                   B.H(a, c), where + "/comp");
  }
  B.unit = map_of(j, "unit", "zero", "one", where);
  for (const auto& e : field(j, "inv", where)) {
    Id a = str_field(e, "src", where), b = str_field(e, "tgt", where);
    B.inv[{a, b}] =
        functor_of(field(e, "functor", where), B.H(a, b), B.H(b, a), where + "/inv");
  }
  for (const auto& e : field(j, "assoc", where))
    B.assoc[{str_field(e, "a", where), str_field(e, "b", where), str_field(e, "c", where),
             str_field(e, "d", where), str_field(e, "h", where), str_field(e, "g", where),
             str_field(e, "f", where)}] = str_field(e, "cell", where);
  auto cells = [&](const char* key) {
    std::map<CellKey, Id> out;
    for (const auto& e : field(j, key, where))
      out[{str_field(e, "a", where), str_field(e, "b", where), str_field(e, "f", where)}] =
          str_field(e, "cell", where);
    return out;
  };
  B.lunit = cells("lunit");
  B.runit = cells("runit");
  B.counit = cells("counit");
  B.unit2 = cells("unit2");
  return B;
}

json pseudofunctor_json(const Pseudofunctor& F) {
  json j;
  j["source"] = bigroupoid_json(F.source);
  j["target"] = bigroupoid_json(F.target);
  j["zero_map"] = map_json(F.zero_map, "from", "to");
  json loc = json::array();
  for (const auto& [k, f] : F.local)
    loc.push_back({{"a", k.first}, {"b", k.second}, {"functor", functor_maps_json(f)}});
  j["local"] = loc;
  json pc = json::array();
  for (const auto& [k, cell] : F.phi_comp) {
    const auto& [a, b, c, g, f] = k;
    pc.push_back({{"a", a}, {"b", b}, {"c", c}, {"g", g}, {"f", f}, {"cell", cell}});
  }
  j["phi_comp"] = pc;
  j["phi_unit"] = map_json(F.phi_unit, "a", "cell");
  json pi = json::array();
  for (const auto& [k, cell] : F.phi_inv) {
    const auto& [a, b, f] = k;
    pi.push_back({{"a", a}, {"b", b}, {"f", f}, {"cell", cell}});
  }
  j["phi_inv"] = pi;
  return j;
}

Pseudofunctor pseudofunctor_of_json(const json& j, const std::string& where) {
  Pseudofunctor F;
  F.source = bigroupoid_of_json(field(j, "source", where), where + "/source");
  F.target = bigroupoid_of_json(field(j, "target", where), where + "/target");
  F.zero_map = map_of(j, "zero_map", "from", "to", where);
  for (const auto& e : field(j, "local", where)) {
    Id a = str_field(e, "a", where), b = str_field(e, "b", where);
    F.local[{a, b}] = functor_of(field(e, "functor", where), F.source.H(a, b),
                                 F.target.H(F.on0(a), F.on0(b)), where + "/local");
  }
  for (const auto& e : field(j, "phi_comp", where))
    F.phi_comp[{str_field(e, "a", where), str_field(e, "b", where), str_field(e, "c", where),
                str_field(e, "g", where), str_field(e, "f", where)}] =
        str_field(e, "cell", where);
  F.phi_unit = map_of(j, "phi_unit", "a", "cell", where);
  for (const auto& e : field(j, "phi_inv", where))
    F.phi_inv[{str_field(e, "a", where), str_field(e, "b", where),
               str_field(e, "f", where)}] = str_field(e, "cell", where);
  return F;
}

Document make_doc(std::string kind, json payload) {
  Document d;
  d.kind = std::move(kind);
  d.payload = std::move(payload);
  return d;
}

void expect_kind(const Document& d, const char* kind) {
  if (d.kind != kind)
    throw StructuralError("document: expected kind '" + std::string(kind) + "', got '" +
                          d.kind + "'");
}

}  // namespace

std::string print_document(const Document& d) {
  json j;
  j["format_version"] = d.format_version;
  j["kind"] = d.kind;
  j["payload"] = d.payload;
  return j.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw StructuralError("document: not valid JSON");
  Document d;
  const json& ver = field(j, "format_version", "document");
  if (!ver.is_number_integer() || ver.get<int>() != 1)
    throw StructuralError("document: format_version must be 1");
  d.format_version = 1;
  d.kind = str_field(j, "kind", "document");
  static const char* kinds[] = {"graph", "bigroupoid", "pseudofunctor",
                                "icon",  "square",     "term"};
  bool known = false;
  for (const char* k : kinds) known = known || d.kind == k;
  if (!known) throw StructuralError("document: unknown kind '" + d.kind + "'");
  d.payload = field(j, "payload", "document");
  return d;
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void save_document(const std::string& path, const Document& d) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path);
  out << print_document(d);
}

Document to_document(const Graph& g) {
  json j;
  j["nodes"] = g.nodes;
  j["edges"] = arrows_json(g.edges);
  return make_doc("graph", std::move(j));
}

Document to_document(const FiniteBigroupoid& B) {
  return make_doc("bigroupoid", bigroupoid_json(B));
}

Document to_document(const Pseudofunctor& F) {
  return make_doc("pseudofunctor", pseudofunctor_json(F));
}

Document to_document(const Icon& ic) {
  json j;
  j["source"] = pseudofunctor_json(ic.source);
  j["target"] = pseudofunctor_json(ic.target);
  json comps = json::array();
  for (const auto& [k, n] : ic.components)
    comps.push_back({{"a", k.first}, {"b", k.second},
                     {"components", map_json(n.components, "object", "arrow")}});
  j["components"] = comps;
  return make_doc("icon", std::move(j));
}

Document to_document(const LiftingSquare& sq) {
  json j;
  j["top"] = pseudofunctor_json(sq.top);
  j["left"] = pseudofunctor_json(sq.left);
  j["right"] = pseudofunctor_json(sq.right);
  j["bottom"] = pseudofunctor_json(sq.bottom);
  return make_doc("square", std::move(j));
}

Document to_document(const Term& t) {
  json j;
  j["text"] = print_term(t);
  return make_doc("term", std::move(j));
}

Graph graph_of(const Document& d) {
  expect_kind(d, "graph");
  Graph g;
  g.nodes = id_list(d.payload, "nodes", "graph");
  g.edges = arrows_of(d.payload, "edges", "graph");
  return g;
}

FiniteBigroupoid bigroupoid_of(const Document& d) {
  expect_kind(d, "bigroupoid");
  return bigroupoid_of_json(d.payload, "bigroupoid");
}

Pseudofunctor pseudofunctor_of(const Document& d) {
  expect_kind(d, "pseudofunctor");
  return pseudofunctor_of_json(d.payload, "pseudofunctor");
}

Icon icon_of(const Document& d) {
  expect_kind(d, "icon");
  Icon ic;
  ic.source = pseudofunctor_of_json(field(d.payload, "source", "icon"), "icon/source");
  ic.target = pseudofunctor_of_json(field(d.payload, "target", "icon"), "icon/target");
  for (const auto& e : field(d.payload, "components", "icon")) {
    Id a = str_field(e, "a", "icon"), b = str_field(e, "b", "icon");
    NatIso n;
    n.source = ic.source.L(a, b);
    n.target = ic.target.L(a, b);
    n.components = map_of(e, "components", "object", "arrow", "icon");
    ic.components[{a, b}] = std::move(n);
  }
  return ic;
}

LiftingSquare square_of(const Document& d) {
  expect_kind(d, "square");
  LiftingSquare sq;
  sq.top = pseudofunctor_of_json(field(d.payload, "top", "square"), "square/top");
  sq.left = pseudofunctor_of_json(field(d.payload, "left", "square"), "square/left");
  sq.right = pseudofunctor_of_json(field(d.payload, "right", "square"), "square/right");
  sq.bottom = pseudofunctor_of_json(field(d.payload, "bottom", "square"), "square/bottom");
  return sq;
}

Term term_of(const Document& d) {
  expect_kind(d, "term");
  return parse_term(str_field(d.payload, "text", "term"));
}

}  // namespace bgm
