#include "bgm/cli.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "bgm/doc.hpp"
#include "bgm/eval.hpp"
#include "bgm/rewrite.hpp"

namespace bgm {

namespace {

struct EndpointUF {
  std::vector<int> parent;
  int fresh() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct InferState {
  EndpointUF uf;
  std::map<Id, std::pair<int, int>> edges;  // edge -> (src, tgt) slots
  std::vector<std::pair<int, Id>> units;    // slot pinned to an explicit node
  std::vector<int> order;                   // slot creation order
};

std::pair<int, int> walk(const Term& t, InferState& st) {
  switch (t->k) {
    case OK::Gen: {
      auto it = st.edges.find(t->atom);
      if (it != st.edges.end()) return it->second;
      int s = st.uf.fresh(), g = st.uf.fresh();
      st.order.push_back(s);
      st.order.push_back(g);
      st.edges[t->atom] = {s, g};
      return {s, g};
    }
    case OK::Unit: {
      int s = st.uf.fresh();
      st.order.push_back(s);
      st.units.push_back({s, t->atom});
      return {s, s};
    }
    case OK::Comp: {
      auto l = walk(t->left, st);
      auto r = walk(t->right, st);
      st.uf.unite(l.second, r.first);
      return {l.first, r.second};
    }
    case OK::Star: {
      auto c = walk(t->left, st);
      return {c.second, c.first};
    }
    default:
      throw StructuralError("infer_graph: Ap is not allowed in bare terms");
  }
}

const char* tk_name(TK k) {
  switch (k) {
    case TK::Id2: return "id2";
    case TK::Assoc: return "assoc";
    case TK::LUnit: return "lunit";
    case TK::RUnit: return "runit";
    case TK::Counit: return "counit";
    case TK::Unit2: return "unit2";
    case TK::DoubleStar: return "double_star";
    case TK::StarComp: return "star_comp";
    case TK::Inv: return "inv";
    case TK::VComp: return "vcomp";
    case TK::HComp: return "hcomp";
    case TK::StarCell: return "star_cell";
    case TK::PhiComp: return "phi_comp";
    case TK::PhiUnit: return "phi_unit";
    case TK::PhiInv: return "phi_inv";
    case TK::ApCell: return "ap_cell";
  }
  return "?";
}

int leaf_count(const Term& t) {
  switch (t->k) {
    case OK::Gen:
    case OK::Unit: return 1;
    case OK::Comp: return leaf_count(t->right) + leaf_count(t->left);
    default: return leaf_count(t->left);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(const ValidationReport& rep, std::ostream& out) {
  if (rep.ok()) {
    out << "RESULT: ok\n";
    return;
  }
  out << "RESULT: invalid\n";
  out << "VIOLATIONS: " << rep.violations.size() << "\n";
  for (const auto& v : rep.violations) {
    out << "- " << v.axiom;
    for (const auto& c : v.cells) out << " " << c;
    out << "\n";
  }
}

int cmd_validate(const std::string& path, std::ostream& out) {
  Document d = load_document(path);
  out << "KIND: " << d.kind << "\n";
  ValidationReport rep;
  if (d.kind == "graph") {
    Graph g = graph_of(d);
    std::set<Id> ids;
    for (const auto& e : g.edges) {
      if (!g.has_node(e.src) || !g.has_node(e.tgt)) rep.add("edge-endpoints", {e.id});
      if (!ids.insert(e.id).second) rep.add("duplicate-edge", {e.id});
    }
  } else if (d.kind == "bigroupoid") {
    rep = validate_bigroupoid(bigroupoid_of(d));
  } else if (d.kind == "pseudofunctor") {
    rep = validate_pseudofunctor(pseudofunctor_of(d));
  } else if (d.kind == "icon") {
    rep = validate_icon(icon_of(d));
  } else if (d.kind == "square") {
    LiftingSquare sq = square_of(d);
    rep.merge(validate_pseudofunctor(sq.top), "top");
    rep.merge(validate_pseudofunctor(sq.left), "left");
    rep.merge(validate_pseudofunctor(sq.right), "right");
    rep.merge(validate_pseudofunctor(sq.bottom), "bottom");
    if (!(sq.top.source == sq.left.source) || !(sq.top.target == sq.right.source) ||
        !(sq.left.target == sq.bottom.source) || !(sq.right.target == sq.bottom.target))
      rep.add("square-boundary", {});
    else if (rep.ok() && !(compose_pseudofunctors(sq.right, sq.top) ==
                           compose_pseudofunctors(sq.bottom, sq.left)))
      rep.add("square-commutes", {});
  } else {  // term
    Term t = term_of(d);
    Graph g = infer_graph({t}, false);
    src0(g, t);  // throws when the composites are broken
  }
  print_report(rep, out);
  return rep.ok() ? 0 : 1;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  Pseudofunctor F = pseudofunctor_of(load_document(path));
  Classification c = classify(F);
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << "FIBRATION: " << b(c.is_fibration) << "\n";
  out << "COFIBRATION: " << b(c.is_cofibration) << "\n";
  out << "WEAK_EQUIVALENCE: " << b(c.is_weak_equivalence) << "\n";
  out << "TRIVIAL_FIBRATION: " << b(c.is_trivial_fibration) << "\n";
  out << "TRIVIAL_COFIBRATION: " << b(c.is_trivial_cofibration) << "\n";
  return 0;
}

int cmd_factor(const std::string& wfs, const std::string& path, std::ostream& out) {
  Pseudofunctor F = pseudofunctor_of(load_document(path));
  Factorization f =
      wfs == "cof-trivfib" ? factor_cof_trivfib(F) : factor_trivcof_fib(F);
  out << "WFS: " << wfs << "\n";
  out << "MIDDLE_ZERO_CELLS: " << f.middle.zero_cells.size() << "\n";
  out << "FIRST: " << (wfs == "cof-trivfib" ? "cofibration" : "trivial-cofibration")
      << "\n";
  out << "SECOND: " << (wfs == "cof-trivfib" ? "trivial-fibration" : "fibration")
      << "\n";
  out << "FIRST_DOCUMENT:\n" << print_document(to_document(f.first));
  out << "SECOND_DOCUMENT:\n" << print_document(to_document(f.second));
  return 0;
}

int cmd_lift(const std::string& wfs, const std::string& path, std::ostream& out) {
  LiftingSquare sq = square_of(load_document(path));
  out << "WFS: " << wfs << "\n";
  try {
    Pseudofunctor L =
        wfs == "cof-trivfib" ? lift_cof_trivfib(sq) : lift_trivcof_fib(sq);
    out << "RESULT: lift\n";
    out << "DIAGONAL_DOCUMENT:\n" << print_document(to_document(L));
    return 0;
  } catch (const PreconditionError& e) {
    out << "RESULT: no-lift\n";
    out << "REASON: " << e.what() << "\n";
    return 1;
  }
}

int cmd_path_object(const std::string& path, std::ostream& out) {
  FiniteBigroupoid B = bigroupoid_of(load_document(path));
  PathObjectResult po = path_object(B);
  out << "ZERO_CELLS: " << po.PB.zero_cells.size() << "\n";
  out << "PB_DOCUMENT:\n" << print_document(to_document(po.PB));
  out << "R_DOCUMENT:\n" << print_document(to_document(po.R));
  out << "S_DOCUMENT:\n" << print_document(to_document(po.S));
  out << "T_DOCUMENT:\n" << print_document(to_document(po.T));
  out << "ST_DOCUMENT:\n" << print_document(to_document(po.st));
  return 0;
}

int cmd_pullback(const std::string& fpath, const std::string& gpath, std::ostream& out) {
  Pseudofunctor F = pseudofunctor_of(load_document(fpath));
  Pseudofunctor G = pseudofunctor_of(load_document(gpath));
  try {
    PullbackResult pb = pullback_fibration(F, G);
    out << "ZERO_CELLS: " << pb.A.zero_cells.size() << "\n";
    out << "P_DOCUMENT:\n" << print_document(to_document(pb.P));
    out << "R_DOCUMENT:\n" << print_document(to_document(pb.R));
    return 0;
  } catch (const PreconditionError& e) {
    out << "RESULT: rejected\n";
    out << "REASON: " << e.what() << "\n";
    return 1;
  }
}

int cmd_reduce(const std::string& text, std::ostream& out) {
  Term t = parse_term(text);
  Graph g = infer_graph({t}, false);
  src0(g, t);
  NormalizeResult n = normalize(g, rewrite_R(g, t).ru);
  out << "TERM: " << print_term(n.m) << "\n";
  out << "LENGTH: " << leaf_count(n.m) << "\n";
  return 0;
}

int cmd_coherence(const std::string& ut, const std::string& vt, std::ostream& out) {
  Term u = parse_term(ut);
  Term v = parse_term(vt);
  Graph g = infer_graph({u, v}, true);
  auto w = canonical_2cell(g, u, v);
  if (!w) {
    out << "WITNESS: NONE\n";
    return 1;
  }
  out << "SRC: " << print_term(w->src) << "\n";
  out << "TGT: " << print_term(w->tgt) << "\n";
  out << "WITNESS: " << print_cell2(w->cell) << "\n";
  return 0;
}

int cmd_eval(const std::string& bpath, const std::string& apath, const std::string& text,
             std::ostream& out) {
  FiniteBigroupoid B = bigroupoid_of(load_document(bpath));
  nlohmann::json aj = nlohmann::json::parse(slurp(apath), nullptr, false);
  if (aj.is_discarded()) throw StructuralError(apath + ": not valid JSON");
  auto read_map = [&](const char* key) {
    std::map<Id, Id> m;
    if (!aj.contains(key) || !aj.at(key).is_array())
      throw StructuralError(apath + ": missing list '" + key + "'");
    for (const auto& e : aj.at(key)) {
      if (!e.contains("from") || !e.contains("to"))
        throw StructuralError(apath + "/" + key + ": entries need from/to");
      m[e.at("from").get<std::string>()] = e.at("to").get<std::string>();
    }
    return m;
  };
  Assign a;
  a.nodes = read_map("nodes");
  a.edges = read_map("edges");
  Term t = parse_term(text);
  Graph g = infer_graph({t}, false);
  // synthesized node names have no assignment; pin them through the edges
  for (const auto& n : g.nodes)
    if (!a.nodes.count(n))
      for (const auto& e : g.edges) {
        if (!a.edges.count(e.id)) continue;
        for (const auto& [hk, H] : B.hom)
          for (const auto& o : H.objects)
            if (o == a.edges.at(e.id)) {
              if (e.src == n) a.nodes[n] = hk.first;
              if (e.tgt == n) a.nodes[n] = hk.second;
            }
      }
  validate_assign(B, g, a);
  Id val = eval_1cell(B, g, a, t);
  out << "SRC: " << a.nodes.at(src0(g, t)) << "\n";
  out << "TGT: " << a.nodes.at(tgt0(g, t)) << "\n";
  out << "VALUE: " << val << "\n";
  return 0;
}

}  // namespace

Graph infer_graph(const std::vector<Term>& terms, bool parallel) {
  InferState st;
  std::vector<std::pair<int, int>> ends;
  for (const auto& t : terms) ends.push_back(walk(t, st));
  if (parallel)
    for (size_t i = 1; i < ends.size(); ++i) {
      st.uf.unite(ends[0].first, ends[i].first);
      st.uf.unite(ends[0].second, ends[i].second);
    }
  std::map<int, Id> name;
  std::set<Id> taken;
  for (const auto& [slot, nm] : st.units) {
    int r = st.uf.find(slot);
    auto it = name.find(r);
    if (it != name.end() && it->second != nm)
      throw StructuralError("infer_graph: nodes " + it->second + " and " + nm +
                            " are forced equal");
    name[r] = nm;
    taken.insert(nm);
  }
  for (const auto& [e, slots] : st.edges) taken.insert(e);
  Graph g;
  std::set<int> seen;
  int k = 0;
  for (int slot : st.order) {
    int r = st.uf.find(slot);
    if (!seen.insert(r).second) continue;
    if (!name.count(r)) {
      Id nm;
      do nm = "n" + std::to_string(k++);
      while (taken.count(nm));
      name[r] = nm;
    }
    g.nodes.push_back(name[r]);
  }
  for (const auto& [e, slots] : st.edges)
    g.edges.push_back(
        {e, name[st.uf.find(slots.first)], name[st.uf.find(slots.second)]});
  return g;
}

std::string print_cell2(const Cell2& t) {
  std::vector<std::string> parts;
  if (t->k == TK::PhiUnit) parts.push_back(t->atom);
  if (t->a) parts.push_back(print_term(t->a));
  if (t->b) parts.push_back(print_term(t->b));
  if (t->c) parts.push_back(print_term(t->c));
  if (t->t2) parts.push_back(print_cell2(t->t2));
  if (t->t1) parts.push_back(print_cell2(t->t1));
  std::string out = tk_name(t->k);
  out += "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  out += ")";
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"finite bigroupoid toolkit"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "echo inputs before the report");

  std::string file, file2, wfs, term1, term2, assign_path;

  auto* validate = app.add_subcommand("validate", "check a document against its axioms");
  validate->add_option("file", file)->required();

  auto* classify_c = app.add_subcommand("classify", "model-structure classes of a map");
  classify_c->add_option("file", file)->required();

  auto* factor = app.add_subcommand("factor", "factor a map through a chosen WFS");
  factor->add_option("--wfs", wfs)->required()->check(
      CLI::IsMember({"cof-trivfib", "trivcof-fib"}));
  factor->add_option("file", file)->required();

  auto* lift = app.add_subcommand("lift", "solve a lifting square");
  lift->add_option("--wfs", wfs)->required()->check(
      CLI::IsMember({"cof-trivfib", "trivcof-fib"}));
  lift->add_option("file", file)->required();

  auto* path_c = app.add_subcommand("path-object", "path object of a bigroupoid");
  path_c->add_option("file", file)->required();

  auto* pullback = app.add_subcommand("pullback", "pull a fibration back");
  pullback->add_option("F", file)->required();
  pullback->add_option("G", file2)->required();

  auto* reduce = app.add_subcommand("reduce", "minimal form of a 1-cell term");
  reduce->add_option("term", term1)->required();

  auto* coherence = app.add_subcommand("coherence", "canonical 2-cell between pastings");
  coherence->add_option("u", term1)->required();
  coherence->add_option("v", term2)->required();

  auto* eval_c = app.add_subcommand("eval", "evaluate a term in a bigroupoid");
  eval_c->add_option("file", file)->required();
  eval_c->add_option("--assign", assign_path)->required();
  eval_c->add_option("term", term1)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "ERROR: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verbose) {
      if (!file.empty()) out << "INPUT: " << file << "\n";
      if (!file2.empty()) out << "INPUT: " << file2 << "\n";
      if (!assign_path.empty()) out << "INPUT: " << assign_path << "\n";
    }
    if (app.got_subcommand(validate)) return cmd_validate(file, out);
    if (app.got_subcommand(classify_c)) return cmd_classify(file, out);
    if (app.got_subcommand(factor)) return cmd_factor(wfs, file, out);
    if (app.got_subcommand(lift)) return cmd_lift(wfs, file, out);
    if (app.got_subcommand(path_c)) return cmd_path_object(file, out);
    if (app.got_subcommand(pullback)) return cmd_pullback(file, file2, out);
    if (app.got_subcommand(reduce)) return cmd_reduce(term1, out);
    if (app.got_subcommand(coherence)) return cmd_coherence(term1, term2, out);
    if (app.got_subcommand(eval_c)) return cmd_eval(file, assign_path, term1, out);
  } catch (const PreconditionError& e) {
    out << "RESULT: rejected\n";
    out << "REASON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << "ERROR: " << e.what() << "\n";
    return 2;
  }
  out << "ERROR: no subcommand\n";
  return 2;
}

}  // namespace bgm
