#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bgm/cli.hpp"
#include "bgm/doc.hpp"
#include "bgm/eval.hpp"
#include "bgm/fixtures.hpp"

using namespace bgm;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream ss;
  int code = run_cli(args, ss);
  return {code, ss.str()};
}

std::string write_tmp(const std::string& name, const Document& d) {
  std::string path = "cli_" + name + ".json";
  save_document(path, d);
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// documents are printed after a "NAME:\n" marker and end with "}\n"
Document doc_after(const std::string& report, const std::string& marker) {
  size_t at = report.find(marker + "\n");
  REQUIRE(at != std::string::npos);
  size_t start = at + marker.size() + 1;
  size_t end = report.find("\n}\n", start);
  REQUIRE(end != std::string::npos);
  return parse_document(report.substr(start, end + 3 - start));
}

}  // namespace

TEST_CASE("documents round-trip through print and parse") {
  FiniteBigroupoid B = cocycle_fixture(2, nontrivial_cocycle_z2());
  Document d = to_document(B);
  CHECK(parse_document(print_document(d)) == d);
  CHECK(bigroupoid_of(d) == B);

  Pseudofunctor F = delooping_endo(3, 2);
  Document df = to_document(F);
  CHECK(parse_document(print_document(df)) == df);
  CHECK(pseudofunctor_of(df) == F);

  LiftingSquare sq{F, identity_pseudofunctor(F.source),
                   identity_pseudofunctor(F.target), F};
  Document ds = to_document(sq);
  LiftingSquare back = square_of(parse_document(print_document(ds)));
  CHECK(back.top == sq.top);
  CHECK(back.left == sq.left);
  CHECK(back.right == sq.right);
  CHECK(back.bottom == sq.bottom);

  Icon ic;
  ic.source = identity_pseudofunctor(B);
  ic.target = identity_pseudofunctor(B);
  ic.components[{"*", "*"}] = identity_nat_iso(ic.source.L("*", "*"));
  Document di = to_document(ic);
  CHECK(parse_document(print_document(di)) == di);
  CHECK(icon_of(di) == ic);

  Graph g{{"A", "B"}, {{"f", "A", "B"}, {"h", "B", "B"}}};
  Document dg = to_document(g);
  CHECK(graph_of(dg).nodes == g.nodes);
  CHECK(graph_of(dg).edges == g.edges);

  Term t = parse_term("((h . f) . 1_A)");
  Document dt = to_document(t);
  CHECK(parse_document(print_document(dt)) == dt);
  CHECK(term_eq(term_of(dt), t));
}

TEST_CASE("document rejects bad input") {
  CHECK_THROWS_AS(parse_document("not json"), StructuralError);
  CHECK_THROWS_AS(parse_document("{\"format_version\":2,\"kind\":\"term\",\"payload\":{}}"),
                  StructuralError);
  CHECK_THROWS_AS(parse_document("{\"format_version\":1,\"kind\":\"nope\",\"payload\":{}}"),
                  StructuralError);
  Document d = to_document(strict_delooping(2));
  CHECK_THROWS_AS(pseudofunctor_of(d), StructuralError);
}

TEST_CASE("validate") {
  std::string ok = write_tmp("fixture",
                             to_document(cocycle_fixture(2, nontrivial_cocycle_z2())));
  Run r = cli({"validate", ok});
  CHECK(r.code == 0);
  CHECK(r.out == "KIND: bigroupoid\nRESULT: ok\n");

  // flip the label of one assoc cell; parallel, so only the pentagon breaks
  FiniteBigroupoid bad = cocycle_fixture(2, nontrivial_cocycle_z2());
  Id& cell = bad.assoc.begin()->second;
  cell.back() = cell.back() == '0' ? '1' : '0';
  std::string badp = write_tmp("fixture_bad", to_document(bad));
  r = cli({"validate", badp});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "RESULT: invalid"));
  CHECK(contains(r.out, "pentagon"));

  r = cli({"validate", "no_such_file.json"});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "ERROR:"));

  std::ofstream("cli_vbad.json") << "{\"format_version\": 3}";
  r = cli({"validate", "cli_vbad.json"});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "format_version"));
}

TEST_CASE("classify") {
  std::string p = write_tmp("idmap", to_document(identity_pseudofunctor(strict_delooping(2))));
  Run r = cli({"classify", p});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "FIBRATION: true\nCOFIBRATION: true\nWEAK_EQUIVALENCE: true\n"
        "TRIVIAL_FIBRATION: true\nTRIVIAL_COFIBRATION: true\n");

  std::string q = write_tmp("endo", to_document(delooping_endo(2, 0)));
  r = cli({"classify", q});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "FIBRATION: false"));
}

TEST_CASE("factor") {
  auto tabs = normalized_two_cocycles(2);
  Cochain2 b = [t = tabs.back()](int x, int y) {
    return t[((x % 2) + 2) % 2][((y % 2) + 2) % 2];
  };
  Pseudofunctor F = twisted_self_map(2, nontrivial_cocycle_z2(), b);
  std::string p = write_tmp("twisted", to_document(F));

  Run r = cli({"factor", "--wfs", "cof-trivfib", p});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "MIDDLE_ZERO_CELLS: 2"));
  Pseudofunctor first = pseudofunctor_of(doc_after(r.out, "FIRST_DOCUMENT:"));
  Pseudofunctor second = pseudofunctor_of(doc_after(r.out, "SECOND_DOCUMENT:"));
  CHECK(compose_pseudofunctors(second, first) == F);

  Run r2 = cli({"factor", "--wfs", "cof-trivfib", p});
  CHECK(r2.out == r.out);  // byte-identical reports

  r = cli({"factor", "--wfs", "trivcof-fib", p});
  CHECK(r.code == 0);
  first = pseudofunctor_of(doc_after(r.out, "FIRST_DOCUMENT:"));
  second = pseudofunctor_of(doc_after(r.out, "SECOND_DOCUMENT:"));
  CHECK(compose_pseudofunctors(second, first) == F);

  r = cli({"factor", "--wfs", "bogus", p});
  CHECK(r.code == 2);
}

TEST_CASE("lift") {
  Pseudofunctor m = delooping_endo(2, 1);
  Factorization f = factor_cof_trivfib(m);
  LiftingSquare sq{f.first, f.first, f.second, f.second};
  std::string p = write_tmp("square", to_document(sq));
  Run r = cli({"lift", "--wfs", "cof-trivfib", p});
  CHECK(r.code == 0);
  Pseudofunctor L = pseudofunctor_of(doc_after(r.out, "DIAGONAL_DOCUMENT:"));
  CHECK(compose_pseudofunctors(L, sq.left) == sq.top);
  CHECK(compose_pseudofunctors(sq.right, L) == sq.bottom);

  Pseudofunctor bad = delooping_endo(2, 0);
  Pseudofunctor idb = identity_pseudofunctor(bad.target);
  std::string q = write_tmp("square_bad", to_document(LiftingSquare{bad, bad, idb, idb}));
  r = cli({"lift", "--wfs", "cof-trivfib", q});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "RESULT: no-lift"));
}

TEST_CASE("path-object and pullback") {
  std::string p = write_tmp("b2", to_document(strict_delooping(2)));
  Run r = cli({"path-object", p});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ZERO_CELLS: 2"));
  Pseudofunctor R = pseudofunctor_of(doc_after(r.out, "R_DOCUMENT:"));
  Pseudofunctor S = pseudofunctor_of(doc_after(r.out, "S_DOCUMENT:"));
  CHECK(compose_pseudofunctors(S, R) == identity_pseudofunctor(strict_delooping(2)));

  std::string f = write_tmp("bangb2", to_document(terminal_and_bang(strict_delooping(2)).bang));
  std::string g = write_tmp("bangd2", to_document(terminal_and_bang(discrete_bigroupoid(2)).bang));
  r = cli({"pullback", f, g});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ZERO_CELLS: 2"));

  std::string notfib = write_tmp("notfib", to_document(delooping_endo(2, 0)));
  std::string idb2 = write_tmp("idb2",
                               to_document(identity_pseudofunctor(strict_delooping(2))));
  r = cli({"pullback", notfib, idb2});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "RESULT: rejected"));
}

TEST_CASE("reduce and coherence") {
  Run r = cli({"reduce", "(f . (f* . 1_A))"});
  CHECK(r.code == 0);
  CHECK(r.out == "TERM: 1_A\nLENGTH: 1\n");

  r = cli({"reduce", "(g . (1_B . f))"});
  CHECK(r.code == 0);
  CHECK(r.out == "TERM: (g . f)\nLENGTH: 2\n");

  r = cli({"coherence", "(f* . f)", "1_A"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "SRC: (f* . f)"));
  CHECK(contains(r.out, "TGT: 1_A"));
  CHECK(contains(r.out, "WITNESS: "));
  CHECK_FALSE(contains(r.out, "WITNESS: NONE"));

  r = cli({"coherence", "f", "g"});
  CHECK(r.code == 1);
  CHECK(r.out == "WITNESS: NONE\n");

  r = cli({"reduce", "(f ."});
  CHECK(r.code == 2);
}

TEST_CASE("eval") {
  std::string b = write_tmp("evalb", to_document(cocycle_fixture(2, nontrivial_cocycle_z2())));
  std::ofstream("cli_assign.json")
      << "{\"nodes\":[{\"from\":\"A\",\"to\":\"*\"}],"
         "\"edges\":[{\"from\":\"x\",\"to\":\"g1\"},{\"from\":\"y\",\"to\":\"g1\"}]}";
  Run r = cli({"eval", b, "--assign", "cli_assign.json", "(y . (x . 1_A))"});
  CHECK(r.code == 0);
  FiniteBigroupoid B = cocycle_fixture(2, nontrivial_cocycle_z2());
  CHECK(contains(r.out, "VALUE: " + B.c1("*", "*", "*", "g1", "g1")));

  r = cli({"eval", b, "--assign", "cli_assign.json", "(x . x*)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "VALUE: " + B.unit_at("*")));
}

TEST_CASE("usage errors") {
  Run r = cli({});
  CHECK(r.code == 2);
  r = cli({"factor", "cli_fixture.json"});
  CHECK(r.code == 2);
  r = cli({"--help"});
  CHECK(r.code == 0);
}
