#include <fstream>
#include <sstream>

#include "doctest.h"
#include "stonet/commands.hpp"

using namespace stonet;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(STONET_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ReportEntry* find(const Report& r, std::string_view entity, std::string_view law) {
  for (const auto& e : r.entries()) {
    if (e.entity == entity && e.law == law) {
      return &e;
    }
  }
  return nullptr;
}

}  // namespace

TEST_CASE("a builtin quantale declaration") {
  Workspace const ws = parse("quantale Q = builtin two\n");
  REQUIRE(ws.quantales.size() == 1);
  CHECK(ws.quantales.front().name == "Q");
  CHECK(ws.quantales.front().value->label() == "two");
  CHECK(ws.quantales.front().where.line == 1);
  CHECK(ws.rejected.empty());
}

TEST_CASE("builtin spellings") {
  CHECK(builtin_quantale("goedel-chain(3)")->size() == 3);
  CHECK(builtin_quantale("goedel-chain 3")->size() == 3);
  CHECK(builtin_quantale("lawvere-chain(4)")->label() == "lawvere-chain(4)");
  CHECK_THROWS_AS(builtin_quantale("reals"), Error);
}

TEST_CASE("a missing hom entry is a totality error") {
  std::string const text =
      "quantale Q = builtin two\n"
      "tcategory X over Q theory identity { objects a b; hom a a = 1; hom b b = 1; hom a b = 1 }\n";
  Workspace const ws = parse(text);
  REQUIRE(ws.rejected.size() == 1);
  CHECK(ws.rejected.front().entity == "X");
  CHECK(ws.rejected.front().law == "totality");
  CHECK(ws.rejected.front().witness.find("b") != std::string::npos);
  CHECK(ws.tcategory("X") == nullptr);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse("quantale Q = builtin two\ntcategory X over Q theory identity { objects a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 2);
    CHECK(e.column() >= 1);
  }
  CHECK_THROWS_AS(parse("quantale Q = builtin two\nquantale Q = builtin two\n"), ParseError);
  CHECK_THROWS_AS(parse("tcategory X over Missing theory identity { objects a }\n"), ParseError);
  CHECK_THROWS_AS(parse("quantale Q = builtin two\ntheory W = word over Q\n"), ParseError);
}

TEST_CASE("a dependency on a rejected entity is rejected") {
  std::string const text =
      "quantale Q = builtin two\n"
      "tcategory X over Q theory identity { objects a b; default = 1; hom a b = 0; hom b a = 1; hom a a = 0 }\n"
      "frame F = omega X\n";
  Workspace const ws = parse(text);
  REQUIRE(ws.rejected.size() == 2);
  CHECK(ws.rejected[0].entity == "X");
  CHECK(ws.rejected[1].entity == "F");
}

TEST_CASE("the metric fixture loads and is a T-category") {
  Workspace const ws = parse(slurp("metric.stonet"), "metric.stonet");
  CHECK(ws.rejected.empty());
  const TCategory* m = ws.tcategory("M");
  REQUIRE(m != nullptr);
  CHECK(m->size() == 3);
  CHECK(is_tcategory(m->theory(), m->structure()).holds());
  CHECK(m->quantale().name((*m)(0, 2)) == "2");
  Report const r = run(ws, "validate", Flags{});
  CHECK(r.exit_code() == 0);
}

TEST_CASE("tables given by hand") {
  std::string const text =
      "quantale R = table { elements 0 1; leq 0 1; unit 1; default = 0; tensor 1 1 = 1 }\n";
  Workspace const ws = parse(text);
  CHECK(ws.rejected.empty());
  REQUIRE(ws.quantale("R") != nullptr);
  CHECK((*ws.quantale("R"))->size() == 2);
}

TEST_CASE("eta on the two-chain is a bijection") {
  Workspace const ws = parse(slurp("chain2.stonet"), "chain2.stonet");
  Flags f;
  f.target = "C";
  Report const r = run(ws, "eta", f);
  const ReportEntry* e = find(r, "C", "eta-t-functor");
  REQUIRE(e != nullptr);
  CHECK(e->verdict == Outcome::holds);
  CHECK(e->data["injective"] == true);
  CHECK(e->data["surjective"] == true);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("every command runs on the chain fixture") {
  Workspace const ws = parse(slurp("chain2.stonet"), "chain2.stonet");
  for (const auto& cmd : command_names()) {
    if (cmd == "sweep") {
      continue;
    }
    CAPTURE(cmd);
    Report const r = run(ws, cmd, Flags{});
    CHECK(r.exit_code() == 0);
    CHECK_FALSE(r.entries().empty());
  }
  CHECK_THROWS_AS(run(ws, "frobnicate", Flags{}), UsageError);
  Flags f;
  f.target = "Nowhere";
  CHECK_THROWS_AS(run(ws, "eta", f), UsageError);
}

TEST_CASE("eta is natural along the declared functor") {
  Workspace const ws = parse(slurp("chain2.stonet"), "chain2.stonet");
  Report const r = run(ws, "main-thm", Flags{});
  const ReportEntry* e = find(r, "f", "eta-naturality");
  REQUIRE(e != nullptr);
  CHECK(e->verdict == Outcome::holds);
}

TEST_CASE("validate on a corrupted quantale fails with a witness") {
  Workspace const ws = parse(slurp("bad_quantale.stonet"), "bad_quantale.stonet");
  Report const r = run(ws, "validate", Flags{});
  CHECK(r.exit_code() == 1);
  REQUIRE(r.count(Outcome::fails) > 0);
  for (const auto& e : r.entries()) {
    if (e.verdict == Outcome::fails) {
      CHECK(e.entity == "N");
      CHECK_FALSE(e.witness.empty());
    }
  }
  Json const j = r.to_json();
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["summary"]["fails"] == r.count(Outcome::fails));
}

TEST_CASE("sweep up to three objects over two passes") {
  Flags f;
  f.max_objects = 3;
  Report const r = run(Workspace{}, "sweep", f);
  CHECK(r.exit_code() == 0);
  CHECK(r.count(Outcome::fails) == 0);
  CHECK(r.count(Outcome::holds) > 0);
  std::size_t triangles = 0;
  for (const auto& e : r.entries()) {
    triangles += e.law == "triangle" ? 1 : 0;
  }
  CHECK(triangles == 1 + 1 + 3 + 9);
}

TEST_CASE("sweep under the ultrafilter theory") {
  Flags f;
  f.max_objects = 2;
  f.theory = "finite-ultrafilter";
  f.quantale = "goedel-chain(3)";
  f.oracle = true;
  Report const r = run(Workspace{}, "sweep", f);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("reports are identical across runs") {
  Flags f;
  f.max_objects = 2;
  Workspace const ws = parse(slurp("chain2.stonet"), "chain2.stonet");
  for (const char* cmd : {"sweep", "main-thm", "frm-check", "points"}) {
    CHECK(run(ws, cmd, f).to_json().dump() == run(ws, cmd, f).to_json().dump());
    CHECK(run(ws, cmd, f).to_text() == run(ws, cmd, f).to_text());
  }
}
