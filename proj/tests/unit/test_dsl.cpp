#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "modalwb/dsl/executor.hpp"
#include "modalwb/dsl/parser.hpp"
#include "modalwb/error.hpp"

using namespace modalwb;
using namespace modalwb::dsl;

namespace {

ErrorKind error_kind(const std::function<void()>& fn, std::string* message = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  return ErrorKind::Internal;
}

Report run(const std::string& src, ExecOptions opts = {}) { return execute(parse(src), opts); }

ElemExpr random_elem(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 5);
  ElemExpr e;
  switch (pick(rng)) {
    case 0: e.kind = ElemExpr::Kind::Zero; break;
    case 1: e.kind = ElemExpr::Kind::One; break;
    case 2: e.kind = ElemExpr::Kind::Atom; e.atom = std::string(1, static_cast<char>('a' + rng() % 3)); break;
    case 3:
    case 4: {
      e.kind = rng() % 2 ? ElemExpr::Kind::FcFinite : ElemExpr::Kind::FcCofinite;
      for (std::uint64_t i = 0, n = rng() % 3; i < n; ++i) e.points.push_back(rng() % 20);
      break;
    }
    case 5: {
      e.kind = ElemExpr::Kind::Interval;
      std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 8);
      std::int64_t lo = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den));
      e.lo = Rational(lo, den);
      e.hi = Rational(lo + 1, den);
      break;
    }
    case 6: e.kind = ElemExpr::Kind::Complement; e.children = {random_elem(rng, depth - 1)}; break;
    case 7: e.kind = ElemExpr::Kind::Join; e.children = {random_elem(rng, depth - 1), random_elem(rng, depth - 1)}; break;
    default: e.kind = ElemExpr::Kind::Meet; e.children = {random_elem(rng, depth - 1), random_elem(rng, depth - 1)}; break;
  }
  return e;
}

std::vector<std::filesystem::path> fixture_scripts() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(MODALWB_SCRIPT_DIR)) {
    if (entry.path().extension() == ".mwb") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("declarations parse into nodes") {
  Script s = parse("algebra B = powerset(atoms:[a,b])\noperator f on B = table{a -> a+b, b -> 0}\n");
  REQUIRE(s.statements.size() == 2);
  const auto& alg = std::get<AlgebraDecl>(s.statements[0]);
  CHECK(alg.name == "B");
  CHECK(alg.kind == AlgebraDecl::Kind::Powerset);
  CHECK(alg.atoms == std::vector<std::string>{"a", "b"});
  const auto& op = std::get<OperatorDecl>(s.statements[1]);
  const auto& table = std::get<std::vector<TableEntry>>(op.body);
  REQUIRE(table.size() == 2);
  CHECK(table[0].value.kind == ElemExpr::Kind::Join);
  CHECK(table[1].value.kind == ElemExpr::Kind::Zero);
  CHECK(table[1].pos.line == 2);
}

TEST_CASE("builtin forms") {
  Script s = parse(
      "algebra I = intervals\n"
      "operator f on I = builtin(exdensepc(a=[0,1/3), b=[1/3,2/3), c=[2/3,1)), g)\n"
      "operator r on I = builtin(relativized([0, 1/2)))\n"
      "operator h on I = builtin(exfree)\n");
  const auto& b = std::get<Builtin>(std::get<OperatorDecl>(s.statements[1]).body);
  CHECK(b.kind == "example");
  CHECK(b.names == std::vector<std::string>{"exdensepc", "g"});
  REQUIRE(b.params.size() == 3);
  CHECK(b.params[1].first == "b");
  CHECK(std::get<Builtin>(std::get<OperatorDecl>(s.statements[2]).body).element.has_value());
}

TEST_CASE("syntax errors carry line and column") {
  std::string msg;
  CHECK(error_kind([] { parse("algebra B = powerset(2)\noperator f on B = table{a -> a +}\n"); }, &msg) == ErrorKind::Parse);
  CHECK(msg.rfind("2:33:", 0) == 0);
  CHECK(error_kind([] { parse("check f X\n"); }, &msg) == ErrorKind::Parse);
  CHECK(msg.rfind("1:9:", 0) == 0);
  CHECK(error_kind([] { parse("frobnicate f\n"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse("algebra B = powerset(2) extra\n"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse("algebra I = intervals\noperator f on I = builtin(nosuch)\n"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse("dot R > \"unterminated\n"); }) == ErrorKind::Parse);
}

TEST_CASE("validation errors carry positions") {
  std::string msg;
  CHECK(error_kind([] { validate(parse("algebra B = powerset(2)\nproper f --budget 5\n")); }, &msg) == ErrorKind::Name);
  CHECK(msg.rfind("2:1:", 0) == 0);
  CHECK(error_kind([] { validate(parse("algebra B = powerset(2)\noperator f on B = table{c -> a}\n")); }) ==
        ErrorKind::Name);
  CHECK(error_kind([] { validate(parse("algebra B = powerset(2)\noperator f on B = table{a -> c}\n")); }) ==
        ErrorKind::Name);
  CHECK(error_kind([] {
          validate(parse("algebra B = powerset(2)\nalgebra C = powerset(3)\noperator f on B = builtin(identity)\n"
                         "operator g on C = builtin(identity)\ncover f g\n"));
        }) == ErrorKind::CarrierMismatch);
  CHECK(error_kind([] { validate(parse("algebra B = powerset(5)\n"), {0, 12, 4}); }) == ErrorKind::CapExceeded);
  CHECK(error_kind([] { validate(parse("algebra B = powerset(17)\n")); }) == ErrorKind::CapExceeded);
  CHECK(error_kind([] { validate(parse("algebra F = fc\noperator f on F = builtin(exfree)\n")); }) ==
        ErrorKind::CarrierMismatch);
  CHECK(error_kind([] { validate(parse("algebra I = intervals\noperator f on I = builtin(relativized([1/2, 1/4)))\n")); }) ==
        ErrorKind::MalformedInterval);
  CHECK(error_kind([] { validate(parse("examples run nosuch\n")); }) == ErrorKind::Name);
}

TEST_CASE("pretty-print then parse is the identity on fixture scripts") {
  auto scripts = fixture_scripts();
  REQUIRE_FALSE(scripts.empty());
  for (const auto& path : scripts) {
    CAPTURE(path.string());
    Script s;
    try {
      s = parse(slurp(path));
    } catch (const Error&) {
      continue;  // the syntax-error fixtures
    }
    std::string printed = pretty_print(s);
    CHECK(parse(printed) == s);
    CHECK(pretty_print(parse(printed)) == printed);
  }
}

TEST_CASE("pretty-print then parse is the identity on random element expressions") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 2000; ++i) {
    ElemExpr e = random_elem(rng, 4);
    std::string src = "companion f " + pretty_print(e) + " 1\n";
    Script s = parse(src);
    const auto& q = std::get<Query>(s.statements[0]);
    CAPTURE(src);
    CHECK(q.elements[0] == e);
  }
}

TEST_CASE("pc identity reports the tabulated pseudocomplement") {
  Report r = run("algebra B = powerset(atoms:[a,b])\npc identity\n");
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].passed);
  CHECK(r.results[0].companion == std::optional<std::string>("a -> b, b -> a"));
  CHECK(r.exit_code() == 0);
}

TEST_CASE("empty script gives an empty report") {
  Report r = run("");
  CHECK(r.results.empty());
  CHECK(r.exit_code() == 0);
  nlohmann::json j = r.to_json({});
  CHECK(j["schema"] == 1);
  CHECK(j["results"].empty());
}

TEST_CASE("a failing check sets exit code 1") {
  Report r = run("algebra B = powerset(2)\nkmpa discriminator discriminator\n");
  CHECK(r.exit_code() == 1);
  CHECK(r.results[0].witnesses["x"] == "a");
}

TEST_CASE("runtime errors become failed records") {
  Report r = run("algebra B = powerset(2)\ncompanion zero a a\npc identity\n");
  REQUIRE(r.results.size() == 2);
  CHECK_FALSE(r.results[0].passed);
  CHECK_FALSE(r.results[0].error.empty());
  CHECK(r.results[1].passed);
}

TEST_CASE("report fields follow the query schema") {
  Report r = run("algebra B = powerset(atoms:[a,b])\noperator f on B = table{a -> a, b -> 0}\nproper f\n");
  nlohmann::json j = r.to_json({});
  const auto& rec = j["results"][0];
  CHECK(rec["query"] == "proper f");
  CHECK(rec["carrier"] == "powerset(2)");
  CHECK(rec["decision"] == "ProperExists");
  CHECK(rec["witnesses"]["x"] == "a");
  CHECK(rec["witnesses"]["z"] == "a");
  CHECK(rec["companion"].is_string());
  CHECK(rec["certificates"].is_array());
  CHECK(rec["budget_used"] == 1);
}

TEST_CASE("same script, seed and budget give identical JSON") {
  for (const auto& path : fixture_scripts()) {
    Script s;
    try {
      s = parse(slurp(path));
      validate(s);
    } catch (const Error&) {
      continue;
    }
    if (std::any_of(s.statements.begin(), s.statements.end(), [](const Statement& st) {
          const auto* q = std::get_if<Query>(&st);
          return q && q->verb == "dot";
        })) {
      continue;  // writes a file
    }
    CAPTURE(path.string());
    ExecOptions opts{4, 6, 16};
    CHECK(execute(s, opts).to_json(opts).dump() == execute(s, opts).to_json(opts).dump());
  }
}

TEST_CASE("examples query lists assertions per bundle") {
  Report r = run("examples run jon2\n");
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].passed);
  CHECK(r.results[0].details["jon2"].size() == 9);
}
