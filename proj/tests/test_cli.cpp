#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "zgpd/cli.hpp"
#include "zgpd/serialize.hpp"
#include "zgpd/universe.hpp"

using namespace zgpd;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("zgpd_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int code;
  std::string out;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::string schema_pointer(std::string_view text) {
  try {
    deserialize(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaViolation && !e.witnesses().empty()) return e.witnesses().front();
    return std::string(error_code_name(e.code()));
  }
  return "";
}

}  // namespace

TEST_CASE("documents roundtrip byte for byte") {
  const std::vector<Document> docs{interval_groupoid(), nabla(), check_I(), s_I(), i_prime(), s_i(),
                                   to_one(nabla()), BundleConfig{3}};
  for (const Document& d : docs) {
    const std::string text = serialize(d);
    const Document back = deserialize(text);
    CHECK(document_kind(back) == document_kind(d));
    CHECK(serialize(back) == text);
  }
  const ZTwoPtr n = deserialize_ztwo(serialize(*nabla()));
  CHECK(same_ztwo(n, nabla()));
  CHECK(deserialize_map(serialize(i_prime())) == i_prime());
}

TEST_CASE("squares roundtrip") {
  const FibrationReport r = is_injective_fibration(to_one(check_I()));
  REQUIRE(r.failing_square.has_value());
  const std::string text = serialize(*r.failing_square);
  const LiftingProblem p = deserialize_square(text);
  CHECK(p.top == r.failing_square->top);
  CHECK(serialize(p) == text);
}

TEST_CASE("the universe document has seven objects") {
  const UniverseBundle b = build_universe(2);
  const auto doc = nlohmann::json::parse(serialize(*b.U));
  CHECK(doc["body"]["groupoid"]["objects"].size() == 7);
  CHECK(serialize(deserialize(serialize(*b.U))) == serialize(*b.U));
}

TEST_CASE("schema violations carry a JSON pointer") {
  auto doc = nlohmann::json::parse(serialize(*nabla()));
  SUBCASE("unknown object id") {
    doc["body"]["groupoid"]["morphisms"][1][2] = "7";
    CHECK(schema_pointer(doc.dump()) == "/body/groupoid/morphisms/1/2");
  }
  SUBCASE("unknown morphism in the involution") {
    doc["body"]["involution"]["morphisms"][0][1] = "chi";
    CHECK(schema_pointer(doc.dump()) == "/body/involution/morphisms/0/1");
  }
  SUBCASE("missing field") {
    doc["body"].erase("involution");
    CHECK(schema_pointer(doc.dump()) == "/body/involution");
  }
  SUBCASE("wrong version") {
    doc["version"] = 2;
    CHECK(schema_pointer(doc.dump()) == "/version");
  }
  SUBCASE("not JSON") {
    CHECK(schema_pointer("{\n \"version\": 1,\n oops") == "line 3, column 2");
  }
}

TEST_CASE("standard shorthand in documents") {
  const std::string text = R"({"version": 1, "kind": "map", "body": {"standard": "i_prime"}})";
  CHECK(deserialize_map(text) == i_prime());
}

TEST_CASE("check inj-fibration on check_I -> 1 exits 1 with an i' square") {
  const std::string path = write_temp("check_I_to_one.json", serialize(to_one(check_I())));
  const Run r = run({"check", "--what", "inj-fibration", path, "--json"});
  CHECK(r.code == cli::kFails);
  const auto rep = nlohmann::json::parse(r.out);
  CHECK(rep["holds"] == false);
  CHECK(rep["failing_square"]["generator"] == "i_prime");
  CHECK(run({"check", "--what", "proj-fibration", path}).code == cli::kHolds);
}

TEST_CASE("validate rejects a broken inverse table with exit 2") {
  auto doc = nlohmann::json::parse(serialize(*cyclic_group_groupoid(3)));
  doc["body"]["inverses"][1][1] = "g^1";
  const std::string path = write_temp("broken_inverse.json", doc.dump());
  const Run r = run({"validate", path, "--json"});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(nlohmann::json::parse(r.out)["error"] == "NOT_A_GROUPOID");
}

TEST_CASE("universe command certifies univalence at pool 2") {
  const Run r = run({"universe", "--pool", "2", "--verify", "all", "--json"});
  CHECK(r.code == cli::kHolds);
  const auto rep = nlohmann::json::parse(r.out);
  CHECK(rep["univalence"]["conclusion"] == true);
  CHECK(rep["U"]["objects"] == 7);
}

TEST_CASE("exit codes for the other commands") {
  const std::string nabla_one = write_temp("nabla_to_one.json", serialize(to_one(nabla())));
  const std::string s_one_one = write_temp("s_one_to_one.json", serialize(to_one(s_one())));
  const std::string ip = write_temp("i_prime.json", serialize(i_prime()));
  CHECK(run({"factorize", nabla_one}).code == cli::kHolds);
  CHECK(run({"path-object", nabla_one}).code == cli::kHolds);
  CHECK(run({"decompose", ip}).code == cli::kHolds);
  CHECK(run({"decompose", nabla_one}).code == cli::kFails);
  CHECK(run({"pullback", s_one_one, nabla_one}).code == cli::kHolds);
  CHECK(run({"pi", s_one_one, s_one_one}).code == cli::kInvalidInput);  // f does not land in the source of g
  CHECK(run({"classify", s_one_one, "--pool", "2"}).code == cli::kHolds);
  CHECK(run({"classify", s_one_one, "--pool", "1"}).code == cli::kExhausted);
  CHECK(run({"check", "--what", "weq", nabla_one}).code == cli::kHolds);
  CHECK(run({"check", "--what", "cofibration", nabla_one}).code == cli::kFails);
  CHECK(run({"check", "--what", "nonsense", nabla_one}).code == cli::kInvalidInput);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == cli::kInvalidInput);
  CHECK(run({"universe", "--pool", "9"}).code == cli::kExhausted);
  CHECK(run({"decompose", ip, "--budget", "1"}).code == cli::kExhausted);
}

TEST_CASE("lift solves a square") {
  const LiftingProblem p{i_prime(), to_one(nabla()), interval_map(nabla(), ObjectId(0), MorphismId(1)),
                         to_one(nabla())};
  const std::string path = write_temp("square.json", serialize(p));
  const Run r = run({"lift", path, "--json"});
  CHECK(r.code == cli::kHolds);
  CHECK(nlohmann::json::parse(r.out).contains("diagonal"));
}

TEST_CASE("text and JSON reports carry the same fields") {
  const std::string path = write_temp("nabla_to_one_2.json", serialize(to_one(nabla())));
  const Run text = run({"check", "--what", "weq", path});
  const Run json = run({"check", "--what", "weq", path, "--json"});
  CHECK(text.code == json.code);
  const auto report = nlohmann::json::parse(json.out);
  for (const auto& [key, value] : report.items()) CHECK(text.out.find(key + ":") != std::string::npos);
}
