#include "whvi/instance.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

using namespace whvi;

namespace {

std::string instance_path(const std::string& name) { return std::string(WHVI_INSTANCE_DIR) + "/" + name + ".json"; }

const char* kMinimal = R"({
  "name": "tiny",
  "n": 2,
  "set": {"A": [[-1, 0], [0, -1]], "b": [0, 0]},
  "map": {"leading": [[{"coeff": 1, "exps": [2, 0]}], [{"coeff": 1, "exps": [0, 2]}]]}
})";

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::string replaced(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("shipped instance files match the builtins") {
  for (const auto& name : builtin_instance_names()) {
    CAPTURE(name);
    const Instance file = load_instance(instance_path(name));
    CHECK(file == builtin_instance(name));
  }
}

TEST_CASE("minimal instance") {
  const Instance inst = parse_instance(kMinimal);
  CHECK(inst.name == "tiny");
  CHECK(inst.map.degree() == 2);
  CHECK(inst.set == Polyhedron::nonnegative_orthant(2));
  CHECK_FALSE(inst.xref.has_value());
  CHECK(inst.checker == CheckerConfig{});
  CHECK(inst.solver == SolveConfig{});
}

TEST_CASE("round trip preserves everything") {
  for (const auto& name : builtin_instance_names()) {
    const Instance inst = builtin_instance(name);
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
  Instance custom = builtin_instance("ex4_1a");
  custom.xref = Vector{{0.5, -0.25}};
  custom.checker.ray_radii = {2, 4, 8};
  custom.checker.seed = 7;
  custom.solver.t_schedule = {1.0, 0.5, 0.0};
  custom.solver.residual.fd_step = 1e-9;
  CHECK(parse_instance(serialize_instance(custom)) == custom);
}

TEST_CASE("save and load") {
  const std::string path = (std::filesystem::temp_directory_path() / "whvi_roundtrip.json").string();
  const Instance inst = builtin_instance("ex4_4");
  save_instance(inst, path);
  CHECK(load_instance(path) == inst);
  std::remove(path.c_str());
}

TEST_CASE("parse errors name the problem") {
  SUBCASE("malformed JSON reports a line") {
    CHECK(error_of("{\n\"name\": \"x\",\n oops }").find("line 3") != std::string::npos);
  }
  SUBCASE("unknown field") {
    const std::string e = error_of(replaced(kMinimal, "\"n\": 2", "\"n\": 2, \"colour\": 1"));
    CHECK(e.find("colour") != std::string::npos);
  }
  SUBCASE("unknown nested field has its path") {
    const std::string e = error_of(replaced(kMinimal, "\"b\": [0, 0]", "\"b\": [0, 0], \"c\": []"));
    CHECK(e.find("set") != std::string::npos);
    CHECK(e.find("c") != std::string::npos);
  }
  SUBCASE("leading monomial of the wrong degree") {
    const std::string e = error_of(replaced(kMinimal, "\"exps\": [0, 2]", "\"exps\": [0, 1]"));
    CHECK(e.find("map") != std::string::npos);
  }
  SUBCASE("empty polyhedron") {
    const std::string e = error_of(replaced(kMinimal, "\"b\": [0, 0]", "\"b\": [0, 0], \"E\": [[1, 0]], \"d\": [-1]"));
    CHECK(e.find("set") != std::string::npos);
  }
  SUBCASE("wrong type") {
    CHECK_FALSE(error_of(replaced(kMinimal, "\"n\": 2", "\"n\": \"two\"")).empty());
  }
  SUBCASE("xref outside the dimension") {
    CHECK_FALSE(error_of(replaced(kMinimal, "\"n\": 2", "\"n\": 2, \"xref\": [1, 2, 3]")).empty());
  }
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), IoError);
}

TEST_CASE("unknown builtin") {
  CHECK_THROWS_AS(builtin_instance("ex9_9"), PreconditionError);
}
