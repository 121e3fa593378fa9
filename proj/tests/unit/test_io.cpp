#include "sigmagreen/io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>

using namespace sigmagreen;

TEST_SUITE("io") {
  TEST_CASE("numbers round-trip at full precision") {
    Json j;
    j["x"] = 0.1;
    j["third"] = 1.0 / 3.0;
    const Json back = Json::parse(dump_json(j));
    CHECK(back["x"].get<double>() == 0.1);
    CHECK(back["third"].get<double>() == 1.0 / 3.0);
  }

  TEST_CASE("non-finite numbers become strings") {
    Json j = Json::array({std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), NAN});
    CHECK(dump_json(j, 0) == "[\"inf\",\"-inf\",\"nan\"]\n");
  }

  TEST_CASE("output is deterministic and ordered") {
    Json j;
    j["zeta"] = 1;
    j["alpha"] = Json::array({1.5, 2.5});
    const std::string s = dump_json(j);
    CHECK(s == dump_json(j));
    CHECK(s.find("zeta") < s.find("alpha"));
  }

  TEST_CASE("csv") {
    CHECK(format_csv({"a", "b"}, {{1, 2}, {3, 4}}) == "a,b\n1,3\n2,4\n");
    CHECK_THROWS_AS(format_csv({"a"}, {{1}, {2}}), ArgumentError);
    CHECK_THROWS_AS(format_csv({"a", "b"}, {{1}, {2, 3}}), ArgumentError);
  }

  TEST_CASE("cone records") {
    CHECK(cone_from_json(Json::parse(R"({"family":"gamma_k","n":5,"k":2})")).k() == 2);
    const Cone ball = cone_from_json(Json::parse(R"({"family":"custom","n":4,"slice":"ball"})"));
    CHECK(std::abs(mu_plus(ball) - 1.0) < 1e-10);
    const Cone opened = cone_from_json(Json::parse(R"({"family":"gamma_k","n":5,"k":2,"open_up":0.75})"));
    CHECK(!opened.k().has_value());
    CHECK_THROWS_AS(cone_from_json(Json::parse(R"({"family":"other","n":4})")), ArgumentError);
    CHECK_THROWS_AS(cone_from_json(Json::parse(R"({"family":"custom","n":4,"slice":"cube"})")), ArgumentError);
  }

  TEST_CASE("matrices") {
    const Eigen::MatrixXd m = matrix_from_json(Json::parse("[[1,2],[3,4]]"));
    CHECK(m(1, 0) == 3);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), ArgumentError);
  }

  TEST_CASE("files") {
    const std::string path = "sigmagreen_io_test.txt";
    write_text_file(path, "hello\n");
    CHECK(read_text_file(path) == "hello\n");
    std::remove(path.c_str());
    write_text_file("sigmagreen_io_dir/nested/out.txt", "x");
    CHECK(read_text_file("sigmagreen_io_dir/nested/out.txt") == "x");
    std::filesystem::remove_all("sigmagreen_io_dir");
    CHECK_THROWS_AS(read_text_file("/nonexistent/dir/file"), ArgumentError);
  }
}
