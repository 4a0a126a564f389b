#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "ecg/constructions.hpp"
#include "ecg/io.hpp"
#include "support.hpp"

using ecg::ColoredGraph;
namespace io = ecg::io;

TEST_SUITE_BEGIN("io");

TEST_CASE("golden serialization of a small graph") {
  ColoredGraph g(4);
  g.set_edge(0, 1, 3);
  g.set_edge(2, 3, 0);
  g.set_edge(0, 3, 12);
  CHECK(io::to_ecg_text(g) ==
        "ecg 4 3\n"
        "0 1 3\n"
        "0 3 12\n"
        "2 3 0\n");
}

TEST_CASE("isolated alive vertices survive a round trip") {
  ColoredGraph g(6);
  g.set_edge(1, 4, 2);
  ColoredGraph back = io::from_ecg_text(io::to_ecg_text(g));
  CHECK(back == g);
  CHECK(back.universe_size() == 6);
  CHECK(back.order() == 6);
}

TEST_CASE("round trip is byte exact on random graphs") {
  ecg::Rng rng(99);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + rng.below(14);
    ColoredGraph g = ecg::test::random_graph(rng, n, 0.5, 1 + rng.below(9));
    std::string text = io::to_ecg_text(g);
    ColoredGraph back = io::from_ecg_text(text);
    CHECK(back == g);
    CHECK(io::to_ecg_text(back) == text);
  }
}

TEST_CASE("writer refuses graphs with deleted vertices") {
  ColoredGraph g = ecg::build_tn(5);
  ColoredGraph h = g.without(std::vector<int>{2});
  CHECK_THROWS_AS((void)io::to_ecg_text(h), std::invalid_argument);
}

TEST_CASE("parser reports the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      (void)io::from_ecg_text(text);
    } catch (const io::ParseError& e) {
      return e.line();
    }
    return -1;
  };

  CHECK(line_of("") == 1);
  CHECK(line_of("egg 3 1\n0 1 0\n") == 1);
  CHECK(line_of("ecg 3 1\n1 0 0\n") == 2);            // u >= v
  CHECK(line_of("ecg 3 1\n0 3 0\n") == 2);            // v out of range
  CHECK(line_of("ecg 3 1\n0 1 -1\n") == 2);           // negative color
  CHECK(line_of("ecg 3 2\n0 1 0\n0 1 1\n") == 3);     // duplicate edge
  CHECK(line_of("ecg 3 2\n0 2 0\n0 1 1\n") == 3);     // out of order
  CHECK(line_of("ecg 3 2\n0 1 0\n") == 3);            // fewer edges than announced
  CHECK(line_of("ecg 3 1\n0 1 0\n1 2 0\n") == 3);     // more edges than announced
  CHECK(line_of("ecg 3 1\n0  1 0\n") == 2);           // double space
  CHECK(line_of("ecg 3 1\n0 1 0 \n") == 2);           // trailing blank
  CHECK(line_of("ecg 3 1\n0 1 0") == 2);              // missing final newline
  CHECK(line_of("ecg 3 1\n0 1 x\n") == 2);            // non-numeric field
  CHECK(line_of("ecg -3 0\n") == 1);

  try {
    (void)io::from_ecg_text("ecg 3 1\n0 9 0\n");
    CHECK(false);
  } catch (const io::ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("json mirror round trips") {
  ecg::Rng rng(17);
  for (int round = 0; round < 15; ++round) {
    ColoredGraph g = ecg::test::random_graph(rng, 3 + rng.below(9), 0.6, 5);
    ColoredGraph back = io::from_json_text(io::to_json_text(g));
    CHECK(back == g);
  }
  ColoredGraph g = ecg::build_tn(4);
  std::string j = io::to_json_text(g);
  CHECK(j.find("\"schema\":1") != std::string::npos);
  CHECK(j.find("\"n\":4") != std::string::npos);
}

TEST_CASE("json parser rejects malformed documents") {
  CHECK_THROWS(io::from_json_text("{"));
  CHECK_THROWS(io::from_json_text(R"({"schema":2,"n":3,"edges":[]})"));
  CHECK_THROWS(io::from_json_text(R"({"schema":1,"n":3,"edges":[[0,0,1]]})"));
  CHECK_THROWS(io::from_json_text(R"({"schema":1,"n":3,"edges":[[0,1]]})"));
  CHECK_THROWS(io::from_json_text(R"({"schema":1,"edges":[]})"));
}

TEST_CASE("file round trip") {
  std::string path =
      std::filesystem::temp_directory_path() / ("ecg-io-roundtrip-" + std::to_string(getpid()) + ".ecg");
  ColoredGraph g = ecg::build_main_construction(8, 2);
  io::write_file(path, io::to_ecg_text(g));
  CHECK(io::from_ecg_text(io::read_file(path)) == g);
  std::remove(path.c_str());
  CHECK_THROWS(io::read_file(path));
}

TEST_SUITE_END();
