#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qnr/io.hpp"

using qnr::Complex;
using qnr::Quaternion;

namespace {

std::string parse_error(const std::string& text) {
  try {
    qnr::parse_matrix_text(text);
  } catch (const qnr::ParseError& e) {
    return e.what();
  }
  return "";
}

std::string fixture(const std::string& name) { return std::string(QNR_FIXTURE_DIR) + "/" + name; }

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("parse a 1x1 matrix") {
  const auto a = qnr::parse_matrix_text(R"({"n":1,"entries":[[[0,0,1,0]]]})");
  REQUIRE(a.n() == 1);
  CHECK(a(0, 0) == Quaternion::j());
}

TEST_CASE("parse errors name the offending index") {
  CHECK(parse_error(R"({"n":2,"entries":[[[0,0,0,0]],[[0,0,0,0],[1,0,0,0]]]})") == "entry (0,1) absent");
  CHECK(parse_error(R"({"n":1,"entries":[[[0,0,1]]]})") == "entry (0,0) must be an array of 4 numbers");
  CHECK(parse_error(R"({"n":1,"entries":[[[0,0,"x",0]]]})").find("entry (0,0) component 2") == 0);
  CHECK(parse_error(R"({"entries":[]})") == "field \"n\" absent");
  CHECK(parse_error(R"({"n":1})") == "field \"entries\" absent");
  CHECK(parse_error(R"({"n":0,"entries":[]})") == "field \"n\" must be a positive integer");
  CHECK(parse_error(R"({"n":2,"entries":[[[0,0,0,0],[0,0,0,0]]]})") == "entries has 1 rows, expected n = 2");
  CHECK(parse_error(R"({"n":1,"entries":[[[0,0,0,0],[0,0,0,0]]]})") == "row 0 has 2 entries, expected 1");
  CHECK(parse_error("{\"n\":1,").find("malformed JSON") == 0);
  CHECK(parse_error("[1,2]") == "matrix document must be a JSON object");
  CHECK_THROWS_AS(qnr::parse_matrix("/nonexistent/matrix.json"), qnr::ParseError);
}

TEST_CASE("shipped fixtures") {
  const auto a = qnr::parse_matrix(fixture("twin_j.json"));
  CHECK(a.n() == 2);
  CHECK(a(0, 0) == Quaternion::j());
  CHECK(a(1, 1) == -Quaternion::j());
  CHECK(a(0, 1) == Quaternion());
  CHECK(qnr::parse_matrix(fixture("radius_half_norm.json")).n() == 3);
  CHECK(qnr::parse_matrix(fixture("nilpotent_jk.json")).n() == 3);
  CHECK(qnr::parse_matrix(fixture("neednot.json")).n() == 1);
}

TEST_CASE("matrix JSON round trip") {
  qnr::Rng rng(71);
  const auto a = qnr::random_matrix(3, rng);
  const auto b = qnr::parse_matrix_text(qnr::dump_json(qnr::matrix_to_json(a)));
  CHECK((a - b).frobenius_norm() == 0.0);
}

TEST_CASE("CSV") {
  CHECK(qnr::csv_text({}) == "re,im\n");
  const auto text = qnr::csv_text({Complex(0.5, 1), Complex(-2, 0)});
  CHECK(text == "re,im\n0.5,1\n-2,0\n");
  const std::string path = "io_test_section.csv";
  qnr::emit_csv(qnr::make_section({}), path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "re,im\n");
  std::remove(path.c_str());
}

TEST_CASE("SVG draws the region") {
  qnr::Region2D tri;
  tri.kind = qnr::RegionKind::Triangle;
  tri.vertices = {Complex(0, 1), Complex(1, 2), 1.0 / 3.0};
  const auto svg = qnr::svg_text(qnr::make_section({Complex(0.5, 1)}), &tri);
  CHECK(svg.find("<svg") == 0);
  REQUIRE(count(svg, "<polygon") == 1);
  const auto pos = svg.find("<polygon");
  const auto attr = svg.substr(svg.find("points=\"", pos) + 8);
  const auto points = attr.substr(0, attr.find('"'));
  CHECK(count(points, ",") == 3);

  qnr::Region2D disk;
  disk.kind = qnr::RegionKind::HalfDisk;
  disk.radius = 1.0;
  const auto arc = qnr::svg_text(qnr::make_section({Complex(0.2, 0.2)}), &disk);
  CHECK(count(arc, "<path") == 1);
  CHECK(arc.find(" A ") != std::string::npos);

  const auto plain = qnr::svg_text(qnr::make_section({}), nullptr);
  CHECK(count(plain, "<circle") == 0);
  CHECK(plain.find("</svg>") != std::string::npos);
}

TEST_CASE("JSON helpers") {
  const auto z = qnr::complex_to_json(Complex(1, -2));
  CHECK(z["re"] == 1.0);
  CHECK(z["im"] == -2.0);
  const auto q = qnr::quaternion_to_json(Quaternion(1, 2, 3, 4));
  CHECK(q.size() == 4);
  CHECK(qnr::dump_json({{"a", 1}}).back() == '\n');
}
