#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "hermeq/error.hpp"
#include "hermeq/io.hpp"

using namespace hermeq;

namespace {

Errc codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

GaussianRational gr(const char* re, const char* im) {
  return {Rational::fromString(re), Rational::fromString(im)};
}

}  // namespace

TEST_CASE("serialize and parse round-trip every matrix") {
  Matrix m(2, 3);
  m.at(0, 0) = gr("1/2", "0");
  m.at(0, 1) = gr("-3", "4");
  m.at(0, 2) = gr("0", "-7/5");
  m.at(1, 0) = gr("2", "2");
  m.at(1, 1) = gr("0", "0");
  m.at(1, 2) = gr("-22/7", "1");
  std::string text = serializeMatrix(m);
  CHECK(parseMatrixJson(text) == m);
  CHECK(serializeMatrix(parseMatrixJson(text)) == text);  // byte-identical canonical form
  CHECK(text.back() == '\n');

  Matrix empty = Matrix::zero(0, 3);
  CHECK(parseMatrixJson(serializeMatrix(empty)) == empty);
}

TEST_CASE("canonical text is stable") {
  Matrix m(1, 1);
  m.at(0, 0) = gr("1", "-1/2");
  CHECK(serializeMatrix(m) ==
        "{\n  \"cols\": 1,\n  \"entries\": [\n    [\n      \"1\",\n      \"-1/2\"\n    ]\n  ],\n"
        "  \"rows\": 1\n}\n");
}

TEST_CASE("malformed matrix files raise ParseError") {
  CHECK(codeOf([] { parseMatrixJson("not json"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseMatrixJson("[1,2]"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseMatrixJson(R"({"rows": 1, "cols": 1})"); }) == Errc::ParseError);
  CHECK(codeOf([] {
          parseMatrixJson(R"({"rows": "1", "cols": 1, "entries": [["1","0"]]})");
        }) == Errc::ParseError);
  CHECK(codeOf([] {
          parseMatrixJson(R"({"rows": -1, "cols": 1, "entries": []})");
        }) == Errc::ParseError);
  CHECK(codeOf([] {
          parseMatrixJson(R"({"rows": 1, "cols": 2, "entries": [["1","0"]]})");
        }) == Errc::ParseError);
  CHECK(codeOf([] {
          parseMatrixJson(R"({"rows": 1, "cols": 1, "entries": [["1"]]})");
        }) == Errc::ParseError);
  CHECK(codeOf([] {
          parseMatrixJson(R"({"rows": 1, "cols": 1, "entries": [[1, 0]]})");
        }) == Errc::ParseError);
  CHECK(codeOf([] {
          parseMatrixJson(R"({"rows": 1, "cols": 1, "entries": [["1/0","0"]]})");
        }) == Errc::ParseError);
  CHECK(codeOf([] {
          parseMatrixJson(R"({"rows": 1, "cols": 1, "entries": [["a","0"]]})");
        }) == Errc::ParseError);
}

TEST_CASE("file round-trip and missing-file error") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "hermeq_io_roundtrip.json";
  Matrix m(2, 2);
  m.at(0, 0) = gr("5", "0");
  m.at(0, 1) = gr("1/3", "-2");
  m.at(1, 0) = gr("1/3", "2");
  m.at(1, 1) = gr("-4", "0");
  writeFileBytes(path.string(), serializeMatrix(m));
  CHECK(loadMatrixFile(path.string()) == m);
  CHECK(readFileBytes(path.string()) == serializeMatrix(m));
  std::remove(path.string().c_str());
  CHECK(codeOf([&] { loadMatrixFile(path.string()); }) == Errc::ParseError);
}

TEST_CASE("content digests are frozen") {
  CHECK(fnv1a64("") == "fnv1a64:cbf29ce484222325");
  CHECK(fnv1a64("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(fnv1a64("hermitian") == "fnv1a64:275b64d7c4bae8e6");
  CHECK(fnv1a64(std::string(1, '\0')) != fnv1a64(""));
}
