#include "hermeq/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hermeq/error.hpp"

namespace hermeq {

namespace {

using nlohmann::json;

long intField(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(Errc::ParseError, std::string("matrix file: '") + key + "' must be an integer");
  return j[key].get<long>();
}

}  // namespace

Matrix parseMatrixJson(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(Errc::ParseError, "matrix file: not valid JSON");
  if (!j.is_object()) fail(Errc::ParseError, "matrix file: top level must be an object");
  const long rows = intField(j, "rows");
  const long cols = intField(j, "cols");
  if (rows < 0 || cols < 0) fail(Errc::ParseError, "matrix file: negative dimensions");
  if (!j.contains("entries") || !j["entries"].is_array())
    fail(Errc::ParseError, "matrix file: 'entries' must be an array");
  const json& entries = j["entries"];
  if (static_cast<long>(entries.size()) != rows * cols)
    fail(Errc::ParseError, "matrix file: expected " + std::to_string(rows * cols) +
                               " entries, got " + std::to_string(entries.size()));
  Matrix m(static_cast<int>(rows), static_cast<int>(cols));
  long idx = 0;
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail(Errc::ParseError,
           "matrix file: entry " + std::to_string(idx) + " must be [\"re\", \"im\"]");
    const int i = static_cast<int>(idx / cols), k = static_cast<int>(idx % cols);
    m.at(i, k) = GaussianRational{Rational::fromString(e[0].get<std::string>()),
                                  Rational::fromString(e[1].get<std::string>())};
    ++idx;
  }
  return m;
}

Matrix loadMatrixFile(const std::string& path) {
  try {
    return parseMatrixJson(readFileBytes(path));
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError)
      fail(Errc::ParseError, path + ": " + e.what());
    throw;
  }
}

std::string serializeMatrix(const Matrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k) {
      const GaussianRational& v = m.at(i, k);
      entries.push_back(json::array({v.re.str(), v.im.str()}));
    }
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string readFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFileBytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << bytes;
  if (!out) throw std::runtime_error("short write: " + path);
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xF];
  return out;
}

}  // namespace hermeq
